#include "ca2oo/message_structure.hpp"

#include "ca2oo/naming.hpp"

namespace ca2oo {

namespace {

void collect(const Aggregation& agg, std::vector<std::string> path, const Iteration* via, const Aggregation* parent,
             int depth, std::vector<AggregationRef>& out) {
    out.push_back(AggregationRef{&agg, path, via, parent, depth});
    for (const auto& item : agg.items) {
        if (const auto* nested = std::get_if<Box<Aggregation>>(&item)) {
            auto p = path;
            p.push_back((*nested)->name);
            collect(**nested, std::move(p), via, &agg, depth + 1, out);
        } else if (const auto* it = std::get_if<Iteration>(&item)) {
            auto p = path;
            p.push_back(it->name);
            if (!it->body->name.empty()) p.push_back(it->body->name);
            collect(*it->body, std::move(p), it, &agg, depth + 1, out);
        }
    }
}

void collect_fields(const Aggregation& agg, std::vector<const Field*>& out) {
    for (const auto& item : agg.items) {
        if (const auto* f = std::get_if<Field>(&item)) {
            out.push_back(f);
        } else if (const auto* nested = std::get_if<Box<Aggregation>>(&item)) {
            collect_fields(**nested, out);
        } else {
            collect_fields(*std::get<Iteration>(item).body, out);
        }
    }
}

bool same_path(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (naming::key(a[i]) != naming::key(b[i])) return false;
    }
    return true;
}

}  // namespace

std::vector<AggregationRef> aggregations_in_document_order(const MessageStructure& ms) {
    std::vector<AggregationRef> out;
    collect(ms.root, {ms.root.name}, nullptr, nullptr, 0, out);
    return out;
}

const Aggregation* find_aggregation(const MessageStructure& ms, const std::vector<std::string>& path) {
    for (const auto& ref : aggregations_in_document_order(ms)) {
        if (same_path(ref.path, path)) return ref.aggregation;
        // ORDER.DESTINATIONS names the body of the DESTINATIONS iteration
        if (ref.via_iteration != nullptr && !ref.aggregation->name.empty() && ref.path.size() >= 2 &&
            naming::key(ref.path[ref.path.size() - 2]) == naming::key(ref.via_iteration->name)) {
            std::vector<std::string> shortened(ref.path.begin(), ref.path.end() - 1);
            if (same_path(shortened, path)) return ref.aggregation;
        }
    }
    return nullptr;
}

std::vector<const Field*> data_fields(const Aggregation& agg) {
    std::vector<const Field*> out;
    for (const auto& item : agg.items) {
        if (const auto* f = std::get_if<Field>(&item); f != nullptr && !f->is_reference()) out.push_back(f);
    }
    return out;
}

std::vector<const Field*> reference_fields(const Aggregation& agg) {
    std::vector<const Field*> out;
    for (const auto& item : agg.items) {
        if (const auto* f = std::get_if<Field>(&item); f != nullptr && f->is_reference()) out.push_back(f);
    }
    return out;
}

std::vector<const Field*> all_fields(const MessageStructure& ms) {
    std::vector<const Field*> out;
    collect_fields(ms.root, out);
    return out;
}

Result<ResolvedMessageStructure> resolve_references(
    const MessageStructure& ms, const BusinessObjectRegistry& registry,
    const std::function<bool(const RegistryEntry&)>& registered_later) {
    Result<ResolvedMessageStructure> result;
    result.value.message = &ms;
    for (const Field* f : all_fields(ms)) {
        if (!f->is_reference()) continue;
        auto it = registry.find(naming::key(f->domain.object));
        if (it == registry.end()) {
            result.diagnostics.push_back(make_error(
                "E-UNRESOLVED", "field " + f->name + " references unknown business object '" + f->domain.object + "'",
                f->loc));
            continue;
        }
        if (registered_later && registered_later(it->second)) {
            result.diagnostics.push_back(make_warning("W-FORWARD-REF",
                                                      "field " + f->name + " references " + it->second.object +
                                                          ", which is registered by the later event " +
                                                          it->second.event_id,
                                                      f->loc));
        }
        result.value.references.push_back(ResolvedReference{f, it->second});
    }
    return result;
}

std::string to_string(Domain::Kind kind) {
    switch (kind) {
        case Domain::Kind::number: return "number";
        case Domain::Kind::text: return "text";
        case Domain::Kind::date: return "date";
        case Domain::Kind::datetime: return "datetime";
        case Domain::Kind::money: return "money";
        case Domain::Kind::enumeration: return "enum";
        case Domain::Kind::reference: return "ref";
    }
    return "text";
}

std::string join_path(const std::vector<std::string>& path) {
    std::string out;
    for (const auto& p : path) {
        if (!out.empty()) out.push_back('.');
        out += p;
    }
    return out;
}

}  // namespace ca2oo
