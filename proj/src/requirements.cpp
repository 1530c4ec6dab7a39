#include <algorithm>

#include "ca2oo/naming.hpp"
#include "ca2oo/requirements.hpp"

namespace ca2oo {

const CommunicativeEvent* RequirementsModel::find_event(std::string_view id) const {
    const std::string k = naming::key(id);
    for (const auto& e : events) {
        if (naming::key(e.id) == k) return &e;
    }
    return nullptr;
}

const Process* RequirementsModel::find_process(std::string_view acronym) const {
    const std::string k = naming::key(acronym);
    for (const auto& p : processes) {
        if (naming::key(p.acronym) == k) return &p;
    }
    return nullptr;
}

std::vector<PrecedenceEdge> RequirementsModel::precedences() const {
    std::vector<PrecedenceEdge> out;
    for (const auto& e : events) out.insert(out.end(), e.precedes.begin(), e.precedes.end());
    return out;
}

BusinessObjectRegistry RequirementsModel::registry() const {
    BusinessObjectRegistry reg;
    for (const auto& e : events) {
        for (const auto& r : e.registrations) reg.emplace(naming::key(r.object), RegistryEntry{r.object, e.id, r.path});
    }
    return reg;
}

RequirementsModel RequirementsModel::normalized() const {
    RequirementsModel copy = *this;
    std::stable_sort(copy.processes.begin(), copy.processes.end(),
                     [](const Process& a, const Process& b) { return naming::natural_less(a.acronym, b.acronym); });
    std::stable_sort(copy.events.begin(), copy.events.end(), event_key_less);
    return copy;
}

bool structurally_equal(const RequirementsModel& a, const RequirementsModel& b) {
    return a.normalized() == b.normalized();
}

bool event_key_less(const CommunicativeEvent& a, const CommunicativeEvent& b) {
    const int c = naming::natural_compare(a.process, b.process);
    if (c != 0) return c < 0;
    return naming::natural_less(a.id, b.id);
}

std::string to_string(DataType type) {
    switch (type) {
        case DataType::autonumeric: return "Autonumeric";
        case DataType::nat: return "Nat";
        case DataType::integer: return "Int";
        case DataType::real: return "Real";
        case DataType::string: return "String";
        case DataType::text: return "Text";
        case DataType::date: return "Date";
        case DataType::time: return "Time";
        case DataType::datetime: return "DateTime";
        case DataType::boolean: return "Bool";
    }
    return "String";
}

std::optional<DataType> data_type_from_string(std::string_view text) {
    static const std::pair<std::string_view, DataType> table[] = {
        {"autonumeric", DataType::autonumeric}, {"nat", DataType::nat},       {"int", DataType::integer},
        {"integer", DataType::integer},         {"real", DataType::real},     {"string", DataType::string},
        {"text", DataType::text},               {"date", DataType::date},     {"time", DataType::time},
        {"datetime", DataType::datetime},       {"bool", DataType::boolean},  {"boolean", DataType::boolean},
    };
    const std::string k = naming::lower(text);
    for (const auto& [name, type] : table) {
        if (name == k) return type;
    }
    return std::nullopt;
}

std::string to_string(RestrictionKind kind) {
    switch (kind) {
        case RestrictionKind::identified_by: return "identified-by";
        case RestrictionKind::cardinality: return "cardinality";
        case RestrictionKind::size: return "size";
        case RestrictionKind::nullability: return "nulls";
        case RestrictionKind::attribute_kind: return "kind";
        case RestrictionKind::data_type: return "type";
    }
    return "?";
}

const Field* affected_field(const CommunicativeEvent& event) {
    const Field* found = nullptr;
    for (const Field* f : reference_fields(event.message.root)) {
        if (!f->affected) continue;
        if (found != nullptr) return nullptr;
        found = f;
    }
    return found;
}

const Aggregation* annotation_scope(const CommunicativeEvent& event, const BusinessObjectRegistry& registry,
                                    std::string_view object) {
    const std::string k = naming::key(object);
    if (event.is_creation()) {
        auto it = registry.find(k);
        if (it == registry.end() || naming::key(it->second.event_id) != naming::key(event.id)) return nullptr;
        return find_aggregation(event.message, it->second.path);
    }
    const Field* affected = affected_field(event);
    if (affected != nullptr && naming::key(affected->domain.object) == k) return &event.message.root;
    for (const auto& ref : aggregations_in_document_order(event.message)) {
        if (ref.depth == 0 || ref.via_iteration == nullptr) continue;
        const auto refs = reference_fields(*ref.aggregation);
        if (refs.size() == 1 && naming::key(refs.front()->domain.object) == k) return ref.aggregation;
    }
    return nullptr;
}

}  // namespace ca2oo
