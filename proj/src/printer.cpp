#include <sstream>

#include "ca2oo/requirements.hpp"
#include "lexer.hpp"

namespace ca2oo {

namespace {

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

// Bare if it lexes back to the same run of words.
std::string name(std::string_view n) {
    Diagnostics diags;
    const auto toks = detail::tokenize(n, diags);
    if (!diags.empty() || toks.size() < 2) return quote(n);
    std::string joined;
    for (const auto& t : toks) {
        if (t.kind == detail::TokenKind::end) break;
        if (t.kind != detail::TokenKind::word || t.loc.line != 1 || t.text == "affected" || t.text == "init") {
            return quote(n);
        }
        if (!joined.empty()) joined.push_back(' ');
        joined += t.text;
    }
    return joined == n ? joined : quote(n);
}

std::string card(const CardinalityEnd& e) {
    return std::to_string(e.min) + ":" + (e.max ? std::to_string(*e.max) : std::string("M"));
}

std::string field_ref(const FieldRef& r) { return name(r.object) + "." + name(r.field); }

void print_aggregation(const Aggregation& agg, int indent, std::ostream& out);

void print_item(const Item& item, int indent, std::ostream& out) {
    const std::string pad(indent, ' ');
    if (const auto* f = std::get_if<Field>(&item)) {
        out << name(f->name) << " [" << (f->op == OpCode::generated ? "g" : "i") << ' ';
        switch (f->domain.kind) {
            case Domain::Kind::enumeration: {
                out << "enum(";
                for (std::size_t i = 0; i < f->domain.literals.size(); ++i) {
                    out << (i == 0 ? "" : " | ") << name(f->domain.literals[i]);
                }
                out << ')';
                break;
            }
            case Domain::Kind::reference: out << "ref " << name(f->domain.object); break;
            default: out << to_string(f->domain.kind);
        }
        if (f->size) out << " (" << *f->size << ')';
        if (f->affected) out << " affected";
        if (f->init) out << " init " << quote(*f->init);
        out << "]\n";
    } else if (const auto* a = std::get_if<Box<Aggregation>>(&item)) {
        out << name((*a)->name) << " =\n";
        print_aggregation(**a, indent + 2, out);
    } else {
        const auto& it = std::get<Iteration>(item);
        out << name(it.name) << " = {\n";
        if (it.body->name.empty()) {
            print_aggregation(*it.body, indent + 4, out);
        } else {
            out << pad << "    " << name(it.body->name) << " =\n";
            print_aggregation(*it.body, indent + 6, out);
        }
        out << pad << "  }\n";
    }
}

void print_aggregation(const Aggregation& agg, int indent, std::ostream& out) {
    const std::string pad(indent, ' ');
    for (std::size_t i = 0; i < agg.items.size(); ++i) {
        out << pad << (i == 0 ? "< " : "+ ");
        print_item(agg.items[i], indent, out);
    }
    out << pad << ">\n";
}

void print_event(const CommunicativeEvent& e, std::ostream& out) {
    out << "event " << e.id << ' ' << quote(e.title) << " in " << e.process << " {\n";
    if (!e.primary_actor.empty()) out << "  primary: " << quote(e.primary_actor) << '\n';
    if (!e.support_actor.empty()) out << "  support: " << quote(e.support_actor) << '\n';
    out << "  message " << name(e.message.root.name) << " =\n";
    print_aggregation(e.message.root, 4, out);
    for (const auto& r : e.registrations) {
        out << "  registers " << name(r.object) << " = ";
        for (std::size_t i = 0; i < r.path.size(); ++i) out << (i == 0 ? "" : ".") << name(r.path[i]);
        out << '\n';
    }
    for (const auto& r : e.restrictions) {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, IdentifiedBy>) {
                    out << "  identified-by " << name(p.object) << " (";
                    for (std::size_t i = 0; i < p.fields.size(); ++i) out << (i == 0 ? "" : ", ") << name(p.fields[i]);
                    out << ")\n";
                } else if constexpr (std::is_same_v<T, CardinalityRestriction>) {
                    out << "  cardinality " << name(p.first.object) << ' ' << card(p.first)
                        << (p.dynamic ? " dynamic" : "") << " -- " << card(p.second) << ' ' << name(p.second.object)
                        << '\n';
                } else if constexpr (std::is_same_v<T, SizeRestriction>) {
                    out << "  size " << field_ref(p.target) << " = " << p.size << '\n';
                } else if constexpr (std::is_same_v<T, NullsRestriction>) {
                    out << "  nulls " << field_ref(p.target) << " = " << (p.allowed ? "yes" : "no") << '\n';
                } else if constexpr (std::is_same_v<T, KindRestriction>) {
                    out << "  kind " << field_ref(p.target) << " = "
                        << (p.kind == AttributeKind::constant ? "constant" : "variable") << '\n';
                } else {
                    out << "  type " << field_ref(p.target) << " = " << to_string(p.type) << '\n';
                }
            },
            r.payload);
    }
    out << "  reaction " << (e.is_creation() ? "creation" : "extension") << " name " << quote(e.reaction.name);
    if (e.reaction.end_of_editing) out << " end-of-editing " << (*e.reaction.end_of_editing ? "yes" : "no");
    out << '\n';
    for (const auto& p : e.precedes) {
        out << "  precedes " << p.to;
        if (p.loopback) {
            out << " loopback";
            if (p.guard) out << ' ' << quote(*p.guard);
        }
        out << '\n';
    }
    out << "}\n";
}

}  // namespace

std::string print_canonical(const RequirementsModel& model) {
    const RequirementsModel m = model.normalized();
    std::ostringstream out;
    for (const auto& p : m.processes) out << "process " << p.acronym << ' ' << quote(p.name) << '\n';
    for (const auto& e : m.events) {
        out << '\n';
        print_event(e, out);
    }
    return out.str();
}

}  // namespace ca2oo
