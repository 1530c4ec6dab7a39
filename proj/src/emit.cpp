#include "ca2oo/emit.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "ca2oo/error.hpp"
#include "ca2oo/naming.hpp"

namespace ca2oo {

namespace {

using json = nlohmann::json;

struct Ranker {
    const std::vector<std::string>& order;

    std::size_t rank(const Origin& o) const {
        auto it = std::find(order.begin(), order.end(), o.event_id);
        return it == order.end() ? order.size() : static_cast<std::size_t>(it - order.begin());
    }

    template <typename T>
    void sort(std::vector<T>& items) const {
        std::stable_sort(items.begin(), items.end(), [&](const T& a, const T& b) {
            const auto ra = rank(a.origin);
            const auto rb = rank(b.origin);
            if (ra != rb) return ra < rb;
            if (a.origin.event_id != b.origin.event_id) return a.origin.event_id < b.origin.event_id;
            if (a.origin.seq != b.origin.seq) return a.origin.seq < b.origin.seq;
            return a.name < b.name;
        });
    }
};

std::string max_text(const std::optional<int>& max) { return max ? std::to_string(*max) : std::string("M"); }

json to_json(const Argument& a) {
    json j = {{"name", a.name}, {"type", a.data_type}, {"nulls", a.nulls_allowed}, {"object", a.object_valued},
              {"origin", a.origin.event_id}};
    if (a.size) j["size"] = *a.size;
    return j;
}

json args_json(const std::vector<Argument>& args) {
    json out = json::array();
    for (const auto& a : args) out.push_back(to_json(a));
    return out;
}

json to_json(const Attribute& a) {
    json j = {{"name", a.name},
              {"id", a.is_id},
              {"kind", a.kind == AttributeKind::constant ? "constant" : "variable"},
              {"type", to_string(a.data_type)},
              {"requested", a.requested},
              {"nulls", a.nulls_allowed},
              {"origin", a.origin.event_id}};
    if (a.size) j["size"] = *a.size;
    if (a.default_value) j["default"] = *a.default_value;
    if (!a.enum_literals.empty()) j["literals"] = a.enum_literals;
    return j;
}

json to_json(const Service& s) {
    json vals = json::array();
    for (const auto& v : s.valuations) vals.push_back({{"attribute", v.attribute}, {"argument", v.argument}});
    json j = {{"name", s.name},         {"kind", to_string(s.kind)}, {"internal", s.internal},
              {"arguments", args_json(s.arguments)}, {"valuations", vals}, {"origin", s.origin.event_id}};
    if (!s.relationship.empty()) j["relationship"] = s.relationship;
    return j;
}

json to_json(const Transaction& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json step = {{"service", s.service}, {"arguments", s.arguments}};
        if (s.guard) step["guard"] = *s.guard;
        steps.push_back(step);
    }
    return {{"name", t.name},     {"arguments", args_json(t.arguments)}, {"steps", steps},
            {"formula", t.formula_note}, {"origin", t.origin.event_id}};
}

json to_json(const RelationshipEnd& e) {
    return {{"class", e.class_name}, {"role", e.role}, {"min", e.min}, {"max", max_text(e.max)}};
}

json to_json(const StructuralRelationship& r) {
    return {{"name", r.name},
            {"one", to_json(r.one)},
            {"many", to_json(r.many)},
            {"dynamic", r.dynamic},
            {"source", r.source == RelationshipSource::iteration ? "iteration" : "reference"},
            {"annotated", r.annotated},
            {"origin", r.origin.event_id}};
}

std::string dot_id(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

// Quoted label with one line per entry.
std::string dot_label(std::initializer_list<std::string> lines) {
    std::string out;
    for (const auto& l : lines) {
        if (!out.empty()) out += "\\n";
        const std::string quoted = dot_id(l);
        out += quoted.substr(1, quoted.size() - 2);
    }
    return "\"" + out + "\"";
}

// Escapes record-label metacharacters.
std::string record_text(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (std::string_view("{}|<>\"\\").find(c) != std::string_view::npos) out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string attribute_line(const Attribute& a) {
    std::string t = to_string(a.data_type);
    if (a.size) t += "(" + std::to_string(*a.size) + ")";
    return (a.is_id ? "#" : "") + a.name + " : " + t;
}

std::string service_line(const Service& s) {
    std::string line = s.name + "(";
    for (std::size_t i = 0; i < s.arguments.size(); ++i) line += (i == 0 ? "" : ", ") + s.arguments[i].name;
    line += ")";
    if (s.internal) line += " [internal]";
    return line;
}

std::string edge_label(const StructuralRelationship& r) {
    return std::to_string(r.one.min) + ":" + max_text(r.one.max) + " — " + std::to_string(r.many.min) + ":" +
           max_text(r.many.max);
}

}  // namespace

Dialect parse_dialect(std::string_view name) {
    const std::string k = naming::lower(name);
    if (k == "dot" || k == "gv" || k == "graphviz") return Dialect::dot;
    if (k == "plantuml" || k == "puml") return Dialect::plantuml;
    throw Error("E-DIALECT", "unknown diagram dialect '" + std::string(name) + "' (expected dot or plantuml)");
}

std::optional<Dialect> dialect_for_path(std::string_view path) {
    const auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return std::nullopt;
    try {
        return parse_dialect(path.substr(dot + 1));
    } catch (const Error&) {
        return std::nullopt;
    }
}

ConceptualModel canonicalized(const ConceptualModel& model) {
    ConceptualModel m = model;
    const Ranker ranker{m.canonical_order};
    std::sort(m.classes.begin(), m.classes.end(), [](const Class& a, const Class& b) { return a.name < b.name; });
    for (auto& c : m.classes) {
        ranker.sort(c.attributes);
        ranker.sort(c.services);
        ranker.sort(c.transactions);
        for (auto& s : c.services) ranker.sort(s.arguments);
    }
    std::sort(m.relationships.begin(), m.relationships.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    return m;
}

std::string emit_canonical(const ConceptualModel& model) {
    const ConceptualModel m = canonicalized(model);
    json classes = json::array();
    for (const auto& c : m.classes) {
        json attrs = json::array();
        for (const auto& a : c.attributes) attrs.push_back(to_json(a));
        json svcs = json::array();
        for (const auto& s : c.services) svcs.push_back(to_json(s));
        json txns = json::array();
        for (const auto& t : c.transactions) txns.push_back(to_json(t));
        classes.push_back({{"name", c.name},
                           {"object", c.object},
                           {"origin", c.origin.event_id},
                           {"attributes", attrs},
                           {"services", svcs},
                           {"transactions", txns}});
    }
    json rels = json::array();
    for (const auto& r : m.relationships) rels.push_back(to_json(r));
    json doc = {{"schema", kSchemaName}, {"version", kSchemaVersion}, {"classes", classes}, {"relationships", rels}};
    return doc.dump(2) + "\n";
}

std::string emit_class_diagram(const ConceptualModel& model, Dialect dialect) {
    const ConceptualModel m = canonicalized(model);
    std::ostringstream out;
    if (dialect == Dialect::dot) {
        out << "digraph ConceptualModel {\n";
        out << "  graph [rankdir=LR];\n";
        out << "  node [shape=record, fontname=\"Helvetica\"];\n";
        out << "  edge [dir=none, fontname=\"Helvetica\"];\n";
        for (const auto& c : m.classes) {
            out << "  " << dot_id(c.name) << " [label=\"{" << record_text(c.name) << "|";
            for (const auto& a : c.attributes) out << record_text(attribute_line(a)) << "\\l";
            out << "|";
            for (const auto& s : c.services) out << record_text(service_line(s)) << "\\l";
            for (const auto& t : c.transactions) out << record_text(t.name + " [transaction]") << "\\l";
            out << "}\"];\n";
        }
        for (const auto& r : m.relationships) {
            out << "  " << dot_id(r.one.class_name) << " -> " << dot_id(r.many.class_name) << " [label="
                << dot_label({r.name, edge_label(r) + (r.dynamic ? " (dynamic)" : "")}) << ", taillabel="
                << dot_id(r.one.role) << ", headlabel=" << dot_id(r.many.role) << "];\n";
        }
        out << "}\n";
    } else {
        out << "@startuml\n";
        out << "hide circle\n";
        for (const auto& c : m.classes) {
            out << "class " << c.name << " {\n";
            for (const auto& a : c.attributes) out << "  " << attribute_line(a) << "\n";
            if (!c.attributes.empty() && (!c.services.empty() || !c.transactions.empty())) out << "  --\n";
            for (const auto& s : c.services) out << "  " << service_line(s) << "\n";
            for (const auto& t : c.transactions) out << "  " << t.name << " [transaction]\n";
            out << "}\n";
        }
        for (const auto& r : m.relationships) {
            out << r.one.class_name << " \"" << r.one.role << " " << r.one.min << ".." << (r.one.max ? "1" : "*")
                << "\" -- \"" << r.many.role << " " << r.many.min << ".." << (r.many.max ? "1" : "*") << "\" "
                << r.many.class_name << " : " << r.name << "\\n" << edge_label(r) << (r.dynamic ? " (dynamic)" : "")
                << "\n";
        }
        out << "@enduml\n";
    }
    return out.str();
}

std::string emit_std_diagram(const StateTransitionDiagram& diagram, Dialect dialect) {
    std::ostringstream out;
    if (dialect == Dialect::dot) {
        out << "digraph " << dot_id(diagram.class_name) << " {\n";
        out << "  graph [rankdir=LR];\n";
        out << "  node [shape=box, style=rounded, fontname=\"Helvetica\"];\n";
        out << "  edge [fontname=\"Helvetica\"];\n";
        for (const auto& s : diagram.states) {
            out << "  " << dot_id(s);
            if (s == kPrecreation) out << " [shape=circle, style=filled, fillcolor=black, label=\"\", width=0.25]";
            if (s == kDestroyed) out << " [shape=doublecircle, style=filled, fillcolor=black, label=\"\", width=0.2]";
            out << ";\n";
        }
        for (const auto& t : diagram.transitions) {
            out << "  " << dot_id(t.from) << " -> " << dot_id(t.to) << " [label=" << dot_id(t.service);
            if (t.grey) out << ", color=grey60, fontcolor=grey60";
            if (t.backward) out << ", style=dashed, constraint=false";
            if (t.implicit) out << ", style=dotted";
            out << "];\n";
        }
        out << "}\n";
    } else {
        out << "@startuml\n";
        out << "title " << diagram.class_name << "\n";
        for (const auto& s : diagram.states) {
            if (s != kPrecreation && s != kDestroyed) out << "state " << s << "\n";
        }
        auto name = [](const std::string& s) {
            return (s == kPrecreation || s == kDestroyed) ? std::string("[*]") : s;
        };
        for (const auto& t : diagram.transitions) {
            out << name(t.from) << " -" << (t.backward ? "up" : "") << (t.grey ? "[#grey]" : "") << "-> " << name(t.to)
                << " : " << t.service << "\n";
        }
        out << "@enduml\n";
    }
    return out.str();
}

std::string emit_trace(const DerivationTrace& trace) {
    const std::vector<std::string> header = {"RULE", "EVENT", "SOURCE", "KIND", "ELEMENT", "NOTE"};
    std::vector<std::size_t> width(header.size());
    auto cells = [](const TraceRecord& r) {
        return std::vector<std::string>{r.rule_id, r.event_id, r.source_path, r.element_kind, r.element_path, r.note};
    };
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : trace) {
        const auto c = cells(r);
        for (std::size_t i = 0; i < c.size(); ++i) width[i] = std::max(width[i], naming::utf8_length(c[i]));
    }
    std::ostringstream out;
    auto row = [&](const std::vector<std::string>& c) {
        std::string line;
        for (std::size_t i = 0; i < c.size(); ++i) {
            line += c[i];
            if (i + 1 < c.size()) line += std::string(width[i] - naming::utf8_length(c[i]) + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    };
    row(header);
    for (const auto& r : trace) row(cells(r));
    return out.str();
}

}  // namespace ca2oo
