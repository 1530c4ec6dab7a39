#include "ca2oo/dynamic_model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ca2oo/event_ordering.hpp"
#include "ca2oo/naming.hpp"

namespace ca2oo {

namespace {

std::string state_of(std::string_view event_id) { return naming::event_prefix(event_id) + "ed"; }

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

struct Builder {
    StateTransitionDiagram std;
    std::set<std::string> used;

    void add(const std::string& from, const std::string& service, const std::string& to, bool grey,
             bool backward = false) {
        StdTransition t{from, service, to, grey, backward, false};
        if (std::find(std.transitions.begin(), std.transitions.end(), t) == std.transitions.end()) {
            std.transitions.push_back(std::move(t));
        }
        used.insert(service);
    }
};

bool creates(const Transaction& t, const Class& cls) {
    if (t.steps.empty()) return false;
    const Service* s = cls.find_service(t.steps.front().service);
    return s != nullptr && s->kind == ServiceKind::creation;
}

bool is_step(const Class& cls, std::string_view service) {
    for (const auto& t : cls.transactions) {
        for (const auto& s : t.steps) {
            if (s.service == service) return true;
        }
    }
    return false;
}

StateTransitionDiagram basic_std(const Class& cls) {
    Builder b;
    b.std.class_name = cls.name;
    b.std.states = {std::string(kPrecreation), std::string(kAlive), std::string(kDestroyed)};
    const std::string pre(kPrecreation);
    const std::string alive(kAlive);
    for (const auto& s : cls.services) {
        const bool grey = s.internal || is_step(cls, s.name);
        if (s.kind == ServiceKind::creation) {
            b.add(pre, s.name, alive, grey);
        } else {
            b.add(alive, s.name, alive, grey);
        }
    }
    for (const auto& t : cls.transactions) b.add(creates(t, cls) ? pre : alive, t.name, alive, false);
    b.std.transitions.push_back(StdTransition{alive, std::string(kDestroy), std::string(kDestroyed), false, false, true});
    return b.std;
}

}  // namespace

std::vector<std::string> affecting_events(const ConceptualModel& model, std::string_view class_name) {
    const Class* cls = model.find_class(class_name);
    if (cls == nullptr) return {};
    std::vector<std::string> out{cls->origin.event_id};
    const std::string prefix = std::string(class_name) + ".";
    for (const auto& r : model.trace) {
        if (r.rule_id != "R-EXT-ATTR" && r.rule_id != "R-SETTER" && r.rule_id != "R-TXN") continue;
        if (!starts_with(r.element_path, prefix)) continue;
        if (std::find(out.begin(), out.end(), r.event_id) == out.end()) out.push_back(r.event_id);
    }
    const auto& rank = model.canonical_order;
    auto pos = [&](const std::string& id) {
        auto it = std::find(rank.begin(), rank.end(), id);
        return it == rank.end() ? rank.size() : static_cast<std::size_t>(it - rank.begin());
    };
    std::stable_sort(out.begin() + 1, out.end(), [&](const auto& a, const auto& b) { return pos(a) < pos(b); });
    return out;
}

Result<StateTransitionDiagram> derive_std(const Class& cls, const ConceptualModel& model,
                                          const RequirementsModel& requirements,
                                          const std::vector<std::string>& ordered_events) {
    Result<StateTransitionDiagram> result;
    if (model.find_class(cls.name) == nullptr) {
        result.diagnostics.push_back(make_error("E-STD", "class " + cls.name + " is not part of the model"));
        return result;
    }
    const auto affecting = affecting_events(model, cls.name);
    if (affecting.size() == 1) {
        result.value = basic_std(cls);
        return result;
    }

    ExtendedDiagram diagram;
    std::set<std::string> included;
    for (const auto& id : ordered_events) {
        if (const auto* e = requirements.find_event(id)) {
            diagram.events.push_back(EventKey{e->id, e->process});
            included.insert(e->id);
        }
    }
    for (const auto& edge : requirements.precedences()) {
        const auto* from = requirements.find_event(edge.from);
        const auto* to = requirements.find_event(edge.to);
        if (from == nullptr || to == nullptr || included.count(from->id) == 0 || included.count(to->id) == 0) continue;
        PrecedenceEdge e = edge;
        e.from = from->id;
        e.to = to->id;
        diagram.edges.push_back(std::move(e));
    }
    const auto poset = remove_loopbacks(diagram).value;
    std::map<std::string, std::set<std::string>> anc;
    for (const auto& id : affecting) {
        const auto a = ancestors(poset, id);
        anc[id] = std::set<std::string>(a.begin(), a.end());
    }
    const std::set<std::string> affecting_set(affecting.begin(), affecting.end());
    // Nearest affecting events strictly before `id`.
    auto covering = [&](const std::string& id) {
        const auto a = ancestors(poset, id);
        std::vector<std::string> candidates;
        for (const auto& x : a) {
            if (affecting_set.count(x) != 0) candidates.push_back(x);
        }
        std::vector<std::string> out;
        for (const auto& p : candidates) {
            bool shadowed = false;
            for (const auto& q : candidates) shadowed = shadowed || (q != p && anc[q].count(p) != 0);
            if (!shadowed) out.push_back(p);
        }
        std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
            return std::find(affecting.begin(), affecting.end(), x) < std::find(affecting.begin(), affecting.end(), y);
        });
        return out;
    };

    Builder b;
    b.std.class_name = cls.name;
    const std::string creator = affecting.front();
    const Service* eoe = nullptr;
    for (const auto& s : cls.services) {
        if (s.kind == ServiceKind::end_of_editing && s.origin.event_id == creator) eoe = &s;
    }
    b.std.states.emplace_back(kPrecreation);
    if (eoe != nullptr) b.std.states.emplace_back(kEditing);
    for (const auto& id : affecting) b.std.states.push_back(state_of(id));

    const std::string pre(kPrecreation);
    const std::string created = eoe != nullptr ? std::string(kEditing) : state_of(creator);
    for (const auto& s : cls.services) {
        if (s.kind == ServiceKind::creation) b.add(pre, s.name, created, s.internal);
    }
    for (const auto& t : cls.transactions) {
        if (creates(t, cls)) b.add(pre, t.name, created, false);
    }
    if (eoe != nullptr) b.add(std::string(kEditing), eoe->name, state_of(creator), false);

    // Entry point of an event on this class plus the services it runs.
    auto entries = [&](const std::string& id) {
        std::vector<std::pair<std::string, std::vector<std::string>>> out;
        for (const auto& t : cls.transactions) {
            if (t.origin.event_id != id || creates(t, cls)) continue;
            std::vector<std::string> steps;
            for (const auto& s : t.steps) {
                if (cls.find_service(s.service) != nullptr) steps.push_back(s.service);
            }
            out.emplace_back(t.name, steps);
            return out;
        }
        for (const auto& s : cls.services) {
            if (s.origin.event_id == id && !s.internal && s.kind == ServiceKind::setter) out.emplace_back(s.name, std::vector<std::string>{});
        }
        if (out.empty()) {
            for (const auto& s : cls.services) {
                if (s.origin.event_id == id) out.emplace_back(s.name, std::vector<std::string>{});
            }
        }
        return out;
    };
    auto connect = [&](const std::string& from, const std::string& id, bool backward) {
        for (const auto& [entry, steps] : entries(id)) {
            b.add(from, entry, state_of(id), false, backward);
            for (const auto& s : steps) b.add(from, s, state_of(id), true, backward);
        }
    };

    for (std::size_t i = 1; i < affecting.size(); ++i) {
        auto preds = covering(affecting[i]);
        if (preds.empty()) preds.push_back(creator);
        for (const auto& p : preds) connect(state_of(p), affecting[i], false);
    }
    for (const auto& edge : poset.removed) {
        const auto* to = requirements.find_event(edge.to);
        const auto* from = requirements.find_event(edge.from);
        if (to == nullptr || from == nullptr || affecting_set.count(to->id) == 0) continue;
        std::vector<std::string> sources;
        if (affecting_set.count(from->id) != 0) {
            sources.push_back(from->id);
        } else {
            sources = covering(from->id);
        }
        for (const auto& s : sources) connect(state_of(s), to->id, true);
    }

    for (const auto& s : cls.services) {
        if (b.used.count(s.name) != 0) continue;
        const std::string home = affecting_set.count(s.origin.event_id) != 0 ? s.origin.event_id : creator;
        b.add(state_of(home), s.name, state_of(home), true);
    }
    for (const auto& t : cls.transactions) {
        if (b.used.count(t.name) != 0) continue;
        const std::string home = affecting_set.count(t.origin.event_id) != 0 ? t.origin.event_id : creator;
        b.add(state_of(home), t.name, state_of(home), false);
    }
    result.value = std::move(b.std);
    return result;
}

Result<std::vector<StateTransitionDiagram>> derive_stds(ConceptualModel& model, const RequirementsModel& requirements,
                                                        const std::vector<std::string>& ordered_events) {
    Result<std::vector<StateTransitionDiagram>> result;
    std::vector<const Class*> classes;
    for (const auto& c : model.classes) classes.push_back(&c);
    std::sort(classes.begin(), classes.end(), [](const Class* a, const Class* b) { return a->name < b->name; });
    DerivationTrace records;
    for (const Class* c : classes) {
        auto diagram = derive_std(*c, model, requirements, ordered_events);
        result.diagnostics.insert(result.diagnostics.end(), diagram.diagnostics.begin(), diagram.diagnostics.end());
        if (!diagram.ok()) continue;
        const bool basic = std::find(diagram.value.states.begin(), diagram.value.states.end(), kAlive) != diagram.value.states.end();
        records.push_back(TraceRecord{"R-STD", c->origin.event_id, c->origin.event_id + "/order", "std", c->name,
                                      std::string(basic ? "basic, " : "") + std::to_string(diagram.value.states.size()) +
                                          " states, " + std::to_string(diagram.value.transitions.size()) + " transitions"});
        result.value.push_back(std::move(diagram.value));
    }
    model.trace.insert(model.trace.end(), records.begin(), records.end());
    return result;
}

}  // namespace ca2oo
