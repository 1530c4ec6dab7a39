#include "ca2oo/event_ordering.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ca2oo/naming.hpp"

namespace ca2oo {

bool operator<(const EventKey& a, const EventKey& b) {
    const int c = naming::natural_compare(a.process, b.process);
    if (c != 0) return c < 0;
    return naming::natural_less(a.id, b.id);
}

namespace {

std::map<std::string, EventKey> index_by_key(const std::vector<EventKey>& events) {
    std::map<std::string, EventKey> out;
    for (const auto& e : events) out.emplace(naming::key(e.id), e);
    return out;
}

EventKey key_of(const CommunicativeEvent& e) { return EventKey{e.id, e.process}; }

}  // namespace

Result<ExtendedDiagram> extend_diagram(const RequirementsModel& model, std::string_view process) {
    Result<ExtendedDiagram> result;
    const Process* p = model.find_process(process);
    if (p == nullptr) {
        result.diagnostics.push_back(make_error("E-PROCESS", "unknown process '" + std::string(process) + "'"));
        return result;
    }
    result.value.root_process = p->acronym;

    std::set<std::string> included;
    for (const auto& e : model.events) {
        if (naming::key(e.process) == naming::key(p->acronym)) included.insert(naming::key(e.id));
    }
    const auto edges = model.precedences();
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& edge : edges) {
            if (included.count(naming::key(edge.to)) != 0 && model.find_event(edge.from) != nullptr &&
                included.insert(naming::key(edge.from)).second) {
                grew = true;
            }
        }
    }
    for (const auto& e : model.events) {
        if (included.count(naming::key(e.id)) != 0) result.value.events.push_back(key_of(e));
    }
    std::sort(result.value.events.begin(), result.value.events.end());
    for (const auto& edge : edges) {
        if (included.count(naming::key(edge.from)) != 0 && included.count(naming::key(edge.to)) != 0) {
            result.value.edges.push_back(edge);
        }
    }
    return result;
}

ExtendedDiagram full_diagram(const RequirementsModel& model) {
    ExtendedDiagram d;
    for (const auto& e : model.events) d.events.push_back(key_of(e));
    std::sort(d.events.begin(), d.events.end());
    for (const auto& edge : model.precedences()) {
        if (model.find_event(edge.to) != nullptr) d.edges.push_back(edge);
    }
    return d;
}

Result<EventPoset> remove_loopbacks(const ExtendedDiagram& diagram) {
    Result<EventPoset> result;
    auto& poset = result.value;
    poset.events = diagram.events;
    const auto index = index_by_key(diagram.events);
    std::set<OrderEdge> seen;
    for (const auto& edge : diagram.edges) {
        if (edge.loopback) {
            poset.removed.push_back(edge);
            continue;
        }
        auto from = index.find(naming::key(edge.from));
        auto to = index.find(naming::key(edge.to));
        if (from == index.end() || to == index.end()) continue;
        OrderEdge oe{from->second.id, to->second.id};
        if (seen.insert(oe).second) poset.order_edges.push_back(oe);
    }
    const auto cycle = find_cycle(poset.events, poset.order_edges);
    if (!cycle.empty()) {
        std::string listing;
        for (const auto& id : cycle) {
            if (!listing.empty()) listing += " -> ";
            listing += id;
        }
        result.diagnostics.push_back(make_error(
            "E-CYCLE", "precedence cycle without a loopback edge: " + listing + " (mark one edge 'loopback')"));
    }
    return result;
}

std::vector<std::string> topological_order(const EventPoset& poset) {
    std::map<std::string, int> indegree;
    std::map<std::string, std::vector<std::string>> successors;
    std::map<std::string, EventKey> by_id;
    for (const auto& e : poset.events) {
        indegree[e.id] = 0;
        by_id.emplace(e.id, e);
    }
    for (const auto& [from, to] : poset.order_edges) {
        successors[from].push_back(to);
        ++indegree[to];
    }
    std::set<EventKey> ready;
    for (const auto& e : poset.events) {
        if (indegree[e.id] == 0) ready.insert(e);
    }
    std::vector<std::string> order;
    while (!ready.empty()) {
        const EventKey next = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(next.id);
        for (const auto& succ : successors[next.id]) {
            if (--indegree[succ] == 0) ready.insert(by_id.at(succ));
        }
    }
    return order;
}

std::vector<std::string> find_cycle(const std::vector<EventKey>& events, const std::vector<OrderEdge>& edges) {
    std::vector<EventKey> sorted = events;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::string, std::vector<std::string>> succ;
    for (const auto& [from, to] : edges) succ[from].push_back(to);
    std::map<std::string, EventKey> by_id;
    for (const auto& e : sorted) by_id.emplace(e.id, e);
    for (auto& [id, list] : succ) {
        std::sort(list.begin(), list.end(), [&](const std::string& a, const std::string& b) {
            auto ia = by_id.find(a);
            auto ib = by_id.find(b);
            if (ia == by_id.end() || ib == by_id.end()) return a < b;
            return ia->second < ib->second;
        });
    }

    enum class Mark { fresh, active, done };
    std::map<std::string, Mark> mark;
    std::vector<std::string> stack;
    std::vector<std::string> cycle;

    std::function<bool(const std::string&)> visit = [&](const std::string& id) {
        mark[id] = Mark::active;
        stack.push_back(id);
        for (const auto& s : succ[id]) {
            if (mark[s] == Mark::active) {
                auto from = std::find(stack.begin(), stack.end(), s);
                cycle.assign(from, stack.end());
                cycle.push_back(s);
                return true;
            }
            if (mark[s] == Mark::fresh && visit(s)) return true;
        }
        stack.pop_back();
        mark[id] = Mark::done;
        return false;
    };
    for (const auto& e : sorted) {
        if (mark[e.id] == Mark::fresh && visit(e.id)) return cycle;
    }
    return {};
}

bool is_linear_extension(const EventPoset& poset, const std::vector<std::string>& order) {
    if (order.size() != poset.events.size()) return false;
    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!position.emplace(order[i], i).second) return false;
    }
    for (const auto& e : poset.events) {
        if (position.count(e.id) == 0) return false;
    }
    for (const auto& [from, to] : poset.order_edges) {
        if (position.at(from) >= position.at(to)) return false;
    }
    return true;
}

std::vector<std::string> ancestors(const EventPoset& poset, std::string_view target) {
    std::map<std::string, std::vector<std::string>> preds;
    for (const auto& [from, to] : poset.order_edges) preds[to].push_back(from);
    std::set<std::string> seen;
    std::vector<std::string> todo{std::string(target)};
    while (!todo.empty()) {
        const std::string id = todo.back();
        todo.pop_back();
        for (const auto& p : preds[id]) {
            if (seen.insert(p).second) todo.push_back(p);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace ca2oo
