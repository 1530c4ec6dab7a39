#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ca2oo/diagnostic.hpp"
#include "ca2oo/requirements.hpp"

namespace ca2oo {

/// Event id together with its process; the pair is the tie-break key.
struct EventKey {
    std::string id;
    std::string process;

    bool operator==(const EventKey&) const = default;
};

bool operator<(const EventKey& a, const EventKey& b);

struct ExtendedDiagram {
    std::string root_process;  // empty: the whole model
    std::vector<EventKey> events;  // sorted by key
    std::vector<PrecedenceEdge> edges;
};

using OrderEdge = std::pair<std::string, std::string>;

struct EventPoset {
    std::vector<EventKey> events;
    std::vector<OrderEdge> order_edges;
    std::vector<PrecedenceEdge> removed;
};

/// Events of `process` plus, transitively, every event preceding one already included.
Result<ExtendedDiagram> extend_diagram(const RequirementsModel& model, std::string_view process);

/// Every event and edge of the model.
ExtendedDiagram full_diagram(const RequirementsModel& model);

/// Drops the edges flagged `loopback`; any cycle left over is an error.
Result<EventPoset> remove_loopbacks(const ExtendedDiagram& diagram);

/// Kahn's algorithm, ready events taken in ascending (process, id) order.
std::vector<std::string> topological_order(const EventPoset& poset);

/// A cycle through the given edges, first node repeated at the end; empty if acyclic.
std::vector<std::string> find_cycle(const std::vector<EventKey>& events, const std::vector<OrderEdge>& edges);

/// True if `order` is a permutation of the poset's events respecting every order edge.
bool is_linear_extension(const EventPoset& poset, const std::vector<std::string>& order);

/// Ids of the events from which `target` is reachable through order edges.
std::vector<std::string> ancestors(const EventPoset& poset, std::string_view target);

}  // namespace ca2oo
