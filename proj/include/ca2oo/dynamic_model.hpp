#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ca2oo/conceptual_model.hpp"
#include "ca2oo/diagnostic.hpp"
#include "ca2oo/requirements.hpp"

namespace ca2oo {

inline constexpr std::string_view kPrecreation = "PRECREATION";
inline constexpr std::string_view kEditing = "EDITING";
inline constexpr std::string_view kAlive = "ALIVE";
inline constexpr std::string_view kDestroyed = "DESTROYED";
inline constexpr std::string_view kDestroy = "destroy";

struct StdTransition {
    std::string from;
    std::string service;  // service or transaction name
    std::string to;
    bool grey = false;      // runs as part of another transition
    bool backward = false;  // re-entry following a loopback
    bool implicit = false;  // default destruction, no derived service behind it

    bool operator==(const StdTransition&) const = default;
};

struct StateTransitionDiagram {
    std::string class_name;
    std::vector<std::string> states;
    std::vector<StdTransition> transitions;

    bool operator==(const StateTransitionDiagram&) const = default;
};

/// Events that create the class or add attributes/entry points to it, in canonical order.
std::vector<std::string> affecting_events(const ConceptualModel& model, std::string_view class_name);

Result<StateTransitionDiagram> derive_std(const Class& cls, const ConceptualModel& model,
                                          const RequirementsModel& requirements,
                                          const std::vector<std::string>& ordered_events);

/// One diagram per class, in class-name order. Appends R-STD trace records to `model`.
Result<std::vector<StateTransitionDiagram>> derive_stds(ConceptualModel& model, const RequirementsModel& requirements,
                                                        const std::vector<std::string>& ordered_events);

}  // namespace ca2oo
