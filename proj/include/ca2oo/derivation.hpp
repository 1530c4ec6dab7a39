#pragma once

#include <string>
#include <vector>

#include "ca2oo/conceptual_model.hpp"
#include "ca2oo/diagnostic.hpp"
#include "ca2oo/requirements.hpp"

/// Per-event class-diagram views and their incremental integration.
namespace ca2oo {

struct ClassExtension {
    std::string class_name;
    std::vector<Attribute> attributes;
    std::vector<Service> services;
    std::vector<Transaction> transactions;
};

/// An object-valued argument appended to an existing creation service.
struct ArgumentAddition {
    std::string class_name;
    std::string service;
    Argument argument;
};

struct ClassDiagramView {
    std::string event_id;
    std::vector<Class> new_classes;
    std::vector<ClassExtension> extensions;
    std::vector<StructuralRelationship> relationships;
    std::vector<ArgumentAddition> argument_additions;
    DerivationTrace trace;
};

/// Folds derive_view and integrate_view over `order`, then revises creation
/// services. `order` must be a linear extension of the precedence poset of
/// the events it lists.
Result<ConceptualModel> derive(const RequirementsModel& model, const std::vector<std::string>& order);

/// The view one event contributes given the model derived so far. Throws Error.
ClassDiagramView derive_view(const CommunicativeEvent& event, const RequirementsModel& requirements,
                             const ConceptualModel& so_far);

/// Throws Error for a generated op on a non-number domain, or a reference domain.
DataType map_domain(const Domain& domain, OpCode op);

/// Class for a registered aggregation of a creation event; trace records for
/// its attributes go to `trace`. Throws Error.
Class derive_class_from_aggregation(const Aggregation& agg, const CommunicativeEvent& event, const std::string& object,
                                    DerivationTrace* trace = nullptr);

StructuralRelationship derive_relationship_from_iteration(const std::string& parent_class, const std::string& child_class,
                                                          const CommunicativeEvent& event,
                                                          const std::string& parent_object,
                                                          const std::string& child_object);

StructuralRelationship derive_relationship_from_reference(const Field& ref_field, const std::string& owning_class,
                                                          const std::string& referenced_class,
                                                          const CommunicativeEvent& event,
                                                          const std::string& owning_object);

/// Fills the relationship name and both roles.
void name_relationship_and_roles(StructuralRelationship& rel, const Field* ref_field = nullptr);

ClassDiagramView derive_extension_view(const CommunicativeEvent& event, const RequirementsModel& requirements,
                                       const ConceptualModel& so_far);

/// All-or-nothing merge: on any collision the input model comes back unchanged
/// together with the collision diagnostics.
Result<ConceptualModel> integrate_view(const ConceptualModel& model, const ClassDiagramView& view);

}  // namespace ca2oo
