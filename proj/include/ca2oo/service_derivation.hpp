#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ca2oo/conceptual_model.hpp"
#include "ca2oo/requirements.hpp"

namespace ca2oo {

/// `multi_class` selects the plain `new_<noun>` form used for complex business objects.
Service derive_creation_service(const Class& cls, const CommunicativeEvent& event, bool multi_class);

/// Object-valued creation argument for the max-1 end of `rel` seen from its many side.
Argument creation_link_argument(const StructuralRelationship& rel, const std::string& event_id, int seq);

std::optional<Service> derive_end_of_editing(const Class& root, const CommunicativeEvent& event, bool multi_class);

struct ExtensionServices {
    std::vector<Service> services;            // on the affected class
    std::optional<Transaction> transaction;   // on the affected class
    std::vector<Service> referenced_services; // shared services owed by the referenced classes
    std::vector<std::string> referenced_classes;  // parallel to referenced_services
    std::string reaction;                     // the externally visible entry point
};

/// `loopback_target`: some loopback edge re-enters this event, so a prior
/// link has to be removed first.
ExtensionServices derive_extension_services(const Class& cls, const CommunicativeEvent& event,
                                            const std::vector<Attribute>& new_attrs,
                                            const std::vector<StructuralRelationship>& new_rels, bool loopback_target);

/// Setter for attributes carried onto a secondary class. `event_named`
/// gives it the event's service name instead of `set_<...>`.
Service derive_carrier_setter(const Class& cls, const CommunicativeEvent& event, const std::vector<Attribute>& attrs,
                              bool event_named);

/// Insertion and deletion pair for a dynamic relationship; identical on both classes.
std::pair<Service, Service> derive_shared_services(const StructuralRelationship& rel, const std::string& event_id,
                                                   int seq);

/// Internalizes creation services holding object arguments from later
/// events and wraps each in a `CREATE_<NOUN>` transaction.
ConceptualModel revise_creation_services(ConceptualModel model);

}  // namespace ca2oo
