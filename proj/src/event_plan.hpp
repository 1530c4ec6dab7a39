#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ca2oo/conceptual_model.hpp"
#include "ca2oo/requirements.hpp"

namespace ca2oo::detail {

struct PlannedClass {
    std::string object;  // as registered
    const Aggregation* aggregation = nullptr;
    std::vector<std::string> path;
    SourceLoc loc;
};

/// `one_object` ends up on the max-1 side: the iteration parent, or the
/// referenced object.
struct PlannedRelationship {
    RelationshipSource source = RelationshipSource::reference;
    std::string one_object;
    std::string many_object;
    const Field* field = nullptr;  // reference-derived
    std::vector<std::string> path;  // aggregation (or iteration) it was found in
    SourceLoc loc;
};

/// Iteration body in an extension event whose single reference names an
/// object registered alongside the affected one; its data fields extend
/// the referenced class.
struct Carrier {
    const Aggregation* body = nullptr;
    std::vector<std::string> path;
    const Field* ref = nullptr;
    std::vector<const Field*> data;
    SourceLoc loc;
};

struct EventPlan {
    std::vector<PlannedClass> classes;
    std::vector<PlannedRelationship> relationships;
    const Field* affected = nullptr;
    std::vector<const Field*> attributes;  // extension: root data fields
    std::vector<Carrier> carriers;
    Diagnostics errors;  // unsupported shapes
};

EventPlan plan_event(const CommunicativeEvent& event, const BusinessObjectRegistry& registry);

struct CardinalityMatch {
    const CardinalityRestriction* restriction = nullptr;
    const CardinalityEnd* one = nullptr;
    const CardinalityEnd* many = nullptr;
    SourceLoc loc;
};

/// The annotation on {one, many}, sides oriented to the arguments.
CardinalityMatch find_cardinality(const CommunicativeEvent& event, std::string_view one, std::string_view many);

const IdentifiedBy* find_identifier(const CommunicativeEvent& event, std::string_view object);

/// Per-field annotation of type T on object.field, or null.
template <typename T>
const T* find_field_annotation(const CommunicativeEvent& event, std::string_view object, std::string_view field);

bool same_name(std::string_view a, std::string_view b);

}  // namespace ca2oo::detail
