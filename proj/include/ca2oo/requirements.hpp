#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ca2oo/diagnostic.hpp"
#include "ca2oo/message_structure.hpp"

/// Input metamodel: a Communication Analysis requirements model and the
/// `.carm` DSL that encodes it.
namespace ca2oo {

struct Process {
    std::string acronym;
    std::string name;
    SourceLoc loc;

    bool operator==(const Process&) const = default;
};

struct PrecedenceEdge {
    std::string from;
    std::string to;
    bool loopback = false;
    std::optional<std::string> guard;
    SourceLoc loc;

    bool operator==(const PrecedenceEdge&) const = default;
};

struct Registration {
    std::string object;
    std::vector<std::string> path;
    SourceLoc loc;

    bool operator==(const Registration&) const = default;
};

/// `Object.Field` target of a per-field annotation.
struct FieldRef {
    std::string object;
    std::string field;

    bool operator==(const FieldRef&) const = default;
};

struct IdentifiedBy {
    std::string object;
    std::vector<std::string> fields;

    bool operator==(const IdentifiedBy&) const = default;
};

struct CardinalityEnd {
    std::string object;
    int min = 0;
    std::optional<int> max;  // nullopt = M

    bool operator==(const CardinalityEnd&) const = default;
};

struct CardinalityRestriction {
    CardinalityEnd first;
    CardinalityEnd second;
    bool dynamic = false;

    bool operator==(const CardinalityRestriction&) const = default;
};

struct SizeRestriction {
    FieldRef target;
    int size = 0;

    bool operator==(const SizeRestriction&) const = default;
};

struct NullsRestriction {
    FieldRef target;
    bool allowed = true;

    bool operator==(const NullsRestriction&) const = default;
};

enum class AttributeKind { constant, variable };

struct KindRestriction {
    FieldRef target;
    AttributeKind kind = AttributeKind::variable;

    bool operator==(const KindRestriction&) const = default;
};

enum class DataType { autonumeric, nat, integer, real, string, text, date, time, datetime, boolean };

/// Explicit data-type choice for a field, for domains that admit several types.
struct TypeRestriction {
    FieldRef target;
    DataType type = DataType::string;

    bool operator==(const TypeRestriction&) const = default;
};

using RestrictionPayload = std::variant<IdentifiedBy, CardinalityRestriction, SizeRestriction,
                                        NullsRestriction, KindRestriction, TypeRestriction>;

enum class RestrictionKind { identified_by, cardinality, size, nullability, attribute_kind, data_type };

struct Restriction {
    RestrictionPayload payload;
    SourceLoc loc;

    RestrictionKind kind() const { return static_cast<RestrictionKind>(payload.index()); }
    bool operator==(const Restriction&) const = default;
};

enum class ReactionKind { creation, extension };

struct ReactionSpec {
    ReactionKind kind = ReactionKind::creation;
    std::string name;
    std::optional<bool> end_of_editing;  // nullopt: not written, defaults to true
    SourceLoc loc;

    bool wants_end_of_editing() const { return end_of_editing.value_or(true); }
    bool operator==(const ReactionSpec&) const = default;
};

struct CommunicativeEvent {
    std::string id;
    std::string title;
    std::string process;
    std::string primary_actor;
    std::string support_actor;
    MessageStructure message;
    std::vector<Registration> registrations;
    std::vector<Restriction> restrictions;
    ReactionSpec reaction;
    std::vector<PrecedenceEdge> precedes;  // edges leaving this event
    SourceLoc loc;

    bool is_creation() const { return reaction.kind == ReactionKind::creation; }
    bool operator==(const CommunicativeEvent&) const = default;
};

struct RequirementsModel {
    std::vector<Process> processes;
    std::vector<CommunicativeEvent> events;

    const CommunicativeEvent* find_event(std::string_view id) const;
    const Process* find_process(std::string_view acronym) const;

    /// All precedence edges in event then clause order.
    std::vector<PrecedenceEdge> precedences() const;

    BusinessObjectRegistry registry() const;

    /// Copy with processes sorted by acronym and events by (process, id).
    RequirementsModel normalized() const;

    bool operator==(const RequirementsModel&) const = default;
};

/// Order-insensitive structural equality (declaration order is not significant).
bool structurally_equal(const RequirementsModel& a, const RequirementsModel& b);

/// Ordering key for events: (process acronym, event id), natural order.
bool event_key_less(const CommunicativeEvent& a, const CommunicativeEvent& b);

Result<RequirementsModel> parse_requirements(std::string_view text);

std::string print_canonical(const RequirementsModel& model);

/// Invariant errors plus warnings for every derivation default that will apply.
Diagnostics validate(const RequirementsModel& model);

std::string to_string(DataType type);
std::optional<DataType> data_type_from_string(std::string_view text);
std::string to_string(RestrictionKind kind);

/// Finds the aggregation whose direct fields an annotation on `object`
/// addresses within `event`: the registered aggregation for creation events,
/// the root for the affected object, or an itinerary-style iteration body
/// whose single reference names `object`.
const Aggregation* annotation_scope(const CommunicativeEvent& event, const BusinessObjectRegistry& registry,
                                    std::string_view object);

/// The field marked `affected` in the root aggregation, if exactly one.
const Field* affected_field(const CommunicativeEvent& event);

}  // namespace ca2oo
