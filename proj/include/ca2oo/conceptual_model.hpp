#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ca2oo/requirements.hpp"

/// Output metamodel: the OO-Method object model plus the derivation trace.
namespace ca2oo {

/// Where a member came from: its originating event and its position among
/// the members that event produced. Canonical output orders members by
/// (event rank, seq).
struct Origin {
    std::string event_id;
    int seq = 0;

    bool operator==(const Origin&) const = default;
};

struct Attribute {
    std::string name;
    bool is_id = false;
    AttributeKind kind = AttributeKind::variable;
    DataType data_type = DataType::string;
    std::optional<int> size;  // String only
    bool requested = false;
    bool nulls_allowed = true;
    std::optional<std::string> default_value;
    std::vector<std::string> enum_literals;
    Origin origin;

    bool operator==(const Attribute&) const = default;
};

struct Argument {
    std::string name;
    std::string data_type;  // data-type name, or the class name when object-valued
    std::optional<int> size;
    bool nulls_allowed = true;
    bool object_valued = false;
    Origin origin;

    bool operator==(const Argument&) const = default;
};

struct Valuation {
    std::string attribute;
    std::string argument;

    bool operator==(const Valuation&) const = default;
};

enum class ServiceKind { creation, end_of_editing, setter, shared_insert, shared_delete };

struct Service {
    std::string name;
    ServiceKind kind = ServiceKind::creation;
    bool internal = false;
    std::vector<Argument> arguments;
    std::vector<Valuation> valuations;
    std::string relationship;  // shared services
    Origin origin;

    bool operator==(const Service&) const = default;
};

struct TransactionStep {
    std::string service;
    std::vector<std::string> arguments;  // argument names, "null", or attribute paths
    std::optional<std::string> guard;

    bool operator==(const TransactionStep&) const = default;
};

struct Transaction {
    std::string name;
    std::vector<Argument> arguments;
    std::vector<TransactionStep> steps;
    std::string formula_note;
    Origin origin;

    bool operator==(const Transaction&) const = default;
};

struct Class {
    std::string name;
    std::string object;  // business-object name as registered
    std::vector<Attribute> attributes;
    std::vector<Service> services;
    std::vector<Transaction> transactions;
    Origin origin;

    const Attribute* find_attribute(std::string_view n) const;
    const Service* find_service(std::string_view n) const;
    Service* find_service(std::string_view n);
    const Transaction* find_transaction(std::string_view n) const;
    bool has_member(std::string_view n) const;  // service or transaction

    bool operator==(const Class&) const = default;
};

struct RelationshipEnd {
    std::string class_name;
    std::string role;
    int min = 0;
    std::optional<int> max;  // nullopt = M

    bool operator==(const RelationshipEnd&) const = default;
};

enum class RelationshipSource { iteration, reference };

/// `one` is the max-1 side and comes first in the name.
struct StructuralRelationship {
    std::string name;
    RelationshipEnd one;
    RelationshipEnd many;
    bool dynamic = false;
    RelationshipSource source = RelationshipSource::reference;
    bool annotated = false;  // cardinalities pinned by an annotation
    Origin origin;

    bool involves(std::string_view class_name) const;
    bool operator==(const StructuralRelationship&) const = default;
};

struct TraceRecord {
    std::string rule_id;      // R-CLASS, R-ATTR, ...
    std::string event_id;
    std::string source_path;  // requirements element, e.g. SALE1/ORDER.Order number
    std::string element_kind; // class, attribute, relationship, service, transaction, std
    std::string element_path; // model element, e.g. ClientOrder.order_number
    std::string note;

    bool operator==(const TraceRecord&) const = default;
};

using DerivationTrace = std::vector<TraceRecord>;

/// The note carried by the one trace record per event that is the IS reaction.
inline constexpr std::string_view kReactionNote = "IS reaction";

struct ConceptualModel {
    std::vector<Class> classes;
    std::vector<StructuralRelationship> relationships;
    DerivationTrace trace;

    /// Event id -> canonical rank; drives member ordering in emitted output.
    std::vector<std::string> canonical_order;

    const Class* find_class(std::string_view name) const;
    Class* find_class(std::string_view name);
    const StructuralRelationship* find_relationship(std::string_view name) const;
};

std::string to_string(ServiceKind kind);

}  // namespace ca2oo
