#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ca2oo/box.hpp"
#include "ca2oo/diagnostic.hpp"

namespace ca2oo {

enum class OpCode { generated, indicated };

struct Domain {
    enum class Kind { number, text, date, datetime, money, enumeration, reference };

    Kind kind = Kind::text;
    std::vector<std::string> literals;  // enumeration
    std::string object;                 // reference: business object name

    bool is_reference() const { return kind == Kind::reference; }
    bool operator==(const Domain&) const = default;
};

struct Field {
    std::string name;
    OpCode op = OpCode::indicated;
    Domain domain;
    std::optional<int> size;
    bool affected = false;
    std::optional<std::string> init;
    SourceLoc loc;

    bool is_reference() const { return domain.is_reference(); }
    bool operator==(const Field&) const = default;
};

struct Aggregation;

/// `NAME = { agg }`; the body may be anonymous (`{ < ... > }`).
struct Iteration {
    std::string name;
    Box<Aggregation> body;
    SourceLoc loc;

    bool operator==(const Iteration&) const = default;
};

using Item = std::variant<Field, Box<Aggregation>, Iteration>;

struct Aggregation {
    std::string name;
    std::vector<Item> items;
    SourceLoc loc;

    bool operator==(const Aggregation&) const = default;
};

struct MessageStructure {
    Aggregation root;

    bool operator==(const MessageStructure&) const = default;
};

/// Parses `NAME = < ... >` on its own (the same grammar used inside `.carm`).
Result<MessageStructure> parse_message_structure(std::string_view text);

/// An aggregation together with the names leading to it from the root
/// (iteration names included, anonymous bodies contribute nothing).
struct AggregationRef {
    const Aggregation* aggregation = nullptr;
    std::vector<std::string> path;
    const Iteration* via_iteration = nullptr;  // nearest enclosing iteration, if any
    const Aggregation* parent = nullptr;
    int depth = 0;
};

/// Pre-order; the first element is the root.
std::vector<AggregationRef> aggregations_in_document_order(const MessageStructure& ms);

/// Resolves a dotted path (`ORDER.DESTINATIONS.DESTINATION`) to an
/// aggregation. A path ending on an iteration names its body.
const Aggregation* find_aggregation(const MessageStructure& ms, const std::vector<std::string>& path);

std::vector<const Field*> data_fields(const Aggregation& agg);
std::vector<const Field*> reference_fields(const Aggregation& agg);

/// Every field in the tree, pre-order.
std::vector<const Field*> all_fields(const MessageStructure& ms);

/// One entry per `registers` clause: the object's owning event and the
/// substructure path inside that event's message.
struct RegistryEntry {
    std::string object;  // as written
    std::string event_id;
    std::vector<std::string> path;

    bool operator==(const RegistryEntry&) const = default;
};

/// Keyed by `naming::key(object)`.
using BusinessObjectRegistry = std::map<std::string, RegistryEntry>;

struct ResolvedReference {
    const Field* field = nullptr;
    RegistryEntry target;
};

struct ResolvedMessageStructure {
    const MessageStructure* message = nullptr;
    std::vector<ResolvedReference> references;  // document order
};

/// Binds every reference field to its registry entry. `registered_later`
/// (optional) flags objects whose owning event comes after the event being
/// resolved; those produce forward-reference warnings.
Result<ResolvedMessageStructure> resolve_references(
    const MessageStructure& ms, const BusinessObjectRegistry& registry,
    const std::function<bool(const RegistryEntry&)>& registered_later = {});

std::string to_string(Domain::Kind kind);
std::string join_path(const std::vector<std::string>& path);

}  // namespace ca2oo
