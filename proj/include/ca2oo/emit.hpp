#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ca2oo/conceptual_model.hpp"
#include "ca2oo/dynamic_model.hpp"

namespace ca2oo {

inline constexpr std::string_view kSchemaName = "ca2oo.conceptual-model";
inline constexpr int kSchemaVersion = 1;

enum class Dialect { dot, plantuml };

/// "dot" / "plantuml" (or "puml"); throws Error otherwise.
Dialect parse_dialect(std::string_view name);

/// Dialect implied by a file name: .dot / .gv or .puml / .plantuml.
std::optional<Dialect> dialect_for_path(std::string_view path);

/// Sorted-key JSON, classes by name, members by (event rank, seq). Trace excluded.
std::string emit_canonical(const ConceptualModel& model);

std::string emit_class_diagram(const ConceptualModel& model, Dialect dialect);

std::string emit_std_diagram(const StateTransitionDiagram& diagram, Dialect dialect);

/// Column-aligned table; an empty trace gives just the header line.
std::string emit_trace(const DerivationTrace& trace);

/// The model in emission order (classes by name, members by (event rank, seq)).
ConceptualModel canonicalized(const ConceptualModel& model);

}  // namespace ca2oo
