#pragma once

#include <string_view>

#include "ca2oo/diagnostic.hpp"
#include "ca2oo/requirements.hpp"

namespace ca2oo::detail {

/// Field-level and sibling-name invariants of one message tree.
Diagnostics check_message(const MessageStructure& ms, std::string_view event_id);

/// Type invariants the parser guarantees: uniqueness, resolution of names,
/// message well-formedness, affected-field placement.
Diagnostics check_structure(const RequirementsModel& model);

}  // namespace ca2oo::detail
