#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ca2oo/conceptual_model.hpp"
#include "ca2oo/dynamic_model.hpp"
#include "ca2oo/event_ordering.hpp"
#include "ca2oo/requirements.hpp"

namespace ca2oo {

enum class Stage { parse, validate, order, derive, done };

/// Process exit code for the stage that failed: 1 parse, 2 validation, 3 derivation.
int exit_code(Stage failed_at);

struct PipelineOptions {
    std::optional<std::string> process;  // unset: every event in the model
};

struct PipelineResult {
    Stage stage = Stage::parse;  // stage reached; done on success
    Diagnostics diagnostics;
    RequirementsModel requirements;
    ExtendedDiagram diagram;
    EventPoset poset;
    std::vector<std::string> order;
    ConceptualModel model;
    std::vector<StateTransitionDiagram> stds;

    bool ok() const { return stage == Stage::done; }
};

/// parse, validate, extend, order, derive (with revision), STDs.
PipelineResult run_pipeline(std::string_view source, const PipelineOptions& options = {});

}  // namespace ca2oo
