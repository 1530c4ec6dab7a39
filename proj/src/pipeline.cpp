#include "ca2oo/pipeline.hpp"

#include "ca2oo/derivation.hpp"

namespace ca2oo {

int exit_code(Stage failed_at) {
    switch (failed_at) {
        case Stage::parse: return 1;
        case Stage::validate: return 2;
        case Stage::order:
        case Stage::derive: return 3;
        case Stage::done: return 0;
    }
    return 3;
}

namespace {

void append(Diagnostics& into, const Diagnostics& from) { into.insert(into.end(), from.begin(), from.end()); }

}  // namespace

PipelineResult run_pipeline(std::string_view source, const PipelineOptions& options) {
    PipelineResult r;
    auto parsed = parse_requirements(source);
    append(r.diagnostics, parsed.diagnostics);
    r.requirements = std::move(parsed.value);
    if (!parsed.ok()) return r;

    r.stage = Stage::validate;
    const auto checks = validate(r.requirements);
    append(r.diagnostics, checks);
    if (has_errors(checks)) return r;

    r.stage = Stage::order;
    if (options.process) {
        auto extended = extend_diagram(r.requirements, *options.process);
        append(r.diagnostics, extended.diagnostics);
        if (!extended.ok()) return r;
        r.diagram = std::move(extended.value);
    } else {
        r.diagram = full_diagram(r.requirements);
    }
    auto poset = remove_loopbacks(r.diagram);
    append(r.diagnostics, poset.diagnostics);
    if (!poset.ok()) return r;
    r.poset = std::move(poset.value);
    r.order = topological_order(r.poset);

    r.stage = Stage::derive;
    auto derived = derive(r.requirements, r.order);
    append(r.diagnostics, derived.diagnostics);
    if (!derived.ok()) return r;
    r.model = std::move(derived.value);

    auto stds = derive_stds(r.model, r.requirements, r.order);
    append(r.diagnostics, stds.diagnostics);
    if (!stds.ok()) return r;
    r.stds = std::move(stds.value);
    r.stage = Stage::done;
    return r;
}

}  // namespace ca2oo
