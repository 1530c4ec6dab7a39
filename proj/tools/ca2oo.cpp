#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ca2oo/emit.hpp"
#include "ca2oo/error.hpp"
#include "ca2oo/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "ca2oo: cannot write " << path.string() << "\n";
        return false;
    }
    return true;
}

void report(const ca2oo::Diagnostics& diags, const std::string& file) {
    for (const auto& d : diags) std::cerr << ca2oo::format_diagnostic(d, file) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derives an OO-Method conceptual model from a Communication Analysis requirements model"};
    app.require_subcommand(1);

    std::string input;
    std::string process;
    std::string out_path;
    std::string diagram_path;
    std::string std_dir;
    std::string std_format = "dot";
    std::string trace_path;
    bool print_order = false;

    auto* derive = app.add_subcommand("derive", "derive the conceptual model");
    derive->add_option("input", input, "requirements model (.carm)")->required();
    derive->add_option("--process", process, "derive for this process and its precedents only");
    derive->add_option("--out", out_path, "canonical model file (default: stdout)");
    derive->add_option("--diagram", diagram_path, "class diagram file, .dot or .puml");
    derive->add_option("--std-dir", std_dir, "directory for one state-transition diagram per class");
    derive->add_option("--std-format", std_format, "dot or plantuml")->check(CLI::IsMember({"dot", "plantuml"}));
    derive->add_option("--trace", trace_path, "derivation trace file");
    derive->add_flag("--print-order", print_order, "print the event processing order");

    auto* validate = app.add_subcommand("validate", "check a requirements model");
    validate->add_option("input", input, "requirements model (.carm)")->required();

    auto* fmt = app.add_subcommand("fmt", "reprint a requirements model canonically");
    fmt->add_option("input", input, "requirements model (.carm)")->required();

    CLI11_PARSE(app, argc, argv);

    std::string source;
    if (!read_file(input, source)) {
        std::cerr << "ca2oo: cannot read " << input << "\n";
        return 1;
    }

    if (*fmt) {
        auto parsed = ca2oo::parse_requirements(source);
        report(parsed.diagnostics, input);
        if (!parsed.ok()) return 1;
        std::cout << ca2oo::print_canonical(parsed.value);
        return 0;
    }

    if (*validate) {
        auto parsed = ca2oo::parse_requirements(source);
        report(parsed.diagnostics, input);
        if (!parsed.ok()) return 1;
        auto diags = ca2oo::validate(parsed.value);
        report(diags, input);
        return ca2oo::has_errors(diags) ? 2 : 0;
    }

    std::optional<ca2oo::Dialect> diagram_dialect;
    if (!diagram_path.empty()) {
        diagram_dialect = ca2oo::dialect_for_path(diagram_path);
        if (!diagram_dialect) {
            std::cerr << "ca2oo: cannot tell the diagram dialect of " << diagram_path << " (use .dot or .puml)\n";
            return 3;
        }
    }

    ca2oo::PipelineOptions options;
    if (!process.empty()) options.process = process;
    const auto result = ca2oo::run_pipeline(source, options);
    report(result.diagnostics, input);
    if (!result.ok()) return ca2oo::exit_code(result.stage);

    if (print_order) {
        // keep stdout clean for the model when it goes there
        std::ostream& os = out_path.empty() ? std::cerr : std::cout;
        for (const auto& id : result.order) os << id << "\n";
    }
    const std::string canonical = ca2oo::emit_canonical(result.model);
    bool written = true;
    if (out_path.empty()) {
        std::cout << canonical;
    } else {
        written = write_file(out_path, canonical) && written;
    }
    if (diagram_dialect) written = write_file(diagram_path, ca2oo::emit_class_diagram(result.model, *diagram_dialect)) && written;
    if (!std_dir.empty()) {
        const auto dialect = ca2oo::parse_dialect(std_format);
        const std::string ext = dialect == ca2oo::Dialect::dot ? ".dot" : ".puml";
        for (const auto& diagram : result.stds) {
            written = write_file(fs::path(std_dir) / (diagram.class_name + ext), ca2oo::emit_std_diagram(diagram, dialect)) &&
                      written;
        }
    }
    if (!trace_path.empty()) written = write_file(trace_path, ca2oo::emit_trace(result.model.trace)) && written;
    return written ? 0 : 3;
}
