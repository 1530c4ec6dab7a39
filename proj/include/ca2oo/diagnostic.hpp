#pragma once

#include <string>
#include <vector>

namespace ca2oo {

/// Position in a `.carm` source. Compares equal to every other location so
/// that structural model equality ignores where things were written.
struct SourceLoc {
    int line = 0;
    int column = 0;

    friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

enum class Severity { warning, error };

struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;  // e.g. E-SYNTAX, W-NO-ID
    std::string message;
    SourceLoc loc;

    bool is_error() const { return severity == Severity::error; }
};

using Diagnostics = std::vector<Diagnostic>;

Diagnostic make_error(std::string code, std::string message, SourceLoc loc = {});
Diagnostic make_warning(std::string code, std::string message, SourceLoc loc = {});

bool has_errors(const Diagnostics& diags);
std::size_t count_errors(const Diagnostics& diags);

/// Stable sort by (line, column, code).
void sort_diagnostics(Diagnostics& diags);

/// `file:line:col: error: message [CODE]`
std::string format_diagnostic(const Diagnostic& d, const std::string& file = {});

/// A value produced together with the diagnostics collected while making it.
template <typename T>
struct Result {
    T value{};
    Diagnostics diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

}  // namespace ca2oo
