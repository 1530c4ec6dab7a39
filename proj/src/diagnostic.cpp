#include "ca2oo/diagnostic.hpp"

#include <algorithm>
#include <sstream>

namespace ca2oo {

Diagnostic make_error(std::string code, std::string message, SourceLoc loc) {
    return Diagnostic{Severity::error, std::move(code), std::move(message), loc};
}

Diagnostic make_warning(std::string code, std::string message, SourceLoc loc) {
    return Diagnostic{Severity::warning, std::move(code), std::move(message), loc};
}

bool has_errors(const Diagnostics& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.is_error(); });
}

std::size_t count_errors(const Diagnostics& diags) {
    return static_cast<std::size_t>(
        std::count_if(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.is_error(); }));
}

void sort_diagnostics(Diagnostics& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.loc.line != b.loc.line) return a.loc.line < b.loc.line;
        if (a.loc.column != b.loc.column) return a.loc.column < b.loc.column;
        return a.code < b.code;
    });
}

std::string format_diagnostic(const Diagnostic& d, const std::string& file) {
    std::ostringstream out;
    if (!file.empty()) out << file << ':';
    if (d.loc.line > 0) out << d.loc.line << ':' << d.loc.column << ':';
    if (!file.empty() || d.loc.line > 0) out << ' ';
    out << (d.is_error() ? "error: " : "warning: ") << d.message << " [" << d.code << ']';
    return out.str();
}

}  // namespace ca2oo
