#pragma once

#include <stdexcept>
#include <string>

#include "ca2oo/diagnostic.hpp"

namespace ca2oo {

/// Thrown by derivation steps; callers turn it into a diagnostic.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, SourceLoc loc = {})
        : std::runtime_error(message), code_(std::move(code)), loc_(loc) {}

    const std::string& code() const { return code_; }
    SourceLoc loc() const { return loc_; }
    Diagnostic diagnostic() const { return make_error(code_, what(), loc_); }

private:
    std::string code_;
    SourceLoc loc_;
};

}  // namespace ca2oo
