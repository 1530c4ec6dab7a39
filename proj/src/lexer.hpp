#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ca2oo/diagnostic.hpp"

namespace ca2oo::detail {

enum class TokenKind { word, integer, string, punct, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    SourceLoc loc;
    bool first_on_line = false;

    bool is_word(std::string_view w) const { return kind == TokenKind::word && text == w; }
    bool is_punct(std::string_view p) const { return kind == TokenKind::punct && text == p; }
};

/// Always ends with a TokenKind::end token. Lexical errors are appended to
/// `diags` and the offending bytes skipped.
std::vector<Token> tokenize(std::string_view source, Diagnostics& diags);

std::string describe(const Token& tok);

}  // namespace ca2oo::detail
