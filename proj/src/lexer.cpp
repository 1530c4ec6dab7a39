#include "lexer.hpp"

#include <cctype>

namespace ca2oo::detail {

namespace {

bool word_start(unsigned char c) { return std::isalpha(c) != 0 || c == '_' || c >= 0x80; }
bool word_char(unsigned char c) { return std::isalnum(c) != 0 || c == '_' || c >= 0x80; }

}  // namespace

std::string describe(const Token& tok) {
    switch (tok.kind) {
        case TokenKind::end: return "end of input";
        case TokenKind::string: return "string \"" + tok.text + "\"";
        case TokenKind::integer: return "number " + tok.text;
        case TokenKind::word: return "'" + tok.text + "'";
        case TokenKind::punct: return "'" + tok.text + "'";
    }
    return "token";
}

std::vector<Token> tokenize(std::string_view src, Diagnostics& diags) {
    std::vector<Token> out;
    int line = 1;
    std::size_t line_start = 0;
    int last_token_line = 0;
    std::size_t i = 0;

    auto loc_at = [&](std::size_t pos) {
        return SourceLoc{line, static_cast<int>(pos - line_start) + 1};
    };
    auto push = [&](TokenKind kind, std::string text, SourceLoc loc) {
        Token t{kind, std::move(text), loc, loc.line != last_token_line};
        last_token_line = loc.line;
        out.push_back(std::move(t));
    };

    // Skip a UTF-8 byte order mark.
    if (src.size() >= 3 && static_cast<unsigned char>(src[0]) == 0xEF &&
        static_cast<unsigned char>(src[1]) == 0xBB && static_cast<unsigned char>(src[2]) == 0xBF) {
        i = 3;
        line_start = 3;
    }

    while (i < src.size()) {
        const auto c = static_cast<unsigned char>(src[i]);
        if (c == '\n') {
            ++line;
            ++i;
            line_start = i;
            continue;
        }
        if (std::isspace(c) != 0) {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        const SourceLoc loc = loc_at(i);
        if (c == '"') {
            std::string text;
            ++i;
            bool closed = false;
            while (i < src.size() && src[i] != '\n') {
                if (src[i] == '\\' && i + 1 < src.size()) {
                    const char e = src[i + 1];
                    text.push_back(e == 'n' ? '\n' : e == 't' ? '\t' : e);
                    i += 2;
                    continue;
                }
                if (src[i] == '"') {
                    closed = true;
                    ++i;
                    break;
                }
                text.push_back(src[i]);
                ++i;
            }
            if (!closed) diags.push_back(make_error("E-SYNTAX", "unterminated string", loc));
            push(TokenKind::string, std::move(text), loc);
            continue;
        }
        if (std::isdigit(c) != 0) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])) != 0) ++j;
            if (j < src.size() && word_start(static_cast<unsigned char>(src[j]))) {
                // "2nd" and friends lex as words.
                while (j < src.size() && word_char(static_cast<unsigned char>(src[j]))) ++j;
                push(TokenKind::word, std::string(src.substr(i, j - i)), loc);
            } else {
                push(TokenKind::integer, std::string(src.substr(i, j - i)), loc);
            }
            i = j;
            continue;
        }
        if (word_start(c)) {
            std::size_t j = i;
            while (j < src.size()) {
                const auto d = static_cast<unsigned char>(src[j]);
                if (word_char(d)) {
                    ++j;
                } else if (d == '-' && j + 1 < src.size() &&
                           std::isalpha(static_cast<unsigned char>(src[j + 1])) != 0) {
                    ++j;  // identified-by, end-of-editing
                } else {
                    break;
                }
            }
            push(TokenKind::word, std::string(src.substr(i, j - i)), loc);
            i = j;
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
            push(TokenKind::punct, "--", loc);
            i += 2;
            continue;
        }
        static constexpr std::string_view kPunct = "<>+={}[]().,:|";
        if (kPunct.find(static_cast<char>(c)) != std::string_view::npos) {
            push(TokenKind::punct, std::string(1, static_cast<char>(c)), loc);
            ++i;
            continue;
        }
        diags.push_back(make_error("E-SYNTAX", std::string("unexpected character '") + static_cast<char>(c) + "'", loc));
        ++i;
    }
    Token end{TokenKind::end, "", loc_at(i), true};
    out.push_back(std::move(end));
    return out;
}

}  // namespace ca2oo::detail
