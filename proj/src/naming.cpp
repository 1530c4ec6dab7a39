#include "ca2oo/naming.hpp"

#include <cctype>

namespace ca2oo::naming {

namespace {

bool is_word_byte(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }
bool is_upper(unsigned char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(unsigned char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

char to_lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }
char to_upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

}  // namespace

std::vector<std::string> words(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : text) {
        if (is_word_byte(static_cast<unsigned char>(ch))) {
            current.push_back(ch);
        } else if (!current.empty()) {
            out.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

bool is_acronym(std::string_view word) {
    if (word.size() < 2 || word.size() > 4) return false;
    for (char c : word) {
        if (!is_upper(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string lower(std::string_view text) {
    std::string out(text);
    for (char& c : out) c = to_lower(c);
    return out;
}

std::string upper(std::string_view text) {
    std::string out(text);
    for (char& c : out) c = to_upper(c);
    return out;
}

std::string attribute_name(std::string_view field_name) {
    std::string out;
    for (const auto& w : words(field_name)) {
        if (!out.empty()) out.push_back('_');
        out += is_acronym(w) ? w : lower(w);
    }
    return out;
}

std::string class_name(std::string_view object_name) {
    std::string out;
    for (const auto& w : words(object_name)) {
        if (is_acronym(w)) {
            out += w;
            continue;
        }
        std::string part = lower(w);
        part[0] = to_upper(part[0]);
        out += part;
    }
    return out;
}

std::vector<std::string> camel_words(std::string_view name) {
    std::vector<std::string> out;
    std::string current;
    for (std::size_t i = 0; i < name.size(); ++i) {
        const auto c = static_cast<unsigned char>(name[i]);
        if (!is_word_byte(c)) {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
            continue;
        }
        if (is_upper(c) && !current.empty()) {
            const auto prev = static_cast<unsigned char>(current.back());
            const bool next_lower = i + 1 < name.size() && is_lower(static_cast<unsigned char>(name[i + 1]));
            // "ClientOrder" splits before 'O'; "VATThing" splits before the 'T' that starts "Thing".
            if (is_lower(prev) || is_digit(prev) || (is_upper(prev) && next_lower)) {
                out.push_back(std::move(current));
                current.clear();
            }
        }
        current.push_back(static_cast<char>(c));
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::string snake_case(std::string_view class_name) {
    std::string out;
    for (const auto& w : camel_words(class_name)) {
        if (!out.empty()) out.push_back('_');
        out += lower(w);
    }
    return out;
}

std::string pluralize(std::string_view noun) {
    std::string out(noun);
    if (out.empty()) return out;
    const std::string tail = lower(out.size() >= 2 ? out.substr(out.size() - 2) : out);
    const char last = tail.back();
    if (last == 's' || last == 'x' || last == 'z' || tail == "ch" || tail == "sh") {
        out += "es";
    } else {
        out += "s";
    }
    return out;
}

std::string service_noun(std::string_view class_name) {
    const auto parts = camel_words(class_name);
    return parts.empty() ? std::string{} : lower(parts.back());
}

std::string event_prefix(std::string_view event_id) {
    std::string out = lower(event_id);
    if (!out.empty()) out[0] = to_upper(out[0]);
    return out;
}

std::string snake_words(std::string_view text) {
    std::string out;
    for (const auto& w : words(text)) {
        if (!out.empty()) out.push_back('_');
        out += lower(w);
    }
    return out;
}

std::string key(std::string_view text) {
    std::string out;
    bool pending_space = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(to_lower(ch));
    }
    return out;
}

int natural_compare(std::string_view a, std::string_view b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const auto ca = static_cast<unsigned char>(a[i]);
        const auto cb = static_cast<unsigned char>(b[j]);
        if (is_digit(ca) && is_digit(cb)) {
            std::size_t ei = i;
            std::size_t ej = j;
            while (ei < a.size() && is_digit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && is_digit(static_cast<unsigned char>(b[ej]))) ++ej;
            std::string_view da = a.substr(i, ei - i);
            std::string_view db = b.substr(j, ej - j);
            while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
            while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
            if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
            if (da != db) return da < db ? -1 : 1;
            i = ei;
            j = ej;
            continue;
        }
        const char la = to_lower(static_cast<char>(ca));
        const char lb = to_lower(static_cast<char>(cb));
        if (la != lb) return la < lb ? -1 : 1;
        ++i;
        ++j;
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return a < b ? -1 : (b < a ? 1 : 0);
}

bool natural_less(std::string_view a, std::string_view b) { return natural_compare(a, b) < 0; }

std::size_t utf8_length(std::string_view text) {
    std::size_t n = 0;
    for (char ch : text) {
        if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
    }
    return n;
}

}  // namespace ca2oo::naming
