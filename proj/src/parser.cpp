#include <algorithm>
#include <array>
#include <string>

#include "ca2oo/naming.hpp"
#include "ca2oo/requirements.hpp"
#include "lexer.hpp"
#include "structure_checks.hpp"

namespace ca2oo {

namespace {

using detail::Token;
using detail::TokenKind;

struct SyntaxError {
    Diagnostic diag;
};

constexpr std::array<std::string_view, 13> kClauseWords = {
    "primary", "support", "message", "registers", "identified-by", "cardinality", "size",
    "nulls",   "kind",    "type",    "reaction",  "precedes",      "end-of-editing"};

bool is_clause_word(const Token& t) {
    return t.kind == TokenKind::word &&
           std::find(kClauseWords.begin(), kClauseWords.end(), t.text) != kClauseWords.end();
}

bool is_top_word(const Token& t) { return t.is_word("event") || t.is_word("process"); }

class Parser {
public:
    Parser(std::vector<Token> tokens, Diagnostics& diags) : toks_(std::move(tokens)), diags_(diags) {}

    RequirementsModel parse_model() {
        RequirementsModel model;
        while (!at_end()) {
            const Token& t = peek();
            try {
                if (t.is_word("process")) {
                    model.processes.push_back(parse_process());
                } else if (t.is_word("event")) {
                    model.events.push_back(parse_event());
                } else {
                    fail(t, "expected 'process' or 'event', found " + detail::describe(t));
                }
            } catch (const SyntaxError& e) {
                diags_.push_back(e.diag);
                recover_top();
            }
        }
        return model;
    }

    MessageStructure parse_standalone_message() {
        MessageStructure ms;
        try {
            const SourceLoc loc = peek().loc;
            std::string name = parse_name();
            expect_punct("=", "after message name");
            ms.root = parse_aggregation(std::move(name), loc);
            if (!at_end()) fail(peek(), "unexpected " + detail::describe(peek()) + " after message structure");
        } catch (const SyntaxError& e) {
            diags_.push_back(e.diag);
        }
        return ms;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == TokenKind::end; }

    [[noreturn]] void fail(const Token& at, std::string message) const {
        throw SyntaxError{make_error("E-SYNTAX", std::move(message), at.loc)};
    }
    [[noreturn]] void fail_at(SourceLoc loc, std::string message) const {
        throw SyntaxError{make_error("E-SYNTAX", std::move(message), loc)};
    }

    void expect_punct(std::string_view p, std::string_view context) {
        if (!peek().is_punct(p)) {
            fail(peek(), "expected '" + std::string(p) + "' " + std::string(context) + ", found " +
                             detail::describe(peek()));
        }
        next();
    }

    void expect_keyword(std::string_view w) {
        if (!peek().is_word(w)) {
            fail(peek(), "expected '" + std::string(w) + "', found " + detail::describe(peek()));
        }
        next();
    }

    std::string expect_word(std::string_view what) {
        if (peek().kind != TokenKind::word) fail(peek(), "expected " + std::string(what) + ", found " + detail::describe(peek()));
        return next().text;
    }

    std::string expect_string(std::string_view what) {
        if (peek().kind != TokenKind::string) fail(peek(), "expected " + std::string(what) + ", found " + detail::describe(peek()));
        return next().text;
    }

    int expect_int(std::string_view what) {
        if (peek().kind != TokenKind::integer) fail(peek(), "expected " + std::string(what) + ", found " + detail::describe(peek()));
        const Token& t = next();
        try {
            return std::stoi(t.text);
        } catch (const std::exception&) {
            fail(t, "number out of range: " + t.text);
        }
    }

    template <std::size_t N>
    std::string expect_one_of(const std::array<std::string_view, N>& options, std::string_view what) {
        const Token& t = peek();
        if (t.kind == TokenKind::word &&
            std::find(options.begin(), options.end(), t.text) != options.end()) {
            return next().text;
        }
        std::string list;
        for (auto o : options) {
            if (!list.empty()) list += ", ";
            list += "'" + std::string(o) + "'";
        }
        fail(t, "expected " + std::string(what) + " (" + list + "), found " + detail::describe(t));
    }

    /// A quoted string, or the words that follow on the same line.
    std::string parse_name(std::initializer_list<std::string_view> stops = {}) {
        const Token& first = peek();
        if (first.kind == TokenKind::string) return next().text;
        auto stopped = [&](const Token& t) {
            return std::find(stops.begin(), stops.end(), t.text) != stops.end();
        };
        if (first.kind != TokenKind::word || stopped(first)) fail(first, "expected a name, found " + detail::describe(first));
        std::string name = next().text;
        const int line = first.loc.line;
        while (peek().kind == TokenKind::word && peek().loc.line == line && !stopped(peek())) {
            name += ' ';
            name += next().text;
        }
        return name;
    }

    std::vector<std::string> parse_path() {
        std::vector<std::string> path{parse_name()};
        while (peek().is_punct(".")) {
            next();
            path.push_back(parse_name());
        }
        return path;
    }

    FieldRef parse_field_ref() {
        FieldRef ref;
        ref.object = parse_name();
        expect_punct(".", "between object and field name");
        ref.field = parse_name();
        return ref;
    }

    void recover_top() {
        next();
        while (!at_end() && !(peek().first_on_line && is_top_word(peek()))) next();
    }

    void recover_clause() {
        int depth = open_braces_;
        next();
        while (!at_end()) {
            const Token& t = peek();
            if (t.first_on_line && (is_clause_word(t) || is_top_word(t))) return;
            if (t.is_punct("{")) {
                ++depth;
            } else if (t.is_punct("}")) {
                if (depth == 0) return;
                --depth;
            }
            next();
        }
    }

    Process parse_process() {
        Process p;
        p.loc = next().loc;
        p.acronym = expect_word("process acronym");
        p.name = expect_string("process name");
        return p;
    }

    CommunicativeEvent parse_event() {
        CommunicativeEvent ev;
        ev.loc = next().loc;
        ev.id = expect_word("event id");
        ev.title = expect_string("event title");
        expect_keyword("in");
        ev.process = expect_word("process acronym");
        const SourceLoc open = peek().loc;
        expect_punct("{", "to open the event body");

        bool saw_message = false;
        bool saw_reaction = false;
        for (;;) {
            const Token& t = peek();
            if (t.is_punct("}")) {
                next();
                break;
            }
            if (at_end() || (t.first_on_line && is_top_word(t))) {
                diags_.push_back(make_error("E-SYNTAX", "unbalanced '{': body of event " + ev.id + " is not closed", open));
                break;
            }
            try {
                open_braces_ = 0;
                parse_clause(ev, saw_message, saw_reaction);
            } catch (const SyntaxError& e) {
                diags_.push_back(e.diag);
                recover_clause();
            }
        }
        if (!saw_message) diags_.push_back(make_error("E-EVENT", "event " + ev.id + " has no message structure", ev.loc));
        if (!saw_reaction) diags_.push_back(make_error("E-EVENT", "event " + ev.id + " has no reaction clause", ev.loc));
        return ev;
    }

    void parse_clause(CommunicativeEvent& ev, bool& saw_message, bool& saw_reaction) {
        const Token& head = peek();
        if (head.kind != TokenKind::word || !is_clause_word(head) || head.is_word("end-of-editing")) {
            fail(head, "expected a clause, found " + detail::describe(head));
        }
        const std::string word = next().text;
        const SourceLoc loc = head.loc;

        if (word == "primary" || word == "support") {
            expect_punct(":", "after '" + word + "'");
            (word == "primary" ? ev.primary_actor : ev.support_actor) = expect_string("actor name");
        } else if (word == "message") {
            const SourceLoc name_loc = peek().loc;
            std::string name = parse_name();
            expect_punct("=", "after message name");
            Aggregation root = parse_aggregation(std::move(name), name_loc);
            if (saw_message) {
                diags_.push_back(make_error("E-EVENT", "event " + ev.id + " declares more than one message structure", loc));
            } else {
                ev.message.root = std::move(root);
            }
            saw_message = true;
        } else if (word == "registers") {
            Registration r;
            r.loc = loc;
            r.object = parse_name();
            expect_punct("=", "after business object name");
            r.path = parse_path();
            ev.registrations.push_back(std::move(r));
        } else if (word == "identified-by") {
            IdentifiedBy id;
            id.object = parse_name();
            expect_punct("(", "before identifier field list");
            id.fields.push_back(parse_name());
            while (peek().is_punct(",")) {
                next();
                id.fields.push_back(parse_name());
            }
            expect_punct(")", "after identifier field list");
            ev.restrictions.push_back(Restriction{std::move(id), loc});
        } else if (word == "cardinality") {
            CardinalityRestriction c;
            c.first.object = parse_name();
            parse_card(c.first);
            if (peek().is_word("dynamic")) {
                next();
                c.dynamic = true;
            }
            expect_punct("--", "between cardinality ends");
            parse_card(c.second);
            c.second.object = parse_name();
            ev.restrictions.push_back(Restriction{std::move(c), loc});
        } else if (word == "size") {
            SizeRestriction s;
            s.target = parse_field_ref();
            expect_punct("=", "after field");
            s.size = expect_int("size");
            ev.restrictions.push_back(Restriction{std::move(s), loc});
        } else if (word == "nulls") {
            NullsRestriction n;
            n.target = parse_field_ref();
            expect_punct("=", "after field");
            n.allowed = expect_one_of(std::array<std::string_view, 2>{"yes", "no"}, "nullability") == "yes";
            ev.restrictions.push_back(Restriction{std::move(n), loc});
        } else if (word == "kind") {
            KindRestriction k;
            k.target = parse_field_ref();
            expect_punct("=", "after field");
            k.kind = expect_one_of(std::array<std::string_view, 2>{"constant", "variable"}, "attribute kind") == "constant"
                         ? AttributeKind::constant
                         : AttributeKind::variable;
            ev.restrictions.push_back(Restriction{std::move(k), loc});
        } else if (word == "type") {
            TypeRestriction t;
            t.target = parse_field_ref();
            expect_punct("=", "after field");
            const Token& tt = peek();
            const std::string name = expect_word("data type");
            const auto parsed = data_type_from_string(name);
            if (!parsed) fail(tt, "unknown data type '" + name + "'");
            t.type = *parsed;
            ev.restrictions.push_back(Restriction{std::move(t), loc});
        } else if (word == "reaction") {
            ReactionSpec r;
            r.loc = loc;
            r.kind = expect_one_of(std::array<std::string_view, 2>{"creation", "extension"}, "reaction kind") == "creation"
                         ? ReactionKind::creation
                         : ReactionKind::extension;
            expect_keyword("name");
            r.name = expect_string("reaction name");
            if (peek().is_word("end-of-editing")) {
                next();
                r.end_of_editing = expect_one_of(std::array<std::string_view, 2>{"yes", "no"}, "end-of-editing flag") == "yes";
            }
            if (saw_reaction) {
                diags_.push_back(make_error("E-EVENT", "event " + ev.id + " declares more than one reaction", loc));
            } else {
                ev.reaction = std::move(r);
            }
            saw_reaction = true;
        } else if (word == "precedes") {
            PrecedenceEdge e;
            e.loc = loc;
            e.from = ev.id;
            e.to = expect_word("event id");
            if (peek().is_word("loopback")) {
                next();
                e.loopback = true;
                if (peek().kind == TokenKind::string) e.guard = next().text;
            }
            ev.precedes.push_back(std::move(e));
        }
    }

    void parse_card(CardinalityEnd& end) {
        end.min = expect_int("minimum cardinality");
        expect_punct(":", "in cardinality");
        if (peek().is_word("M")) {
            next();
            end.max.reset();
        } else {
            end.max = expect_int("maximum cardinality");
        }
    }

    Aggregation parse_aggregation(std::string name, SourceLoc loc) {
        Aggregation agg;
        agg.name = std::move(name);
        agg.loc = loc;
        const SourceLoc open = peek().loc;
        expect_punct("<", "to open aggregation " + agg.name);
        if (peek().is_punct(">")) fail(peek(), "aggregation " + (agg.name.empty() ? std::string("body") : agg.name) + " is empty");
        for (;;) {
            agg.items.push_back(parse_item());
            const Token& t = peek();
            if (t.is_punct("+")) {
                next();
                continue;
            }
            if (t.is_punct(">")) {
                next();
                break;
            }
            if (at_end() || (t.first_on_line && (is_clause_word(t) || is_top_word(t))) || t.is_punct("}")) {
                fail_at(open, "unbalanced '<': aggregation " + (agg.name.empty() ? std::string("body") : agg.name) +
                                  " is not closed");
            }
            fail(t, "expected '+' or '>', found " + detail::describe(t));
        }
        return agg;
    }

    Item parse_item() {
        const SourceLoc loc = peek().loc;
        if (peek().is_punct("<")) fail(peek(), "nested aggregation needs a name");
        std::string name = parse_name();
        if (peek().is_punct("[")) return parse_field(std::move(name), loc);
        if (!peek().is_punct("=")) fail(peek(), "expected '[' or '=' after " + name + ", found " + detail::describe(peek()));
        next();
        if (peek().is_punct("{")) return parse_iteration(std::move(name), loc);
        if (peek().is_punct("<")) return Box<Aggregation>(parse_aggregation(std::move(name), loc));
        fail(peek(), "expected '<' or '{' after '" + name + " =', found " + detail::describe(peek()));
    }

    Iteration parse_iteration(std::string name, SourceLoc loc) {
        Iteration it;
        it.name = std::move(name);
        it.loc = loc;
        const SourceLoc open = peek().loc;
        next();  // '{'
        ++open_braces_;
        const SourceLoc body_loc = peek().loc;
        if (peek().is_punct("<")) {
            it.body = parse_aggregation("", body_loc);
        } else {
            if (peek().kind != TokenKind::word && peek().kind != TokenKind::string) {
                fail(peek(), "iteration body must be an aggregation");
            }
            std::string body_name = parse_name();
            if (!peek().is_punct("=")) fail(peek(), "iteration body must be an aggregation");
            next();
            if (!peek().is_punct("<")) fail(peek(), "iteration body must be an aggregation");
            it.body = parse_aggregation(std::move(body_name), body_loc);
        }
        if (peek().is_punct("+")) fail(peek(), "iteration " + it.name + " must contain exactly one aggregation");
        if (!peek().is_punct("}")) {
            if (at_end() || (peek().first_on_line && (is_clause_word(peek()) || is_top_word(peek())))) {
                fail_at(open, "unbalanced '{': iteration " + it.name + " is not closed");
            }
            fail(peek(), "expected '}' to close iteration " + it.name + ", found " + detail::describe(peek()));
        }
        next();
        --open_braces_;
        return it;
    }

    Field parse_field(std::string name, SourceLoc loc) {
        Field f;
        f.name = std::move(name);
        f.loc = loc;
        next();  // '['
        const std::string op = expect_one_of(std::array<std::string_view, 2>{"g", "i"}, "op code");
        f.op = op == "g" ? OpCode::generated : OpCode::indicated;
        f.domain = parse_domain();
        if (peek().is_punct("(")) {
            next();
            f.size = expect_int("field size");
            expect_punct(")", "after field size");
        }
        for (;;) {
            if (peek().is_word("affected")) {
                next();
                f.affected = true;
            } else if (peek().is_word("init")) {
                next();
                f.init = expect_string("initialisation expression");
            } else {
                break;
            }
        }
        expect_punct("]", "to close field " + f.name);
        return f;
    }

    Domain parse_domain() {
        const Token& t = peek();
        const std::string word = expect_word("domain");
        Domain d;
        if (word == "number") {
            d.kind = Domain::Kind::number;
        } else if (word == "text") {
            d.kind = Domain::Kind::text;
        } else if (word == "date") {
            d.kind = Domain::Kind::date;
        } else if (word == "datetime") {
            d.kind = Domain::Kind::datetime;
        } else if (word == "money") {
            d.kind = Domain::Kind::money;
        } else if (word == "enum") {
            d.kind = Domain::Kind::enumeration;
            expect_punct("(", "after 'enum'");
            d.literals.push_back(parse_name());
            while (peek().is_punct("|")) {
                next();
                d.literals.push_back(parse_name());
            }
            expect_punct(")", "to close enum literals");
        } else if (word == "ref") {
            d.kind = Domain::Kind::reference;
            d.object = parse_name({"affected", "init"});
        } else {
            fail(t, "unknown domain '" + word + "'");
        }
        return d;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int open_braces_ = 0;
    Diagnostics& diags_;
};

}  // namespace

Result<RequirementsModel> parse_requirements(std::string_view text) {
    Result<RequirementsModel> result;
    auto tokens = detail::tokenize(text, result.diagnostics);
    Parser parser(std::move(tokens), result.diagnostics);
    result.value = parser.parse_model();
    auto structural = detail::check_structure(result.value);
    result.diagnostics.insert(result.diagnostics.end(), structural.begin(), structural.end());
    sort_diagnostics(result.diagnostics);
    return result;
}

Result<MessageStructure> parse_message_structure(std::string_view text) {
    Result<MessageStructure> result;
    auto tokens = detail::tokenize(text, result.diagnostics);
    Parser parser(std::move(tokens), result.diagnostics);
    result.value = parser.parse_standalone_message();
    if (!has_errors(result.diagnostics)) {
        auto structural = detail::check_message(result.value, "");
        result.diagnostics.insert(result.diagnostics.end(), structural.begin(), structural.end());
    }
    sort_diagnostics(result.diagnostics);
    return result;
}

}  // namespace ca2oo
