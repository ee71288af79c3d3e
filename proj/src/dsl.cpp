#include "anonlevel/dsl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace anonlevel {
namespace {

constexpr std::size_t kMaxLexErrors = 20;

enum class Tok { word, at_name, string, lbrace, rbrace, equals, comma, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    SourceSpan span;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::word:
            return "'" + t.text + "'";
        case Tok::at_name:
            return "'" + t.text + "'";
        case Tok::string:
            return "string";
        case Tok::lbrace:
            return "'{'";
        case Tok::rbrace:
            return "'}'";
        case Tok::equals:
            return "'='";
        case Tok::comma:
            return "','";
        case Tok::end:
            return "end of input";
    }
    return "token";
}

// Length of the UTF-8 sequence starting at `s[i]`, or 0 when invalid.
std::size_t utf8_sequence(std::string_view s, std::size_t i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    unsigned min = 0;
    unsigned cp = 0;
    if (b0 < 0x80) return 1;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2, min = 0x80, cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3, min = 0x800, cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4, min = 0x10000, cp = b0 & 0x07;
    } else {
        return 0;
    }
    if (i + len > s.size()) return 0;
    for (std::size_t k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) return 0;
        cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
    return len;
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run(std::vector<Diagnostic>& diags) {
        std::vector<Token> out;
        while (pos_ < text_.size() && diags.size() < kMaxLexErrors) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (is_alpha(c)) {
                out.push_back(word(Tok::word));
            } else if (c == '@') {
                const SourceSpan at = here(1);
                advance();
                if (pos_ < text_.size() && is_alpha(text_[pos_])) {
                    Token t = word(Tok::at_name);
                    t.text = "@" + t.text;
                    t.span = {at.line, at.column, t.span.length + 1};
                    out.push_back(std::move(t));
                } else {
                    diags.push_back(make_error("DSL-001", "expected a name after '@'", at));
                }
            } else if (c == '"') {
                string_literal(out, diags);
            } else if (c == '{' || c == '}' || c == '=' || c == ',') {
                const Tok kind = c == '{' ? Tok::lbrace : c == '}' ? Tok::rbrace : c == '=' ? Tok::equals : Tok::comma;
                out.push_back({kind, std::string(1, c), here(1)});
                advance();
            } else {
                std::ostringstream msg;
                if (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7f) {
                    msg << "unexpected character '" << c << "'";
                } else {
                    msg << "unexpected byte 0x" << std::hex << static_cast<unsigned>(static_cast<unsigned char>(c));
                }
                diags.push_back(make_error("DSL-001", msg.str(), here(1)));
                advance();
            }
        }
        out.push_back({Tok::end, "", end_span()});
        return out;
    }

private:
    static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
    static bool is_word_char(char c) { return is_alpha(c) || (c >= '0' && c <= '9') || c == '_'; }

    SourceSpan here(int length) const { return {line_, column_, std::max(1, length)}; }

    // Span of the last byte, so end-of-input errors still point into the text.
    SourceSpan end_span() const {
        if (text_.empty()) return {1, 1, 1};
        int line = 1;
        int column = 1;
        for (std::size_t i = 0; i + 1 < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        return {line, column, 1};
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    Token word(Tok kind) {
        const SourceSpan start = here(1);
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && is_word_char(text_[pos_])) advance();
        const auto len = static_cast<int>(pos_ - begin);
        return {kind, std::string(text_.substr(begin, pos_ - begin)), {start.line, start.column, len}};
    }

    void string_literal(std::vector<Token>& out, std::vector<Diagnostic>& diags) {
        const SourceSpan start = here(1);
        advance();  // opening quote
        std::string value;
        int length = 1;
        while (true) {
            if (pos_ >= text_.size() || text_[pos_] == '\n') {
                diags.push_back(make_error("DSL-001", "unterminated string", start));
                return;
            }
            const char c = text_[pos_];
            if (c == '"') {
                advance();
                ++length;
                break;
            }
            if (c == '\\') {
                const SourceSpan esc = here(2);
                advance();
                ++length;
                if (pos_ >= text_.size() || text_[pos_] == '\n') continue;
                const char e = text_[pos_];
                switch (e) {
                    case '"': value += '"'; break;
                    case '\\': value += '\\'; break;
                    case 'n': value += '\n'; break;
                    case 't': value += '\t'; break;
                    case 'r': value += '\r'; break;
                    default:
                        diags.push_back(make_error("DSL-001", std::string("invalid escape sequence '\\") + e + "'", esc));
                        break;
                }
                advance();
                ++length;
                continue;
            }
            const auto uc = static_cast<unsigned char>(c);
            if (uc < 0x20 && c != '\t') {
                diags.push_back(make_error("DSL-001", "control character in string", here(1)));
                advance();
                ++length;
                continue;
            }
            const std::size_t seq = utf8_sequence(text_, pos_);
            if (seq == 0) {
                diags.push_back(make_error("DSL-001", "invalid UTF-8 in string", here(1)));
                advance();
                ++length;
                continue;
            }
            value.append(text_.substr(pos_, seq));
            for (std::size_t k = 0; k < seq; ++k) advance();
            length += static_cast<int>(seq);
        }
        out.push_back({Tok::string, std::move(value), {start.line, start.column, length}});
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct SyntaxError {
    Diagnostic diagnostic;
};

// A name together with where it was written.
struct NameRef {
    std::string name;
    SourceSpan span;
};

struct RawEntity {
    NameRef name;
    EntityKind kind = EntityKind::participant;
    bool role = false;
    SourceSpan span;
};

struct RawPii {
    NameRef name;
    NameRef subject;
    Resolvability resolvability = Resolvability::direct;
    Persistence persistence = Persistence::persistent;
    std::vector<NameRef> holders;
    bool authority_managed = false;
    SourceSpan span;
};

struct RawExposure {
    NameRef observer;
    NameRef pii;
    Form form = Form::plain;
    Trigger when = Trigger::always;
    Channel via = Channel::data;
    SourceSpan span;
};

struct RawAttachment {
    NameRef pii;
    Form form = Form::plain;
    Trigger recoverable_on = Trigger::on_fraud;
    SourceSpan span;
};

struct RawGroup {
    GroupSchemeDecl decl;
    std::optional<NameRef> manager;
    SourceSpan span;
};

bool is_statement_keyword(const Token& t) {
    return t.kind == Tok::word && (t.text == "entity" || t.text == "pii" || t.text == "observes" ||
                                   t.text == "attach" || t.text == "group_scheme");
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ParseResult run() {
        ParseResult result;
        if (!parse_header()) {
            result.diagnostics = std::move(diags_);
            return result;
        }
        parse_body();
        resolve();
        if (has_errors(diags_)) {
            result.diagnostics = std::move(diags_);
            return result;
        }
        build(result);
        return result;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    const Token& take() {
        const Token& t = tokens_[pos_];
        if (t.kind != Tok::end) ++pos_;
        return t;
    }

    [[noreturn]] void fail(const Token& at, const std::string& message) {
        throw SyntaxError{make_error("DSL-002", message, at.span)};
    }

    bool at_word(std::string_view w) const { return peek().kind == Tok::word && peek().text == w; }

    const Token& expect_word(std::string_view w) {
        if (!at_word(w)) fail(peek(), "expected '" + std::string(w) + "', found " + describe(peek()));
        return take();
    }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
        take();
    }

    NameRef identifier(const char* what) {
        const Token& t = peek();
        if (t.kind == Tok::word && !is_keyword(t.text)) {
            take();
            return {t.text, t.span};
        }
        if (t.kind == Tok::word) fail(t, std::string("expected ") + what + ", found keyword '" + t.text + "'");
        fail(t, std::string("expected ") + what + ", found " + describe(t));
    }

    template <class E>
    E enum_value(const char* what, std::initializer_list<E> allowed) {
        const Token& t = peek();
        if (t.kind == Tok::word) {
            if (auto v = from_string<E>(t.text)) {
                if (std::find(allowed.begin(), allowed.end(), *v) != allowed.end()) {
                    take();
                    return *v;
                }
            }
        }
        std::string options;
        for (E e : allowed) options += (options.empty() ? "" : "|") + std::string(to_string(e));
        fail(t, std::string("expected ") + what + " (" + options + "), found " + describe(t));
    }

    template <class E>
    E assigned(std::string_view key, const char* what, std::initializer_list<E> allowed) {
        expect_word(key);
        expect(Tok::equals, "'='");
        return enum_value<E>(what, allowed);
    }

    bool boolean(std::string_view key) {
        expect_word(key);
        expect(Tok::equals, "'='");
        if (at_word("true")) return take(), true;
        if (at_word("false")) return take(), false;
        fail(peek(), "expected true or false, found " + describe(peek()));
    }

    // Span of a statement: starts at its keyword, extends to the last token
    // when the statement fits on one line.
    SourceSpan statement_span(std::size_t first) const {
        const SourceSpan a = tokens_[first].span;
        const std::size_t last_index = pos_ > first ? pos_ - 1 : first;
        const SourceSpan b = tokens_[last_index].span;
        if (b.line != a.line) return a;
        return {a.line, a.column, b.column + b.length - a.column};
    }

    bool parse_header() {
        try {
            if (!at_word("service")) fail(peek(), "expected 'service', found " + describe(peek()));
            header_ = take().span;
            if (peek().kind != Tok::string) fail(peek(), "expected service name string, found " + describe(peek()));
            name_ = take().text;
            expect(Tok::lbrace, "'{'");
        } catch (const SyntaxError& e) {
            diags_.push_back(e.diagnostic);
            return false;
        }
        return true;
    }

    void parse_body() {
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::rbrace) {
                take();
                break;
            }
            if (t.kind == Tok::end) {
                diags_.push_back(make_error("DSL-002", "expected '}' to close the service", t.span));
                return;
            }
            try {
                statement();
            } catch (const SyntaxError& e) {
                diags_.push_back(e.diagnostic);
                synchronize();
            }
        }
        if (peek().kind != Tok::end) {
            diags_.push_back(make_error("DSL-002", "unexpected " + describe(peek()) + " after the end of the service",
                                        peek().span));
        }
    }

    void synchronize() {
        int depth = 0;
        while (peek().kind != Tok::end) {
            const Token& t = peek();
            if (depth == 0 && (is_statement_keyword(t) || t.kind == Tok::rbrace)) return;
            if (t.kind == Tok::lbrace) ++depth;
            if (t.kind == Tok::rbrace) --depth;
            take();
        }
    }

    void statement() {
        const Token& t = peek();
        if (at_word("entity")) return entity();
        if (at_word("pii")) return pii();
        if (at_word("observes")) return observes();
        if (at_word("attach")) return attach();
        if (at_word("group_scheme")) return group();
        fail(t, "expected a declaration (entity, pii, observes, attach, group_scheme), found " + describe(t));
    }

    void entity() {
        const std::size_t first = pos_;
        take();
        RawEntity e;
        if (peek().kind == Tok::at_name) {
            const Token& t = take();
            if (is_builtin_name(t.text)) {
                throw SyntaxError{make_error("DSL-003", "'" + t.text + "' is a built-in entity and cannot be declared",
                                             t.span)};
            }
            fail(t, "expected entity name, found " + describe(t));
        }
        e.name = identifier("entity name");
        expect_word("kind");
        expect(Tok::equals, "'='");
        e.kind = enum_value<EntityKind>("entity kind", {EntityKind::participant, EntityKind::ttp, EntityKind::dtp});
        if (at_word("role")) {
            take();
            e.role = true;
        }
        e.span = statement_span(first);
        entities_.push_back(std::move(e));
    }

    void pii() {
        const std::size_t first = pos_;
        take();
        RawPii p;
        p.name = identifier("PII name");
        expect_word("of");
        p.subject = identifier("subject entity");
        p.resolvability = assigned<Resolvability>(
            "resolvability", "resolvability",
            {Resolvability::direct, Resolvability::indirect, Resolvability::unresolvable});
        std::set<std::string> seen;
        auto once = [&](const Token& t) {
            if (!seen.insert(t.text).second) fail(t, "'" + t.text + "' given twice");
        };
        while (true) {
            if (at_word("persistence")) {
                once(peek());
                p.persistence = assigned<Persistence>(
                    "persistence", "persistence",
                    {Persistence::persistent, Persistence::mutable_, Persistence::transaction});
            } else if (at_word("record_holder")) {
                once(peek());
                take();
                expect(Tok::equals, "'='");
                p.holders.push_back(identifier("record holder"));
                while (peek().kind == Tok::comma) {
                    take();
                    p.holders.push_back(identifier("record holder"));
                }
            } else if (at_word("authority_managed")) {
                once(peek());
                take();
                p.authority_managed = true;
            } else {
                break;
            }
        }
        p.span = statement_span(first);
        pii_.push_back(std::move(p));
    }

    void observes() {
        const std::size_t first = pos_;
        take();
        RawExposure x;
        const Token& target = peek();
        if (at_word("public")) {
            take();
            x.observer = {std::string(kPublicEntity), target.span};
        } else if (at_word("outside")) {
            take();
            x.observer = {std::string(kOutsideEntity), target.span};
        } else if (target.kind == Tok::at_name) {
            take();
            x.observer = {target.text, target.span};
        } else {
            x.observer = identifier("observer (entity name, public or outside)");
        }
        x.pii = identifier("PII name");
        x.form = assigned<Form>("form", "form",
                                {Form::plain, Form::encoded, Form::encrypted_recoverable, Form::encrypted_sealed,
                                 Form::hashed});
        std::set<std::string> seen;
        while (at_word("when") || at_word("via")) {
            if (!seen.insert(peek().text).second) fail(peek(), "'" + peek().text + "' given twice");
            if (at_word("when")) {
                x.when = assigned<Trigger>("when", "trigger",
                                           {Trigger::always, Trigger::on_fraud, Trigger::on_disobedience,
                                            Trigger::on_expiry});
            } else {
                x.via = assigned<Channel>("via", "channel", {Channel::data, Channel::context});
            }
        }
        x.span = statement_span(first);
        exposures_.push_back(std::move(x));
    }

    void attach() {
        const std::size_t first = pos_;
        take();
        RawAttachment a;
        a.pii = identifier("PII name");
        expect_word("to_ioi");
        a.form = assigned<Form>("form", "form",
                                {Form::plain, Form::encoded, Form::encrypted_recoverable, Form::encrypted_sealed,
                                 Form::hashed});
        a.recoverable_on = assigned<Trigger>(
            "recoverable_on", "trigger",
            {Trigger::always, Trigger::on_fraud, Trigger::on_disobedience, Trigger::on_expiry});
        a.span = statement_span(first);
        attachments_.push_back(std::move(a));
    }

    void group() {
        const std::size_t first = pos_;
        const Token& keyword = take();
        if (group_) fail(keyword, "only one group_scheme may be declared");
        expect(Tok::lbrace, "'{'");
        RawGroup g;
        std::set<std::string> seen;
        while (peek().kind != Tok::rbrace) {
            const Token& key = peek();
            if (key.kind != Tok::word) fail(key, "expected a group_scheme condition or '}', found " + describe(key));
            if (!seen.insert(key.text).second) fail(key, "'" + key.text + "' given twice");
            if (key.text == "operates_on_groups") {
                g.decl.operates_on_groups = boolean(key.text);
            } else if (key.text == "group_authentication") {
                g.decl.group_authentication = boolean(key.text);
            } else if (key.text == "acts_on_behalf") {
                g.decl.acts_on_behalf = boolean(key.text);
            } else if (key.text == "manager") {
                take();
                expect(Tok::equals, "'='");
                g.manager = identifier("manager entity");
            } else {
                fail(key, "unknown group_scheme condition " + describe(key));
            }
        }
        const Token& close = take();
        for (const char* required : {"operates_on_groups", "group_authentication", "acts_on_behalf"}) {
            if (!seen.count(required)) fail(close, std::string("group_scheme is missing '") + required + "'");
        }
        g.span = statement_span(first);
        group_ = std::move(g);
    }

    void resolve() {
        std::map<std::string, SourceSpan> names;
        auto declare = [&](const NameRef& n) {
            if (!names.emplace(n.name, n.span).second) {
                diags_.push_back(make_error("DSL-003", "'" + n.name + "' is already declared", n.span));
            }
        };
        for (const auto& e : entities_) declare(e.name);
        for (const auto& p : pii_) declare(p.name);

        std::set<std::string> entity_names{std::string(kPublicEntity), std::string(kOutsideEntity)};
        for (const auto& e : entities_) entity_names.insert(e.name.name);
        std::set<std::string> pii_names;
        for (const auto& p : pii_) pii_names.insert(p.name.name);

        auto need_entity = [&](const NameRef& n) {
            if (!entity_names.count(n.name)) {
                diags_.push_back(make_error("DSL-004", "unknown entity '" + n.name + "'", n.span));
            }
        };
        auto need_pii = [&](const NameRef& n) {
            if (!pii_names.count(n.name)) {
                diags_.push_back(make_error("DSL-004", "unknown PII '" + n.name + "'", n.span));
            }
        };
        for (const auto& p : pii_) {
            need_entity(p.subject);
            for (const auto& h : p.holders) need_entity(h);
        }
        for (const auto& x : exposures_) {
            need_entity(x.observer);
            need_pii(x.pii);
        }
        for (const auto& a : attachments_) need_pii(a.pii);
        if (group_ && group_->manager) need_entity(*group_->manager);
    }

    void build(ParseResult& result) {
        ServiceModel m;
        m.name = name_;
        SourceMap& src = result.sources;
        src.header = header_;
        for (auto& e : builtin_entities()) {
            m.entities.push_back(std::move(e));
            src.entities.emplace_back(std::nullopt);
        }
        if (group_) {
            m.group_scheme = group_->decl;
            if (group_->manager) m.group_scheme->manager = group_->manager->name;
            src.group_scheme = group_->span;
        }
        for (const auto& e : entities_) {
            const bool manager = group_ && group_->manager && group_->manager->name == e.name.name;
            m.entities.push_back({e.name.name, e.kind, e.role, manager});
            src.entities.emplace_back(e.span);
        }
        for (const auto& p : pii_) {
            PiiItem item{p.name.name, p.subject.name, p.resolvability, p.persistence, {}, p.authority_managed};
            for (const auto& h : p.holders) item.record_holders.push_back(h.name);
            m.pii_items.push_back(std::move(item));
            src.pii_items.emplace_back(p.span);
        }
        for (const auto& x : exposures_) {
            m.exposures.push_back({x.observer.name, x.pii.name, x.form, x.when, x.via});
            src.exposures.emplace_back(x.span);
        }
        for (const auto& a : attachments_) {
            m.attachments.push_back({a.pii.name, a.form, a.recoverable_on});
            src.attachments.emplace_back(a.span);
        }
        auto problems = validate_model(m, &src);
        for (auto& d : problems) {
            if (!d.location) d.location = header_;
        }
        diags_.insert(diags_.end(), problems.begin(), problems.end());
        result.diagnostics = std::move(diags_);
        if (!has_errors(result.diagnostics)) result.model = std::move(m);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diags_;
    SourceSpan header_;
    std::string name_;
    std::vector<RawEntity> entities_;
    std::vector<RawPii> pii_;
    std::vector<RawExposure> exposures_;
    std::vector<RawAttachment> attachments_;
    std::optional<RawGroup> group_;
};

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out + "\"";
}

std::string target_name(const std::string& observer) {
    if (observer == kPublicEntity) return "public";
    if (observer == kOutsideEntity) return "outside";
    return observer;
}

const char* boolean_text(bool b) { return b ? "true" : "false"; }

}  // namespace

ParseResult parse(std::string_view text) {
    std::vector<Diagnostic> lex_errors;
    auto tokens = Lexer(text).run(lex_errors);
    if (!lex_errors.empty()) {
        ParseResult result;
        result.diagnostics = std::move(lex_errors);
        return result;
    }
    return Parser(std::move(tokens)).run();
}

std::string serialize(const ServiceModel& model) {
    std::vector<std::string> entities;
    for (const auto& e : model.entities) {
        if (e.kind == EntityKind::public_ || e.kind == EntityKind::outside) continue;
        std::string line = "entity " + e.name + " kind=" + std::string(to_string(e.kind));
        if (e.is_role) line += " role";
        entities.push_back(std::move(line));
    }

    std::vector<std::string> pii;
    for (const auto& p : model.pii_items) {
        std::string line = "pii " + p.name + " of " + p.subject + " resolvability=" +
                           std::string(to_string(p.resolvability));
        if (p.persistence != Persistence::persistent) line += " persistence=" + std::string(to_string(p.persistence));
        if (!p.record_holders.empty()) {
            auto holders = p.record_holders;
            std::sort(holders.begin(), holders.end());
            line += " record_holder=";
            for (std::size_t i = 0; i < holders.size(); ++i) line += (i ? "," : "") + holders[i];
        }
        if (p.authority_managed) line += " authority_managed";
        pii.push_back(std::move(line));
    }

    std::vector<std::string> exposures;
    for (const auto& x : model.exposures) {
        std::string line = "observes " + target_name(x.observer) + " " + x.pii + " form=" +
                           std::string(to_string(x.form));
        if (x.when != Trigger::always) line += " when=" + std::string(to_string(x.when));
        if (x.via != Channel::data) line += " via=" + std::string(to_string(x.via));
        exposures.push_back(std::move(line));
    }

    std::vector<std::string> attachments;
    for (const auto& a : model.attachments) {
        attachments.push_back("attach " + a.pii + " to_ioi form=" + std::string(to_string(a.form)) +
                              " recoverable_on=" + std::string(to_string(a.recoverable_on)));
    }

    std::string out = "service " + quote(model.name) + " {\n";
    for (auto* group : {&entities, &pii, &exposures, &attachments}) {
        std::sort(group->begin(), group->end());
        for (const auto& line : *group) out += "  " + line + "\n";
    }
    if (model.group_scheme) {
        const auto& g = *model.group_scheme;
        out += std::string("  group_scheme { operates_on_groups=") + boolean_text(g.operates_on_groups) +
               " group_authentication=" + boolean_text(g.group_authentication) +
               " acts_on_behalf=" + boolean_text(g.acts_on_behalf);
        if (g.manager) out += " manager=" + *g.manager;
        out += " }\n";
    }
    out += "}\n";
    return out;
}

}  // namespace anonlevel
