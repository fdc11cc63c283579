#include "combip/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace combip {

namespace {

void append_terms(std::string& out, const std::vector<std::pair<int, long long>>& terms,
                  const IlpModel& model) {
    bool first = true;
    std::size_t line_len = out.size() - out.rfind('\n') - 1;
    for (auto [v, a] : terms) {
        std::string piece;
        if (first) {
            if (a < 0) piece += "- ";
        } else {
            piece += a < 0 ? " - " : " + ";
        }
        const long long mag = a < 0 ? -a : a;
        if (mag != 1) piece += std::to_string(mag) + " ";
        piece += model.var_name(v);
        if (line_len + piece.size() > 200) {
            out += "\n   ";
            line_len = 3;
            if (!first && piece[0] == ' ') piece.erase(0, 1);
        }
        out += piece;
        line_len += piece.size();
        first = false;
    }
}

}  // namespace

std::string export_lp(const IlpModel& model, const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) out += "\\ " + c + "\n";
    out += model.sense() == Sense::Maximize ? "Maximize\n" : "Minimize\n";
    out += " obj:";
    std::vector<std::pair<int, long long>> obj_terms;
    for (int i = 0; i < model.var_count(); ++i)
        if (model.objective()[i] != 0) obj_terms.emplace_back(i, model.objective()[i]);
    if (!obj_terms.empty()) {
        out += " ";
        append_terms(out, obj_terms, model);
    }
    out += "\nSubject To\n";
    const auto& cons = model.constraints();
    for (std::size_t i = 0; i < cons.size(); ++i) {
        out += " c" + std::to_string(i) + ": ";
        append_terms(out, cons[i].terms, model);
        switch (cons[i].cmp) {
            case Cmp::LE: out += " <= "; break;
            case Cmp::GE: out += " >= "; break;
            case Cmp::EQ: out += " = "; break;
        }
        out += std::to_string(cons[i].rhs) + "\n";
    }
    out += "Binary\n";
    for (int i = 0; i < model.var_count(); ++i) out += " " + model.var_name(i) + "\n";
    out += "End\n";
    return out;
}

namespace {

struct Token {
    enum Kind { Name, Number, Colon, Plus, Minus, CmpLe, CmpGe, CmpEq, Eof } kind;
    std::string text;
    long long value = 0;
    int line = 0;
    int column = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Token::Eof;
            return t;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                t.text += take();
            t.kind = Token::Name;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                t.text += take();
            if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e'))
                throw LpParseError("only integer coefficients are supported", t.line, t.column);
            t.kind = Token::Number;
            t.value = std::stoll(t.text);
            return t;
        }
        switch (c) {
            case ':': take(); t.kind = Token::Colon; return t;
            case '+': take(); t.kind = Token::Plus; return t;
            case '-': take(); t.kind = Token::Minus; return t;
            case '<':
                take();
                if (pos_ < text_.size() && text_[pos_] == '=') take();
                t.kind = Token::CmpLe;
                return t;
            case '>':
                take();
                if (pos_ < text_.size() && text_[pos_] == '=') take();
                t.kind = Token::CmpGe;
                return t;
            case '=':
                take();
                if (pos_ < text_.size() && text_[pos_] == '<') { take(); t.kind = Token::CmpLe; return t; }
                if (pos_ < text_.size() && text_[pos_] == '>') { take(); t.kind = Token::CmpGe; return t; }
                t.kind = Token::CmpEq;
                return t;
            default:
                throw LpParseError(std::string("unexpected character '") + c + "'", line_, column_);
        }
    }

private:
    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\\') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

struct RawConstraint {
    std::vector<std::pair<std::string, long long>> terms;
    Cmp cmp;
    long long rhs;
};

}  // namespace

IlpModel parse_lp(const std::string& text) {
    Lexer lex(text);
    Token tok = lex.next();

    auto expect_keyword = [&](const char* what) {
        if (tok.kind != Token::Name)
            throw LpParseError(std::string("expected ") + what, tok.line, tok.column);
    };

    expect_keyword("Maximize or Minimize");
    const std::string objsense = lowercase(tok.text);
    Sense sense;
    if (objsense == "maximize" || objsense == "max" || objsense == "maximum")
        sense = Sense::Maximize;
    else if (objsense == "minimize" || objsense == "min" || objsense == "minimum")
        sense = Sense::Minimize;
    else
        throw LpParseError("expected Maximize or Minimize, got '" + tok.text + "'", tok.line,
                           tok.column);
    tok = lex.next();

    auto is_section_end = [&](const Token& t) {
        if (t.kind != Token::Name) return false;
        const std::string k = lowercase(t.text);
        return k == "subject" || k == "st" || k == "such" || k == "binary" || k == "binaries" ||
               k == "bin" || k == "end" || k == "bounds" || k == "general" || k == "generals" ||
               k == "integer" || k == "integers" || k == "semi" || k == "free";
    };

    // terms := [label ':'] {(+|-)* [number] name}; stops at cmp or section keyword.
    auto parse_terms = [&](std::vector<std::pair<std::string, long long>>& terms,
                           bool allow_label) {
        bool label_possible = allow_label;
        bool any_sign = false;
        long long sign = 1;
        std::optional<long long> magnitude;
        while (true) {
            if (tok.kind == Token::Plus) {
                any_sign = true;
                tok = lex.next();
                continue;
            }
            if (tok.kind == Token::Minus) {
                any_sign = true;
                sign = -sign;
                tok = lex.next();
                continue;
            }
            if (tok.kind == Token::Number) {
                if (magnitude)
                    throw LpParseError("two consecutive numbers in expression", tok.line,
                                       tok.column);
                magnitude = tok.value;
                tok = lex.next();
                continue;
            }
            if (tok.kind == Token::Name) {
                if (is_section_end(tok)) {
                    if (magnitude || any_sign)
                        throw LpParseError("dangling coefficient", tok.line, tok.column);
                    return;
                }
                Token name = tok;
                tok = lex.next();
                if (label_possible && tok.kind == Token::Colon && !magnitude && !any_sign) {
                    label_possible = false;  // swallow the label
                    tok = lex.next();
                    continue;
                }
                label_possible = false;
                terms.emplace_back(name.text, sign * magnitude.value_or(1));
                sign = 1;
                any_sign = false;
                magnitude.reset();
                continue;
            }
            if (magnitude || any_sign)
                throw LpParseError("dangling coefficient", tok.line, tok.column);
            return;
        }
    };

    std::vector<std::pair<std::string, long long>> objective;
    parse_terms(objective, true);

    // Subject To
    expect_keyword("Subject To");
    {
        const std::string k = lowercase(tok.text);
        if (k == "subject" || k == "such") {
            tok = lex.next();
            if (tok.kind != Token::Name || (lowercase(tok.text) != "to" && lowercase(tok.text) != "that"))
                throw LpParseError("expected 'To' after 'Subject'", tok.line, tok.column);
            tok = lex.next();
        } else if (k == "st") {
            tok = lex.next();
        } else {
            throw LpParseError("expected 'Subject To', got '" + tok.text + "'", tok.line,
                               tok.column);
        }
    }

    std::vector<RawConstraint> raw;
    while (true) {
        if (tok.kind == Token::Eof)
            throw LpParseError("unexpected end of file inside Subject To", tok.line, tok.column);
        if (tok.kind == Token::Name && is_section_end(tok)) {
            const std::string k = lowercase(tok.text);
            if (k == "subject" || k == "such" || k == "st")
                throw LpParseError("duplicate Subject To section", tok.line, tok.column);
            break;
        }
        RawConstraint c;
        parse_terms(c.terms, true);
        if (tok.kind == Token::CmpLe)
            c.cmp = Cmp::LE;
        else if (tok.kind == Token::CmpGe)
            c.cmp = Cmp::GE;
        else if (tok.kind == Token::CmpEq)
            c.cmp = Cmp::EQ;
        else
            throw LpParseError("expected <=, >= or = in constraint", tok.line, tok.column);
        tok = lex.next();
        long long rhs_sign = 1;
        while (tok.kind == Token::Plus || tok.kind == Token::Minus) {
            if (tok.kind == Token::Minus) rhs_sign = -rhs_sign;
            tok = lex.next();
        }
        if (tok.kind != Token::Number)
            throw LpParseError("expected integer right-hand side", tok.line, tok.column);
        c.rhs = rhs_sign * tok.value;
        if (c.terms.empty())
            throw LpParseError("constraint with no terms", tok.line, tok.column);
        raw.push_back(std::move(c));
        tok = lex.next();
    }

    // Binary section: defines the final variable order.
    {
        const std::string k = lowercase(tok.text);
        if (k == "bounds" || k == "general" || k == "generals" || k == "integer" ||
            k == "integers" || k == "semi" || k == "free")
            throw LpParseError("unsupported section '" + tok.text + "' (binary-only subset)",
                               tok.line, tok.column);
        if (k != "binary" && k != "binaries" && k != "bin")
            throw LpParseError("expected Binary section, got '" + tok.text + "'", tok.line,
                               tok.column);
        tok = lex.next();
    }

    IlpModel model(sense);
    while (tok.kind == Token::Name && lowercase(tok.text) != "end") {
        if (is_section_end(tok))
            throw LpParseError("unsupported section '" + tok.text + "' (binary-only subset)",
                               tok.line, tok.column);
        model.add_binary_var(tok.text);
        tok = lex.next();
    }
    if (tok.kind != Token::Name || lowercase(tok.text) != "end")
        throw LpParseError("expected End", tok.line, tok.column);
    tok = lex.next();
    if (tok.kind != Token::Eof)
        throw LpParseError("trailing input after End", tok.line, tok.column);

    auto resolve = [&](const std::string& name, int line, int column) {
        const int idx = model.var_index(name);
        if (idx < 0)
            throw LpParseError("variable '" + name + "' not declared Binary", line, column);
        return idx;
    };
    for (const auto& [name, coeff] : objective) {
        const int idx = resolve(name, 0, 0);
        model.set_objective_coeff(idx, model.objective_coeff(idx) + coeff);
    }
    for (const auto& rc : raw) {
        std::vector<std::pair<int, long long>> terms;
        terms.reserve(rc.terms.size());
        for (const auto& [name, coeff] : rc.terms) terms.emplace_back(resolve(name, 0, 0), coeff);
        model.add_constraint(std::move(terms), rc.cmp, rc.rhs);
    }
    return model;
}

}  // namespace combip
