#include "formwell/lang.hpp"

#include <cctype>
#include <map>

#include "formwell/errors.hpp"

namespace formwell {

namespace {

enum class Tok {
    Number,
    VarZ1,
    VarZ2,
    VarZB1,
    VarZB2,
    ImagUnit,
    GenDZ1,
    GenDZ2,
    GenDZB1,
    GenDZB2,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Wedge,
    LParen,
    RParen,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int col;  // 1-based
};

bool is_gen(Tok t) {
    return t == Tok::GenDZ1 || t == Tok::GenDZ2 || t == Tok::GenDZB1 || t == Tok::GenDZB2;
}

Gen gen_of(Tok t) {
    switch (t) {
        case Tok::GenDZ1: return Gen::DZ1;
        case Tok::GenDZ2: return Gen::DZ2;
        case Tok::GenDZB1: return Gen::DZB1;
        default: return Gen::DZB2;
    }
}

Var var_of(Tok t) {
    switch (t) {
        case Tok::VarZ1: return Var::Z1;
        case Tok::VarZ2: return Var::Z2;
        case Tok::VarZB1: return Var::ZB1;
        default: return Var::ZB2;
    }
}

std::vector<Token> lex(std::string_view text, bool forms_allowed) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto col = [&] { return static_cast<int>(i) + 1; };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        int at = col();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Number, std::string(text.substr(start, i - start)), at});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            std::string word(text.substr(start, i - start));
            Tok kind;
            if (word == "z1")
                kind = Tok::VarZ1;
            else if (word == "z2")
                kind = Tok::VarZ2;
            else if (word == "zb1")
                kind = Tok::VarZB1;
            else if (word == "zb2")
                kind = Tok::VarZB2;
            else if (word == "i")
                kind = Tok::ImagUnit;
            else if (forms_allowed && word == "dz1")
                kind = Tok::GenDZ1;
            else if (forms_allowed && word == "dz2")
                kind = Tok::GenDZ2;
            else if (forms_allowed && word == "dzb1")
                kind = Tok::GenDZB1;
            else if (forms_allowed && word == "dzb2")
                kind = Tok::GenDZB2;
            else
                throw ParseError(1, at, "unknown name '" + word + "'");
            out.push_back({kind, word, at});
            continue;
        }
        switch (c) {
            case '+': out.push_back({Tok::Plus, "+", at}); break;
            case '-': out.push_back({Tok::Minus, "-", at}); break;
            case '*': out.push_back({Tok::Star, "*", at}); break;
            case '^': out.push_back({Tok::Caret, "^", at}); break;
            case '(': out.push_back({Tok::LParen, "(", at}); break;
            case ')': out.push_back({Tok::RParen, ")", at}); break;
            case '/':
                if (i + 1 < text.size() && text[i + 1] == '\\') {
                    if (!forms_allowed) throw ParseError(1, at, "wedge operator not allowed here");
                    out.push_back({Tok::Wedge, "/\\", at});
                    ++i;
                } else {
                    out.push_back({Tok::Slash, "/", at});
                }
                break;
            default:
                throw ParseError(1, at, std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    out.push_back({Tok::End, "", static_cast<int>(text.size()) + 1});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, bool forms) : toks_(lex(text, forms)) {}

    Poly parse_scalar_toplevel() {
        Poly p = parse_expr();
        expect_end();
        return p;
    }

    Form parse_form_toplevel() {
        Form f = parse_form_expr();
        expect_end();
        return f;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok t) {
        if (peek().kind == t) {
            take();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(1, t.col, "expected " + expected + ", found " + got);
    }
    void expect_end() {
        if (peek().kind != Tok::End) fail("end of input");
    }

    unsigned parse_uint_token(const char* what) {
        if (peek().kind != Tok::Number) fail(what);
        Token t = take();
        if (t.text.size() > 4) throw ParseError(1, t.col, "exponent too large");
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Poly parse_expr() {
        Poly p = parse_term();
        while (true) {
            if (accept(Tok::Plus))
                p += parse_term();
            else if (accept(Tok::Minus))
                p -= parse_term();
            else
                return p;
        }
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (accept(Tok::Star)) p *= parse_factor();
        return p;
    }

    Poly parse_factor() {
        Poly a = parse_atom();
        if (accept(Tok::Caret)) {
            unsigned e = parse_uint_token("exponent");
            Poly r = Poly::constant(1);
            for (unsigned k = 0; k < e; ++k) r *= a;
            return r;
        }
        return a;
    }

    Poly parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::LParen: {
                take();
                Poly p = parse_expr();
                if (!accept(Tok::RParen)) fail("')'");
                return p;
            }
            case Tok::Minus:
                take();
                return -parse_atom();
            case Tok::Number: {
                Token num = take();
                BigInt n = BigInt::from_string(num.text);
                if (accept(Tok::Slash)) {
                    if (peek().kind != Tok::Number) fail("denominator");
                    Token den = take();
                    BigInt d = BigInt::from_string(den.text);
                    if (d.is_zero()) throw ZeroDenominator();
                    return Poly::constant(GaussianRational(Rational(n, d)));
                }
                return Poly::constant(GaussianRational(Rational(n, BigInt(1))));
            }
            case Tok::ImagUnit:
                take();
                return Poly::constant(GaussianRational::i());
            case Tok::VarZ1:
            case Tok::VarZ2:
            case Tok::VarZB1:
            case Tok::VarZB2: {
                Token v = take();
                return Poly::variable(var_of(v.kind));
            }
            case Tok::GenDZ1:
            case Tok::GenDZ2:
            case Tok::GenDZB1:
            case Tok::GenDZB2:
                throw MixedGeneratorUse(1, t.col,
                                        "generator '" + t.text + "' used in scalar context");
            default:
                fail("a value");
        }
    }

    // genchain := gen ("/\" gen)*
    Form parse_genchain() {
        Form chain = Form::from_poly(Poly::constant(1));
        while (true) {
            const Token& t = peek();
            if (!is_gen(t.kind)) fail("generator");
            Token g = take();
            if (peek().kind == Tok::Caret)
                throw MixedGeneratorUse(1, peek().col, "generators cannot be exponentiated");
            chain = wedge(chain, Form::generator(gen_of(g.kind)));
            if (!accept(Tok::Wedge)) break;
        }
        return chain;
    }

    // fterm := genchain | factor ('*' factor)* ('*' genchain)?
    Form parse_form_term() {
        if (is_gen(peek().kind)) return parse_genchain();
        Poly scalar = parse_factor();
        while (accept(Tok::Star)) {
            if (is_gen(peek().kind)) {
                Form chain = parse_genchain();
                return scalar * chain;
            }
            scalar *= parse_factor();
        }
        return Form::from_poly(scalar);
    }

    Form parse_form_expr() {
        Form f = parse_form_term();
        while (true) {
            if (accept(Tok::Plus))
                f += parse_form_term();
            else if (accept(Tok::Minus))
                f -= parse_form_term();
            else
                return f;
        }
    }
};

}  // namespace

Poly parse_expr(std::string_view text) { return Parser(text, false).parse_scalar_toplevel(); }

Form parse_form(std::string_view text) { return Parser(text, true).parse_form_toplevel(); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
    std::optional<MetricKind> metric;
    std::map<std::string, Poly, std::less<>> exprs;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos ? text.substr(pos)
                                                              : text.substr(pos, eol - pos);
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        std::string_view stripped = trim(line);
        if (!stripped.empty()) {
            std::size_t eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ParseError(line_no, 1, "expected 'key = value'");
            std::string key(trim(line.substr(0, eq)));
            std::string_view value_raw = line.substr(eq + 1);
            // Column of the first non-space character of the value.
            std::size_t lead = 0;
            while (lead < value_raw.size() &&
                   std::isspace(static_cast<unsigned char>(value_raw[lead])))
                ++lead;
            int value_col = static_cast<int>(eq + 1 + lead) + 1;
            std::string_view value = trim(value_raw);
            if (value.empty()) throw ParseError(line_no, value_col, "empty value");

            if (key == "metric") {
                if (metric) throw DuplicateKey(line_no, 1, key);
                if (value == "euclidean")
                    metric = MetricKind::Euclidean;
                else if (value == "minkowski")
                    metric = MetricKind::Minkowski;
                else
                    throw ParseError(line_no, value_col,
                                     "unknown metric '" + std::string(value) +
                                         "' (valid: euclidean, minkowski)");
            } else if (key == "f1" || key == "f2" || key == "fb1" || key == "fb2" ||
                       key == "gauge") {
                if (exprs.count(key)) throw DuplicateKey(line_no, 1, key);
                try {
                    exprs.emplace(key, parse_expr(value));
                } catch (const ParseError& e) {
                    // Re-anchor the nested position to this file line.
                    std::string msg = e.what();
                    std::size_t colon = msg.find(": ");
                    if (colon != std::string::npos) msg = msg.substr(colon + 2);
                    throw ParseError(line_no, value_col + e.col - 1, msg);
                }
            } else {
                throw UnknownKey(line_no, 1, key);
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (!metric) throw MissingMetric(line_no, 1);

    ProblemSpec spec;
    spec.metric = *metric;
    auto get = [&](const char* key) {
        auto it = exprs.find(key);
        return it == exprs.end() ? Poly() : it->second;
    };
    spec.potential = Potential{get("f1"), get("f2"), get("fb1"), get("fb2")};
    if (auto it = exprs.find("gauge"); it != exprs.end()) spec.gauge = it->second;
    return spec;
}

}  // namespace formwell
