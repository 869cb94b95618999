#include "ilab/dsl.hpp"

#include <cctype>

namespace ilab {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
    return s;
}

std::string parse_message(const SourcePosition& pos, const std::vector<std::string>& expected,
                          const std::string& found) {
    return pos.str() + ": parse error: expected " + (expected.size() > 1 ? "one of " : "") + join(expected, ", ") +
           " but found " + found;
}

}  // namespace

ParseError::ParseError(SourcePosition pos, std::vector<std::string> expected, std::string found)
    : Error(ErrorKind::ParseError, parse_message(pos, expected, found)),
      pos_(std::move(pos)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ScenarioError::ScenarioError(ErrorKind kind, SourcePosition pos, const std::string& message)
    : Error(kind, pos.str() + ": error: " + message), pos_(std::move(pos)), detail_(message) {}

namespace {

enum class Tok { Name, Int, Rat, Sym, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourcePosition pos;
};

const std::set<std::string, std::less<>> kKeywords{
    "ring", "gens",    "rels",     "top",        "integral", "scale", "class",    "on",    "cone", "under",
    "assert", "use",   "member",   "extremal",   "dual",     "simplicial", "relation", "fixed", "not", "none"};

std::vector<Token> lex(std::string_view text, const std::string& file) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        Token t;
        t.pos = {file, line, col};
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            t.kind = Tok::Name;
            t.text = std::string(text.substr(i, j - i));
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Tok::Int;
            if (j + 1 < text.size() && text[j] == '/' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                t.kind = Tok::Rat;
            }
            t.text = std::string(text.substr(i, j - i));
            advance(j - i);
        } else if (ch == '=' && i + 1 < text.size() && text[i + 1] == '=') {
            t.kind = Tok::Sym;
            t.text = "==";
            advance(2);
        } else if (std::string_view("{}();,:=+-*^").find(ch) != std::string_view::npos) {
            t.kind = Tok::Sym;
            t.text = std::string(1, ch);
            advance(1);
        } else {
            unsigned char u = static_cast<unsigned char>(ch);
            std::string shown = u < 0x80 ? "'" + std::string(1, ch) + "'" : "non-ASCII byte";
            throw ParseError({file, line, col}, {"a token"}, shown);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.pos = {file, line, col};
    out.push_back(end);
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ScenarioAST scenario(const std::string& file) {
        ScenarioAST ast;
        ast.file = file;
        while (peek().kind != Tok::End) ast.statements.push_back(statement());
        return ast;
    }

    ExprPtr lone_expression() {
        ExprPtr e = expr();
        if (peek().kind != Tok::End) error({"end of expression"});
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;
    int depth_ = 0;

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(at_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }

    [[noreturn]] void error(std::vector<std::string> expected) const {
        throw ParseError(peek().pos, std::move(expected), describe(peek()));
    }

    bool is_sym(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
    bool is_kw(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::Name && peek(k).text == s; }

    void expect_sym(const char* s) {
        if (!is_sym(s)) error({"'" + std::string(s) + "'"});
        next();
    }
    void expect_kw(const char* s) {
        if (!is_kw(s)) error({"'" + std::string(s) + "'"});
        next();
    }
    std::string name() {
        if (peek().kind != Tok::Name || kKeywords.count(peek().text)) error({"identifier"});
        return next().text;
    }
    long small_int(const char* what) {
        if (peek().kind != Tok::Int) error({what});
        const std::string& s = peek().text;
        if (s.size() > 6) error({"an integer below 1000000"});
        return std::stol(next().text);
    }
    Rational rational_literal() {
        bool neg = false;
        if (is_sym("-")) {
            next();
            neg = true;
        }
        if (peek().kind != Tok::Int && peek().kind != Tok::Rat) error({"rational number"});
        const Token& t = next();
        Rational r;
        try {
            r = Rational::parse(t.text);
        } catch (const Error&) {
            throw ParseError(t.pos, {"rational number with nonzero denominator"}, describe(t));
        }
        return neg ? -r : r;
    }

    Statement statement() {
        if (is_kw("ring")) return ring();
        if (is_kw("class")) return classdef();
        if (is_kw("cone")) return conedef();
        if (is_kw("use")) return use();
        if (is_kw("assert")) return assertion();
        error({"'ring'", "'class'", "'cone'", "'use'", "'assert'"});
    }

    RingDef ring() {
        RingDef r;
        r.pos = peek().pos;
        expect_kw("ring");
        r.name = name();
        expect_sym("{");
        expect_kw("gens");
        do {
            GeneratorSpec g;
            g.name = name();
            expect_sym(":");
            g.degree = static_cast<int>(small_int("generator degree"));
            r.generators.push_back(g);
        } while (accept(","));
        expect_sym(";");
        if (is_kw("rels")) {
            next();
            do r.relations.push_back(expr());
            while (accept(","));
            expect_sym(";");
        }
        expect_kw("top");
        r.top = static_cast<int>(small_int("top degree"));
        expect_sym(";");
        expect_kw("integral");
        do {
            Monomial m = monomial();
            expect_sym("=");
            r.integral.emplace_back(std::move(m), rational_literal());
        } while (accept(","));
        expect_sym(";");
        if (is_kw("scale")) {
            next();
            r.scale = rational_literal();
            expect_sym(";");
        }
        expect_sym("}");
        return r;
    }

    bool accept(const char* s) {
        if (!is_sym(s)) return false;
        next();
        return true;
    }

    Monomial monomial() {
        std::vector<std::pair<std::string, unsigned>> f;
        if (peek().kind == Tok::Int && peek().text == "1" && !is_sym("*", 1)) {
            next();
            return Monomial();
        }
        do {
            std::string n = name();
            unsigned e = 1;
            if (accept("^")) e = static_cast<unsigned>(small_int("exponent"));
            f.emplace_back(n, e);
        } while (accept("*"));
        return Monomial(std::move(f));
    }

    ClassDef classdef() {
        ClassDef c;
        c.pos = peek().pos;
        expect_kw("class");
        c.name = name();
        expect_kw("on");
        c.space = name();
        expect_sym("=");
        c.expr = expr();
        expect_sym(";");
        return c;
    }

    ConeDef conedef() {
        ConeDef c;
        c.pos = peek().pos;
        expect_kw("cone");
        c.name = name();
        expect_sym("=");
        c.cone = cone_expr();
        expect_sym(";");
        return c;
    }

    UseStmt use() {
        UseStmt u;
        u.pos = peek().pos;
        expect_kw("use");
        u.space = name();
        expect_sym(";");
        return u;
    }

    ConeExpr cone_expr() {
        ConeExpr c;
        c.pos = peek().pos;
        if (is_kw("cone")) {
            next();
            c.kind = ConeExpr::Kind::Inline;
            expect_sym("(");
            if (!is_sym(")")) {
                do c.generators.push_back(expr());
                while (accept(","));
            }
            expect_sym(")");
            if (is_kw("under")) {
                next();
                c.under = name();
            }
            return c;
        }
        if (is_kw("dual")) {
            next();
            c.kind = ConeExpr::Kind::Dual;
            expect_sym("(");
            enter();
            c.inner = std::make_shared<ConeExpr>(cone_expr());
            leave();
            expect_sym(")");
            return c;
        }
        if (peek().kind == Tok::Name && !kKeywords.count(peek().text)) {
            c.kind = ConeExpr::Kind::Named;
            c.name = next().text;
            return c;
        }
        error({"'cone'", "'dual'", "cone name"});
    }

    Assertion assertion() {
        Assertion a;
        a.pos = peek().pos;
        expect_kw("assert");
        if (peek().kind == Tok::Name && !kKeywords.count(peek().text) && is_sym(":", 1)) {
            a.space = next().text;
            next();
        }
        a.check = check();
        expect_sym(";");
        return a;
    }

    Check check() {
        Check c;
        if (is_kw("not")) {
            next();
            c.negated = true;
            if (!(is_kw("member") || is_kw("extremal") || is_kw("simplicial") || is_kw("fixed")))
                error({"'member'", "'extremal'", "'simplicial'", "'fixed'"});
        }
        if (is_kw("member") || is_kw("extremal")) {
            c.kind = is_kw("member") ? Check::Kind::Member : Check::Kind::Extremal;
            next();
            expect_sym("(");
            c.lhs = expr();
            expect_sym(",");
            c.cone = cone_expr();
            expect_sym(")");
            return c;
        }
        if (is_kw("simplicial")) {
            next();
            c.kind = Check::Kind::Simplicial;
            expect_sym("(");
            c.cone = cone_expr();
            expect_sym(")");
            return c;
        }
        if (is_kw("fixed")) {
            next();
            c.kind = Check::Kind::Fixed;
            expect_sym("(");
            c.lhs = expr();
            expect_sym(",");
            c.action = name();
            expect_sym(")");
            return c;
        }
        if (is_kw("cone") || is_kw("dual")) {
            c.kind = Check::Kind::ConeEqual;
            c.cone = cone_expr();
            expect_sym("==");
            c.cone2 = cone_expr();
            return c;
        }
        if (is_kw("relation")) {
            next();
            c.kind = Check::Kind::Relation;
            expect_sym("(");
            do c.items.push_back(expr());
            while (accept(","));
            expect_sym(")");
            expect_sym("==");
            if (is_kw("none")) {
                next();
                return c;
            }
            expect_sym("(");
            RationalVector r;
            do r.push_back(rational_literal());
            while (accept(","));
            expect_sym(")");
            c.relation = std::move(r);
            return c;
        }
        c.kind = Check::Kind::Equal;
        c.lhs = expr();
        expect_sym("==");
        c.rhs = expr();
        return c;
    }

    void enter() {
        if (++depth_ > kMaxNesting)
            throw ParseError(peek().pos, {"nesting depth at most " + std::to_string(kMaxNesting)}, describe(peek()));
    }
    void leave() { --depth_; }

    static ExprPtr make(Expr::Kind k, SourcePosition pos, ExprPtr l = {}, ExprPtr r = {}) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->pos = std::move(pos);
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    ExprPtr expr() {
        enter();
        ExprPtr left = term();
        while (is_sym("+") || is_sym("-")) {
            SourcePosition pos = peek().pos;
            Expr::Kind k = next().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
            left = make(k, pos, left, term());
        }
        leave();
        return left;
    }

    ExprPtr term() {
        ExprPtr left = unary();
        while (is_sym("*")) {
            SourcePosition pos = next().pos;
            left = make(Expr::Kind::Mul, pos, left, unary());
        }
        return left;
    }

    ExprPtr unary() {
        if (is_sym("-")) {
            SourcePosition pos = next().pos;
            enter();
            ExprPtr inner = unary();
            leave();
            return make(Expr::Kind::Neg, pos, inner);
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (is_sym("^")) {
            SourcePosition pos = next().pos;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Pow;
            e->pos = pos;
            e->lhs = base;
            e->exponent = static_cast<unsigned>(small_int("exponent"));
            return e;
        }
        return base;
    }

    ExprPtr primary() {
        const Token& t = peek();
        if (t.kind == Tok::Int || t.kind == Tok::Rat) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Number;
            e->pos = t.pos;
            try {
                e->number = Rational::parse(t.text);
            } catch (const Error&) {
                throw ParseError(t.pos, {"rational number with nonzero denominator"}, describe(t));
            }
            next();
            return e;
        }
        if (t.kind == Tok::Name && !kKeywords.count(t.text)) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Name;
            e->pos = t.pos;
            e->name = t.text;
            next();
            return e;
        }
        if (is_sym("(")) {
            next();
            ExprPtr e = expr();
            expect_sym(")");
            return e;
        }
        error({"number", "identifier", "'('"});
    }
};

}  // namespace

ScenarioAST parse(std::string_view text, const std::string& file) {
    Parser p(lex(text, file));
    return p.scenario(file);
}

ExprPtr parse_expression(std::string_view text, const std::string& file) {
    Parser p(lex(text, file));
    return p.lone_expression();
}

}  // namespace ilab
