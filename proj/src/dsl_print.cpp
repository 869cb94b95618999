#include "ilab/dsl.hpp"

namespace ilab {

namespace {

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + print(e) + ")" : print(e); }

std::string print_monomial(const Monomial& m) { return m.str(); }

std::string print_list(const std::vector<ExprPtr>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + print(*items[i]);
    return s;
}

}  // namespace

std::string print(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return e.number.str();
        case Expr::Kind::Name: return e.name;
        case Expr::Kind::Neg: return "-" + wrap(*e.lhs, precedence(*e.lhs) < 3);
        case Expr::Kind::Pow: return wrap(*e.lhs, precedence(*e.lhs) < 5) + "^" + std::to_string(e.exponent);
        case Expr::Kind::Mul:
            return wrap(*e.lhs, precedence(*e.lhs) < 2) + "*" + wrap(*e.rhs, precedence(*e.rhs) <= 2);
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            return wrap(*e.lhs, precedence(*e.lhs) < 1) + (e.kind == Expr::Kind::Add ? " + " : " - ") +
                   wrap(*e.rhs, precedence(*e.rhs) <= 1);
    }
    return "";
}

std::string print(const ConeExpr& c) {
    switch (c.kind) {
        case ConeExpr::Kind::Named: return c.name;
        case ConeExpr::Kind::Dual: return "dual(" + print(*c.inner) + ")";
        case ConeExpr::Kind::Inline: {
            std::string s = "cone(" + print_list(c.generators) + ")";
            if (c.under) s += " under " + *c.under;
            return s;
        }
    }
    return "";
}

std::string print(const Check& c) {
    std::string neg = c.negated ? "not " : "";
    switch (c.kind) {
        case Check::Kind::Equal: return print(*c.lhs) + " == " + print(*c.rhs);
        case Check::Kind::Member: return neg + "member(" + print(*c.lhs) + ", " + print(c.cone) + ")";
        case Check::Kind::Extremal: return neg + "extremal(" + print(*c.lhs) + ", " + print(c.cone) + ")";
        case Check::Kind::Simplicial: return neg + "simplicial(" + print(c.cone) + ")";
        case Check::Kind::Fixed: return neg + "fixed(" + print(*c.lhs) + ", " + c.action + ")";
        case Check::Kind::ConeEqual: return print(c.cone) + " == " + print(c.cone2);
        case Check::Kind::Relation: {
            std::string s = "relation(" + print_list(c.items) + ") == ";
            if (!c.relation) return s + "none";
            s += "(";
            for (std::size_t i = 0; i < c.relation->size(); ++i) s += (i ? ", " : "") + (*c.relation)[i].str();
            return s + ")";
        }
    }
    return "";
}

std::string print(const ScenarioAST& ast) {
    std::string out;
    for (const auto& st : ast.statements) {
        if (const auto* r = std::get_if<RingDef>(&st)) {
            out += "ring " + r->name + " {\n  gens ";
            for (std::size_t i = 0; i < r->generators.size(); ++i)
                out += (i ? ", " : "") + r->generators[i].name + ":" + std::to_string(r->generators[i].degree);
            out += ";\n";
            if (!r->relations.empty()) out += "  rels " + print_list(r->relations) + ";\n";
            out += "  top " + std::to_string(r->top) + ";\n  integral ";
            for (std::size_t i = 0; i < r->integral.size(); ++i)
                out += (i ? ", " : "") + print_monomial(r->integral[i].first) + " = " + r->integral[i].second.str();
            out += ";\n";
            if (r->scale) out += "  scale " + r->scale->str() + ";\n";
            out += "}\n";
        } else if (const auto* c = std::get_if<ClassDef>(&st)) {
            out += "class " + c->name + " on " + c->space + " = " + print(*c->expr) + ";\n";
        } else if (const auto* k = std::get_if<ConeDef>(&st)) {
            out += "cone " + k->name + " = " + print(k->cone) + ";\n";
        } else if (const auto* u = std::get_if<UseStmt>(&st)) {
            out += "use " + u->space + ";\n";
        } else if (const auto* a = std::get_if<Assertion>(&st)) {
            out += "assert " + (a->space ? *a->space + ": " : std::string()) + print(a->check) + ";\n";
        }
    }
    return out;
}

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return equivalent(*a, *b);
}

bool same_list(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same(a[i], b[i])) return false;
    return true;
}

bool same_cone(const ConeExpr& a, const ConeExpr& b) {
    if (a.kind != b.kind || a.name != b.name || a.under != b.under) return false;
    if (!same_list(a.generators, b.generators)) return false;
    if (!a.inner || !b.inner) return !a.inner && !b.inner;
    return same_cone(*a.inner, *b.inner);
}

bool same_check(const Check& a, const Check& b) {
    return a.kind == b.kind && a.negated == b.negated && same(a.lhs, b.lhs) && same(a.rhs, b.rhs) &&
           same_cone(a.cone, b.cone) && same_cone(a.cone2, b.cone2) && a.action == b.action &&
           same_list(a.items, b.items) && a.relation == b.relation;
}

bool same_statement(const Statement& x, const Statement& y) {
    if (x.index() != y.index()) return false;
    if (const auto* a = std::get_if<RingDef>(&x)) {
        const auto& b = std::get<RingDef>(y);
        return a->name == b.name && a->generators == b.generators && same_list(a->relations, b.relations) &&
               a->top == b.top && a->integral == b.integral && a->scale == b.scale;
    }
    if (const auto* a = std::get_if<ClassDef>(&x)) {
        const auto& b = std::get<ClassDef>(y);
        return a->name == b.name && a->space == b.space && same(a->expr, b.expr);
    }
    if (const auto* a = std::get_if<ConeDef>(&x)) {
        const auto& b = std::get<ConeDef>(y);
        return a->name == b.name && same_cone(a->cone, b.cone);
    }
    if (const auto* a = std::get_if<UseStmt>(&x)) return a->space == std::get<UseStmt>(y).space;
    const auto& a = std::get<Assertion>(x);
    const auto& b = std::get<Assertion>(y);
    return a.space == b.space && same_check(a.check, b.check);
}

}  // namespace

bool equivalent(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.number == b.number && a.name == b.name && a.exponent == b.exponent &&
           same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

bool equivalent(const ScenarioAST& a, const ScenarioAST& b) {
    if (a.statements.size() != b.statements.size()) return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i)
        if (!same_statement(a.statements[i], b.statements[i])) return false;
    return true;
}

}  // namespace ilab
