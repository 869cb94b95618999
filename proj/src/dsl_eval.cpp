#include "ilab/cone.hpp"
#include "ilab/dsl.hpp"

#include <chrono>
#include <functional>

namespace ilab {

std::size_t ScenarioReport::passed() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.pass ? 1 : 0;
    return n;
}

std::size_t ScenarioReport::failed() const { return records.size() - passed(); }

namespace {

using Resolver = std::function<ClassExpr(const Expr&)>;

ClassExpr eval_with(const Expr& e, const Resolver& resolve) {
    switch (e.kind) {
        case Expr::Kind::Number: return ClassExpr(e.number);
        case Expr::Kind::Name: return resolve(e);
        case Expr::Kind::Neg: return -eval_with(*e.lhs, resolve);
        case Expr::Kind::Add: return eval_with(*e.lhs, resolve) + eval_with(*e.rhs, resolve);
        case Expr::Kind::Sub: return eval_with(*e.lhs, resolve) - eval_with(*e.rhs, resolve);
        case Expr::Kind::Mul: return eval_with(*e.lhs, resolve) * eval_with(*e.rhs, resolve);
        case Expr::Kind::Pow: return eval_with(*e.lhs, resolve).pow(e.exponent);
    }
    return {};
}

std::string vector_str(const std::optional<RationalVector>& v) { return v ? to_string(*v) : "none"; }

struct EvalCone {
    Cone cone;
    const SpaceModel* space = nullptr;
};

class Evaluator {
public:
    ScenarioReport run(const ScenarioAST& ast) {
        report_.scenario = ast.file;
        for (const auto& st : ast.statements) {
            SourcePosition pos = std::visit([](const auto& s) { return s.pos; }, st);
            try {
                std::visit([this](const auto& s) { handle(s); }, st);
            } catch (const ScenarioError&) {
                throw;
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ScenarioError(e.kind(), pos, e.what());
            }
        }
        return std::move(report_);
    }

private:
    ScenarioReport report_;
    std::map<std::string, std::shared_ptr<SpaceModel>> user_spaces_;
    std::map<std::string, std::map<std::string, ClassExpr>> user_classes_;
    std::map<std::string, EvalCone> cones_;
    const SpaceModel* default_space_ = nullptr;

    [[noreturn]] static void error(const SourcePosition& pos, const std::string& msg,
                                   ErrorKind kind = ErrorKind::NameResolutionError) {
        throw ScenarioError(kind, pos, msg);
    }

    static bool is_builtin(const std::string& name) {
        for (const auto& n : builtin_space_names())
            if (n == name) return true;
        return false;
    }

    const SpaceModel& space(const std::string& name, const SourcePosition& pos) {
        auto it = user_spaces_.find(name);
        if (it != user_spaces_.end()) return *it->second;
        if (is_builtin(name)) return builtin_space(name);
        error(pos, "unknown space '" + name + "'", ErrorKind::UnknownSpace);
    }

    ClassExpr eval(const Expr& e, const SpaceModel* sp) {
        return eval_with(e, [&](const Expr& n) -> ClassExpr {
            if (!sp) {
                if (cones_.count(n.name)) error(n.pos, "'" + n.name + "' is a cone, not a class");
                error(n.pos, "'" + n.name + "' used outside of any space (prefix the assertion with 'SPACE:')");
            }
            auto uc = user_classes_.find(sp->name);
            if (uc != user_classes_.end()) {
                auto it = uc->second.find(n.name);
                if (it != uc->second.end()) return it->second;
            }
            if (sp->knows(n.name)) return sp->resolve(n.name);
            if (cones_.count(n.name)) error(n.pos, "'" + n.name + "' is a cone, not a class");
            error(n.pos, "'" + n.name + "' is not defined in space " + sp->name);
        });
    }

    bool symbol_taken(const SpaceModel& sp, const std::string& name) {
        if (sp.knows(name)) return true;
        auto uc = user_classes_.find(sp.name);
        return uc != user_classes_.end() && uc->second.count(name);
    }

    RationalVector cone_vector(const ClassExpr& x, const SpaceModel& sp, const SourcePosition& pos) {
        try {
            return cone_coordinates(x, sp);
        } catch (const ScenarioError&) {
            throw;
        } catch (const Error& e) {
            throw ScenarioError(e.kind(), pos, e.what());
        }
    }

    EvalCone cone(const ConeExpr& c, const SpaceModel* context) {
        switch (c.kind) {
            case ConeExpr::Kind::Named: {
                auto it = cones_.find(c.name);
                if (it == cones_.end()) error(c.pos, "unknown cone '" + c.name + "'");
                return it->second;
            }
            case ConeExpr::Kind::Dual: {
                EvalCone inner = cone(*c.inner, context);
                return {dual_cone(inner.cone), inner.space};
            }
            case ConeExpr::Kind::Inline: {
                const SpaceModel* sp = c.under ? &space(*c.under, c.pos) : context;
                if (!sp) error(c.pos, "cone has no space; add 'under NAME' or a 'use' statement");
                std::vector<RationalVector> vecs;
                for (const auto& g : c.generators) vecs.push_back(cone_vector(eval(*g, sp), *sp, g->pos));
                std::size_t dim = vecs.empty() ? pullback_basis().size() : vecs.front().size();
                for (std::size_t i = 0; i < vecs.size(); ++i)
                    if (vecs[i].size() != dim)
                        error(c.generators[i]->pos, "cone generators live in different degrees",
                              ErrorKind::DimensionMismatch);
                return {Cone::from_vectors(dim, vecs), sp};
            }
        }
        error(c.pos, "malformed cone");
    }

    void handle(const RingDef& r) {
        if (is_builtin(r.name) || user_spaces_.count(r.name))
            error(r.pos, "space name '" + r.name + "' is already defined");
        Presentation p;
        p.generators = r.generators;
        std::set<std::string> names;
        for (const auto& g : r.generators) names.insert(g.name);
        Resolver gens_only = [&](const Expr& n) -> ClassExpr {
            if (!names.count(n.name)) error(n.pos, "'" + n.name + "' is not a generator of ring " + r.name);
            return ClassExpr::var(n.name);
        };
        for (const auto& rel : r.relations) p.relations.push_back(eval_with(*rel, gens_only));
        p.top_degree = r.top;
        Rational scale = r.scale.value_or(Rational(1));
        for (const auto& [m, v] : r.integral) p.integral_spec.emplace_back(m, v * scale);
        auto sp = std::make_shared<SpaceModel>();
        sp->name = r.name;
        sp->algebra = std::make_shared<GradedAlgebra>(build_algebra(std::move(p)));
        user_spaces_.emplace(r.name, std::move(sp));
    }

    void handle(const ClassDef& c) {
        const SpaceModel& sp = space(c.space, c.pos);
        if (symbol_taken(sp, c.name)) error(c.pos, "'" + c.name + "' is already defined in space " + sp.name);
        ClassExpr x = eval(*c.expr, &sp);
        user_classes_[sp.name].emplace(c.name, std::move(x));
    }

    void handle(const ConeDef& c) {
        if (cones_.count(c.name)) error(c.pos, "cone '" + c.name + "' is already defined");
        cones_.emplace(c.name, cone(c.cone, default_space_));
    }

    void handle(const UseStmt& u) { default_space_ = &space(u.space, u.pos); }

    void handle(const Assertion& a) {
        const SpaceModel* sp = a.space ? &space(*a.space, a.pos) : default_space_;
        const Check& c = a.check;
        AssertionRecord rec;
        rec.pos = a.pos;
        rec.desc = (a.space ? *a.space + ": " : std::string()) + print(c);
        auto boolean = [&](bool value) {
            rec.computed = value ? "true" : "false";
            rec.expected = c.negated ? "false" : "true";
        };
        switch (c.kind) {
            case Check::Kind::Equal: {
                ClassExpr l = eval(*c.lhs, sp), r = eval(*c.rhs, sp);
                if (l.is_constant() && r.is_constant()) {
                    rec.numeric = true;
                    rec.computed = l.constant_term().fraction_str();
                    rec.expected = r.constant_term().fraction_str();
                } else if (l.is_constant() || r.is_constant()) {
                    auto value = [&](const ClassExpr& x) {
                        return x.is_constant() ? x.constant_term() : integrate(*sp->algebra, x);
                    };
                    rec.numeric = true;
                    rec.computed = value(l).fraction_str();
                    rec.expected = value(r).fraction_str();
                } else {
                    rec.computed = normal_form(*sp->algebra, l).str();
                    rec.expected = normal_form(*sp->algebra, r).str();
                }
                break;
            }
            case Check::Kind::Member: {
                EvalCone k = cone(c.cone, sp);
                RationalVector v = cone_vector(eval(*c.lhs, k.space), *k.space, c.lhs->pos);
                if (v.size() != k.cone.ambient_dim())
                    error(c.lhs->pos, "vector does not live in the cone's space", ErrorKind::DimensionMismatch);
                boolean(membership(k.cone, v).inside);
                break;
            }
            case Check::Kind::Extremal: {
                EvalCone k = cone(c.cone, sp);
                RationalVector v = cone_vector(eval(*c.lhs, k.space), *k.space, c.lhs->pos);
                if (v.size() != k.cone.ambient_dim())
                    error(c.lhs->pos, "vector does not live in the cone's space", ErrorKind::DimensionMismatch);
                bool zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
                if (zero) {
                    boolean(false);
                    break;
                }
                Ray r = canonicalize_ray(v);
                auto rays = k.cone.rays();
                auto it = std::find(rays.begin(), rays.end(), r);
                std::vector<RationalVector> gens = k.cone.ray_vectors();
                std::size_t idx = static_cast<std::size_t>(it - rays.begin());
                if (it == rays.end()) gens.push_back(r.to_vector());
                boolean(is_extremal_generator(gens, idx).extremal);
                break;
            }
            case Check::Kind::Simplicial: boolean(is_simplicial(cone(c.cone, sp).cone)); break;
            case Check::Kind::Fixed: {
                if (!sp) error(a.pos, "'fixed' needs a space");
                auto it = sp->actions.find(c.action);
                if (it == sp->actions.end()) error(a.pos, "space " + sp->name + " has no action '" + c.action + "'");
                ClassExpr x = eval(*c.lhs, sp);
                bool fixed = true;
                for (const auto& h : it->second.generators)
                    fixed = fixed && normal_form(*sp->algebra, substitute(h, x) - x).is_zero();
                boolean(fixed);
                break;
            }
            case Check::Kind::ConeEqual: {
                EvalCone l = cone(c.cone, sp), r = cone(c.cone2, sp);
                rec.computed = extremal_part(l.cone).str();
                rec.expected = extremal_part(r.cone).str();
                break;
            }
            case Check::Kind::Relation: {
                if (!sp) error(a.pos, "'relation' needs a space");
                std::vector<RationalVector> vecs;
                for (const auto& item : c.items) vecs.push_back(cone_vector(eval(*item, sp), *sp, item->pos));
                rec.computed = vector_str(unique_relation(vecs));
                rec.expected = vector_str(c.relation);
                break;
            }
        }
        rec.pass = rec.computed == rec.expected;
        report_.records.push_back(std::move(rec));
    }
};

}  // namespace

RationalVector cone_coordinates(const ClassExpr& x, const SpaceModel& sp) {
    const GradedAlgebra& a = *sp.algebra;
    std::vector<ClassExpr> cols;
    for (const auto& n : pullback_basis())
        if (const auto* e = sp.find(n)) cols.push_back(e->expr);
    if (cols.size() == pullback_basis().size()) {
        if (x.is_zero()) return RationalVector(cols.size());
        auto d = a.homogeneous_degree(x);
        bool same_degree = d.has_value();
        for (const auto& c : cols) same_degree = same_degree && a.homogeneous_degree(c) == d;
        if (same_degree) {
            Matrix m(a.dimension(*d), cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j) {
                auto cv = a.coordinates(cols[j], *d);
                for (std::size_t i = 0; i < cv.size(); ++i) m(i, j) = cv[i];
            }
            if (auto sol = solve(m, a.coordinates(x, *d))) return *sol;
        }
        return pairing_vector(sp, x, cols);
    }
    if (x.is_zero()) fail(ErrorKind::DegreeMismatch, "zero class has no coordinate degree in space " + sp.name);
    auto d = a.homogeneous_degree(x);
    if (!d) fail(ErrorKind::DegreeMismatch, "cone generator '" + x.str() + "' is not homogeneous");
    return a.coordinates(x, *d);
}

ClassExpr evaluate_expression(const Expr& e, const SpaceModel& space) {
    return eval_with(e, [&](const Expr& n) -> ClassExpr {
        if (!space.knows(n.name))
            throw ScenarioError(ErrorKind::NameResolutionError, n.pos,
                                "'" + n.name + "' is not defined in space " + space.name);
        return space.resolve(n.name);
    });
}

ScenarioReport evaluate(const ScenarioAST& ast) {
    auto start = std::chrono::steady_clock::now();
    ScenarioReport rep = Evaluator().run(ast);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

ScenarioReport check_text(std::string_view text, const std::string& file) { return evaluate(parse(text, file)); }

}  // namespace ilab
