#include "ilab/algebra.hpp"

#include "ilab/error.hpp"

#include <algorithm>
#include <set>

namespace ilab {

namespace {

using Exponents = std::vector<unsigned>;

// Higher powers of later generators come first.
bool exps_before(const Exponents& a, const Exponents& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

void enumerate(const std::vector<GeneratorSpec>& gens, std::size_t i, int remaining, Exponents& cur,
               std::vector<Exponents>& out) {
    if (i == gens.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (unsigned e = 0; static_cast<int>(e) * gens[i].degree <= remaining; ++e) {
        cur[i] = e;
        enumerate(gens, i + 1, remaining - static_cast<int>(e) * gens[i].degree, cur, out);
    }
    cur[i] = 0;
}

Monomial to_monomial(const std::vector<GeneratorSpec>& gens, const Exponents& e) {
    std::vector<std::pair<std::string, unsigned>> f;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (e[i]) f.emplace_back(gens[i].name, e[i]);
    return Monomial(std::move(f));
}

}  // namespace

int GradedAlgebra::generator_degree(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) fail(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
    return pres_.generators[it->second].degree;
}

void GradedAlgebra::check_known(const Monomial& m) const {
    for (const auto& [n, e] : m.factors())
        if (!index_.count(n)) fail(ErrorKind::UnknownGenerator, "unknown generator '" + n + "'");
}

int GradedAlgebra::degree(const Monomial& m) const {
    int d = 0;
    for (const auto& [n, e] : m.factors()) d += static_cast<int>(e) * generator_degree(n);
    return d;
}

std::optional<int> GradedAlgebra::homogeneous_degree(const ClassExpr& x) const {
    std::optional<int> d;
    for (const auto& [m, c] : x.terms()) {
        int dm = degree(m);
        if (d && *d != dm) return std::nullopt;
        d = dm;
    }
    return d;
}

const std::vector<Monomial>& GradedAlgebra::monomials(int d) const {
    if (d < 0 || d > top_degree()) fail(ErrorKind::IndexOutOfRange, "degree out of range");
    return pieces_[static_cast<std::size_t>(d)].monomials;
}

const std::vector<Monomial>& GradedAlgebra::basis(int d) const {
    if (d < 0 || d > top_degree()) fail(ErrorKind::IndexOutOfRange, "degree out of range");
    return pieces_[static_cast<std::size_t>(d)].basis;
}

RationalVector GradedAlgebra::coordinates(const ClassExpr& x, int d) const {
    const Piece& piece = pieces_.at(static_cast<std::size_t>(d));
    RationalVector v(piece.basis.size());
    for (const auto& [m, c] : x.terms()) {
        if (degree(m) != d) continue;
        const auto& red = piece.reduction.at(m);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!red[i].is_zero()) v[i] += c * red[i];
    }
    return v;
}

ClassExpr GradedAlgebra::from_coordinates(const RationalVector& v, int d) const {
    const auto& b = basis(d);
    if (v.size() != b.size()) fail(ErrorKind::DimensionMismatch, "coordinate vector length mismatch");
    ClassExpr out;
    for (std::size_t i = 0; i < v.size(); ++i) out.add_term(b[i], v[i]);
    return out;
}

bool GradedAlgebra::precedes(const Monomial& a, const Monomial& b) const {
    Exponents ea(pres_.generators.size()), eb(pres_.generators.size());
    for (const auto& [n, e] : a.factors()) ea[index_.at(n)] = e;
    for (const auto& [n, e] : b.factors()) eb[index_.at(n)] = e;
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return exps_before(ea, eb);
}

GradedAlgebra build_algebra(Presentation p) {
    GradedAlgebra a;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        const auto& g = p.generators[i];
        if (g.degree < 1)
            fail(ErrorKind::InvalidArgument, "generator '" + g.name + "' must have positive degree");
        if (!a.index_.emplace(g.name, i).second)
            fail(ErrorKind::DuplicateGenerator, "duplicate generator '" + g.name + "'");
    }
    if (p.top_degree < 0) fail(ErrorKind::InvalidArgument, "top degree must be nonnegative");
    a.pres_ = std::move(p);
    const auto& gens = a.pres_.generators;

    std::vector<std::pair<ClassExpr, int>> rels;
    for (const auto& r : a.pres_.relations) {
        for (const auto& [m, c] : r.terms()) a.check_known(m);
        if (r.is_zero()) continue;
        auto d = a.homogeneous_degree(r);
        if (!d) fail(ErrorKind::NonHomogeneousRelation, "relation '" + r.str() + "' is not homogeneous");
        if (*d == 0) fail(ErrorKind::NonHomogeneousRelation, "relation '" + r.str() + "' is a nonzero constant");
        if (*d <= a.pres_.top_degree) rels.emplace_back(r, *d);
    }

    for (int d = 0; d <= a.pres_.top_degree; ++d) {
        GradedAlgebra::Piece piece;
        std::vector<Exponents> exps;
        Exponents cur(gens.size());
        enumerate(gens, 0, d, cur, exps);
        std::sort(exps.begin(), exps.end(), exps_before);
        std::map<Monomial, std::size_t> col;
        for (const auto& e : exps) {
            col.emplace(to_monomial(gens, e), piece.monomials.size());
            piece.monomials.push_back(to_monomial(gens, e));
        }
        Matrix rows(0, piece.monomials.size());
        for (const auto& [r, e] : rels) {
            if (e > d) continue;
            for (const auto& m : a.pieces_[static_cast<std::size_t>(d - e)].monomials) {
                RationalVector row(piece.monomials.size());
                for (const auto& [rm, c] : r.terms()) row[col.at(rm * m)] += c;
                rows.append_row(row);
            }
        }
        std::vector<std::size_t> pivots = rows.rows() ? rref(rows) : std::vector<std::size_t>{};
        std::vector<std::ptrdiff_t> pivot_row(piece.monomials.size(), -1);
        for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<std::ptrdiff_t>(i);
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < piece.monomials.size(); ++c)
            if (pivot_row[c] < 0) free_cols.push_back(c);
        for (auto c : free_cols) piece.basis.push_back(piece.monomials[c]);
        for (std::size_t c = 0; c < piece.monomials.size(); ++c) {
            RationalVector v(free_cols.size());
            if (pivot_row[c] < 0) {
                v[static_cast<std::size_t>(std::find(free_cols.begin(), free_cols.end(), c) - free_cols.begin())] = 1;
            } else {
                auto r = static_cast<std::size_t>(pivot_row[c]);
                for (std::size_t j = 0; j < free_cols.size(); ++j) v[j] = -rows(r, free_cols[j]);
            }
            piece.reduction.emplace(piece.monomials[c], std::move(v));
        }
        a.pieces_.push_back(std::move(piece));
    }

    const int top = a.pres_.top_degree;
    const std::size_t dim = a.pieces_.back().basis.size();
    if (a.pres_.integral_spec.empty())
        fail(ErrorKind::UnderdeterminedIntegral, "integral specification is empty");
    Matrix eqs(0, dim);
    RationalVector rhs;
    for (const auto& [m, value] : a.pres_.integral_spec) {
        a.check_known(m);
        if (a.degree(m) != top)
            fail(ErrorKind::InconsistentIntegral,
                 "integral given on '" + m.str() + "', which is not of top degree " + std::to_string(top));
        eqs.append_row(a.coordinates(ClassExpr(m), top));
        rhs.push_back(value);
    }
    auto sol = solve(eqs, rhs);
    if (!sol) fail(ErrorKind::InconsistentIntegral, "integral values contradict the relations");
    if (rank(eqs) < dim)
        fail(ErrorKind::UnderdeterminedIntegral,
             "integral values leave " + std::to_string(dim - rank(eqs)) + " top-degree directions free");
    a.integral_ = std::move(*sol);

    for (const auto& [r, e] : rels)
        for (const auto& m : a.pieces_[static_cast<std::size_t>(top - e)].monomials)
            if (!integrate(a, r * ClassExpr(m)).is_zero())
                fail(ErrorKind::InconsistentIntegral, "relation multiple '" + m.str() + "*(" + r.str() +
                                                          ")' has nonzero integral");
    return a;
}

ClassExpr normal_form(const GradedAlgebra& a, const ClassExpr& x) {
    std::set<int> degrees;
    for (const auto& [m, c] : x.terms()) {
        int d = a.degree(m);
        if (d <= a.top_degree()) degrees.insert(d);
    }
    ClassExpr out;
    for (int d : degrees) out += a.from_coordinates(a.coordinates(x, d), d);
    return out;
}

Rational integrate(const GradedAlgebra& a, const ClassExpr& x) {
    for (const auto& [m, c] : x.terms()) a.degree(m);
    return dot(a.coordinates(x, a.top_degree()), a.integral_values());
}

ClassExpr multiply(const GradedAlgebra& a, const ClassExpr& x, const ClassExpr& y) {
    return normal_form(a, x * y);
}

Rational intersection_number(const GradedAlgebra& a, const std::vector<ClassExpr>& factors) {
    if (factors.empty()) fail(ErrorKind::InvalidArgument, "intersection_number needs at least one factor");
    ClassExpr acc = normal_form(a, factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) acc = multiply(a, acc, normal_form(a, factors[i]));
    return integrate(a, acc);
}

GradedAlgebra trivial_algebra() {
    Presentation p;
    p.top_degree = 0;
    p.integral_spec.emplace_back(Monomial(), Rational(1));
    return build_algebra(std::move(p));
}

namespace {

void add_truncations(const GradedAlgebra& a, std::vector<ClassExpr>& rels) {
    const auto& gens = a.generators();
    int maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree);
    for (int d = a.top_degree() + 1; d <= a.top_degree() + maxdeg; ++d) {
        std::vector<Exponents> exps;
        Exponents cur(gens.size());
        enumerate(gens, 0, d, cur, exps);
        std::sort(exps.begin(), exps.end(), exps_before);
        for (const auto& e : exps) rels.emplace_back(to_monomial(gens, e));
    }
}

}  // namespace

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b, const Rational& scale) {
    if (scale.sign() <= 0) fail(ErrorKind::InvalidArgument, "tensor scale must be positive");
    Presentation p;
    for (const auto& g : a.generators()) p.generators.push_back(g);
    for (const auto& g : b.generators()) {
        if (a.has_generator(g.name))
            fail(ErrorKind::NameCollision, "generator '" + g.name + "' appears in both factors");
        p.generators.push_back(g);
    }
    p.relations = a.presentation().relations;
    p.relations.insert(p.relations.end(), b.presentation().relations.begin(), b.presentation().relations.end());
    add_truncations(a, p.relations);
    add_truncations(b, p.relations);
    p.top_degree = a.top_degree() + b.top_degree();
    const auto& ba = a.basis(a.top_degree());
    const auto& bb = b.basis(b.top_degree());
    for (std::size_t i = 0; i < ba.size(); ++i)
        for (std::size_t j = 0; j < bb.size(); ++j)
            p.integral_spec.emplace_back(ba[i] * bb[j], scale * a.integral_values()[i] * b.integral_values()[j]);
    return build_algebra(std::move(p));
}

Matrix pairing_matrix(const GradedAlgebra& a, const std::vector<ClassExpr>& rows,
                      const std::vector<ClassExpr>& cols) {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = intersection_number(a, {rows[i], cols[j]});
    return m;
}

AlgebraHom::AlgebraHom(std::vector<GeneratorSpec> source, std::map<std::string, ClassExpr> images)
    : source_(std::move(source)), images_(std::move(images)) {
    std::set<std::string> names;
    for (const auto& g : source_) {
        if (!names.insert(g.name).second)
            fail(ErrorKind::DuplicateGenerator, "duplicate generator '" + g.name + "'");
        if (!images_.count(g.name)) fail(ErrorKind::UnmappedGenerator, "no image given for '" + g.name + "'");
    }
    for (const auto& [n, img] : images_)
        if (!names.count(n)) fail(ErrorKind::UnknownGenerator, "image given for unknown generator '" + n + "'");
}

AlgebraHom AlgebraHom::checked(std::vector<GeneratorSpec> source, const GradedAlgebra& target,
                               std::map<std::string, ClassExpr> images) {
    AlgebraHom h(std::move(source), std::move(images));
    for (const auto& g : h.source_) {
        const ClassExpr& img = h.images_.at(g.name);
        if (img.is_zero()) continue;
        auto d = target.homogeneous_degree(img);
        if (!d || *d != g.degree)
            fail(ErrorKind::DegreeMismatch, "image of '" + g.name + "' is not homogeneous of degree " +
                                                std::to_string(g.degree));
    }
    return h;
}

AlgebraHom AlgebraHom::endomorphism(const GradedAlgebra& a, std::map<std::string, ClassExpr> moved) {
    for (const auto& g : a.generators()) moved.emplace(g.name, ClassExpr::var(g.name));
    return checked(a.generators(), a, std::move(moved));
}

const ClassExpr& AlgebraHom::image(const std::string& name) const {
    auto it = images_.find(name);
    if (it == images_.end()) fail(ErrorKind::UnmappedGenerator, "generator '" + name + "' is not mapped");
    return it->second;
}

ClassExpr substitute(const AlgebraHom& h, const ClassExpr& x) {
    ClassExpr out;
    for (const auto& [m, c] : x.terms()) {
        ClassExpr term(c);
        for (const auto& [n, e] : m.factors()) term *= h.image(n).pow(e);
        out += term;
    }
    return out;
}

std::vector<ClassExpr> invariant_subspace(const GradedAlgebra& a, const GroupAction& g, int degree) {
    for (const auto& h : g.generators) {
        if (h.source() != a.generators())
            fail(ErrorKind::ActionNotDegreePreserving, "action map is not defined on the algebra's generators");
        for (const auto& gen : h.source()) {
            const ClassExpr& img = h.image(gen.name);
            if (img.is_zero()) continue;
            auto d = a.homogeneous_degree(img);
            if (!d || *d != gen.degree)
                fail(ErrorKind::ActionNotDegreePreserving,
                     "action moves '" + gen.name + "' out of degree " + std::to_string(gen.degree));
        }
    }
    const auto& b = a.basis(degree);
    const std::size_t n = b.size();
    Matrix stacked(0, n);
    for (const auto& h : g.generators) {
        std::vector<RationalVector> cols;
        for (const auto& m : b) cols.push_back(a.coordinates(substitute(h, ClassExpr(m)), degree));
        for (std::size_t r = 0; r < n; ++r) {
            RationalVector row(n);
            for (std::size_t c = 0; c < n; ++c) row[c] = cols[c][r] - (r == c ? Rational(1) : Rational(0));
            stacked.append_row(row);
        }
    }
    std::vector<RationalVector> fixed;
    if (stacked.rows() == 0) {
        for (std::size_t i = 0; i < n; ++i) {
            RationalVector v(n);
            v[i] = 1;
            fixed.push_back(v);
        }
    } else {
        fixed = kernel(stacked);
    }
    std::vector<ClassExpr> out;
    if (fixed.empty()) return out;
    Matrix ech = Matrix::from_rows(fixed, n);
    auto piv = rref(ech);
    for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(a.from_coordinates(ech.row(i), degree));
    return out;
}

}  // namespace ilab
