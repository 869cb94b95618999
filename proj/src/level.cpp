#include "ilab/level.hpp"

#include "ilab/error.hpp"

namespace ilab {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

void require_positive(unsigned n) {
    if (n == 0) fail(ErrorKind::InvalidArgument, "level must be a positive integer");
}

}  // namespace

Rational cusp_count(unsigned n) {
    require_positive(n);
    Rational t = Rational(static_cast<long>(n) * static_cast<long>(n), 2);
    for (unsigned p : prime_divisors(n)) {
        Rational pp = Rational(static_cast<long>(p)).pow(2);
        t *= Rational(1) - Rational(1) / pp;
    }
    return t;
}

Integer group_order(GroupKind kind, unsigned n) {
    require_positive(n);
    Rational t = cusp_count(n);
    Rational nn(static_cast<long>(n));
    Rational r;
    switch (kind) {
        case GroupKind::SL2: r = 2 * nn * t; break;
        case GroupKind::G: r = 2 * nn.pow(3) * t; break;
        case GroupKind::H: r = 2 * nn.pow(5) * t; break;
        case GroupKind::SP_stab: r = 16 * nn.pow(2) * t; break;
    }
    if (!r.is_integer()) fail(ErrorKind::InvalidArgument, "group order is not an integer");
    return r.num();
}

Rational section_self_intersection(unsigned n) {
    return -Rational(static_cast<long>(n), 12) * cusp_count(n);
}

LevelCoverNumbers level_cover_numbers(unsigned n) {
    require_positive(n);
    Rational nn(static_cast<long>(n));
    Rational t = cusp_count(n);
    Rational G(group_order(GroupKind::G, n));
    Rational H(group_order(GroupKind::H, n));
    Rational psl = Rational(group_order(GroupKind::SL2, n)) / 2;
    LevelCoverNumbers out;
    // n^2 disjoint sections.
    out.zero_section_square = nn.pow(2) * section_self_intersection(n) / G;
    out.zero_section_fiber = psl * nn.pow(2) / G;
    // 12L is n t(n) fibers; n^4 section pairs.
    out.hodge_z1_z2 = Rational(1, 12) * nn * t * nn.pow(4) / H;
    out.diagonal_cube = -nn.pow(3) * nn.pow(2) * t / H;
    out.exceptional_antidiag = nn.pow(3) * nn.pow(2) * t / H;
    return out;
}

ParamPoly::ParamPoly(const Rational& c) { add({0, 0}, c); }

ParamPoly ParamPoly::monomial(const Rational& c, unsigned n_exp, unsigned t_exp) {
    ParamPoly p;
    p.add({n_exp, t_exp}, c);
    return p;
}

void ParamPoly::add(std::pair<unsigned, unsigned> e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::pair<unsigned, unsigned>{0, 0});
}

Rational ParamPoly::constant_value() const {
    if (!is_constant())
        fail(ErrorKind::ParameterNotCancelled, "value still depends on the level parameters: " + str());
    return terms_.empty() ? Rational() : terms_.begin()->second;
}

Rational ParamPoly::evaluate(const Rational& n, const Rational& t) const {
    Rational s;
    for (const auto& [e, c] : terms_) s += c * n.pow(e.first) * t.pow(e.second);
    return s;
}

ParamPoly ParamPoly::divide_by_monomial(const Rational& c, unsigned n_exp, unsigned t_exp) const {
    if (c.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero");
    ParamPoly out;
    for (const auto& [e, v] : terms_) {
        if (e.first < n_exp || e.second < t_exp)
            fail(ErrorKind::ParameterNotCancelled, "term of " + str() + " is not divisible by n^" +
                                                       std::to_string(n_exp) + " t^" + std::to_string(t_exp));
        out.add({e.first - n_exp, e.second - t_exp}, v / c);
    }
    return out;
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& m) const {
    if (m.terms_.size() != 1) fail(ErrorKind::InvalidArgument, "divisor must be a single term");
    const auto& [e, c] = *m.terms_.begin();
    return divide_by_monomial(c, e.first, e.second);
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        if (e.first) s += "*n^" + std::to_string(e.first);
        if (e.second) s += "*t^" + std::to_string(e.second);
    }
    return s;
}

SurfaceClass operator+(const SurfaceClass& a, const SurfaceClass& b) {
    return {a.c0 + b.c0, a.cS + b.cS, a.cN + b.cN, a.cSN + b.cSN};
}

SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b) {
    return {a.c0 - b.c0, a.cS - b.cS, a.cN - b.cN, a.cSN - b.cSN};
}

SurfaceClass operator*(const SurfaceClass& a, const SurfaceClass& b) {
    return {a.c0 * b.c0, a.c0 * b.cS + a.cS * b.c0, a.c0 * b.cN + a.cN * b.c0,
            a.c0 * b.cSN + a.cSN * b.c0 + a.cS * b.cN + a.cN * b.cS};
}

SurfaceClass operator*(const ParamPoly& c, const SurfaceClass& a) {
    return {c * a.c0, c * a.cS, c * a.cN, c * a.cSN};
}

SpBookkeeping SpBookkeeping::standard() {
    const ParamPoly n = ParamPoly::n(), t = ParamPoly::t();
    SpBookkeeping b;
    // Unbranched restrictions of the boundary components meeting the surface.
    b.boundary_divisors = {SurfaceClass::S(-2), SurfaceClass::S(-2), SurfaceClass::S(1), SurfaceClass::S(1),
                           SurfaceClass::N(t)};
    b.twelve_hodge = SurfaceClass::N(n * t);
    b.branching = n;
    b.stabilizer_order = ParamPoly::monomial(16, 2, 1);
    return b;
}

SpRow sp_pairing_row(const SpBookkeeping& data) {
    SurfaceClass L = ParamPoly(Rational(1, 12)) * data.twelve_hodge;
    SurfaceClass D;
    for (const auto& d : data.boundary_divisors) D = D + d;
    SurfaceClass bD = data.branching * D;
    SurfaceClass M = data.twelve_hodge - bD;
    SurfaceClass pairs;
    for (std::size_t i = 0; i < data.boundary_divisors.size(); ++i)
        for (std::size_t j = i + 1; j < data.boundary_divisors.size(); ++j)
            pairs = pairs + data.boundary_divisors[i] * data.boundary_divisors[j];
    SurfaceClass beta2 = (data.branching * data.branching) * pairs;

    auto value = [&](const SurfaceClass& x) {
        return x.integral().divide_exact(data.stabilizer_order).constant_value();
    };
    SpRow row;
    row.LL = value(L * L);
    row.LD = value(L * bD);
    row.DD = value(bD * bD);
    row.LM = value(L * M);
    row.MM = value(M * M);
    row.beta2 = value(beta2);
    return row;
}

}  // namespace ilab
