#include "ilab/trilinear.hpp"

#include "ilab/error.hpp"

namespace ilab {

namespace {

Presentation free_cubic(const std::vector<std::string>& divisors) {
    Presentation p;
    for (const auto& d : divisors) p.generators.push_back({d, 1});
    p.top_degree = 3;
    return p;
}

}  // namespace

TrilinearSpace TrilinearSpace::from_entries(const std::vector<std::string>& divisors,
                                            const std::vector<TrilinearEntry>& entries) {
    Presentation scratch = free_cubic(divisors);
    std::vector<Monomial> cubics;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i; j < divisors.size(); ++j)
            for (std::size_t k = j; k < divisors.size(); ++k)
                cubics.push_back(Monomial::generator(divisors[i]) * Monomial::generator(divisors[j]) *
                                 Monomial::generator(divisors[k]));
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < cubics.size(); ++i) col.emplace(cubics[i], i);

    Matrix eqs(0, cubics.size());
    RationalVector rhs;
    auto of_degree = [](const ClassExpr& x, unsigned d) {
        for (const auto& [m, c] : x.terms()) {
            unsigned k = 0;
            for (const auto& f : m.factors()) k += f.second;
            if (k != d) return false;
        }
        return true;
    };
    for (const auto& e : entries) {
        if (!of_degree(e.quadratic, 2) || !of_degree(e.column, 1))
            fail(ErrorKind::DegreeMismatch, "table entry '" + e.quadratic.str() + "' x '" + e.column.str() +
                                                "' is not a quadratic against a divisor");
        ClassExpr prod = e.quadratic * e.column;
        RationalVector row(cubics.size());
        for (const auto& [m, c] : prod.terms()) {
            auto it = col.find(m);
            if (it == col.end())
                fail(ErrorKind::DegreeMismatch, "table entry '" + e.quadratic.str() + "' x '" + e.column.str() +
                                                    "' is not a cubic in the divisor basis");
            row[it->second] += c;
        }
        eqs.append_row(row);
        rhs.push_back(e.value);
    }
    auto sol = solve(eqs, rhs);
    if (!sol) fail(ErrorKind::InconsistentIntegral, "triple intersection table entries disagree");
    if (rank(eqs) < cubics.size())
        fail(ErrorKind::UnderdeterminedIntegral, "triple intersection table does not determine every cubic value");
    for (std::size_t i = 0; i < cubics.size(); ++i) scratch.integral_spec.emplace_back(cubics[i], (*sol)[i]);

    TrilinearSpace s;
    s.divisors_ = divisors;
    s.algebra_ = build_algebra(std::move(scratch));
    return s;
}

void TrilinearSpace::require_degree(const ClassExpr& x, int degree) const {
    if (x.is_zero()) return;
    auto d = algebra_.homogeneous_degree(x);
    if (!d || *d != degree) {
        if (degree == 1)
            fail(ErrorKind::NonDivisorClass, "'" + x.str() + "' is not a divisor class");
        fail(ErrorKind::DegreeMismatch, "'" + x.str() + "' is not homogeneous of degree " + std::to_string(degree));
    }
}

Rational TrilinearSpace::triple(const ClassExpr& a, const ClassExpr& b, const ClassExpr& c) const {
    for (const auto* x : {&a, &b, &c}) {
        for (const auto& name : x->generator_names())
            if (!algebra_.has_generator(name))
                fail(ErrorKind::NonDivisorClass, "'" + name + "' is not in the divisor basis");
        require_degree(*x, 1);
    }
    return integrate(algebra_, a * b * c);
}

Rational TrilinearSpace::pair_quadratic(const ClassExpr& q, const ClassExpr& d) const {
    for (const auto* x : {&q, &d})
        for (const auto& name : x->generator_names())
            if (!algebra_.has_generator(name))
                fail(ErrorKind::NonDivisorClass, "'" + name + "' is not in the divisor basis");
    if (!q.is_zero()) {
        auto dq = algebra_.homogeneous_degree(q);
        if (!dq || *dq != 2) fail(ErrorKind::DegreeMismatch, "'" + q.str() + "' is not quadratic");
    }
    if (!d.is_zero()) {
        auto dd = algebra_.homogeneous_degree(d);
        if (!dd || *dd != 1) fail(ErrorKind::DegreeMismatch, "'" + d.str() + "' is not linear");
    }
    return integrate(algebra_, q * d);
}

}  // namespace ilab
