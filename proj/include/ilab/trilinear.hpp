#pragma once

#include "ilab/algebra.hpp"

#include <vector>

namespace ilab {

// One table cell: integral of quadratic * column.
struct TrilinearEntry {
    ClassExpr quadratic;
    ClassExpr column;
    Rational value;
};

// Symmetric trilinear form on a space of divisors, stored as a free algebra truncated above degree 3.
class TrilinearSpace {
public:
    // Solves for all cubic monomial values; the entries must be consistent and determine every value.
    static TrilinearSpace from_entries(const std::vector<std::string>& divisors,
                                       const std::vector<TrilinearEntry>& entries);

    const GradedAlgebra& algebra() const { return algebra_; }
    const std::vector<std::string>& divisors() const { return divisors_; }

    Rational triple(const ClassExpr& a, const ClassExpr& b, const ClassExpr& c) const;
    Rational pair_quadratic(const ClassExpr& q, const ClassExpr& d) const;
    Rational value(const Monomial& m) const { return integrate(algebra_, ClassExpr(m)); }

    void require_degree(const ClassExpr& x, int degree) const;

private:
    std::vector<std::string> divisors_;
    GradedAlgebra algebra_;
};

}  // namespace ilab
