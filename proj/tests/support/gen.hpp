#pragma once

// Hand-rolled random generators for property tests. Fixed seeds keep runs reproducible.

#include "ilab/algebra.hpp"
#include "ilab/rational.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool coin() { return integer(0, 1) == 1; }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

    ilab::Rational rational(long bound = 9, long max_den = 6) {
        return ilab::Rational(integer(-bound, bound), integer(1, max_den));
    }
    ilab::Rational nonzero_rational(long bound = 9, long max_den = 6) {
        for (;;) {
            auto r = rational(bound, max_den);
            if (!r.is_zero()) return r;
        }
    }

    ilab::RationalVector vector(std::size_t dim, long bound = 5, long max_den = 3) {
        ilab::RationalVector v(dim);
        for (auto& x : v) x = rational(bound, max_den);
        return v;
    }

    // Random homogeneous class of degree d built from the algebra's monomials.
    ilab::ClassExpr homogeneous(const ilab::GradedAlgebra& a, int d, std::size_t max_terms = 3) {
        const auto& mons = a.monomials(d);
        ilab::ClassExpr x;
        if (mons.empty()) return x;
        std::size_t k = 1 + index(max_terms);
        for (std::size_t i = 0; i < k; ++i) x += ilab::ClassExpr(mons[index(mons.size())], rational());
        return x;
    }

    // Random class mixing degrees 0..top.
    ilab::ClassExpr mixed(const ilab::GradedAlgebra& a) {
        ilab::ClassExpr x;
        for (int d = 0; d <= a.top_degree(); ++d)
            if (coin()) x += homogeneous(a, d, 2);
        return x;
    }

    template <class T>
    void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), eng_); }

private:
    std::mt19937_64 eng_;
};

}  // namespace gen
