#pragma once

#include "ilab/rational.hpp"

#include <compare>
#include <concepts>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ilab {

// Product of generators; entries sorted by name, exponents positive.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<std::string, unsigned>> factors);
    static Monomial generator(const std::string& name, unsigned exponent = 1);

    const std::vector<std::pair<std::string, unsigned>>& factors() const { return factors_; }
    unsigned exponent(const std::string& name) const;
    bool is_one() const { return factors_.empty(); }

    Monomial operator*(const Monomial& o) const;
    std::string str() const;  // "1", "L*Z", "D2^3"

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<std::string, unsigned>> factors_;
};

// Finite rational combination of monomials; zero coefficients are never stored.
class ClassExpr {
public:
    ClassExpr() = default;
    ClassExpr(const Rational& c);  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    ClassExpr(T c) : ClassExpr(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    ClassExpr(const Monomial& m, const Rational& c = 1);

    static ClassExpr var(const std::string& name) { return ClassExpr(Monomial::generator(name)); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    std::set<std::string> generator_names() const;

    void add_term(const Monomial& m, const Rational& c);

    ClassExpr operator-() const;
    ClassExpr& operator+=(const ClassExpr& o);
    ClassExpr& operator-=(const ClassExpr& o);
    ClassExpr& operator*=(const ClassExpr& o);
    friend ClassExpr operator+(ClassExpr a, const ClassExpr& b) { return a += b; }
    friend ClassExpr operator-(ClassExpr a, const ClassExpr& b) { return a -= b; }
    friend ClassExpr operator*(const ClassExpr& a, const ClassExpr& b);
    ClassExpr pow(unsigned k) const;

    friend bool operator==(const ClassExpr&, const ClassExpr&) = default;

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

inline ClassExpr var(const std::string& name) { return ClassExpr::var(name); }

}  // namespace ilab
