#pragma once

#include "ilab/rational.hpp"

#include <concepts>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ilab {

// Cusp count t(n) = n^2/2 * prod_{p | n} (1 - 1/p^2).
Rational cusp_count(unsigned n);

enum class GroupKind { SL2, G, H, SP_stab };

Integer group_order(GroupKind kind, unsigned n);

// Self-intersection of one section on the level-n universal curve: -(n/12) t(n).
Rational section_self_intersection(unsigned n);

// Numbers computed upstairs on level-n covers and divided by the deck group order.
struct LevelCoverNumbers {
    Rational zero_section_square;   // Z^2 on the universal curve
    Rational zero_section_fiber;    // Z . F with F = 12L
    Rational hodge_z1_z2;           // L Z1 Z2 on the fiber product
    Rational diagonal_cube;         // (strict transform of the diagonal)^3
    Rational exceptional_antidiag;  // E . antidiagonal
};

LevelCoverNumbers level_cover_numbers(unsigned n);

// Polynomial in the formal parameters n and t.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    ParamPoly(T c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    static ParamPoly monomial(const Rational& c, unsigned n_exp, unsigned t_exp);
    static ParamPoly n() { return monomial(1, 1, 0); }
    static ParamPoly t() { return monomial(1, 0, 1); }

    const std::map<std::pair<unsigned, unsigned>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Throws ParameterNotCancelled unless constant.
    Rational constant_value() const;
    Rational evaluate(const Rational& n, const Rational& t) const;

    // Exact division by c*n^a*t^b; every term must be divisible.
    ParamPoly divide_by_monomial(const Rational& c, unsigned n_exp, unsigned t_exp) const;
    // Division by a single-term polynomial.
    ParamPoly divide_exact(const ParamPoly& monomial) const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

    std::string str() const;

private:
    std::map<std::pair<unsigned, unsigned>, Rational> terms_;
    void add(std::pair<unsigned, unsigned> e, const Rational& c);
};

// Element c0 + cS S + cN N + cSN SN of the surface ring with S^2 = N^2 = 0, integral of SN = 1.
struct SurfaceClass {
    ParamPoly c0, cS, cN, cSN;

    static SurfaceClass S(const ParamPoly& c = 1) { return {{}, c, {}, {}}; }
    static SurfaceClass N(const ParamPoly& c = 1) { return {{}, {}, c, {}}; }

    ParamPoly integral() const { return cSN; }

    friend SurfaceClass operator+(const SurfaceClass& a, const SurfaceClass& b);
    friend SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b);
    friend SurfaceClass operator*(const SurfaceClass& a, const SurfaceClass& b);
    friend SurfaceClass operator*(const ParamPoly& c, const SurfaceClass& a);
    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

// Restriction data on the level-n surface and the order of its stabilizer.
struct SpBookkeeping {
    std::vector<SurfaceClass> boundary_divisors;  // unbranched restrictions of each boundary component
    SurfaceClass twelve_hodge;                    // 12 L restricted
    ParamPoly branching;                          // factor per boundary divisor in a product
    ParamPoly stabilizer_order;                   // single-term polynomial

    static SpBookkeeping standard();
};

struct SpRow {
    Rational LL, LD, DD, LM, MM, beta2;
    RationalVector basis_row() const { return {LL, LM, MM, beta2}; }
};

SpRow sp_pairing_row(const SpBookkeeping& data = SpBookkeeping::standard());

}  // namespace ilab
