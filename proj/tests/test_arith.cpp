#include "ilab/error.hpp"
#include "ilab/level.hpp"
#include "ilab/linalg.hpp"
#include "ilab/rational.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace ilab;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an ilab::Error");
    return ErrorKind::InvalidArgument;
}

// Cusps of the principal level-n subgroup counted as +-classes of vectors of exact order n in (Z/n)^2.
// Each class has two members for n > 2; for n <= 2 the count is taken as written (halved).
Rational cusp_oracle(unsigned n) {
    long count = 0;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned c = 0; c < n; ++c)
            if (std::gcd(std::gcd(a, c), n) == 1) ++count;
    return Rational(count, 2);
}

long sl2_oracle(unsigned n) {
    long count = 0;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned d = 0; d < n; ++d)
                    if ((static_cast<long>(a * d) - static_cast<long>(b * c) - 1) % static_cast<long>(n) == 0) ++count;
    return count;
}

// n^3 prod (1 - 1/p^2) via trial factorization.
Integer sl2_formula(unsigned n) {
    Rational r(static_cast<long>(n) * n * n);
    unsigned m = n;
    for (unsigned p = 2; p <= m; ++p) {
        if (m % p) continue;
        r *= Rational(static_cast<long>(p) * p - 1, static_cast<long>(p) * p);
        while (m % p == 0) m /= p;
    }
    REQUIRE(r.is_integer());
    return r.num();
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(q("1/24").str() == "1/24");
    CHECK(q("-2/4").str() == "-1/2");
    CHECK(q("6/3").str() == "2");
    CHECK(q("6/3").fraction_str() == "2/1");
    CHECK(q("0").fraction_str() == "0/1");
    CHECK(q("+7").str() == "7");
    CHECK(kind_of([] { q("1/0"); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { q("1.5"); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { q(""); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { q("1/-2"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(q("1/3") + q("1/6") == q("1/2"));
    CHECK(q("1/24") * 48 == 2);
    CHECK(q("-11/12") / q("-1/24") == 22);
    CHECK(q("2/3").pow(3) == q("8/27"));
    CHECK((q("-3/4")).abs() == q("3/4"));
    CHECK(q("1/1152") < q("1/576"));
    CHECK(q("-1/8").sign() == -1);
    CHECK(kind_of([] { (void)(q("1") / Rational(0)); }) == ErrorKind::InvalidArgument);
    Rational big(Integer("123456789012345678901234567890"), Integer(7));
    CHECK((big * 7).str() == "123456789012345678901234567890");
}

TEST_CASE("row reduction, rank, kernel and solve") {
    Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(m) == 2);
    auto ker = kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == RationalVector{-1, -1, 1});
    auto x = solve(m, {6, 12, 2});
    REQUIRE(x);
    CHECK(dot(m.row(0), *x) == 6);
    CHECK(dot(m.row(2), *x) == 2);
    CHECK_FALSE(solve(m, {1, 0, 0}));

    Matrix e(0, 4);
    CHECK(rank(e) == 0);
    CHECK(kernel(e).size() == 4);

    Matrix r = Matrix::from_rows({{0, 2, 4}, {1, 1, 1}}, 3);
    auto piv = rref(r);
    CHECK(piv == std::vector<std::size_t>{0, 1});
    CHECK(r.row(0) == RationalVector{1, 0, -1});
    CHECK(r.row(1) == RationalVector{0, 1, 2});
}

TEST_CASE("cusp count matches enumeration of primitive vectors") {
    CHECK(cusp_count(3) == 4);
    CHECK(cusp_count(4) == 6);
    CHECK(cusp_count(5) == 12);
    for (unsigned n = 1; n <= 12; ++n) CHECK_MESSAGE(cusp_count(n) == cusp_oracle(n), "n = " << n);
    CHECK(kind_of([] { cusp_count(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("group orders") {
    CHECK(group_order(GroupKind::SL2, 2) == 6);
    CHECK(group_order(GroupKind::H, 3) == 1944);
    for (unsigned n = 1; n <= 6; ++n) CHECK_MESSAGE(group_order(GroupKind::SL2, n) == sl2_oracle(n), "n = " << n);
    for (unsigned n = 1; n <= 50; ++n) {
        Integer sl2 = sl2_formula(n);
        Integer nn = n;
        CHECK(group_order(GroupKind::SL2, n) == sl2);
        CHECK(Rational(group_order(GroupKind::SL2, n)) == Rational(2 * n) * cusp_count(n));
        CHECK(group_order(GroupKind::G, n) == sl2 * nn * nn);
        CHECK(Rational(group_order(GroupKind::G, n)) == Rational(2) * Rational(Integer(nn * nn * nn)) * cusp_count(n));
        CHECK(group_order(GroupKind::H, n) == sl2 * nn * nn * nn * nn);
        CHECK(Rational(group_order(GroupKind::SP_stab, n)) == Rational(16) * Rational(Integer(nn * nn)) * cusp_count(n));
    }
}

TEST_CASE("cusp count is multiplicative up to the n^2 scaling") {
    for (unsigned m = 1; m <= 12; ++m)
        for (unsigned n = 1; n <= 12; ++n) {
            if (std::gcd(m, n) != 1) continue;
            // t(n) = n^2/2 * phi2(n), phi2 multiplicative
            Rational phi_mn = cusp_count(m * n) * 2 / Rational(m * m * n * n);
            Rational phi_m = cusp_count(m) * 2 / Rational(m * m);
            Rational phi_n = cusp_count(n) * 2 / Rational(n * n);
            CHECK(phi_mn == phi_m * phi_n);
        }
}

TEST_CASE("level cover numbers are independent of n") {
    for (unsigned n = 3; n <= 9; ++n) {
        auto v = level_cover_numbers(n);
        CHECK(v.zero_section_square == q("-1/24"));
        CHECK(v.zero_section_fiber == q("1/2"));
        CHECK(v.hodge_z1_z2 == q("1/24"));
        CHECK(v.diagonal_cube == q("-1/2"));
        CHECK(v.exceptional_antidiag == q("1/2"));
        CHECK(section_self_intersection(n) == -Rational(n, 12) * cusp_count(n));
    }
}

TEST_CASE("parametric polynomials") {
    ParamPoly n = ParamPoly::n(), t = ParamPoly::t();
    ParamPoly p = (n + 1) * (n - 1);
    CHECK(p == n * n - 1);
    CHECK(p.evaluate(3, 5) == 8);
    CHECK((n * n * t * 3).divide_by_monomial(6, 2, 1) == ParamPoly(q("1/2")));
    CHECK(kind_of([&] { (n + t).divide_by_monomial(1, 1, 0); }) == ErrorKind::ParameterNotCancelled);
    CHECK(kind_of([&] { (n * t).constant_value(); }) == ErrorKind::ParameterNotCancelled);
    CHECK(ParamPoly(q("2/3")).constant_value() == q("2/3"));
}

TEST_CASE("surface class products on the S_P surface") {
    SurfaceClass S = SurfaceClass::S(), N = SurfaceClass::N();
    CHECK((S * N).integral() == ParamPoly(1));
    CHECK((S * S).integral().is_zero());
    CHECK((N * N).integral().is_zero());
    CHECK(((S + N) * (S + N)).integral() == ParamPoly(2));
}

TEST_CASE("S_P pairing row cancels n and t") {
    SpRow r = sp_pairing_row();
    CHECK(r.LL == 0);
    CHECK(r.LD == q("-1/96"));
    CHECK(r.DD == q("-1/4"));
    CHECK(r.LM == q("1/96"));
    CHECK(r.MM == 0);
    CHECK(r.beta2 == q("-1/8"));
    CHECK(r.basis_row() == RationalVector{0, q("1/96"), 0, q("-1/8")});

    SpBookkeeping bad = SpBookkeeping::standard();
    bad.branching = 1;
    CHECK(kind_of([&] { sp_pairing_row(bad); }) == ErrorKind::ParameterNotCancelled);
}
