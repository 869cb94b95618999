#include "ilab/cone.hpp"
#include "ilab/error.hpp"
#include "ilab/models.hpp"

#include <doctest.h>

#include <algorithm>
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

Rational det(std::vector<RationalVector> m) {
    if (m.size() == 1) return m[0][0];
    Rational s;
    for (std::size_t c = 0; c < m.size(); ++c) {
        std::vector<RationalVector> minor;
        for (std::size_t r = 1; r < m.size(); ++r) {
            RationalVector row;
            for (std::size_t k = 0; k < m.size(); ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Rational term = m[0][c] * det(minor);
        s += (c % 2 ? -term : term);
    }
    return s;
}

// Normal to d-1 vectors in Q^d by cofactor expansion.
RationalVector cross(const std::vector<RationalVector>& vs, std::size_t d) {
    RationalVector n(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<RationalVector> m;
        RationalVector e(d);
        e[i] = 1;
        m.push_back(e);
        for (const auto& v : vs) m.push_back(v);
        n[i] = det(m);
    }
    return n;
}

std::vector<Integer> primitive(const RationalVector& v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.den());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& x : v) {
        Integer z = x.num() * (l / x.den());
        out.push_back(z);
        g = gcd(g, z);
    }
    for (auto& z : out) z /= abs(g);
    return out;
}

// Facet normals of a full-dimensional cone, by brute force over (d-1)-subsets.
std::set<std::vector<Integer>> dual_oracle(const std::vector<RationalVector>& gens, std::size_t d) {
    std::set<std::vector<Integer>> out;
    std::vector<bool> pick(gens.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(d - 1), true);
    do {
        std::vector<RationalVector> sub;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (pick[i]) sub.push_back(gens[i]);
        RationalVector n = cross(sub, d);
        if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return x.is_zero(); })) continue;
        for (int s : {1, -1}) {
            RationalVector w = n;
            for (auto& x : w) x *= s;
            bool ok = std::all_of(gens.begin(), gens.end(), [&](const RationalVector& g) { return dot(g, w).sign() >= 0; });
            if (ok) out.insert(primitive(w));
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::set<std::vector<Integer>> ray_set(const Cone& c) {
    std::set<std::vector<Integer>> s;
    for (const auto& r : c.rays()) s.insert(r.direction);
    return s;
}

std::vector<RationalVector> five_rows() {
    return {{q("1/1152"), 0, 0, q("1/16")},
            {0, q("1/96"), 0, q("-1/8")},
            {0, q("1/48"), q("1/24"), q("-1/8")},
            {0, 0, q("1/48"), q("-1/16")},
            {0, 0, q("1/4"), q("1/4")}};
}

RationalVector e(std::size_t i, std::size_t d) {
    RationalVector v(d);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("canonical rays") {
    CHECK(canonicalize_ray({q("1/1152"), 0, 0, q("1/16")}).direction == std::vector<Integer>{1, 0, 0, 72});
    CHECK(canonicalize_ray({2, 4, 6, 0}).direction == std::vector<Integer>{1, 2, 3, 0});
    CHECK(canonicalize_ray({q("-1/2"), q("1/3")}).direction == std::vector<Integer>{-3, 2});
    CHECK(kind_of([] { canonicalize_ray({0, 0, 0, 0}); }) == ErrorKind::ZeroVector);
    Cone c = Cone::from_vectors(2, {{2, 0}, {1, 0}, {0, 0}, {0, 5}});
    CHECK(c.str() == "[(0, 1), (1, 0)]");
}

TEST_CASE("dual cones") {
    std::vector<RationalVector> orth{e(0, 4), e(1, 4), e(2, 4), e(3, 4)};
    Cone o = Cone::from_vectors(4, orth);
    CHECK(dual_cone(o) == o);

    std::vector<RationalVector> pm;
    for (std::size_t i = 0; i < 4; ++i) {
        pm.push_back(e(i, 4));
        RationalVector m(4);
        m[i] = -1;
        pm.push_back(m);
    }
    CHECK(dual_cone(Cone::from_vectors(4, pm)).rays().empty());
    CHECK(dual_cone(Cone(3)).rays().size() == 6);

    Cone five = Cone::from_vectors(4, five_rows());
    Cone d = dual_cone(five);
    CHECK(ray_set(d) == dual_oracle(five_rows(), 4));
    std::set<std::vector<Integer>> expected{{1, 0, 0, 0}, {0, 1, 0, 0}, {-72, 12, 3, 1}, {72, -8, 1, -1}, {72, -12, 3, -1}};
    CHECK(ray_set(d) == expected);
    for (const auto& r : d.ray_vectors())
        for (const auto& g : five_rows()) CHECK(dot(r, g).sign() >= 0);
    // M^2 is nonnegative on the cone but not one of its extremal rays
    CHECK(membership(d, {0, 0, 1, 0}).inside);
    CHECK_FALSE(ray_set(d).count({0, 0, 1, 0}));
}

TEST_CASE("dual of a cone that does not span") {
    // two rays in the plane z = 0 of Q^3: dual contains the z-axis as lineality
    Cone c = Cone::from_vectors(3, {{1, 0, 0}, {1, 1, 0}});
    Cone d = dual_cone(c);
    for (const auto& r : d.ray_vectors()) {
        CHECK(dot(r, {1, 0, 0}).sign() >= 0);
        CHECK(dot(r, {1, 1, 0}).sign() >= 0);
    }
    CHECK(membership(d, {0, 0, 1}).inside);
    CHECK(membership(d, {0, 0, -1}).inside);
    CHECK(membership(d, {1, -1, 0}).inside);
    CHECK_FALSE(membership(d, {-1, 0, 0}).inside);
}

TEST_CASE("membership certificates") {
    auto rows = five_rows();
    auto in = membership(rows, rows[0]);
    CHECK(in.inside);
    CHECK(in.coefficients == RationalVector{1, 0, 0, 0, 0});
    CHECK(verify_certificate(rows, rows[0], in));

    std::vector<RationalVector> others{rows[0], rows[1], rows[3], rows[4]};
    auto out = membership(others, rows[2]);
    REQUIRE_FALSE(out.inside);
    CHECK(dot(out.separator, rows[2]).sign() < 0);
    for (const auto& r : others) CHECK(dot(out.separator, r).sign() >= 0);
    CHECK(verify_certificate(others, rows[2], out));

    auto twofs1 = membership(std::vector<RationalVector>{rows[3], rows[4]}, {0, 0, 1, 0});
    REQUIRE(twofs1.inside);
    CHECK(twofs1.coefficients == RationalVector{12, 3});

    CHECK(kind_of([&] { membership(Cone::from_vectors(4, rows), RationalVector{1, 2}); }) == ErrorKind::DimensionMismatch);
    CHECK(membership(std::vector<RationalVector>{}, {0, 0}).inside);
    CHECK_FALSE(membership(std::vector<RationalVector>{}, {0, 1}).inside);
}

TEST_CASE("extremal generators") {
    auto rows = five_rows();
    for (std::size_t i = 0; i < 5; ++i) CHECK(is_extremal_generator(rows, i).extremal);
    CHECK_FALSE(is_extremal_generator(std::vector<RationalVector>{{1, 0}, {0, 1}, {1, 1}}, 2).extremal);
    auto with_fiber = rows;
    with_fiber.push_back({0, 0, 1, 0});
    CHECK_FALSE(is_extremal_generator(with_fiber, 5).extremal);
    CHECK(kind_of([&] { is_extremal_generator(rows, 5); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("simpliciality") {
    CHECK_FALSE(is_simplicial(Cone::from_vectors(4, five_rows())));
    CHECK(is_simplicial(Cone::from_vectors(4, {e(0, 4), e(1, 4), e(2, 4), e(3, 4)})));
    CHECK(is_simplicial(Cone::from_vectors(2, {{1, 0}, {0, 1}, {1, 1}})));
}

TEST_CASE("unique linear relation") {
    auto rows = five_rows();
    auto r = unique_relation({rows[2], rows[1], rows[3], rows[4]});
    REQUIRE(r);
    CHECK(*r == RationalVector{1, -2, 1, q("-1/4")});
    CHECK_FALSE(unique_relation({e(0, 4), e(1, 4)}));
    RationalVector v{1, 2, 3, 4}, w{0, 1, 0, 0};
    RationalVector v2{2, 4, 6, 8};
    auto k = unique_relation({v, v2, w});
    REQUIRE(k);
    CHECK(*k == RationalVector{1, q("-1/2"), 0});
    CHECK(kind_of([&] { unique_relation({v, v2, w, w}); }) == ErrorKind::AmbiguousRelation);
}

TEST_CASE("pushforward rows agree across routes") {
    const SpaceModel& vc = builtin_space("Vcover");
    const SpaceModel& ab = builtin_space("A1xA2");
    const SpaceModel& yt = builtin_space("Ytilde");
    RationalVector sa{q("1/1152"), 0, 0, q("1/16")}, sd{0, q("1/48"), q("1/24"), q("-1/8")}, sf{0, q("1/96"), 0, q("-1/8")};
    CHECK(pushforward_row(vc, "S2", 2) == sa);
    CHECK(pushforward_row(vc, "S3", 2) == sd);
    CHECK(pushforward_row(vc, "S4", 4) == sf);
    CHECK(pushforward_row(ab, "S_DD", 1) == sd);
    CHECK(pushforward_row(yt, "SDp", 12) == sd);
    RationalVector aa = pushforward_row(ab, "S_AA", 1), da = pushforward_row(ab, "S_DA", 1);
    for (auto& x : da) x *= 2;
    CHECK(aa == da);
    CHECK(kind_of([&] { pushforward_row(builtin_space("A2"), "C_A", 1); }) == ErrorKind::MissingPullback);
}
