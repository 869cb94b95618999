#include "ilab/error.hpp"
#include "ilab/models.hpp"

#include <doctest.h>

#include <thread>

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

Rational pair(const SpaceModel& s, const char* a, const char* b) {
    return integrate(*s.algebra, s.resolve(a) * s.resolve(b));
}

}  // namespace

TEST_CASE("every built-in space builds") {
    for (const auto& n : builtin_space_names()) {
        CAPTURE(n);
        SpaceModel s = build_space(n);
        CHECK(s.name == n);
        CHECK(s.algebra != nullptr);
        for (const auto& e : s.catalog) {
            CAPTURE(e.name);
            CHECK(s.algebra->homogeneous_degree(e.expr) == e.degree);
            CHECK_FALSE(e.reference.empty());
        }
    }
    CHECK(kind_of([] { build_space("A4"); }) == ErrorKind::UnknownSpace);
    CHECK(&builtin_space("A2") == &builtin_space("A2"));
}

TEST_CASE("registry is safe to use from several threads") {
    std::vector<std::thread> ts;
    std::vector<Rational> out(8);
    for (std::size_t i = 0; i < out.size(); ++i)
        ts.emplace_back([&out, i] {
            const auto& s = builtin_space(builtin_space_names()[i]);
            out[i] = s.algebra->integral_values().empty() ? Rational(-1) : Rational(1);
        });
    for (auto& t : ts) t.join();
    for (const auto& x : out) CHECK(x == 1);
}

TEST_CASE("genus-2 catalog") {
    const SpaceModel& s = builtin_space("A2");
    CHECK(integrate(*s.algebra, s.resolve("M2").pow(2) * s.resolve("D2")) == q("1/12"));
    CHECK(pair(s, "L2", "C_A") == q("1/24"));
    CHECK(pair(s, "M2", "C_A") == 0);
    CHECK(pair(s, "L2", "C_F") == 0);
    CHECK(kind_of([&] { s.resolve("nope"); }) == ErrorKind::NameResolutionError);
}

TEST_CASE("genus-3 pairing space") {
    const SpaceModel& s = builtin_space("A3_H4");
    CHECK(s.engine == Engine::PairingSpace);
    REQUIRE(s.pairing);
    CHECK(s.pairing->values.rows() == 5);
    CHECK(rank(s.pairing->values) == 4);
    CHECK(pair(s, "S_A", "pL2") == q("1/1152"));
    CHECK(pair(s, "K31", "pB2") == q("1/4"));
    CHECK(pair(s, "C4", "pB2") == q("-1/16"));
    CHECK(pair(s, "S_D", "pD2") == q("-11/24"));
    CHECK(pair(s, "F1", "S_A") == 0);
    CHECK(pair(s, "F2", "K31") == 0);
    // C4 row is the sigma_4 row minus the K3+1 row
    RationalVector k31 = pairing_vector(s, s.resolve("K31"), {s.resolve("pL2"), s.resolve("pLM"), s.resolve("pM2"), s.resolve("pB2")});
    RationalVector c4 = pairing_vector(s, s.resolve("C4"), {s.resolve("pL2"), s.resolve("pLM"), s.resolve("pM2"), s.resolve("pB2")});
    RationalVector sigma4{0, 0, s.constants.at("D2_sigma4"), s.constants.at("beta2_sigma4")};
    for (std::size_t j = 0; j < 4; ++j) CHECK(c4[j] + k31[j] == sigma4[j]);
    CHECK(s.metadata.count("strata"));
}

TEST_CASE("resolved fiber product catalog") {
    const SpaceModel& y = builtin_space("Ytilde");
    CHECK(y.engine == Engine::TrilinearSpace);
    CHECK(y.constants.at("stacky") == q("1/12"));
    CHECK(integrate(*y.algebra, y.resolve("P") * y.resolve("Z1") * y.resolve("Z2")) == 0);
    CHECK(integrate(*y.algebra, y.resolve("RD").pow(3)) * q("1/12") == q("31/48"));
    CHECK(integrate(*y.algebra, y.resolve("RD") * y.resolve("RB2")) * q("1/12") == q("5/16"));
    CHECK(pushforward_row_extended(y, "SDp", 12) ==
          RationalVector{0, q("-1/48"), q("-11/24"), q("1/48"), q("1/24"), q("-1/8")});
}

TEST_CASE("S_P space") {
    const SpaceModel& s = builtin_space("SP_level");
    CHECK(pushforward_row_extended(s, "S_P", 1) ==
          RationalVector{0, q("-1/96"), q("-1/4"), q("1/96"), 0, q("-1/8")});
    CHECK(pushforward_row(s, "S_P", 1) == pushforward_row(builtin_space("A3_H4"), "S_F", 1));
}

TEST_CASE("adding catalog entries") {
    SpaceModel s = build_space("X1");
    s.add("W", var("L") + var("Z"), "test entry");
    CHECK(s.resolve("W") == var("L") + var("Z"));
    CHECK(kind_of([&] { s.add("W", var("L"), "again"); }) == ErrorKind::NameCollision);
    CHECK(kind_of([&] { s.add("Z", var("L"), "shadow"); }) == ErrorKind::NameCollision);
    CHECK(kind_of([&] { s.add("V", var("L") + var("L") * var("Z"), "mixed"); }) == ErrorKind::NonHomogeneousRelation);
}
