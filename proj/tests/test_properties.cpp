#include "ilab/cone.hpp"
#include "ilab/dsl.hpp"
#include "ilab/models.hpp"
#include "support/gen.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ilab;

namespace {

constexpr int kTrials = 60;

const std::vector<std::string>& ring_spaces() {
    static const std::vector<std::string> names{"X1", "A2", "A1xA2", "Vcover", "Ytilde"};
    return names;
}

bool zero_vec(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

TEST_CASE("rational field laws") {
    gen::Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        CHECK(Rational::parse(a.str()) == a);
        CHECK(Rational::parse(a.fraction_str()) == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("normal form respects multiplication") {
    gen::Rng rng(2);
    for (const auto& name : ring_spaces()) {
        CAPTURE(name);
        const GradedAlgebra& a = *builtin_space(name).algebra;
        for (int i = 0; i < kTrials; ++i) {
            ClassExpr x = rng.mixed(a), y = rng.mixed(a), z = rng.mixed(a);
            CHECK(normal_form(a, x * y) == normal_form(a, normal_form(a, x) * normal_form(a, y)));
            CHECK(multiply(a, x, y) == multiply(a, y, x));
            CHECK(multiply(a, multiply(a, x, y), z) == multiply(a, x, multiply(a, y, z)));
            CHECK(normal_form(a, normal_form(a, x)) == normal_form(a, x));
            CHECK(integrate(a, x + y) == integrate(a, x) + integrate(a, y));
        }
    }
}

TEST_CASE("relations integrate to zero against every complementary monomial") {
    for (const auto& name : ring_spaces()) {
        CAPTURE(name);
        const GradedAlgebra& a = *builtin_space(name).algebra;
        for (const auto& r : a.presentation().relations) {
            auto d = a.homogeneous_degree(r);
            if (!d || *d > a.top_degree()) continue;
            for (const auto& m : a.monomials(a.top_degree() - *d)) CHECK(integrate(a, r * ClassExpr(m)).is_zero());
            CHECK(normal_form(a, r).is_zero());
        }
    }
}

TEST_CASE("intersection numbers are symmetric in their factors") {
    gen::Rng rng(3);
    for (const auto& name : ring_spaces()) {
        CAPTURE(name);
        const GradedAlgebra& a = *builtin_space(name).algebra;
        int top = a.top_degree();
        for (int i = 0; i < kTrials / 2; ++i) {
            std::vector<ClassExpr> fs;
            for (int k = 0; k < top; ++k) fs.push_back(rng.homogeneous(a, 1));
            Rational base = intersection_number(a, fs);
            for (int s = 0; s < 4; ++s) {
                rng.shuffle(fs);
                CHECK(intersection_number(a, fs) == base);
            }
        }
    }
}

TEST_CASE("tensor integral factorizes") {
    gen::Rng rng(4);
    const GradedAlgebra& x1 = *builtin_space("X1").algebra;
    const GradedAlgebra& a2 = *builtin_space("A2").algebra;
    for (Rational scale : {Rational(1), Rational(1, 2), Rational(7, 3)}) {
        GradedAlgebra t = tensor_product(x1, a2, scale);
        for (int i = 0; i < kTrials; ++i) {
            ClassExpr x = rng.homogeneous(x1, 2), y = rng.homogeneous(a2, 3);
            CHECK(integrate(t, x * y) == scale * integrate(x1, x) * integrate(a2, y));
        }
    }
}

TEST_CASE("invariant vectors are fixed by every generator") {
    struct Case {
        const char* space;
        const char* action;
    };
    for (auto [space, action] : {Case{"Ytilde", "G_K3"}, Case{"Vcover", "swap"}}) {
        const SpaceModel& s = builtin_space(space);
        const GroupAction& g = s.actions.at(action);
        for (int d = 1; d <= 2; ++d)
            for (const auto& v : invariant_subspace(*s.algebra, g, d))
                for (const auto& h : g.generators) CHECK(normal_form(*s.algebra, substitute(h, v)) == normal_form(*s.algebra, v));
    }
}

TEST_CASE("membership certificates always verify") {
    gen::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        std::size_t d = 2 + rng.index(3), n = 1 + rng.index(5);
        std::vector<RationalVector> rays;
        for (std::size_t k = 0; k < n; ++k) rays.push_back(rng.vector(d));
        RationalVector v = rng.vector(d);
        auto cert = membership(rays, v);
        CHECK(verify_certificate(rays, v, cert));
        if (cert.inside) {
            RationalVector sum(d);
            for (std::size_t k = 0; k < n; ++k) {
                CHECK(cert.coefficients[k].sign() >= 0);
                for (std::size_t j = 0; j < d; ++j) sum[j] += cert.coefficients[k] * rays[k][j];
            }
            CHECK(sum == v);
        } else {
            CHECK(dot(cert.separator, v).sign() < 0);
            for (const auto& r : rays) CHECK(dot(cert.separator, r).sign() >= 0);
        }
    }
}

TEST_CASE("dual rays are nonnegative on the primal cone") {
    gen::Rng rng(6);
    for (int i = 0; i < 120; ++i) {
        std::size_t d = 2 + rng.index(3), n = 1 + rng.index(6);
        std::vector<RationalVector> rays;
        for (std::size_t k = 0; k < n; ++k) rays.push_back(rng.vector(d));
        Cone c = Cone::from_vectors(d, rays);
        Cone dual = dual_cone(c);
        for (const auto& f : dual.ray_vectors())
            for (const auto& r : rays) CHECK(dot(f, r).sign() >= 0);
        // anything nonnegative on c lies in the dual: test random functionals
        for (int t = 0; t < 5; ++t) {
            RationalVector f = rng.vector(d);
            bool nonneg = std::all_of(rays.begin(), rays.end(), [&](const RationalVector& r) { return dot(f, r).sign() >= 0; });
            CHECK(membership(dual, f).inside == nonneg);
        }
    }
}

TEST_CASE("double dual recovers full-dimensional pointed cones") {
    gen::Rng rng(7);
    int tested = 0;
    for (int i = 0; i < 200 && tested < 60; ++i) {
        std::size_t d = 2 + rng.index(3), n = d + rng.index(4);
        std::vector<RationalVector> rays;
        for (std::size_t k = 0; k < n; ++k) {
            RationalVector v = rng.vector(d);
            v[0] = Rational(1 + rng.integer(0, 4));  // keeps the cone inside x0 > 0, hence pointed
            rays.push_back(v);
        }
        Matrix m = Matrix::from_rows(rays, d);
        if (rank(m) < d) continue;
        ++tested;
        Cone c = Cone::from_vectors(d, rays);
        CHECK(dual_cone(dual_cone(c)) == extremal_part(c));
    }
    CHECK(tested > 20);
}

TEST_CASE("extremality ignores positive rescaling") {
    gen::Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        std::size_t d = 2 + rng.index(3), n = 2 + rng.index(4);
        std::vector<RationalVector> rays;
        for (std::size_t k = 0; k < n; ++k) {
            RationalVector v = rng.vector(d);
            if (zero_vec(v)) v[0] = 1;
            rays.push_back(v);
        }
        std::size_t idx = rng.index(n);
        bool before = is_extremal_generator(rays, idx).extremal;
        auto scaled = rays;
        for (auto& r : scaled) {
            Rational s(rng.integer(1, 9), rng.integer(1, 9));
            for (auto& x : r) x *= s;
        }
        CHECK(is_extremal_generator(scaled, idx).extremal == before);
    }
}

TEST_CASE("unique relation is a kernel vector") {
    gen::Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        std::size_t d = 4, n = 2 + rng.index(3);
        std::vector<RationalVector> vs;
        for (std::size_t k = 0; k < n; ++k) vs.push_back(rng.vector(d));
        if (rng.coin()) {
            RationalVector comb(d);
            for (std::size_t k = 0; k < n; ++k) {
                Rational c = rng.rational(3, 2);
                for (std::size_t j = 0; j < d; ++j) comb[j] += c * vs[k][j];
            }
            vs.push_back(comb);
        }
        try {
            auto r = unique_relation(vs);
            if (!r) continue;
            RationalVector sum(d);
            for (std::size_t k = 0; k < vs.size(); ++k)
                for (std::size_t j = 0; j < d; ++j) sum[j] += (*r)[k] * vs[k][j];
            CHECK(zero_vec(sum));
            auto first = std::find_if(r->begin(), r->end(), [](const Rational& x) { return !x.is_zero(); });
            REQUIRE(first != r->end());
            CHECK(*first == 1);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::AmbiguousRelation);
        }
    }
}

namespace {

ExprPtr random_expr(gen::Rng& rng, const std::vector<std::string>& names, int depth) {
    auto e = std::make_shared<Expr>();
    if (depth == 0 || rng.integer(0, 3) == 0) {
        if (rng.coin()) {
            e->kind = Expr::Kind::Name;
            e->name = names[rng.index(names.size())];
        } else {
            e->kind = Expr::Kind::Number;
            e->number = rng.rational(5, 4).abs();
        }
        return e;
    }
    switch (rng.integer(0, 4)) {
        case 0: e->kind = Expr::Kind::Neg; e->lhs = random_expr(rng, names, depth - 1); break;
        case 1: e->kind = Expr::Kind::Add; break;
        case 2: e->kind = Expr::Kind::Sub; break;
        case 3: e->kind = Expr::Kind::Mul; break;
        default:
            e->kind = Expr::Kind::Pow;
            e->lhs = random_expr(rng, names, depth - 1);
            e->exponent = static_cast<unsigned>(rng.integer(0, 3));
            return e;
    }
    if (e->kind != Expr::Kind::Neg) {
        e->lhs = random_expr(rng, names, depth - 1);
        e->rhs = random_expr(rng, names, depth - 1);
    }
    return e;
}

}  // namespace

TEST_CASE("expression printing round-trips") {
    gen::Rng rng(10);
    const SpaceModel& x = builtin_space("Vcover");
    std::vector<std::string> names{"L1", "Z1", "T2", "S3"};
    for (int i = 0; i < 300; ++i) {
        ExprPtr e = random_expr(rng, names, 4);
        std::string text = print(*e);
        CAPTURE(text);
        ExprPtr back = parse_expression(text);
        CHECK(print(*back) == text);
        CHECK(evaluate_expression(*back, x) == evaluate_expression(*e, x));
    }
}

TEST_CASE("assertion order does not change outcomes") {
    gen::Rng rng(11);
    for (const auto& entry : std::filesystem::directory_iterator(ILAB_TEST_SCENARIOS)) {
        if (entry.path().extension() != ".isl") continue;
        CAPTURE(entry.path().string());
        std::ifstream in(entry.path());
        std::ostringstream ss;
        ss << in.rdbuf();
        ScenarioAST ast = parse(ss.str(), entry.path().filename().string());
        ScenarioReport base = evaluate(ast);

        // definitions keep their order and come first; assertions are shuffled after them
        ScenarioAST moved{ast.file, {}};
        std::vector<Statement> checks;
        for (const auto& s : ast.statements) {
            if (std::holds_alternative<Assertion>(s)) checks.push_back(s);
            else moved.statements.push_back(s);
        }
        for (int t = 0; t < 3; ++t) {
            rng.shuffle(checks);
            ScenarioAST shuffled = moved;
            shuffled.statements.insert(shuffled.statements.end(), checks.begin(), checks.end());
            ScenarioReport r = evaluate(shuffled);
            auto key = [](const ScenarioReport& rep) {
                std::vector<std::string> ks;
                for (const auto& a : rep.records)
                    ks.push_back(a.pos.str() + "|" + a.expected + "|" + a.computed + (a.pass ? "|1" : "|0"));
                std::sort(ks.begin(), ks.end());
                return ks;
            };
            CHECK(key(r) == key(base));
        }
    }
}

TEST_CASE("every corrupted input yields a positioned error") {
    gen::Rng rng(12);
    std::ifstream in(std::string(ILAB_TEST_SCENARIOS) + "/cone_extremality.isl");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const std::string junk = "$;(){}=*^:,";
    int errors = 0;
    for (int i = 0; i < 200; ++i) {
        std::string t = text;
        std::size_t at = rng.index(t.size());
        t.insert(at, 1, junk[rng.index(junk.size())]);
        try {
            check_text(t, "c.isl");
        } catch (const Error& e) {
            ++errors;
            std::string msg = e.what();
            CAPTURE(msg);
            CHECK(msg.rfind("c.isl:", 0) == 0);
            CHECK(std::count(msg.begin(), msg.begin() + static_cast<long>(msg.find(' ')), ':') >= 3);
        }
    }
    CHECK(errors > 100);
}
