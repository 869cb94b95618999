#include "ilab/models.hpp"

#include "ilab/error.hpp"

#include <mutex>

namespace ilab {

namespace {

ClassExpr v(const std::string& n) { return ClassExpr::var(n); }
Rational q(long a, long b = 1) { return Rational(a, b); }
ClassExpr c(long a, long b = 1) { return ClassExpr(Rational(a, b)); }

Presentation x1_presentation(const std::string& l, const std::string& z) {
    Presentation p;
    p.generators = {{l, 1}, {z, 1}};
    p.relations = {v(l).pow(2), v(z).pow(2) + v(l) * v(z)};
    p.top_degree = 2;
    p.integral_spec = {{Monomial::generator(l) * Monomial::generator(z), q(1, 24)}};
    return p;
}

Presentation a1_presentation() {
    Presentation p;
    p.generators = {{"L1", 1}};
    p.relations = {v("L1").pow(2)};
    p.top_degree = 1;
    p.integral_spec = {{Monomial::generator("L1"), q(1, 24)}};
    return p;
}

Presentation a2_presentation() {
    Presentation p;
    ClassExpr L = v("L2"), D = v("D2");
    p.generators = {{"L2", 1}, {"D2", 1}};
    p.relations = {L * L * D, c(120) * L * L - c(22) * L * D + D * D};
    p.top_degree = 3;
    p.integral_spec = {{Monomial::generator("L2", 3), q(1, 2880)}};
    return p;
}

void add_pullbacks(SpaceModel& s, const ClassExpr& L, const ClassExpr& D, const ClassExpr& M, const ClassExpr& B2,
                   const std::string& where) {
    s.add("pL2", L * L, "L^2 " + where);
    s.add("pLD", L * D, "L D " + where);
    s.add("pD2", D * D, "D^2 " + where);
    s.add("pLM", L * M, "L M " + where);
    s.add("pM2", M * M, "M^2 " + where);
    s.add("pB2", B2, "beta_2 " + where);
}

std::vector<GeneratorSpec> a3_divisor_sources() { return {{"L", 1}, {"M", 1}, {"D", 1}, {"B2", 2}}; }

SpaceModel make_a1() {
    SpaceModel s;
    s.name = "A1";
    s.algebra = std::make_shared<GradedAlgebra>(build_algebra(a1_presentation()));
    s.add("D1", c(12) * v("L1"), "boundary point of the moduli of elliptic curves");
    return s;
}

SpaceModel make_x1() {
    SpaceModel s;
    s.name = "X1";
    s.algebra = std::make_shared<GradedAlgebra>(build_algebra(x1_presentation("L", "Z")));
    s.add("T", v("Z") + v("L"), "theta divisor trivialized along the zero section");
    s.add("F", c(12) * v("L"), "fiber over a point of the base");
    return s;
}

SpaceModel make_a2() {
    SpaceModel s;
    s.name = "A2";
    s.algebra = std::make_shared<GradedAlgebra>(build_algebra(a2_presentation()));
    ClassExpr L = v("L2"), D = v("D2");
    s.add("M2", c(12) * L - D, "M = 12L - D on the genus-2 space");
    s.add("C_A", c(12) * L * (c(10) * L - D), "curve of products with a fixed elliptic factor");
    s.add("C_F", c(12) * L * D, "fiber curve of the boundary over the cusp");
    s.add("B2_2", c(6) * L * D, "torus rank 2 locus");
    return s;
}

SpaceModel make_a1xa2() {
    SpaceModel s;
    s.name = "A1xA2";
    const SpaceModel& a1 = builtin_space("A1");
    const SpaceModel& a2 = builtin_space("A2");
    s.algebra = std::make_shared<GradedAlgebra>(tensor_product(*a1.algebra, *a2.algebra, 1));
    ClassExpr L1 = v("L1"), L2 = v("L2"), D2 = v("D2");
    ClassExpr M2 = c(12) * L2 - D2;
    s.add("D1", c(12) * L1, "boundary point on the first factor");
    s.add("M2", M2, "M on the second factor");
    s.add("S_DD", c(12) * L1 * D2, "boundary point times boundary curve");
    s.add("S_DA", c(12) * L1 * (c(5) * L2 - c(1, 2) * D2), "boundary point times the product locus");
    s.add("S_AF", c(6) * L2 * D2, "first factor times the fiber curve");
    s.add("S_AA", c(12) * L2 * (c(5) * L2 - c(1, 2) * D2), "first factor times the product locus");
    ClassExpr NL = L1 + L2, NM = M2, ND = c(12) * L1 + D2;
    ClassExpr NB2 = (c(12) * L1 + c(6) * L2) * (c(12) * L2 - M2);
    s.add("NL", NL, "pullback of L under the product map");
    s.add("NM", NM, "pullback of M under the product map");
    s.add("ND", ND, "pullback of D under the product map");
    s.add("NB2", NB2, "pullback of beta_2 under the product map");
    add_pullbacks(s, NL, ND, NM, NB2, "pulled back under the product map");
    s.homs.emplace("N_star", AlgebraHom::checked(a3_divisor_sources(), *s.algebra,
                                                 {{"L", NL}, {"M", NM}, {"D", ND}, {"B2", NB2}}));
    return s;
}

SpaceModel make_vcover() {
    SpaceModel s;
    s.name = "Vcover";
    GradedAlgebra f1 = build_algebra(x1_presentation("L1", "Z1"));
    GradedAlgebra f2 = build_algebra(x1_presentation("L2", "Z2"));
    s.algebra = std::make_shared<GradedAlgebra>(tensor_product(f1, f2, q(1, 2)));
    ClassExpr L1 = v("L1"), L2 = v("L2"), Z1 = v("Z1"), Z2 = v("Z2");
    ClassExpr T1 = Z1 + L1, T2 = Z2 + L2;
    s.add("T1", T1, "theta divisor of the first factor");
    s.add("T2", T2, "theta divisor of the second factor");
    s.add("S1", c(144) * L1 * L2, "fiber over the most degenerate points");
    s.add("S2", Z1 * Z2, "intersection of the zero sections");
    s.add("S3", c(12) * (L1 * Z1 + L2 * Z2), "point on one factor times the other factor");
    s.add("S4", c(12) * (L1 * Z2 + L2 * Z1), "fiber on one factor times the zero section on the other");
    s.add("N1", L1 * L2, "nef generator");
    s.add("N2", T1 * T2, "nef generator");
    s.add("N3", L1 * T1 + L2 * T2, "nef generator");
    s.add("N4", L1 * T2 + L2 * T1, "nef generator");
    ClassExpr RL = L1 + L2;
    ClassExpr RD = c(-2) * (T1 + T2) + c(12) * (L1 + L2);
    ClassExpr RM = c(2) * (T1 + T2);
    ClassExpr RB2 = c(-24) * (T1 + T2) * (L1 + L2) + c(144) * L1 * L2 + c(12) * (L1 * Z1 + L2 * Z2);
    s.add("RL", RL, "restriction of L");
    s.add("RD", RD, "restriction of the boundary");
    s.add("RM", RM, "restriction of M");
    s.add("RB2", RB2, "restriction of beta_2");
    s.add("T2V", c(2) * T1 * T2, "restriction of T^2 as used for the S3 and S4 vanishing");
    add_pullbacks(s, RL, RD, RM, RB2, "restricted to the cover");
    s.homs.emplace("restrict", AlgebraHom::checked(a3_divisor_sources(), *s.algebra,
                                                   {{"L", RL}, {"M", RM}, {"D", RD}, {"B2", RB2}}));
    s.actions.emplace("swap",
                      GroupAction{{AlgebraHom::endomorphism(*s.algebra, {{"L1", L2}, {"L2", L1}, {"Z1", Z2}, {"Z2", Z1}})}});
    return s;
}

std::shared_ptr<TrilinearSpace> ytilde_form() {
    ClassExpr L = v("L"), Z1 = v("Z1"), Z2 = v("Z2"), Dt = v("Dt");
    ClassExpr T1 = Z1 + L, T2 = Z2 + L;
    const std::vector<ClassExpr> columns{L, Z1, T1, Z2, T2, Dt};
    struct Row {
        std::vector<ClassExpr> cycles;
        std::vector<Rational> values;
    };
    const Rational a = q(1, 24), z;
    const std::vector<Row> table{
        {{L * T1, T1 * T1, L * Z1, -(Z1 * Z1)}, {z, z, z, a, a, a}},
        {{L * T2, T2 * T2, L * Z2, -(Z2 * Z2)}, {z, a, a, z, z, a}},
        {{L * Dt}, {z, a, a, a, a, z}},
        {{Z1 * Z2, Z1 * Dt, Z2 * Dt}, {a, -a, z, -a, z, -a}},
        {{Dt * Dt}, {z, -a, -a, -a, -a, q(-1, 2)}},
    };
    std::vector<TrilinearEntry> entries;
    for (const auto& row : table)
        for (const auto& cyc : row.cycles)
            for (std::size_t j = 0; j < columns.size(); ++j) entries.push_back({cyc, columns[j], row.values[j]});
    return std::make_shared<TrilinearSpace>(TrilinearSpace::from_entries({"L", "Z1", "Z2", "Dt"}, entries));
}

SpaceModel make_ytilde() {
    SpaceModel s;
    s.name = "Ytilde";
    s.engine = Engine::TrilinearSpace;
    auto form = ytilde_form();
    s.trilinear = form;
    s.algebra = std::shared_ptr<const GradedAlgebra>(form, &form->algebra());
    ClassExpr L = v("L"), Z1 = v("Z1"), Z2 = v("Z2"), Dt = v("Dt");
    ClassExpr T1 = Z1 + L, T2 = Z2 + L;
    ClassExpr P = T1 + T2 - Dt - L;
    ClassExpr Dm = c(2) * T1 + c(2) * T2 - Dt - c(2) * L;
    ClassExpr RD = c(-3) * T1 - c(3) * T2 + Dt + c(13) * L;
    ClassExpr RM = c(12) * L - RD;
    ClassExpr RB2 = c(4) * T1 * T2 - P * P - c(6) * L * (c(3) * T1 + c(3) * T2 - Dt);
    s.add("T1", T1, "theta divisor of the first factor");
    s.add("T2", T2, "theta divisor of the second factor");
    s.add("P", P, "Poincare class");
    s.add("Dm", Dm, "antidiagonal");
    s.add("E", c(6) * L * (c(3) * Z1 + c(3) * Z2 - Dt), "exceptional curves of the small resolution");
    s.add("RD", RD, "restriction of the boundary");
    s.add("RM", RM, "restriction of M");
    s.add("RB2", RB2, "restriction of beta_2");
    s.add("SDp", c(3) * T1 + c(3) * T2 - Dt - c(4) * L, "surface homologous to S_D inside the stratum");
    s.add("K31", c(12) * L, "codimension-one stratum inside the K3 stratum");
    add_pullbacks(s, L, RD, RM, RB2, "restricted to the stratum");
    s.constants.emplace("stacky", q(1, 12));
    auto& alg = *s.algebra;
    s.actions.emplace("G_K3", GroupAction{{
                                  AlgebraHom::identity(alg),
                                  AlgebraHom::endomorphism(alg, {{"Z1", Z2}, {"Z2", Z1}}),
                                  AlgebraHom::endomorphism(
                                      alg, {{"Z1", Dm}, {"Dt", c(3) * Z1 + c(6) * Z2 - c(2) * Dt + c(6) * L}}),
                              }});
    return s;
}

// Formal algebra pairing degree-2 surfaces with L, M, B2; everything else of top degree vanishes.
std::shared_ptr<GradedAlgebra> formal_pairing_algebra(const std::vector<std::string>& surfaces,
                                                      const std::vector<RationalVector>& rows) {
    Presentation p;
    p.generators = {{"L", 1}, {"M", 1}, {"B2", 2}};
    for (const auto& name : surfaces) p.generators.push_back({name, 2});
    ClassExpr L = v("L"), M = v("M"), B2 = v("B2");
    for (unsigned i = 0; i <= 4; ++i) p.relations.push_back(L.pow(i) * M.pow(4 - i));
    p.relations.push_back(L * L * B2);
    p.relations.push_back(L * M * B2);
    p.relations.push_back(M * M * B2);
    p.relations.push_back(B2 * B2);
    for (std::size_t i = 0; i < surfaces.size(); ++i)
        for (std::size_t j = i; j < surfaces.size(); ++j) p.relations.push_back(v(surfaces[i]) * v(surfaces[j]));
    p.top_degree = 4;
    const std::vector<Monomial> cols{Monomial::generator("L", 2), Monomial::generator("L") * Monomial::generator("M"),
                                     Monomial::generator("M", 2), Monomial::generator("B2")};
    for (std::size_t i = 0; i < surfaces.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            p.integral_spec.emplace_back(Monomial::generator(surfaces[i]) * cols[j], rows[i][j]);
    return std::make_shared<GradedAlgebra>(build_algebra(std::move(p)));
}

void add_a3_divisor_catalog(SpaceModel& s) {
    ClassExpr L = v("L"), M = v("M"), B2 = v("B2");
    ClassExpr D = c(12) * L - M;
    s.add("D", D, "boundary divisor");
    add_pullbacks(s, L, D, M, B2, "on the genus-3 space");
}

SpaceModel make_a3() {
    SpaceModel s;
    s.name = "A3_H4";
    s.engine = Engine::PairingSpace;
    const SpaceModel& prod = builtin_space("A1xA2");
    const SpaceModel& yt = builtin_space("Ytilde");

    RationalVector sa = pushforward_row(prod, "S_DA", 1);
    RationalVector sf = pushforward_row(prod, "S_AF", 1);
    RationalVector sd = pushforward_row(prod, "S_DD", 1);
    RationalVector k31 = pushforward_row(yt, "K31", 12);

    const Rational ld2_s3 = q(1, 48), lb2_s3 = q(1, 48), d2_s4 = q(13, 48), b2_s4 = q(3, 16);
    // L restricts trivially to sigma_4, so M^2 and D^2 agree there.
    RationalVector sigma4{0, 0, d2_s4, b2_s4};
    RationalVector c4(4);
    for (std::size_t j = 0; j < 4; ++j) c4[j] = sigma4[j] - k31[j];

    const std::vector<std::string> names{"S_A", "S_F", "S_D", "C4", "K31"};
    const std::vector<RationalVector> rows{sa, sf, sd, c4, k31};
    s.algebra = formal_pairing_algebra(names, rows);

    auto pairing = std::make_shared<PairingSpace>();
    pairing->row_names = names;
    pairing->col_names = {"L^2", "LM", "M^2", "beta2"};
    pairing->values = Matrix::from_rows(rows, 4);
    if (rank(pairing->values) != 4)
        fail(ErrorKind::InvalidArgument, "surface pairing matrix does not have full column rank");
    s.pairing = pairing;

    s.add("S_A", v("S_A"), "image of the product-locus surfaces");
    s.add("S_F", v("S_F"), "image of the elliptic factor times the fiber curve");
    s.add("S_D", v("S_D"), "image of the boundary-point surfaces");
    s.add("C4", v("C4"), "closure of the C4 stratum");
    s.add("K31", v("K31"), "closure of the K3+1 stratum");
    add_a3_divisor_catalog(s);
    ClassExpr L = v("L"), M = v("M"), B2 = v("B2");
    s.add("F1", c(-72) * L * L + c(12) * L * M + c(3) * M * M + B2, "nef class vanishing on S_A, S_F, C4");
    s.add("F2", c(72) * L * L - c(8) * L * M + M * M - B2, "nef class vanishing on S_A, S_D, K31");
    s.add("Hyp3", c(9) * L - (c(12) * L - M), "hyperelliptic divisor, 9L - D");
    s.constants.emplace("LD2_sigma3", ld2_s3);
    s.constants.emplace("Lbeta2_sigma3", lb2_s3);
    s.constants.emplace("D2_sigma4", d2_s4);
    s.constants.emplace("beta2_sigma4", b2_s4);
    s.metadata.emplace("strata",
                       "sigma_1:5, sigma_1+1:4, sigma_K3:3, sigma_1+1+1:3, sigma_K3+1:2, sigma_C4:2, "
                       "sigma_K4-1:1, sigma_K4:0");
    s.metadata.emplace("Hyp3", "9L - D");
    return s;
}

SpaceModel make_sp() {
    SpaceModel s;
    s.name = "SP_level";
    s.engine = Engine::LevelParamRing;
    SpRow row = sp_pairing_row();
    s.algebra = formal_pairing_algebra({"S_P"}, {row.basis_row()});
    s.add("S_P", v("S_P"), "surface swept by the level-n construction");
    add_a3_divisor_catalog(s);
    s.constants.emplace("L2", row.LL);
    s.constants.emplace("LD", row.LD);
    s.constants.emplace("D2", row.DD);
    s.constants.emplace("LM", row.LM);
    s.constants.emplace("M2", row.MM);
    s.constants.emplace("beta2", row.beta2);
    return s;
}

}  // namespace

std::string_view engine_name(Engine e) {
    switch (e) {
        case Engine::GradedAlgebra: return "GradedAlgebra";
        case Engine::TrilinearSpace: return "TrilinearSpace";
        case Engine::PairingSpace: return "PairingSpace";
        case Engine::LevelParamRing: return "LevelParamRing";
    }
    return "";
}

const CatalogEntry* SpaceModel::find(const std::string& entry) const {
    for (const auto& e : catalog)
        if (e.name == entry) return &e;
    return nullptr;
}

bool SpaceModel::knows(const std::string& symbol) const {
    return (algebra && algebra->has_generator(symbol)) || find(symbol) != nullptr;
}

ClassExpr SpaceModel::resolve(const std::string& symbol) const {
    if (algebra && algebra->has_generator(symbol)) return ClassExpr::var(symbol);
    if (const auto* e = find(symbol)) return e->expr;
    fail(ErrorKind::NameResolutionError, "'" + symbol + "' is not defined in space " + name);
}

void SpaceModel::add(const std::string& entry, const ClassExpr& expr, const std::string& reference) {
    if (find(entry)) fail(ErrorKind::NameCollision, "catalog entry '" + entry + "' defined twice in " + name);
    if (algebra->has_generator(entry) && !(expr == ClassExpr::var(entry)))
        fail(ErrorKind::NameCollision, "catalog entry '" + entry + "' shadows a generator of " + name);
    auto d = algebra->homogeneous_degree(expr);
    if (!d) fail(ErrorKind::NonHomogeneousRelation, "catalog entry '" + entry + "' is not homogeneous");
    catalog.push_back({entry, expr, *d, reference});
}

std::vector<std::string> builtin_space_names() {
    return {"A1", "X1", "A2", "A1xA2", "Vcover", "Ytilde", "A3_H4", "SP_level"};
}

SpaceModel build_space(std::string_view name) {
    if (name == "A1") return make_a1();
    if (name == "X1") return make_x1();
    if (name == "A2") return make_a2();
    if (name == "A1xA2") return make_a1xa2();
    if (name == "Vcover") return make_vcover();
    if (name == "Ytilde") return make_ytilde();
    if (name == "A3_H4") return make_a3();
    if (name == "SP_level") return make_sp();
    fail(ErrorKind::UnknownSpace, "unknown space '" + std::string(name) + "'");
}

const SpaceModel& builtin_space(std::string_view name) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const SpaceModel>, std::less<>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(name);
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_shared<const SpaceModel>(build_space(name));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::string(name), built);
    return *it->second;
}

Rational ytilde_triple(const ClassExpr& c1, const ClassExpr& c2, const ClassExpr& c3, bool stacky) {
    const auto& form = *builtin_space("Ytilde").trilinear;
    Rational r = form.triple(c1, c2, c3);
    return stacky ? r / 12 : r;
}

Rational ytilde_pair_quadratic(const ClassExpr& qd, const ClassExpr& d, bool stacky) {
    const auto& form = *builtin_space("Ytilde").trilinear;
    Rational r = form.pair_quadratic(qd, d);
    return stacky ? r / 12 : r;
}

RationalVector pairing_vector(const SpaceModel& space, const ClassExpr& x, const std::vector<ClassExpr>& cols) {
    RationalVector out;
    for (const auto& col : cols) out.push_back(integrate(*space.algebra, x * col));
    return out;
}

namespace {

RationalVector row_against(const SpaceModel& source, const std::string& cls, const Rational& divisor,
                           const std::vector<std::string>& names) {
    if (divisor.is_zero()) fail(ErrorKind::InvalidArgument, "pushforward divisor must be nonzero");
    const CatalogEntry* e = source.find(cls);
    ClassExpr x = e ? e->expr : source.resolve(cls);
    std::vector<ClassExpr> cols;
    for (const auto& n : names) {
        const CatalogEntry* p = source.find(n);
        if (!p) fail(ErrorKind::MissingPullback, "space " + source.name + " has no pulled-back class '" + n + "'");
        cols.push_back(p->expr);
    }
    RationalVector row = pairing_vector(source, x, cols);
    for (auto& r : row) r /= divisor;
    return row;
}

}  // namespace

RationalVector pushforward_row(const SpaceModel& source, const std::string& cls, const Rational& divisor) {
    return row_against(source, cls, divisor, pullback_basis());
}

RationalVector pushforward_row_extended(const SpaceModel& source, const std::string& cls, const Rational& divisor) {
    return row_against(source, cls, divisor, pullback_extended());
}

}  // namespace ilab
