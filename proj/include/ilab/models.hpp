#pragma once

#include "ilab/algebra.hpp"
#include "ilab/level.hpp"
#include "ilab/trilinear.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ilab {

enum class Engine { GradedAlgebra, TrilinearSpace, PairingSpace, LevelParamRing };

std::string_view engine_name(Engine e);

struct CatalogEntry {
    std::string name;
    ClassExpr expr;
    int degree = 0;
    std::string reference;
};

struct PairingSpace {
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;
    Matrix values;
};

// Names of the pulled-back basis classes every source space may carry.
inline const std::vector<std::string>& pullback_basis() {
    static const std::vector<std::string> names{"pL2", "pLM", "pM2", "pB2"};
    return names;
}
inline const std::vector<std::string>& pullback_extended() {
    static const std::vector<std::string> names{"pL2", "pLD", "pD2", "pLM", "pM2", "pB2"};
    return names;
}

class SpaceModel {
public:
    std::string name;
    Engine engine = Engine::GradedAlgebra;
    std::shared_ptr<const GradedAlgebra> algebra;
    std::shared_ptr<const TrilinearSpace> trilinear;
    std::shared_ptr<const PairingSpace> pairing;
    std::vector<CatalogEntry> catalog;
    std::map<std::string, AlgebraHom> homs;
    std::map<std::string, GroupAction> actions;
    std::map<std::string, Rational> constants;
    std::map<std::string, std::string> metadata;

    const CatalogEntry* find(const std::string& entry) const;
    bool knows(const std::string& symbol) const;
    // Generator or catalog entry, expanded in generators.
    ClassExpr resolve(const std::string& symbol) const;

    void add(const std::string& entry, const ClassExpr& expr, const std::string& reference);
};

std::vector<std::string> builtin_space_names();
SpaceModel build_space(std::string_view name);
// Shared immutable instance, built once.
const SpaceModel& builtin_space(std::string_view name);

Rational ytilde_triple(const ClassExpr& c1, const ClassExpr& c2, const ClassExpr& c3, bool stacky);
Rational ytilde_pair_quadratic(const ClassExpr& q, const ClassExpr& d, bool stacky);

// Pairings of a catalog class with pL2, pLM, pM2, pB2, divided by `divisor`.
RationalVector pushforward_row(const SpaceModel& source, const std::string& cls, const Rational& divisor);
// Same with pL2, pLD, pD2, pLM, pM2, pB2.
RationalVector pushforward_row_extended(const SpaceModel& source, const std::string& cls, const Rational& divisor);

// Pairing of a class against a list of columns in a space with an algebra.
RationalVector pairing_vector(const SpaceModel& space, const ClassExpr& x, const std::vector<ClassExpr>& cols);

}  // namespace ilab
