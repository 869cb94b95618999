#pragma once

#include "ilab/class_expr.hpp"
#include "ilab/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ilab {

struct GeneratorSpec {
    std::string name;
    int degree = 1;
    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct Presentation {
    std::vector<GeneratorSpec> generators;
    std::vector<ClassExpr> relations;
    int top_degree = 0;
    std::vector<std::pair<Monomial, Rational>> integral_spec;
};

class GradedAlgebra {
public:
    const Presentation& presentation() const { return pres_; }
    const std::vector<GeneratorSpec>& generators() const { return pres_.generators; }
    int top_degree() const { return pres_.top_degree; }

    bool has_generator(const std::string& name) const { return index_.count(name) != 0; }
    int generator_degree(const std::string& name) const;
    int degree(const Monomial& m) const;
    // Common degree of all terms; nullopt for zero or mixed degrees.
    std::optional<int> homogeneous_degree(const ClassExpr& x) const;

    // Monomials of degree d in canonical order, and the residue basis chosen among them.
    const std::vector<Monomial>& monomials(int d) const;
    const std::vector<Monomial>& basis(int d) const;
    std::size_t dimension(int d) const { return basis(d).size(); }

    // Coordinates of the degree-d component of x in basis(d).
    RationalVector coordinates(const ClassExpr& x, int d) const;
    ClassExpr from_coordinates(const RationalVector& v, int d) const;

    // Integral values on basis(top_degree()).
    const RationalVector& integral_values() const { return integral_; }

    // Canonical order on same-degree monomials (true if a precedes b).
    bool precedes(const Monomial& a, const Monomial& b) const;

private:
    friend GradedAlgebra build_algebra(Presentation p);

    struct Piece {
        std::vector<Monomial> monomials;
        std::vector<Monomial> basis;
        std::map<Monomial, RationalVector> reduction;
    };

    Presentation pres_;
    std::map<std::string, std::size_t> index_;
    std::vector<Piece> pieces_;
    RationalVector integral_;

    void check_known(const Monomial& m) const;
};

GradedAlgebra build_algebra(Presentation p);

ClassExpr normal_form(const GradedAlgebra& a, const ClassExpr& x);
Rational integrate(const GradedAlgebra& a, const ClassExpr& x);
Rational intersection_number(const GradedAlgebra& a, const std::vector<ClassExpr>& factors);
ClassExpr multiply(const GradedAlgebra& a, const ClassExpr& x, const ClassExpr& y);

// Trivial algebra: no generators, top degree 0, integral of 1 equal to 1.
GradedAlgebra trivial_algebra();

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b, const Rational& scale);

Matrix pairing_matrix(const GradedAlgebra& a, const std::vector<ClassExpr>& rows,
                      const std::vector<ClassExpr>& cols);

class AlgebraHom {
public:
    AlgebraHom() = default;
    AlgebraHom(std::vector<GeneratorSpec> source, std::map<std::string, ClassExpr> images);

    // Checks that every image is homogeneous of its generator's degree in the target.
    static AlgebraHom checked(std::vector<GeneratorSpec> source, const GradedAlgebra& target,
                              std::map<std::string, ClassExpr> images);
    // Endomorphism of a; generators absent from `moved` are fixed.
    static AlgebraHom endomorphism(const GradedAlgebra& a, std::map<std::string, ClassExpr> moved);
    static AlgebraHom identity(const GradedAlgebra& a) { return endomorphism(a, {}); }

    const std::vector<GeneratorSpec>& source() const { return source_; }
    const ClassExpr& image(const std::string& name) const;

private:
    std::vector<GeneratorSpec> source_;
    std::map<std::string, ClassExpr> images_;
};

ClassExpr substitute(const AlgebraHom& h, const ClassExpr& x);

struct GroupAction {
    std::vector<AlgebraHom> generators;
};

std::vector<ClassExpr> invariant_subspace(const GradedAlgebra& a, const GroupAction& g, int degree);

}  // namespace ilab
