#pragma once

#include "ilab/algebra.hpp"
#include "ilab/error.hpp"
#include "ilab/models.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ilab {

struct SourcePosition {
    std::string file;
    int line = 1;
    int col = 1;
    std::string str() const { return file + ":" + std::to_string(line) + ":" + std::to_string(col); }
};

class ParseError : public Error {
public:
    ParseError(SourcePosition pos, std::vector<std::string> expected, std::string found);
    const SourcePosition& position() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    SourcePosition pos_;
    std::vector<std::string> expected_;
    std::string found_;
};

// Evaluation failure tied to a source location.
class ScenarioError : public Error {
public:
    ScenarioError(ErrorKind kind, SourcePosition pos, const std::string& message);
    const SourcePosition& position() const { return pos_; }
    const std::string& detail() const { return detail_; }

private:
    SourcePosition pos_;
    std::string detail_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Name, Neg, Add, Sub, Mul, Pow };
    Kind kind = Kind::Number;
    SourcePosition pos;
    Rational number;
    std::string name;
    ExprPtr lhs, rhs;
    unsigned exponent = 0;
};

struct ConeExpr {
    enum class Kind { Inline, Named, Dual };
    Kind kind = Kind::Inline;
    SourcePosition pos;
    std::vector<ExprPtr> generators;
    std::optional<std::string> under;
    std::string name;
    std::shared_ptr<const ConeExpr> inner;
};

struct RingDef {
    SourcePosition pos;
    std::string name;
    std::vector<GeneratorSpec> generators;
    std::vector<ExprPtr> relations;
    int top = 0;
    std::vector<std::pair<Monomial, Rational>> integral;
    std::optional<Rational> scale;
};

struct ClassDef {
    SourcePosition pos;
    std::string name;
    std::string space;
    ExprPtr expr;
};

struct ConeDef {
    SourcePosition pos;
    std::string name;
    ConeExpr cone;
};

struct UseStmt {
    SourcePosition pos;
    std::string space;
};

struct Check {
    enum class Kind { Equal, Member, Extremal, Simplicial, Fixed, ConeEqual, Relation };
    Kind kind = Kind::Equal;
    bool negated = false;
    ExprPtr lhs, rhs;
    ConeExpr cone, cone2;
    std::string action;
    std::vector<ExprPtr> items;
    std::optional<RationalVector> relation;  // nullopt: no relation expected
};

struct Assertion {
    SourcePosition pos;
    std::optional<std::string> space;
    Check check;
};

using Statement = std::variant<RingDef, ClassDef, ConeDef, UseStmt, Assertion>;

struct ScenarioAST {
    std::string file;
    std::vector<Statement> statements;
};

inline constexpr int kMaxNesting = 64;

ScenarioAST parse(std::string_view text, const std::string& file = "<input>");
ExprPtr parse_expression(std::string_view text, const std::string& file = "<expr>");

std::string print(const ScenarioAST& ast);
std::string print(const Expr& e);
std::string print(const ConeExpr& c);
std::string print(const Check& c);

// Structural equality ignoring source positions.
bool equivalent(const ScenarioAST& a, const ScenarioAST& b);
bool equivalent(const Expr& a, const Expr& b);

// Evaluates an expression with identifiers taken from a space (generators and catalog).
ClassExpr evaluate_expression(const Expr& e, const SpaceModel& space);

// Vector used for cone work: coordinates in the pulled-back basis when the class lies in its span,
// otherwise its pairings with that basis; spaces without the basis use degree-piece coordinates.
RationalVector cone_coordinates(const ClassExpr& x, const SpaceModel& space);

struct AssertionRecord {
    SourcePosition pos;
    std::string desc;
    std::string expected;
    std::string computed;
    bool numeric = false;  // expected/computed are "a/b" rationals
    bool pass = false;
};

struct ScenarioReport {
    std::string scenario;
    std::vector<AssertionRecord> records;
    double wall_seconds = 0;

    std::size_t passed() const;
    std::size_t failed() const;
};

ScenarioReport evaluate(const ScenarioAST& ast);
ScenarioReport check_text(std::string_view text, const std::string& file);

}  // namespace ilab
