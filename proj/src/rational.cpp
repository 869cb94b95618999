#include "ilab/rational.hpp"

#include "ilab/error.hpp"

#include <cctype>

namespace ilab {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
    q_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view n = body.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d))
        fail(ErrorKind::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
    Integer num{std::string(n)}, den{std::string(d)};
    if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    if (neg) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::fraction_str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned k) const {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), k);
    return Rational(n, d);
}

std::size_t Rational::hash() const {
    std::hash<std::string> h;
    return h(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string to_string(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

std::string_view kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
        case ErrorKind::NonHomogeneousRelation: return "NonHomogeneousRelation";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::InconsistentIntegral: return "InconsistentIntegral";
        case ErrorKind::UnderdeterminedIntegral: return "UnderdeterminedIntegral";
        case ErrorKind::NameCollision: return "NameCollision";
        case ErrorKind::UnmappedGenerator: return "UnmappedGenerator";
        case ErrorKind::ActionNotDegreePreserving: return "ActionNotDegreePreserving";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::AmbiguousRelation: return "AmbiguousRelation";
        case ErrorKind::UnknownSpace: return "UnknownSpace";
        case ErrorKind::NonDivisorClass: return "NonDivisorClass";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::ParameterNotCancelled: return "ParameterNotCancelled";
        case ErrorKind::MissingPullback: return "MissingPullback";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NameResolutionError: return "NameResolutionError";
        case ErrorKind::UnknownFormat: return "UnknownFormat";
    }
    return "Error";
}

}  // namespace ilab
