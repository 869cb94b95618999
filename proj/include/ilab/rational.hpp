#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ilab {

using Integer = mpz_class;

// Exact rational, always canonical (reduced, positive denominator).
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(mpq_class q);

    // Accepts "a", "-a", "a/b".
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string str() const;  // "a/b" or "a"
    std::string fraction_str() const;  // always "a/b"

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational pow(unsigned k) const;

    std::size_t hash() const;

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;

std::string to_string(const RationalVector& v);

}  // namespace ilab

template <>
struct std::hash<ilab::Rational> {
    std::size_t operator()(const ilab::Rational& r) const noexcept { return r.hash(); }
};
