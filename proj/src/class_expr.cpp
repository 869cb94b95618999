#include "ilab/class_expr.hpp"

#include <algorithm>

namespace ilab {

Monomial::Monomial(std::vector<std::pair<std::string, unsigned>> factors) {
    std::sort(factors.begin(), factors.end());
    for (auto& [name, e] : factors) {
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == name)
            factors_.back().second += e;
        else
            factors_.emplace_back(name, e);
    }
}

Monomial Monomial::generator(const std::string& name, unsigned exponent) {
    return Monomial({{name, exponent}});
}

unsigned Monomial::exponent(const std::string& name) const {
    for (const auto& [n, e] : factors_)
        if (n == name) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    auto all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return Monomial(std::move(all));
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [n, e] : factors_) {
        if (!s.empty()) s += "*";
        s += n;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

ClassExpr::ClassExpr(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

ClassExpr::ClassExpr(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

bool ClassExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ClassExpr::constant_term() const { return coefficient(Monomial()); }

Rational ClassExpr::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

std::set<std::string> ClassExpr::generator_names() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [n, e] : m.factors()) out.insert(n);
    return out;
}

void ClassExpr::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ClassExpr ClassExpr::operator-() const {
    ClassExpr out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ClassExpr& ClassExpr::operator+=(const ClassExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ClassExpr& ClassExpr::operator-=(const ClassExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ClassExpr operator*(const ClassExpr& a, const ClassExpr& b) {
    ClassExpr out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

ClassExpr& ClassExpr::operator*=(const ClassExpr& o) { return *this = *this * o; }

ClassExpr ClassExpr::pow(unsigned k) const {
    ClassExpr out(Rational(1));
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

std::string ClassExpr::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // graded order: lower degree first, then larger exponents on earlier names
    std::vector<std::pair<Monomial, Rational>> order(terms_.begin(), terms_.end());
    auto deg = [](const Monomial& m) {
        unsigned d = 0;
        for (const auto& f : m.factors()) d += f.second;
        return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
        unsigned dx = deg(x.first), dy = deg(y.first);
        if (dx != dy) return dx < dy;
        const auto &fx = x.first.factors(), &fy = y.first.factors();
        for (std::size_t i = 0; i < fx.size() && i < fy.size(); ++i) {
            if (fx[i].first != fy[i].first) return fx[i].first < fy[i].first;
            if (fx[i].second != fy[i].second) return fx[i].second > fy[i].second;
        }
        return false;
    });
    bool first = true;
    for (const auto& [m, c] : order) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            s += a.str();
        } else {
            if (a != Rational(1)) s += a.str() + "*";
            s += m.str();
        }
    }
    return s;
}

}  // namespace ilab
