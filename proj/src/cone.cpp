#include "ilab/cone.hpp"

#include "ilab/error.hpp"

#include <algorithm>

namespace ilab {

RationalVector Ray::to_vector() const {
    RationalVector v;
    v.reserve(direction.size());
    for (const auto& z : direction) v.emplace_back(z);
    return v;
}

std::string Ray::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < direction.size(); ++i) {
        if (i) s += ", ";
        s += direction[i].get_str();
    }
    return s + ")";
}

Ray canonicalize_ray(const RationalVector& v) {
    Integer l = 1;
    bool nonzero = false;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        nonzero = true;
        Integer d = x.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (!nonzero) fail(ErrorKind::ZeroVector, "cannot canonicalize the zero vector");
    Ray r;
    Integer g = 0;
    for (const auto& x : v) {
        Integer z = x.num() * (l / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        r.direction.push_back(z);
    }
    for (auto& z : r.direction) z /= g;
    return r;
}

namespace {

bool ray_less(const Ray& a, const Ray& b) {
    return std::lexicographical_compare(a.direction.begin(), a.direction.end(), b.direction.begin(),
                                        b.direction.end(), [](const Integer& x, const Integer& y) { return x < y; });
}

bool is_zero_vector(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

void check_dims(const std::vector<RationalVector>& rays, std::size_t dim) {
    for (const auto& r : rays)
        if (r.size() != dim) fail(ErrorKind::DimensionMismatch, "vector has wrong dimension");
}

}  // namespace

Cone Cone::from_vectors(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
    Cone c(ambient_dim);
    check_dims(vectors, ambient_dim);
    for (const auto& v : vectors)
        if (!is_zero_vector(v)) c.rays_.push_back(canonicalize_ray(v));
    std::sort(c.rays_.begin(), c.rays_.end(), ray_less);
    c.rays_.erase(std::unique(c.rays_.begin(), c.rays_.end()), c.rays_.end());
    return c;
}

std::vector<RationalVector> Cone::ray_vectors() const {
    std::vector<RationalVector> out;
    for (const auto& r : rays_) out.push_back(r.to_vector());
    return out;
}

std::string Cone::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (i) s += ", ";
        s += rays_[i].str();
    }
    return s + "]";
}

MembershipCertificate membership(const std::vector<RationalVector>& rays, const RationalVector& v) {
    const std::size_t d = v.size();
    const std::size_t n = rays.size();
    check_dims(rays, d);

    // Tableau rows: d constraints; columns: n ray multipliers, d artificials, rhs.
    const std::size_t width = n + d + 1;
    Matrix t(d, width);
    std::vector<int> flip(d, 1);
    for (std::size_t j = 0; j < d; ++j) {
        if (v[j].sign() < 0) flip[j] = -1;
        for (std::size_t i = 0; i < n; ++i) t(j, i) = flip[j] < 0 ? -rays[i][j] : rays[i][j];
        t(j, n + j) = 1;
        t(j, n + d) = flip[j] < 0 ? -v[j] : v[j];
    }
    std::vector<std::size_t> basis(d);
    for (std::size_t j = 0; j < d; ++j) basis[j] = n + j;

    // Reduced costs for minimizing the sum of artificials; cost[n+d] tracks minus the objective.
    RationalVector cost(width);
    for (std::size_t c = 0; c < width; ++c) {
        if (c >= n && c < n + d) continue;
        for (std::size_t j = 0; j < d; ++j) cost[c] -= t(j, c);
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t c = 0; c < n + d; ++c)
            if (cost[c].sign() < 0) {
                enter = c;
                break;
            }
        if (enter == width) break;
        std::size_t leave = d;
        Rational best;
        for (std::size_t j = 0; j < d; ++j) {
            if (t(j, enter).sign() <= 0) continue;
            Rational ratio = t(j, n + d) / t(j, enter);
            if (leave == d || ratio < best || (ratio == best && basis[j] < basis[leave])) {
                leave = j;
                best = ratio;
            }
        }
        if (leave == d) break;  // unbounded direction cannot occur for a bounded-below objective
        Rational p = t(leave, enter);
        for (std::size_t c = 0; c < width; ++c) t(leave, c) /= p;
        for (std::size_t j = 0; j < d; ++j) {
            if (j == leave || t(j, enter).is_zero()) continue;
            Rational f = t(j, enter);
            for (std::size_t c = 0; c < width; ++c) t(j, c) -= f * t(leave, c);
        }
        if (!cost[enter].is_zero()) {
            Rational f = cost[enter];
            for (std::size_t c = 0; c < width; ++c) cost[c] -= f * t(leave, c);
        }
        basis[leave] = enter;
    }

    MembershipCertificate cert;
    if (cost[n + d].is_zero()) {
        cert.inside = true;
        cert.coefficients.assign(n, Rational());
        for (std::size_t j = 0; j < d; ++j)
            if (basis[j] < n) cert.coefficients[basis[j]] = t(j, n + d);
    } else {
        cert.separator.assign(d, Rational());
        for (std::size_t j = 0; j < d; ++j) {
            Rational u = Rational(1) - cost[n + j];
            cert.separator[j] = flip[j] < 0 ? u : -u;
        }
    }
    if (!verify_certificate(rays, v, cert))
        fail(ErrorKind::InvalidArgument, "internal error: membership certificate failed verification");
    return cert;
}

MembershipCertificate membership(const Cone& c, const RationalVector& v) {
    if (v.size() != c.ambient_dim()) fail(ErrorKind::DimensionMismatch, "query vector has wrong dimension");
    return membership(c.ray_vectors(), v);
}

bool verify_certificate(const std::vector<RationalVector>& rays, const RationalVector& v,
                        const MembershipCertificate& cert) {
    if (cert.inside) {
        if (cert.coefficients.size() != rays.size()) return false;
        RationalVector sum(v.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (cert.coefficients[i].sign() < 0) return false;
            for (std::size_t j = 0; j < v.size(); ++j) sum[j] += cert.coefficients[i] * rays[i][j];
        }
        return sum == v;
    }
    if (cert.separator.size() != v.size()) return false;
    for (const auto& r : rays)
        if (dot(cert.separator, r).sign() < 0) return false;
    return dot(cert.separator, v).sign() < 0;
}

namespace {

RationalVector primitive(const RationalVector& v) { return canonicalize_ray(v).to_vector(); }

// Extreme rays of the pointed cone {x in Q^k : a.x >= 0 for all rows a}, rank(rows) = k.
std::vector<RationalVector> double_description(const std::vector<RationalVector>& rows, std::size_t k) {
    if (k == 0) return {};
    std::vector<std::size_t> initial;
    Matrix acc(0, k);
    for (std::size_t i = 0; i < rows.size() && initial.size() < k; ++i) {
        Matrix trial = acc;
        trial.append_row(rows[i]);
        if (rank(trial) > initial.size()) {
            acc = trial;
            initial.push_back(i);
        }
    }
    if (initial.size() < k) fail(ErrorKind::InvalidArgument, "internal error: constraint system not of full rank");

    // Rays of the simplicial starting cone are the columns of the inverse of acc.
    std::vector<RationalVector> rays;
    for (std::size_t j = 0; j < k; ++j) {
        RationalVector e(k);
        e[j] = 1;
        rays.push_back(primitive(*solve(acc, e)));
    }
    std::vector<std::size_t> processed = initial;

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::find(initial.begin(), initial.end(), i) != initial.end()) continue;
        const RationalVector& a = rows[i];
        std::vector<Rational> val;
        for (const auto& r : rays) val.push_back(dot(a, r));
        std::vector<RationalVector> next;
        for (std::size_t p = 0; p < rays.size(); ++p)
            if (val[p].sign() >= 0) next.push_back(rays[p]);
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p].sign() <= 0) continue;
            for (std::size_t m = 0; m < rays.size(); ++m) {
                if (val[m].sign() >= 0) continue;
                Matrix tight(0, k);
                for (auto q : processed)
                    if (dot(rows[q], rays[p]).is_zero() && dot(rows[q], rays[m]).is_zero()) tight.append_row(rows[q]);
                if (k >= 2 && rank(tight) != k - 2) continue;
                if (k < 2) continue;
                RationalVector combo(k);
                for (std::size_t j = 0; j < k; ++j) combo[j] = val[p] * rays[m][j] - val[m] * rays[p][j];
                next.push_back(primitive(combo));
            }
        }
        rays = std::move(next);
        processed.push_back(i);
    }
    return rays;
}

}  // namespace

Cone dual_cone(const Cone& c) {
    const std::size_t dim = c.ambient_dim();
    auto gens = c.ray_vectors();
    std::vector<RationalVector> out;
    if (gens.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            RationalVector e(dim);
            e[i] = 1;
            out.push_back(e);
            e[i] = -1;
            out.push_back(e);
        }
        return Cone::from_vectors(dim, out);
    }
    Matrix g = Matrix::from_rows(gens, dim);
    Matrix ech = g;
    auto piv = rref(ech);
    std::vector<RationalVector> span;
    for (std::size_t i = 0; i < piv.size(); ++i) span.push_back(ech.row(i));
    const std::size_t k = span.size();

    std::vector<RationalVector> cons;
    for (const auto& r : gens) {
        RationalVector row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(r, span[j]);
        cons.push_back(row);
    }
    for (const auto& z : double_description(cons, k)) {
        RationalVector y(dim);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < dim; ++i) y[i] += z[j] * span[j][i];
        out.push_back(y);
    }
    for (auto w : kernel(g)) {
        out.push_back(w);
        for (auto& x : w) x = -x;
        out.push_back(w);
    }
    return Cone::from_vectors(dim, out);
}

ExtremalityResult is_extremal_generator(const std::vector<RationalVector>& generators, std::size_t i) {
    if (i >= generators.size()) fail(ErrorKind::IndexOutOfRange, "ray index out of range");
    std::vector<RationalVector> canon;
    for (const auto& g : generators) canon.push_back(is_zero_vector(g) ? g : primitive(g));
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < canon.size(); ++j)
        if (j != i) others.push_back(canon[j]);
    ExtremalityResult res;
    res.certificate = membership(others, canon[i]);
    res.extremal = !res.certificate.inside;
    return res;
}

ExtremalityResult is_extremal_generator(const Cone& c, std::size_t i) {
    return is_extremal_generator(c.ray_vectors(), i);
}

Cone extremal_part(const Cone& c) {
    std::vector<RationalVector> keep;
    auto rays = c.ray_vectors();
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (is_extremal_generator(rays, i).extremal) keep.push_back(rays[i]);
    return Cone::from_vectors(c.ambient_dim(), keep);
}

bool is_simplicial(const Cone& c) {
    std::size_t span_dim = c.rays().empty() ? 0 : rank(Matrix::from_rows(c.ray_vectors(), c.ambient_dim()));
    return extremal_part(c).rays().size() == span_dim;
}

std::optional<RationalVector> unique_relation(const std::vector<RationalVector>& vectors) {
    if (vectors.empty()) return std::nullopt;
    const std::size_t d = vectors.front().size();
    check_dims(vectors, d);
    Matrix m = Matrix::from_rows(vectors, d).transposed();
    auto ker = kernel(m);
    if (ker.empty()) return std::nullopt;
    if (ker.size() > 1)
        fail(ErrorKind::AmbiguousRelation,
             "relation space has dimension " + std::to_string(ker.size()) + ", expected at most 1");
    RationalVector r = ker.front();
    Rational lead;
    for (const auto& x : r)
        if (!x.is_zero()) {
            lead = x;
            break;
        }
    for (auto& x : r) x /= lead;
    return r;
}

}  // namespace ilab
