#pragma once

#include "ilab/linalg.hpp"
#include "ilab/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ilab {

// Primitive integer direction.
struct Ray {
    std::vector<Integer> direction;
    RationalVector to_vector() const;
    std::string str() const;
    friend bool operator==(const Ray&, const Ray&) = default;
};

Ray canonicalize_ray(const RationalVector& v);

class Cone {
public:
    explicit Cone(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}
    // Zero vectors are dropped; the rest are canonicalized, sorted and deduplicated.
    static Cone from_vectors(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Ray>& rays() const { return rays_; }
    std::vector<RationalVector> ray_vectors() const;
    std::string str() const;

    friend bool operator==(const Cone&, const Cone&) = default;

private:
    std::size_t dim_;
    std::vector<Ray> rays_;
};

struct MembershipCertificate {
    bool inside = false;
    RationalVector coefficients;  // per ray, when inside
    RationalVector separator;     // Farkas functional, when outside
};

// Exact Phase-I simplex on sum(lambda_i r_i) = v, lambda >= 0.
MembershipCertificate membership(const std::vector<RationalVector>& rays, const RationalVector& v);
MembershipCertificate membership(const Cone& c, const RationalVector& v);

// Re-checks a certificate with independent arithmetic.
bool verify_certificate(const std::vector<RationalVector>& rays, const RationalVector& v,
                        const MembershipCertificate& cert);

Cone dual_cone(const Cone& c);

struct ExtremalityResult {
    bool extremal = false;
    MembershipCertificate certificate;  // membership of ray i in the cone of the others
};

ExtremalityResult is_extremal_generator(const Cone& c, std::size_t i);
ExtremalityResult is_extremal_generator(const std::vector<RationalVector>& generators, std::size_t i);

// Rays of c that are extremal among c's rays.
Cone extremal_part(const Cone& c);

bool is_simplicial(const Cone& c);

std::optional<RationalVector> unique_relation(const std::vector<RationalVector>& vectors);

}  // namespace ilab
