#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "contactloc/poly.hpp"

namespace contactloc {

// Reserved variable names used across the engines.
inline const std::string kVarU = "u";      // equivariant parameter
inline const std::string kVarS = "s";      // Reeb-extension generator
inline const std::string kVarPhi = "phi";  // oscillatory integration variable
inline const std::string kVarY = "y";      // transform-side variable

// Weighted sphere S^{2n+1} in C^{n+1} carrying the contact form scaled by
// positive Reeb weights w_j and a circle action with integer weights beta_j.
// The critical values of the contact moment map are lambda_j = beta_j / w_j.
struct WeightedSphere {
    WeightedSphere(int n, std::vector<mpq_class> w, std::vector<mpz_class> beta);

    int n;
    std::vector<mpq_class> w;
    std::vector<mpz_class> beta;
    std::vector<mpq_class> lambda;  // beta_j / w_j
    bool lambda_distinct;           // all lambda_j pairwise distinct
};

// Per-circle localization data for the j-th coordinate circle.
struct CriticalCircle {
    int index;
    mpq_class mu_value;          // lambda_j
    Poly euler_class;            // (u/2pi)^n * prod_{k!=j}(beta_k - beta_j w_k / w_j)
    mpq_class restriction_slope; // restriction sends s -> restriction_slope * u
    ExactScalar alpha_integral;  // integral of the contact form over the circle: 2pi/w_j
};

// Cohomology class represented by a polynomial in (u, s); equality holds
// modulo the ideal generated by prod_j(beta_j u + w_j s).
struct EquivariantClass {
    EquivariantClass() = default;
    explicit EquivariantClass(Poly representative);

    Poly rep;
};

// Contact moment map at a point of the unit sphere:
//   mu(z) = (sum beta_j |z_j|^2) / (sum w_j |z_j|^2).
// Throws OffSphereInput unless sum |z_j|^2 = 1 within 1e-9.
double moment_map(const WeightedSphere& sphere, const std::vector<std::complex<double>>& z);

// True iff 0 is a regular value in the interior of the moment image:
// no lambda_j = 0 and min lambda < 0 < max lambda.
bool check_zero_regular(const WeightedSphere& sphere);

// The n+1 critical circles with their localization data, ordered by index.
// Throws DegenerateCriticalSet when two lambda_j coincide.
std::vector<CriticalCircle> critical_circles(const WeightedSphere& sphere);

// Order of the kernel of the circle action on the zero level: gcd_j |beta_j|.
// Requires check_zero_regular.
unsigned long regular_isotropy_order(const WeightedSphere& sphere);

// The ideal generator prod_j(beta_j u + w_j s) of the cohomology ring.
Poly ring_ideal_generator(const WeightedSphere& sphere);

// Canonical representative with s-degree <= n, obtained by exact polynomial
// division against the ideal generator (leading s-coefficient prod w_j is a
// unit).  Idempotent.
EquivariantClass class_reduce(const EquivariantClass& c, const WeightedSphere& sphere);

// Equality in the quotient ring: the difference reduces to zero.
bool classes_equal(const EquivariantClass& a, const EquivariantClass& b,
                   const WeightedSphere& sphere);

}  // namespace contactloc
