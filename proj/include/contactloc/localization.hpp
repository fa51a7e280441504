#pragma once

#include <vector>

#include "contactloc/rational_fn.hpp"
#include "contactloc/sphere_model.hpp"

namespace contactloc {

// One summand of the fixed-point expansion of the oscillatory pushforward:
//   e^{i * exponent_lambda * phi} * amplitude(phi)
// attached to a critical circle.  exponent_lambda = -lambda_j, and the
// amplitude is (2pi/w_j) * eta_j(phi) / e_j(phi), whose denominator is a
// constant multiple of phi^n before reduction.
struct LocalizationTerm {
    int circle_index;
    mpq_class exponent_lambda;
    RationalFn amplitude;
};

// Fixed-point evaluation of the pairing of the contact form with a class:
// sum_j alpha_integral_j * eta_j(u) / e_j(u).  The rational-function sum must
// cancel to a polynomial in u, which is returned; failure to cancel throws
// NonPolynomialResult and signals a representative outside the ring.
Poly pair_alpha_eta(const WeightedSphere& sphere, const EquivariantClass& eta);

// Fixed-point expansion of the pushforward of eta * e^{i d_G alpha}: one term
// per critical circle, ordered by index.
std::vector<LocalizationTerm> pushforward(const WeightedSphere& sphere,
                                          const EquivariantClass& eta);

// Contact volume 2 pi^{n+1} / (n! prod w_j), computed through the fixed-point
// sum with two internally chosen auxiliary circle actions and independently
// through the closed form; all three must agree exactly.
ExactScalar contact_volume(const WeightedSphere& sphere);

// The closed form alone.
ExactScalar contact_volume_closed_form(const WeightedSphere& sphere);

// Exact check of the fixed-point identity
//   sum_j beta_j^n / prod_{k != j}(beta_k w_j / w_k - beta_j) = (-1)^n.
// `perturbation` shifts the computed sum and exists as a negative-control
// hook for the verification suite.
bool localization_identity_check(const WeightedSphere& sphere, double perturbation = 0.0);

}  // namespace contactloc
