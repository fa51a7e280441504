#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "contactloc/localization.hpp"
#include "contactloc/residue_engine.hpp"

namespace contactloc {

// Dirac atom coeff * delta^{(order)}(y - location).  Atoms arise when a
// numerator power meets or exceeds the pole order of its term, e.g. for
// classes containing u^n.
struct DiracAtom {
    mpq_class location;
    int order;
    ExactScalar coeff;
};

// Piecewise polynomial distribution in y over ExactScalar, with an optional
// list of Dirac atoms and a global prefactor (2pi)^{sqrt_two_pi_power/2}.
// All exact accessors (piece values, integrals, atom coefficients) are
// expressed in units of that prefactor so they stay inside the scalar field;
// numeric evaluation multiplies it back in.
//
// Pieces live on the half-open intervals [b_k, b_{k+1}) between consecutive
// breakpoints; the function vanishes outside.  Point values at breakpoints
// follow that convention and are not otherwise meaningful.
class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;
    PiecewisePolynomial(std::vector<mpq_class> breakpoints, std::vector<Poly> pieces,
                        std::vector<DiracAtom> atoms, int sqrt_two_pi_power);

    const std::vector<mpq_class>& breakpoints() const { return breakpoints_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    const std::vector<DiracAtom>& atoms() const { return atoms_; }
    int sqrt_two_pi_power() const { return sqrt_two_pi_power_; }

    bool is_zero() const;
    // Smallest closed interval carrying a nonzero piece or atom.
    std::optional<std::pair<mpq_class, mpq_class>> support() const;

    // Exact value of the smooth part at y (atoms ignored), in prefactor units.
    ExactScalar value_at(const mpq_class& y) const;
    // Exact integral of the smooth part plus order-0 atom masses, in
    // prefactor units.
    ExactScalar integral() const;

    // Numeric value of the smooth part, prefactor included, atoms ignored.
    std::complex<double> eval(double y) const;
    double prefactor() const;

private:
    std::vector<mpq_class> breakpoints_;  // sorted, distinct
    std::vector<Poly> pieces_;            // size = max(0, breakpoints-1), polynomials in y
    std::vector<DiracAtom> atoms_;        // sorted by (location, order), nonzero coeffs
    int sqrt_two_pi_power_ = 0;
};

// Transform-side profile of the pushforward: each oscillatory term
// e^{i xi phi} q(phi) / (c phi^m) contributes truncated powers of (y - xi)
// supported on [xi, inf) plus Dirac atoms at xi, under one fixed boundary
// regularization of the poles; the truncated powers cancel identically beyond
// the largest xi because the total sum is pole-free, which is asserted
// exactly.  Supported inside [-max lambda, -min lambda].  Requires distinct,
// nonzero critical values (DegenerateCriticalSet / LambdaZero otherwise).
PiecewisePolynomial dh_distribution(const WeightedSphere& sphere, const EquivariantClass& eta);

// Gaussian-damped pairing
//   I(eps) = 1 / ((2 pi i) sqrt(eps) vol G) * integral Q(y) e^{-y^2/(2 eps)} dy,
// evaluated in closed form per piece via erf-based moment recursion; atoms
// contribute Hermite-weighted Gaussian point values.
std::complex<double> I_epsilon(const WeightedSphere& sphere, const EquivariantClass& eta,
                               double epsilon);
std::complex<double> I_epsilon(const PiecewisePolynomial& profile, double epsilon);

// Same integral by adaptive quadrature over the smooth part (atoms handled
// in closed form); comparison twin for the moment recursion.
std::complex<double> I_epsilon_quadrature(const PiecewisePolynomial& profile, double epsilon,
                                          double tolerance);

// Limit and decay diagnostics of I(eps) on a grid of epsilons.
struct AsymptoticReport {
    std::vector<double> epsilons;
    std::vector<std::complex<double>> I_values;
    ExactScalar limit;                    // quotient pairing, reached as eps -> 0
    double decay_exponent_estimate = 0.0; // c in A eps^{-1/2} e^{-c/eps}
    double fit_r_squared = 0.0;
    double fit_amplitude = 0.0;
    bool monotone_approach = false;       // |I(eps) - limit| decreasing as eps decreases
};
AsymptoticReport asymptotic_report(const WeightedSphere& sphere, const EquivariantClass& eta,
                                   std::vector<double> epsilon_grid);

// Upper bound for the Gaussian tail integral_delta^inf x^n e^{-a x^2} dx:
//   p_n * e^{-delta^2 a / 2},  p_0 = sqrt(pi/(4a)), p_1 = 1/(2a),
//   p_n = delta^{n-1}/(2a) + (n-1)/(2a) * p_{n-2}.
double gaussian_tail_bound(int n, double delta, double a);

// Quadrature value of the same tail integral (comparison twin).
double gaussian_tail_integral_numeric(int n, double delta, double a, double tolerance = 1e-12);

// Numeric inverse transform of a profile at phi; reproduces the oscillatory
// pushforward pointwise.
std::complex<double> inverse_transform_numeric(const PiecewisePolynomial& profile, double phi);

// Direct numeric evaluation of a pushforward term sum at phi != 0.
std::complex<double> pushforward_eval_numeric(const std::vector<LocalizationTerm>& terms,
                                              double phi);

// Exact pole-free limit of the pushforward sum at phi = 0 (the total is
// regular even though individual terms are not).
ExactScalar pushforward_value_at_zero(const std::vector<LocalizationTerm>& terms);

}  // namespace contactloc
