#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace contactloc {

// Adaptive Simpson quadrature with absolute tolerance; recursion depth is
// bounded, so pathological integrands degrade to a coarse answer instead of
// overflowing the stack.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance, int max_depth = 60);

std::complex<double> adaptive_simpson_complex(const std::function<std::complex<double>(double)>& f,
                                              double a, double b, double tolerance,
                                              int max_depth = 60);

// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre_64();

// Gaussian moments G_k = integral_a^b y^k e^{-y^2 / (2 eps)} dy, for
// k = 0..max_k, via the erf closed form and upward recursion
//   G_k = eps (a^{k-1} E_a - b^{k-1} E_b) + (k-1) eps G_{k-2}.
std::vector<double> gaussian_moments(double a, double b, double eps, int max_k);

// Ordinary least squares y ~ intercept + slope * x, with the coefficient of
// determination of the fit.
struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r_squared = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace contactloc
