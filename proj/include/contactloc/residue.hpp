#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

#include "contactloc/poly.hpp"

namespace contactloc {

// Residue at 0 of q(z) * e^{i*lambda*z} / z^m for a polynomial q whose
// coefficients in z may involve further formal parameters:
//
//   residue = sum_{k=0}^{m-1} q_k * (i*lambda)^{m-1-k} / (m-1-k)!
//
// i.e. the z^{m-1} Taylor coefficient of q(z)e^{i lambda z}; the result is a
// polynomial in the remaining parameters (a constant when q has none).
// Requires m >= 1 and exact rational lambda.
Poly residue_at_zero(const Poly& q, const std::string& var, const mpq_class& lambda, int m);

// Floating-point twin for non-rational lambda; q must have constant
// coefficients in var.  Relative accuracy about 1e-12.
std::complex<double> residue_at_zero_numeric(const Poly& q, const std::string& var,
                                             double lambda, int m);

}  // namespace contactloc
