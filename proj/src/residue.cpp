#include "contactloc/residue.hpp"

#include "contactloc/errors.hpp"

namespace contactloc {

namespace {

// (i*lambda)^j / j! as an exact Gaussian rational.
ExactScalar i_lambda_power_over_factorial(const mpq_class& lambda, int j) {
    mpq_class magnitude(1);
    mpz_class factorial(1);
    for (int k = 1; k <= j; ++k) {
        magnitude *= lambda;
        factorial *= k;
    }
    magnitude /= mpq_class(factorial);
    switch (j % 4) {
        case 0: return ExactScalar(magnitude);
        case 1: return ExactScalar(0, magnitude, 0);
        case 2: return ExactScalar(-magnitude);
        default: return ExactScalar(0, -magnitude, 0);
    }
}

}  // namespace

Poly residue_at_zero(const Poly& q, const std::string& var, const mpq_class& lambda, int m) {
    if (m < 1) throw Error("residue_at_zero requires pole order m >= 1");
    Poly result;
    for (int k = 0; k < m; ++k) {
        Poly coeff = q.coefficient_of(var, k);
        if (coeff.is_zero()) continue;
        result += coeff * Poly::constant(i_lambda_power_over_factorial(lambda, m - 1 - k));
    }
    return result;
}

std::complex<double> residue_at_zero_numeric(const Poly& q, const std::string& var,
                                             double lambda, int m) {
    if (m < 1) throw Error("residue_at_zero_numeric requires pole order m >= 1");
    std::complex<double> result(0.0, 0.0);
    const std::complex<double> i_lambda(0.0, lambda);
    for (int k = 0; k < m; ++k) {
        Poly coeff = q.coefficient_of(var, k);
        if (coeff.is_zero()) continue;
        std::complex<double> weight(1.0, 0.0);
        for (int j = 1; j <= m - 1 - k; ++j) weight *= i_lambda / static_cast<double>(j);
        result += coeff.as_constant().to_complex() * weight;
    }
    return result;
}

}  // namespace contactloc
