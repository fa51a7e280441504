#include "contactloc/localization.hpp"

#include <set>

#include "contactloc/errors.hpp"

namespace contactloc {

namespace {

// Restriction of a class to the j-th circle as a polynomial in `var`:
// substitute s -> slope * u, then rename u to `var`.
Poly restrict_class(const EquivariantClass& eta, const mpq_class& slope, const std::string& var) {
    Poly restricted = eta.rep.substitute(kVarS, Poly::variable(kVarU) * ExactScalar(slope));
    if (var != kVarU) restricted = restricted.substitute(kVarU, Poly::variable(var));
    return restricted;
}

mpz_class int_pow(const mpz_class& base, int exponent) {
    mpz_class out(1);
    for (int k = 0; k < exponent; ++k) out *= base;
    return out;
}

// The exact fixed-point sum sum_j beta_j^n / prod_{k!=j}(beta_k w_j / w_k - beta_j),
// defined whenever the lambda_j are pairwise distinct; equals (-1)^n.
mpq_class fixed_point_rational_sum(const std::vector<mpq_class>& w,
                                   const std::vector<mpz_class>& beta, int n) {
    mpq_class sum(0);
    for (size_t j = 0; j < w.size(); ++j) {
        mpq_class denom(1);
        for (size_t k = 0; k < w.size(); ++k) {
            if (k == j) continue;
            denom *= mpq_class(beta[k]) * w[j] / w[k] - mpq_class(beta[j]);
        }
        sum += mpq_class(int_pow(beta[j], n)) / denom;
    }
    return sum;
}

// beta_j = base + step*j, with each entry bumped upward until its critical
// value beta_j / w_j avoids all earlier ones.  Each bump raises the value by
// 1/w_j, so entry j needs at most j bumps.
std::vector<mpz_class> auxiliary_beta(const std::vector<mpq_class>& w, long base, long step) {
    std::vector<mpz_class> beta;
    beta.reserve(w.size());
    for (size_t j = 0; j < w.size(); ++j) beta.emplace_back(base + step * static_cast<long>(j));
    std::set<mpq_class> values;
    for (size_t j = 0; j < w.size(); ++j) {
        mpq_class value = mpq_class(beta[j]) / w[j];
        while (values.count(value) != 0) {
            beta[j] += 1;
            value = mpq_class(beta[j]) / w[j];
        }
        values.insert(value);
    }
    return beta;
}

mpq_class product_of_weights(const std::vector<mpq_class>& w) {
    mpq_class out(1);
    for (const auto& wj : w) out *= wj;
    return out;
}

}  // namespace

Poly pair_alpha_eta(const WeightedSphere& sphere, const EquivariantClass& eta) {
    RationalFn sum(kVarU);
    for (const auto& circle : critical_circles(sphere)) {
        Poly numerator = restrict_class(eta, circle.restriction_slope, kVarU) * circle.alpha_integral;
        sum = sum + RationalFn(kVarU, numerator, circle.euler_class);
    }
    return sum.as_polynomial();
}

std::vector<LocalizationTerm> pushforward(const WeightedSphere& sphere,
                                          const EquivariantClass& eta) {
    std::vector<LocalizationTerm> terms;
    for (const auto& circle : critical_circles(sphere)) {
        Poly numerator =
            restrict_class(eta, circle.restriction_slope, kVarPhi) * circle.alpha_integral;
        Poly denominator = circle.euler_class.substitute(kVarU, Poly::variable(kVarPhi));
        terms.push_back(LocalizationTerm{circle.index, -circle.mu_value,
                                         RationalFn(kVarPhi, numerator, denominator)});
    }
    return terms;
}

ExactScalar contact_volume_closed_form(const WeightedSphere& sphere) {
    mpz_class factorial(1);
    for (int k = 2; k <= sphere.n; ++k) factorial *= k;
    mpq_class coeff = mpq_class(2) / (mpq_class(factorial) * product_of_weights(sphere.w));
    return ExactScalar(coeff, 0, sphere.n + 1);
}

ExactScalar contact_volume(const WeightedSphere& sphere) {
    ExactScalar closed = contact_volume_closed_form(sphere);

    mpz_class factorial(1);
    for (int k = 2; k <= sphere.n; ++k) factorial *= k;
    int sign = sphere.n % 2 == 0 ? 1 : -1;

    for (long variant = 0; variant < 2; ++variant) {
        std::vector<mpz_class> beta =
            auxiliary_beta(sphere.w, variant == 0 ? 1 : 3, variant == 0 ? 1 : 2);
        mpq_class sum = fixed_point_rational_sum(sphere.w, beta, sphere.n);
        // volume = (1/2^n n!) * (2pi)^{n+1} * (-1)^n * sum / prod(w)
        mpq_class rational = 2 * sign * sum / (mpq_class(factorial) * product_of_weights(sphere.w));
        ExactScalar localized(rational, 0, sphere.n + 1);
        if (localized != closed) {
            throw Error("localized contact volume disagrees with the closed form for beta variant " +
                        std::to_string(variant));
        }
    }
    return closed;
}

bool localization_identity_check(const WeightedSphere& sphere, double perturbation) {
    if (!sphere.lambda_distinct) {
        throw DegenerateCriticalSet("fixed-point identity requires distinct critical values");
    }
    mpq_class sum = fixed_point_rational_sum(sphere.w, sphere.beta, sphere.n);
    if (perturbation != 0.0) sum += mpq_class(perturbation);
    return sum == (sphere.n % 2 == 0 ? mpq_class(1) : mpq_class(-1));
}

}  // namespace contactloc
