#include "contactloc/dh.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "contactloc/errors.hpp"
#include "contactloc/numeric.hpp"
#include "contactloc/residue.hpp"

namespace contactloc {

namespace {

// i^r and (-i)^r as exact scalars.
ExactScalar unit_i_power(int r) {
    switch (((r % 4) + 4) % 4) {
        case 0: return ExactScalar(1);
        case 1: return ExactScalar::unit_i();
        case 2: return ExactScalar(-1);
        default: return -ExactScalar::unit_i();
    }
}

mpq_class factorial_q(int n) {
    mpz_class out(1);
    for (int k = 2; k <= n; ++k) out *= k;
    return mpq_class(out);
}

mpq_class rational_pow(const mpq_class& base, int exponent) {
    mpq_class out(1);
    for (int k = 0; k < exponent; ++k) out *= base;
    return out;
}

// Probabilists' Hermite polynomial He_p(x).
double hermite_he(int p, double x) {
    double h0 = 1.0, h1 = x;
    if (p == 0) return h0;
    for (int k = 1; k < p; ++k) {
        double h2 = x * h1 - k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

// integral of delta^{(order)}(y - loc) * e^{-y^2/(2 eps)} dy.
double atom_gaussian_weight(const DiracAtom& atom, double eps) {
    double loc = atom.location.get_d();
    return std::pow(eps, -0.5 * atom.order) * hermite_he(atom.order, loc / std::sqrt(eps)) *
           std::exp(-loc * loc / (2.0 * eps));
}

std::complex<double> piece_coefficients_eval(const Poly& piece, double y) {
    std::map<std::string, std::complex<double>> at{{kVarY, std::complex<double>(y, 0.0)}};
    return piece.is_constant() ? piece.constant_term().to_complex() : piece.eval(at);
}

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<mpq_class> breakpoints,
                                         std::vector<Poly> pieces, std::vector<DiracAtom> atoms,
                                         int sqrt_two_pi_power)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      atoms_(std::move(atoms)),
      sqrt_two_pi_power_(sqrt_two_pi_power) {
    if (!breakpoints_.empty() && pieces_.size() + 1 != breakpoints_.size()) {
        throw Error("piecewise polynomial needs one piece per breakpoint gap");
    }
    for (auto& b : breakpoints_) b.canonicalize();
    for (auto& atom : atoms_) atom.location.canonicalize();
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end())) {
        throw Error("piecewise polynomial breakpoints must be sorted");
    }
    for (const auto& piece : pieces_) {
        for (const auto& var : piece.variables()) {
            if (var != kVarY) throw Error("piece uses variable '" + var + "', expected only y");
        }
    }
}

bool PiecewisePolynomial::is_zero() const {
    return atoms_.empty() &&
           std::all_of(pieces_.begin(), pieces_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<std::pair<mpq_class, mpq_class>> PiecewisePolynomial::support() const {
    std::optional<std::pair<mpq_class, mpq_class>> out;
    auto extend = [&out](const mpq_class& lo, const mpq_class& hi) {
        if (!out) {
            out = {lo, hi};
            return;
        }
        out->first = std::min(out->first, lo);
        out->second = std::max(out->second, hi);
    };
    for (size_t k = 0; k < pieces_.size(); ++k) {
        if (!pieces_[k].is_zero()) extend(breakpoints_[k], breakpoints_[k + 1]);
    }
    for (const auto& atom : atoms_) extend(atom.location, atom.location);
    return out;
}

ExactScalar PiecewisePolynomial::value_at(const mpq_class& y) const {
    mpq_class y_c(y);
    y_c.canonicalize();
    if (breakpoints_.empty() || y_c < breakpoints_.front() || y_c >= breakpoints_.back()) {
        return ExactScalar();
    }
    size_t index =
        static_cast<size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), y_c) -
                            breakpoints_.begin()) -
        1;
    return pieces_[index].substitute(kVarY, Poly::constant(ExactScalar(y_c))).as_constant();
}

ExactScalar PiecewisePolynomial::integral() const {
    ExactScalar total;
    for (size_t k = 0; k < pieces_.size(); ++k) {
        const Poly& piece = pieces_[k];
        const mpq_class& a = breakpoints_[k];
        const mpq_class& b = breakpoints_[k + 1];
        int degree = piece.degree_in(kVarY);
        for (int d = 0; d <= degree; ++d) {
            Poly coeff = piece.coefficient_of(kVarY, d);
            if (coeff.is_zero()) continue;
            mpq_class advance = (rational_pow(b, d + 1) - rational_pow(a, d + 1)) / (d + 1);
            total += coeff.as_constant() * ExactScalar(advance);
        }
    }
    for (const auto& atom : atoms_) {
        if (atom.order == 0) total += atom.coeff;
    }
    return total;
}

std::complex<double> PiecewisePolynomial::eval(double y) const {
    if (breakpoints_.empty()) return {0.0, 0.0};
    double lo = breakpoints_.front().get_d();
    double hi = breakpoints_.back().get_d();
    if (y < lo || y >= hi) return {0.0, 0.0};
    size_t index = pieces_.size() - 1;
    for (size_t k = 0; k + 1 < breakpoints_.size(); ++k) {
        if (y < breakpoints_[k + 1].get_d()) {
            index = k;
            break;
        }
    }
    return prefactor() * piece_coefficients_eval(pieces_[index], y);
}

double PiecewisePolynomial::prefactor() const {
    return std::pow(2.0 * M_PI, 0.5 * sqrt_two_pi_power_);
}

PiecewisePolynomial dh_distribution(const WeightedSphere& sphere, const EquivariantClass& eta) {
    std::vector<LocalizationTerm> terms = pushforward(sphere, eta);
    for (const auto& term : terms) {
        if (term.exponent_lambda == 0) {
            throw LambdaZero("critical value 0 at circle " + std::to_string(term.circle_index) +
                             ": the regularized transform requires nonzero critical values");
        }
    }

    // Truncated-power contributions, keyed by the half-line start xi_j, and
    // Dirac atoms keyed by (location, order).
    std::map<mpq_class, Poly> half_lines;
    std::map<std::pair<mpq_class, int>, ExactScalar> atom_map;
    std::vector<mpq_class> breakpoints;
    for (const auto& term : terms) {
        breakpoints.push_back(term.exponent_lambda);
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    Poly y = Poly::variable(kVarY);
    for (const auto& term : terms) {
        if (term.amplitude.is_zero()) continue;
        ExactScalar denom_coeff;
        int pole_order = 0;
        if (!term.amplitude.denominator_monomial(&denom_coeff, &pole_order)) {
            throw UnsupportedPole("pushforward term has poles away from 0: " +
                                  term.amplitude.str());
        }
        const mpq_class& xi = term.exponent_lambda;
        Poly shifted = y - Poly::constant(ExactScalar(xi));  // (y - xi)
        int degree = term.amplitude.numerator().degree_in(term.amplitude.var());
        for (int k = 0; k <= degree; ++k) {
            Poly coeff_poly = term.amplitude.numerator().coefficient_of(term.amplitude.var(), k);
            if (coeff_poly.is_zero()) continue;
            ExactScalar q_k = coeff_poly.as_constant() / denom_coeff;
            if (k < pole_order) {
                int r = pole_order - k;
                ExactScalar scale =
                    q_k * unit_i_power(-r) * ExactScalar(mpq_class(1) / factorial_q(r - 1));
                half_lines[xi] += shifted.pow(static_cast<unsigned>(r - 1)) * scale;
            } else {
                int p = k - pole_order;
                atom_map[{xi, p}] += q_k * unit_i_power(p);
            }
        }
    }

    // Accumulate half-lines left to right; beyond the last start the total
    // must cancel exactly, which is the compact-support statement.
    std::vector<Poly> pieces(breakpoints.size() > 0 ? breakpoints.size() - 1 : 0);
    Poly running;
    for (size_t k = 0; k < breakpoints.size(); ++k) {
        auto it = half_lines.find(breakpoints[k]);
        if (it != half_lines.end()) running += it->second;
        if (k + 1 < breakpoints.size()) pieces[k] = running;
    }
    if (!running.is_zero()) {
        throw NonPolynomialResult(
            "transform tail fails to cancel; the class representative is not in the ring");
    }

    std::vector<DiracAtom> atoms;
    for (const auto& [key, coeff] : atom_map) {
        if (!coeff.is_zero()) atoms.push_back(DiracAtom{key.first, key.second, coeff});
    }
    return PiecewisePolynomial(std::move(breakpoints), std::move(pieces), std::move(atoms), 1);
}

std::complex<double> I_epsilon(const PiecewisePolynomial& profile, double epsilon) {
    if (epsilon <= 0.0) throw ConfigError("epsilon must be positive");
    std::complex<double> integral_value(0.0, 0.0);
    for (size_t k = 0; k < profile.pieces().size(); ++k) {
        const Poly& piece = profile.pieces()[k];
        if (piece.is_zero()) continue;
        double a = profile.breakpoints()[k].get_d();
        double b = profile.breakpoints()[k + 1].get_d();
        int degree = piece.degree_in(kVarY);
        std::vector<double> moments = gaussian_moments(a, b, epsilon, degree);
        for (int d = 0; d <= degree; ++d) {
            Poly coeff = piece.coefficient_of(kVarY, d);
            if (coeff.is_zero()) continue;
            integral_value += coeff.as_constant().to_complex() * moments[static_cast<size_t>(d)];
        }
    }
    for (const auto& atom : profile.atoms()) {
        integral_value += atom.coeff.to_complex() * atom_gaussian_weight(atom, epsilon);
    }
    double two_pi = 2.0 * M_PI;
    std::complex<double> normalization =
        std::complex<double>(0.0, -1.0) / (two_pi * two_pi * std::sqrt(epsilon));
    return profile.prefactor() * integral_value * normalization;
}

std::complex<double> I_epsilon(const WeightedSphere& sphere, const EquivariantClass& eta,
                               double epsilon) {
    return I_epsilon(dh_distribution(sphere, eta), epsilon);
}

std::complex<double> I_epsilon_quadrature(const PiecewisePolynomial& profile, double epsilon,
                                          double tolerance) {
    if (epsilon <= 0.0) throw ConfigError("epsilon must be positive");
    std::complex<double> integral_value(0.0, 0.0);
    for (size_t k = 0; k < profile.pieces().size(); ++k) {
        const Poly& piece = profile.pieces()[k];
        if (piece.is_zero()) continue;
        double a = profile.breakpoints()[k].get_d();
        double b = profile.breakpoints()[k + 1].get_d();
        auto f = [&piece, epsilon](double y) {
            return piece_coefficients_eval(piece, y) * std::exp(-y * y / (2.0 * epsilon));
        };
        integral_value += adaptive_simpson_complex(f, a, b, tolerance);
    }
    for (const auto& atom : profile.atoms()) {
        integral_value += atom.coeff.to_complex() * atom_gaussian_weight(atom, epsilon);
    }
    double two_pi = 2.0 * M_PI;
    std::complex<double> normalization =
        std::complex<double>(0.0, -1.0) / (two_pi * two_pi * std::sqrt(epsilon));
    return profile.prefactor() * integral_value * normalization;
}

AsymptoticReport asymptotic_report(const WeightedSphere& sphere, const EquivariantClass& eta,
                                   std::vector<double> epsilon_grid) {
    if (epsilon_grid.empty()) throw ConfigError("epsilon grid must be nonempty");
    std::sort(epsilon_grid.begin(), epsilon_grid.end(), std::greater<>());

    AsymptoticReport report;
    report.epsilons = epsilon_grid;
    report.limit = quotient_pairing(sphere, eta);
    PiecewisePolynomial profile = dh_distribution(sphere, eta);

    std::complex<double> limit_value = report.limit.to_complex();
    std::vector<double> inv_eps, log_scaled_error;
    std::vector<double> errors;
    for (double eps : epsilon_grid) {
        std::complex<double> value = I_epsilon(profile, eps);
        report.I_values.push_back(value);
        double err = std::abs(value - limit_value);
        errors.push_back(err);
        if (err > 0.0) {
            inv_eps.push_back(1.0 / eps);
            log_scaled_error.push_back(std::log(err) + 0.5 * std::log(eps));
        }
    }
    report.monotone_approach = true;
    for (size_t k = 0; k + 1 < errors.size(); ++k) {
        if (errors[k + 1] >= errors[k]) report.monotone_approach = false;
    }
    if (inv_eps.size() >= 2) {
        LinearFit fit = linear_fit(inv_eps, log_scaled_error);
        report.decay_exponent_estimate = -fit.slope;
        report.fit_r_squared = fit.r_squared;
        report.fit_amplitude = std::exp(fit.intercept);
    }
    return report;
}

double gaussian_tail_bound(int n, double delta, double a) {
    if (n < 0 || delta <= 0.0 || a <= 0.0) throw ConfigError("tail bound needs n>=0, delta>0, a>0");
    std::vector<double> p(static_cast<size_t>(std::max(n, 1)) + 1, 0.0);
    p[0] = std::sqrt(M_PI / (4.0 * a));
    p[1] = 1.0 / (2.0 * a);
    for (int k = 2; k <= n; ++k) {
        p[static_cast<size_t>(k)] = std::pow(delta, k - 1) / (2.0 * a) +
                                    (k - 1) / (2.0 * a) * p[static_cast<size_t>(k - 2)];
    }
    return p[static_cast<size_t>(n)] * std::exp(-delta * delta * a / 2.0);
}

double gaussian_tail_integral_numeric(int n, double delta, double a, double tolerance) {
    double reach = delta + 12.0 * std::max(1.0, 1.0 / std::sqrt(a)) + 5.0;
    auto f = [n, a](double x) { return std::pow(x, n) * std::exp(-a * x * x); };
    return adaptive_simpson(f, delta, reach, tolerance);
}

std::complex<double> inverse_transform_numeric(const PiecewisePolynomial& profile, double phi) {
    const GaussLegendreRule& rule = gauss_legendre_64();
    std::complex<double> total(0.0, 0.0);
    for (size_t k = 0; k < profile.pieces().size(); ++k) {
        const Poly& piece = profile.pieces()[k];
        if (piece.is_zero()) continue;
        double a = profile.breakpoints()[k].get_d();
        double b = profile.breakpoints()[k + 1].get_d();
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (size_t q = 0; q < rule.nodes.size(); ++q) {
            double yq = mid + half * rule.nodes[q];
            total += half * rule.weights[q] * piece_coefficients_eval(piece, yq) *
                     std::exp(std::complex<double>(0.0, yq * phi));
        }
    }
    for (const auto& atom : profile.atoms()) {
        double loc = atom.location.get_d();
        std::complex<double> factor =
            std::pow(std::complex<double>(0.0, -phi), atom.order) *
            std::exp(std::complex<double>(0.0, loc * phi));
        total += atom.coeff.to_complex() * factor;
    }
    // (2pi)^{-1/2} times the stored prefactor.
    double scale = std::pow(2.0 * M_PI, 0.5 * (profile.sqrt_two_pi_power() - 1));
    return scale * total;
}

std::complex<double> pushforward_eval_numeric(const std::vector<LocalizationTerm>& terms,
                                              double phi) {
    std::complex<double> total(0.0, 0.0);
    for (const auto& term : terms) {
        if (term.amplitude.is_zero()) continue;
        std::complex<double> oscillation =
            std::exp(std::complex<double>(0.0, term.exponent_lambda.get_d() * phi));
        total += oscillation * term.amplitude.eval(std::complex<double>(phi, 0.0));
    }
    return total;
}

ExactScalar pushforward_value_at_zero(const std::vector<LocalizationTerm>& terms) {
    ExactScalar total;
    for (const auto& term : terms) {
        if (term.amplitude.is_zero()) continue;
        ExactScalar denom_coeff;
        int pole_order = 0;
        if (!term.amplitude.denominator_monomial(&denom_coeff, &pole_order)) {
            throw UnsupportedPole("pushforward term has poles away from 0: " +
                                  term.amplitude.str());
        }
        Poly taylor = residue_at_zero(term.amplitude.numerator(), term.amplitude.var(),
                                      term.exponent_lambda, pole_order + 1);
        total += taylor.as_constant() / denom_coeff;
    }
    return total;
}

}  // namespace contactloc
