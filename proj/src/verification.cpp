#include "contactloc/verification.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "contactloc/dh.hpp"
#include "contactloc/errors.hpp"
#include "contactloc/localization.hpp"
#include "contactloc/mc_oracle.hpp"
#include "contactloc/residue_engine.hpp"
#include "contactloc/sphere_model.hpp"

namespace contactloc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CheckOutcome {
    bool pass = false;
    std::string details;
};

CheckResult run_check(int id, const std::string& name,
                      const std::function<CheckOutcome()>& body) {
    CheckResult result;
    result.id = id;
    result.name = name;
    auto start = Clock::now();
    try {
        CheckOutcome outcome = body();
        result.pass = outcome.pass;
        result.details = outcome.details;
    } catch (const std::exception& error) {
        result.pass = false;
        result.details = std::string("exception: ") + error.what();
    }
    result.seconds = seconds_since(start);
    return result;
}

WeightedSphere weighted_three_sphere() {
    return WeightedSphere(1, {mpq_class(3, 2), mpq_class(1)}, {mpz_class(-1), mpz_class(1)});
}

// Random sphere with n <= 4, weight numerators and denominators <= 50,
// nonzero action weights in [-9, 9]; optionally retries until the critical
// values are pairwise distinct.
WeightedSphere random_sphere(std::mt19937_64& gen, bool need_distinct) {
    std::uniform_int_distribution<int> n_dist(1, 4);
    std::uniform_int_distribution<long> pq_dist(1, 50);
    std::uniform_int_distribution<long> beta_dist(-9, 9);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int n = n_dist(gen);
        std::vector<mpq_class> w;
        std::vector<mpz_class> beta;
        for (int j = 0; j <= n; ++j) {
            mpq_class weight(pq_dist(gen), pq_dist(gen));
            weight.canonicalize();
            w.push_back(weight);
            long b = 0;
            while (b == 0) b = beta_dist(gen);
            beta.emplace_back(b);
        }
        WeightedSphere sphere(n, std::move(w), std::move(beta));
        if (!need_distinct || sphere.lambda_distinct) return sphere;
    }
    throw Error("failed to draw a sphere with distinct critical values");
}

// Random class representative: up to four monomials u^a s^b with small
// rational coefficients, occasionally carrying a pi factor.
Poly random_class_poly(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> term_dist(1, 4);
    std::uniform_int_distribution<int> expo_dist(0, 2);
    std::uniform_int_distribution<long> num_dist(-5, 5);
    std::uniform_int_distribution<long> den_dist(1, 3);
    std::uniform_int_distribution<int> pi_dist(0, 1);
    Poly u = Poly::variable(kVarU);
    Poly s = Poly::variable(kVarS);
    Poly out;
    int terms = term_dist(gen);
    for (int t = 0; t < terms; ++t) {
        long numerator = num_dist(gen);
        if (numerator == 0) numerator = 1;
        mpq_class q(numerator, den_dist(gen));
        q.canonicalize();
        ExactScalar coeff(q, 0, pi_dist(gen));
        out += u.pow(static_cast<unsigned>(expo_dist(gen))) *
               s.pow(static_cast<unsigned>(expo_dist(gen))) * coeff;
    }
    return out;
}

ExactScalar expected_volume(const WeightedSphere& sphere) {
    mpq_class denom(1);
    for (int k = 2; k <= sphere.n; ++k) denom *= k;
    for (const auto& wj : sphere.w) denom *= wj;
    return ExactScalar(mpq_class(2) / denom, 0, sphere.n + 1);
}

CheckOutcome check_volume(const VerifyOptions& options) {
    std::mt19937_64 gen(options.seed + 1);
    auto start = Clock::now();
    int agree = 0;
    std::string first_failure;
    for (int trial = 0; trial < 100; ++trial) {
        WeightedSphere sphere = random_sphere(gen, false);
        if (contact_volume(sphere) == expected_volume(sphere)) {
            ++agree;
        } else if (first_failure.empty()) {
            first_failure = "trial " + std::to_string(trial);
        }
    }
    double elapsed = seconds_since(start);
    std::ostringstream details;
    details << agree << "/100 spheres exact in " << elapsed << " s (budget 10 s)";
    if (!first_failure.empty()) details << "; first failure at " << first_failure;
    return {agree == 100 && elapsed < 10.0, details.str()};
}

CheckOutcome check_identity(const VerifyOptions& options) {
    std::mt19937_64 gen(options.seed + 2);
    int agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
        WeightedSphere sphere = random_sphere(gen, true);
        if (localization_identity_check(sphere, options.perturb_euler)) ++agree;
    }
    std::ostringstream details;
    details << agree << "/100 spheres satisfy the identity";
    if (options.perturb_euler != 0.0) {
        details << " under injected offset " << options.perturb_euler;
    }
    return {agree == 100, details.str()};
}

CheckOutcome check_three_sphere_pairing(const VerifyOptions& options) {
    WeightedSphere sphere = weighted_three_sphere();
    ExactScalar expected(mpq_class(4, 5), 0, 1);
    EquivariantClass one(Poly::constant(ExactScalar(1)));
    bool unit_ok = quotient_pairing(sphere, one) == expected;

    std::mt19937_64 gen(options.seed + 3);
    int agree = 0;
    const int trials = 25;
    for (int trial = 0; trial < trials; ++trial) {
        EquivariantClass eta(random_class_poly(gen));
        ExactScalar c = eta.rep.constant_term();
        if (quotient_pairing(sphere, eta) == expected * c) ++agree;
    }
    std::ostringstream details;
    details << "unit class " << (unit_ok ? "exact" : "WRONG") << "; " << agree << "/" << trials
            << " random classes scale with their constant term";
    return {unit_ok && agree == trials, details.str()};
}

CheckOutcome check_circle_data(const VerifyOptions&) {
    WeightedSphere sphere = weighted_three_sphere();
    auto circles = critical_circles(sphere);
    Poly u = Poly::variable(kVarU);
    bool ok = circles.size() == 2;
    // w = 3/2: e0 = (u/2pi)(1 + 1/w) = (5/6) u / pi, e1 = -(u/2pi)(1 + w) = -(5/4) u / pi.
    ok = ok && circles[0].mu_value == mpq_class(-2, 3) && circles[1].mu_value == mpq_class(1);
    ok = ok && circles[0].restriction_slope == mpq_class(2, 3) &&
         circles[1].restriction_slope == mpq_class(-1);
    ok = ok && circles[0].euler_class == u * ExactScalar(mpq_class(5, 6), 0, -1);
    ok = ok && circles[1].euler_class == u * ExactScalar(mpq_class(-5, 4), 0, -1);
    ok = ok && circles[0].alpha_integral == ExactScalar(mpq_class(4, 3), 0, 1);
    ok = ok && circles[1].alpha_integral == ExactScalar(mpq_class(2), 0, 1);
    return {ok, ok ? "critical values, slopes, Euler classes and circle integrals all exact"
                   : "mismatch in per-circle data"};
}

CheckOutcome check_polynomiality(const VerifyOptions& options) {
    std::mt19937_64 gen(options.seed + 5);
    std::uniform_int_distribution<long> small(-3, 3);
    int polynomial = 0, independent = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
        WeightedSphere sphere = random_sphere(gen, true);
        EquivariantClass eta(random_class_poly(gen));
        Poly paired;
        try {
            paired = pair_alpha_eta(sphere, eta);
            ++polynomial;
        } catch (const NonPolynomialResult&) {
            continue;
        }
        Poly m = Poly::constant(ExactScalar(small(gen))) +
                 Poly::variable(kVarU) * ExactScalar(small(gen)) +
                 Poly::variable(kVarS) * ExactScalar(small(gen));
        EquivariantClass shifted(eta.rep + m * ring_ideal_generator(sphere));
        if (pair_alpha_eta(sphere, shifted) == paired) ++independent;
    }
    std::ostringstream details;
    details << polynomial << "/" << trials << " pairings polynomial, " << independent << "/"
            << trials << " unchanged under adding a multiple of the ideal generator";
    return {polynomial == trials && independent == trials, details.str()};
}

// Density targeted by the Monte Carlo histogram, reconstructed from the
// transform profile: i^{-n} * Q(y) / (2pi)^{1/2}, a nonnegative real.
double expected_density(const PiecewisePolynomial& profile, int n, double y) {
    std::complex<double> i_pow(1.0, 0.0);
    const std::complex<double> minus_i(0.0, -1.0);
    for (int k = 0; k < n; ++k) i_pow *= minus_i;
    std::complex<double> value = profile.eval(y) * i_pow / std::sqrt(2.0 * M_PI);
    return value.real();
}

CheckOutcome check_transform_triangle(const VerifyOptions& options) {
    WeightedSphere sphere = weighted_three_sphere();
    EquivariantClass one(Poly::constant(ExactScalar(1)));
    PiecewisePolynomial profile = dh_distribution(sphere, one);

    // (a) single flat piece i (2pi)^2 / (1 + w) on [-1, 2/3), in units of the
    // (2pi)^{1/2} prefactor, no atoms.
    bool flat_ok = profile.sqrt_two_pi_power() == 1 && profile.atoms().empty() &&
                   profile.breakpoints() == std::vector<mpq_class>{mpq_class(-1), mpq_class(2, 3)} &&
                   profile.pieces().size() == 1 &&
                   profile.pieces()[0] == Poly::constant(ExactScalar(0, mpq_class(8, 5), 2));

    // (b) Monte Carlo histogram of -mu against the profile density.
    McConfig config;
    config.seed = options.seed;
    config.samples = options.quick ? 10000 : options.mc_samples;
    config.workers = options.workers;
    config.histogram_bins = 64;
    auto start = Clock::now();
    Histogram histogram = mc_dh_histogram(sphere, config);
    double mc_seconds = seconds_since(start);

    double max_expected = 0.0;
    for (size_t k = 0; k + 1 < histogram.edges.size(); ++k) {
        double mid = 0.5 * (histogram.edges[k] + histogram.edges[k + 1]);
        max_expected = std::max(max_expected, std::abs(expected_density(profile, sphere.n, mid)));
    }
    double worst = 0.0, worst_allowed = 0.0;
    int compared = 0;
    bool mc_ok = true;
    for (size_t k = 0; k + 1 < histogram.edges.size(); ++k) {
        if (k == 0 || k + 2 == histogram.edges.size()) continue;  // boundary bins
        double left = histogram.edges[k], right = histogram.edges[k + 1];
        bool crosses_breakpoint = false;
        for (const auto& b : profile.breakpoints()) {
            double bd = b.get_d();
            if (left < bd && bd < right) crosses_breakpoint = true;
        }
        if (crosses_breakpoint) continue;
        double mid = 0.5 * (left + right);
        double gap = std::abs(histogram.density[k] - expected_density(profile, sphere.n, mid));
        double allowed = options.quick ? 5.0 * histogram.density_stderr[k] + 1e-9
                                       : 0.02 * max_expected;
        ++compared;
        if (gap > worst) {
            worst = gap;
            worst_allowed = allowed;
        }
        if (gap > allowed) mc_ok = false;
    }
    bool time_ok = mc_seconds < 60.0;

    // (c) level-zero identity: -i * Q(0) * n0 / (2pi), in prefactor units,
    // equals the quotient pairing, exactly, for several classes.
    std::vector<Poly> reps = {Poly::constant(ExactScalar(1)), Poly::variable(kVarU),
                              Poly::variable(kVarS),
                              Poly::constant(ExactScalar(1)) + Poly::variable(kVarU),
                              Poly::variable(kVarU) * Poly::variable(kVarS)};
    unsigned long n0 = regular_isotropy_order(sphere);
    bool zero_ok = true;
    for (const auto& rep : reps) {
        EquivariantClass eta(rep);
        PiecewisePolynomial q = dh_distribution(sphere, eta);
        ExactScalar lhs = q.value_at(0) * ExactScalar(static_cast<long>(n0)) *
                          (-ExactScalar::unit_i()) * ExactScalar::two_pi_power(-1);
        if (lhs != quotient_pairing(sphere, eta)) zero_ok = false;
    }

    std::ostringstream details;
    details << "flat piece " << (flat_ok ? "exact" : "WRONG") << "; histogram worst gap " << worst
            << " vs allowance " << worst_allowed << " over " << compared << " interior bins with "
            << config.samples << " samples in " << mc_seconds << " s; level-zero identity "
            << (zero_ok ? "exact" : "WRONG");
    return {flat_ok && mc_ok && time_ok && zero_ok, details.str()};
}

CheckOutcome check_asymptotics(const VerifyOptions&) {
    WeightedSphere sphere = weighted_three_sphere();
    EquivariantClass one(Poly::constant(ExactScalar(1)));
    std::vector<double> grid = {0.2, 0.1, 0.05, 0.025};
    AsymptoticReport report = asymptotic_report(sphere, one, grid);

    bool limit_ok = report.limit == ExactScalar(mpq_class(4, 5), 0, 1);
    bool fit_ok = report.monotone_approach && report.decay_exponent_estimate > 0.0 &&
                  report.fit_r_squared > 0.99;

    PiecewisePolynomial profile = dh_distribution(sphere, one);
    double worst_quadrature_gap = 0.0;
    for (double eps : grid) {
        std::complex<double> closed = I_epsilon(profile, eps);
        std::complex<double> quad = I_epsilon_quadrature(profile, eps, 1e-10);
        worst_quadrature_gap = std::max(worst_quadrature_gap, std::abs(closed - quad));
    }
    bool quad_ok = worst_quadrature_gap <= 1e-9;

    std::ostringstream details;
    details << "limit " << (limit_ok ? "exact" : "WRONG") << ", decay estimate "
            << report.decay_exponent_estimate << ", fit R^2 " << report.fit_r_squared
            << ", monotone " << (report.monotone_approach ? "yes" : "no")
            << ", closed form vs quadrature gap " << worst_quadrature_gap;
    return {limit_ok && fit_ok && quad_ok, details.str()};
}

CheckOutcome check_tail_bound(const VerifyOptions&) {
    const double deltas[] = {0.5, 1.0, 2.0};
    const double as[] = {0.5, 1.0, 3.0};
    bool bounded = true;
    double worst_exact_gap = 0.0;
    for (int n = 0; n <= 4; ++n) {
        for (double delta : deltas) {
            for (double a : as) {
                double numeric = gaussian_tail_integral_numeric(n, delta, a, 1e-12);
                double bound = gaussian_tail_bound(n, delta, a);
                if (numeric > bound * (1.0 + 1e-12) + 1e-15) bounded = false;
                if (n == 1) {
                    double exact = std::exp(-a * delta * delta) / (2.0 * a);
                    worst_exact_gap = std::max(worst_exact_gap, std::abs(numeric - exact));
                }
            }
        }
    }
    bool exact_ok = worst_exact_gap <= 1e-10;
    std::ostringstream details;
    details << "bound holds on the 5x3x3 grid: " << (bounded ? "yes" : "no")
            << "; n=1 closed form vs quadrature gap " << worst_exact_gap;
    return {bounded && exact_ok, details.str()};
}

CheckOutcome check_determinism(const VerifyOptions& options) {
    WeightedSphere sphere = weighted_three_sphere();
    McConfig base;
    base.seed = options.seed;
    base.samples = options.quick ? 20000 : 200000;
    base.histogram_bins = 32;

    McConfig single = base, pooled = base;
    single.workers = 1;
    pooled.workers = 4;

    McVolumeResult volume_single = mc_contact_volume(sphere, single);
    McVolumeResult volume_pooled = mc_contact_volume(sphere, pooled);
    Histogram histogram_single = mc_dh_histogram(sphere, single);
    Histogram histogram_pooled = mc_dh_histogram(sphere, pooled);

    bool volume_ok = volume_single.value == volume_pooled.value &&
                     volume_single.stderr_value == volume_pooled.stderr_value;
    bool histogram_ok = histogram_single.edges == histogram_pooled.edges &&
                        histogram_single.density == histogram_pooled.density &&
                        histogram_single.density_stderr == histogram_pooled.density_stderr &&
                        histogram_single.clamped == histogram_pooled.clamped;
    std::ostringstream details;
    details << base.samples << " samples: volume bitwise "
            << (volume_ok ? "identical" : "DIFFERENT") << ", histogram bitwise "
            << (histogram_ok ? "identical" : "DIFFERENT") << " across 1 and 4 workers";
    return {volume_ok && histogram_ok, details.str()};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(run_check(1, "contact volume closed form",
                                [&] { return check_volume(options); }));
    results.push_back(run_check(2, "fixed point identity",
                                [&] { return check_identity(options); }));
    results.push_back(run_check(3, "quotient pairing on the weighted 3-sphere",
                                [&] { return check_three_sphere_pairing(options); }));
    results.push_back(run_check(4, "critical circle data",
                                [&] { return check_circle_data(options); }));
    results.push_back(run_check(5, "pairing polynomiality and representative independence",
                                [&] { return check_polynomiality(options); }));
    results.push_back(run_check(6, "transform profile, Monte Carlo and level-zero value",
                                [&] { return check_transform_triangle(options); }));
    results.push_back(run_check(7, "Gaussian-damped asymptotics",
                                [&] { return check_asymptotics(options); }));
    results.push_back(run_check(8, "Gaussian tail bound",
                                [&] { return check_tail_bound(options); }));
    results.push_back(run_check(9, "Monte Carlo determinism",
                                [&] { return check_determinism(options); }));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& result : results) {
        if (!result.pass) return false;
    }
    return true;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
    for (const auto& result : results) {
        out << (result.pass ? "[PASS] " : "[FAIL] ") << result.id << " " << result.name << " ("
            << result.seconds << " s) " << result.details << "\n";
    }
}

}  // namespace contactloc
