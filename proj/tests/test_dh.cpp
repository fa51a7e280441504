#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "contactloc/dh.hpp"
#include "contactloc/errors.hpp"

using namespace contactloc;

namespace {

WeightedSphere s3(const mpq_class& w0, long b0, long b1) {
    return WeightedSphere(1, {w0, mpq_class(1)}, {mpz_class(b0), mpz_class(b1)});
}

EquivariantClass one() { return EquivariantClass(Poly::constant(ExactScalar(1))); }

struct MiniRng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t x = state;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }
    long pick(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

WeightedSphere random_regular_sphere(MiniRng& rng, int max_n) {
    while (true) {
        int n = static_cast<int>(rng.pick(1, max_n));
        std::vector<mpq_class> w;
        std::vector<mpz_class> beta;
        for (int j = 0; j <= n; ++j) {
            w.emplace_back(rng.pick(1, 7), rng.pick(1, 4));
            long b = rng.pick(-5, 5);
            if (b == 0) b = j % 2 == 0 ? -1 : 1;
            beta.emplace_back(b);
        }
        // Force a sign change so 0 is interior.
        beta.front() = -abs(beta.front());
        beta.back() = abs(beta.back());
        WeightedSphere sphere(n, w, beta);
        if (sphere.lambda_distinct && check_zero_regular(sphere)) return sphere;
    }
}

}  // namespace

TEST_CASE("flat transform profile of the unit class on the weighted three-sphere") {
    mpq_class w(3, 2);
    PiecewisePolynomial profile = dh_distribution(s3(w, -1, 1), one());

    CHECK(profile.sqrt_two_pi_power() == 1);
    REQUIRE(profile.breakpoints() == std::vector<mpq_class>{mpq_class(-1), mpq_class(2, 3)});
    REQUIRE(profile.pieces().size() == 1);
    // Single flat piece i (2pi)^2 / (1 + w) = (8/5) i pi^2 in prefactor units.
    CHECK(profile.pieces()[0] == Poly::constant(ExactScalar(0, mpq_class(8, 5), 2)));
    CHECK(profile.atoms().empty());
    CHECK_FALSE(profile.is_zero());

    auto sup = profile.support();
    REQUIRE(sup.has_value());
    CHECK(sup->first == mpq_class(-1));
    CHECK(sup->second == mpq_class(2, 3));

    // Half-open convention at the breakpoints.
    CHECK(profile.value_at(mpq_class(-1)) == ExactScalar(0, mpq_class(8, 5), 2));
    CHECK(profile.value_at(mpq_class(0)) == ExactScalar(0, mpq_class(8, 5), 2));
    CHECK(profile.value_at(mpq_class(2, 3)) == ExactScalar());
    CHECK(profile.value_at(mpq_class(-2)) == ExactScalar());
}

TEST_CASE("transform of classes with top u-power is atomic") {
    mpq_class w(3, 2);
    PiecewisePolynomial profile =
        dh_distribution(s3(w, -1, 1), EquivariantClass(Poly::variable("u")));

    // Smooth part vanishes identically; two order-0 atoms at the endpoints.
    for (const auto& piece : profile.pieces()) CHECK(piece.is_zero());
    REQUIRE(profile.atoms().size() == 2);
    CHECK(profile.atoms()[0].location == mpq_class(-1));
    CHECK(profile.atoms()[0].order == 0);
    CHECK(profile.atoms()[0].coeff == ExactScalar(mpq_class(-8, 5), 0, 2));
    CHECK(profile.atoms()[1].location == mpq_class(2, 3));
    CHECK(profile.atoms()[1].coeff == ExactScalar(mpq_class(8, 5), 0, 2));
    CHECK_FALSE(profile.is_zero());
    CHECK(profile.integral() == ExactScalar());
}

TEST_CASE("transform of the ideal generator vanishes") {
    WeightedSphere sphere = s3(mpq_class(3, 2), -1, 1);
    PiecewisePolynomial profile =
        dh_distribution(sphere, EquivariantClass(ring_ideal_generator(sphere)));
    CHECK(profile.is_zero());
    CHECK_FALSE(profile.support().has_value());
    CHECK(std::abs(I_epsilon(profile, 0.1)) == 0.0);
    CHECK(std::abs(I_epsilon(profile, 0.01)) == 0.0);
}

TEST_CASE("support stays inside the reflected moment range") {
    MiniRng rng{404};
    Poly candidates[3] = {Poly::constant(ExactScalar(1)), Poly::variable("u"),
                          Poly::variable("s")};
    for (int trial = 0; trial < 50; ++trial) {
        WeightedSphere sphere = random_regular_sphere(rng, 3);
        mpq_class lo = sphere.lambda[0], hi = sphere.lambda[0];
        for (const auto& l : sphere.lambda) {
            lo = std::min(lo, l);
            hi = std::max(hi, l);
        }
        const Poly& rep = candidates[trial % 3];
        PiecewisePolynomial profile = dh_distribution(sphere, EquivariantClass(rep));
        // 0 is regular, so it is never a breakpoint.
        for (const auto& b : profile.breakpoints()) CHECK(b != 0);
        auto sup = profile.support();
        if (!sup) continue;
        CHECK(sup->first >= -hi);
        CHECK(sup->second <= -lo);
        // Piece degree bound: n - 1 plus the class degree.
        for (const auto& piece : profile.pieces()) {
            CHECK(piece.degree_in(kVarY) <= sphere.n - 1 + rep.total_degree());
        }
    }
}

TEST_CASE("value at the regular level reproduces the quotient pairing") {
    WeightedSphere sphere = s3(mpq_class(3, 2), -1, 1);
    Poly u = Poly::variable("u");
    Poly s = Poly::variable("s");
    Poly reps[5] = {Poly::constant(ExactScalar(1)), u, s,
                    u + Poly::constant(ExactScalar(1)), u * s};
    for (const auto& rep : reps) {
        EquivariantClass eta(rep);
        PiecewisePolynomial profile = dh_distribution(sphere, eta);
        ExactScalar n0(static_cast<long>(regular_isotropy_order(sphere)));
        ExactScalar lhs = profile.value_at(mpq_class(0)) * n0 * (-ExactScalar::unit_i()) *
                          ExactScalar::two_pi_power(-1);
        CHECK(lhs == quotient_pairing(sphere, eta));
    }
}

TEST_CASE("total transform mass equals the pushforward value at zero") {
    MiniRng rng{88};
    Poly u = Poly::variable("u");
    Poly s = Poly::variable("s");
    for (int trial = 0; trial < 20; ++trial) {
        WeightedSphere sphere = random_regular_sphere(rng, 3);
        Poly rep = trial % 3 == 0 ? Poly::constant(ExactScalar(1)) : (trial % 3 == 1 ? u : s);
        EquivariantClass eta(rep);
        PiecewisePolynomial profile = dh_distribution(sphere, eta);
        auto terms = pushforward(sphere, eta);
        CHECK(profile.integral() == pushforward_value_at_zero(terms));
    }

    // For the unit class the mass is i^n / n! times the contact volume form
    // integral (2pi)^{n+1} / prod w.
    mpq_class w(3, 2);
    PiecewisePolynomial profile = dh_distribution(s3(w, -1, 1), one());
    CHECK(profile.integral() == ExactScalar(0, 4 / w, 2));
}

TEST_CASE("inverse transform reproduces the oscillatory pushforward") {
    WeightedSphere sphere = s3(mpq_class(3, 2), -1, 1);
    Poly reps[3] = {Poly::constant(ExactScalar(1)), Poly::variable("s"), Poly::variable("u")};
    for (const auto& rep : reps) {
        EquivariantClass eta(rep);
        PiecewisePolynomial profile = dh_distribution(sphere, eta);
        auto terms = pushforward(sphere, eta);
        for (int k = 0; k < 20; ++k) {
            double phi = 0.3 + 0.29 * k;
            std::complex<double> direct = pushforward_eval_numeric(terms, phi);
            std::complex<double> through = inverse_transform_numeric(profile, phi);
            double scale = std::max(1.0, std::abs(direct));
            CHECK(std::abs(direct - through) / scale < 1e-6);
        }
    }
}

TEST_CASE("Gaussian-damped pairing approaches the quotient pairing") {
    WeightedSphere sphere = s3(mpq_class(3, 2), -1, 1);
    double target = 4.0 * M_PI / 5.0;

    std::complex<double> near = I_epsilon(sphere, one(), 0.01);
    CHECK(std::abs(near - std::complex<double>(target, 0.0)) < 1e-6);

    // Large damping kills the integral.
    CHECK(std::abs(I_epsilon(sphere, one(), 1e8)) < 1e-3);

    CHECK_THROWS_AS(I_epsilon(sphere, one(), 0.0), ConfigError);
    CHECK_THROWS_AS(I_epsilon(sphere, one(), -1.0), ConfigError);
}

TEST_CASE("closed-form damping matches the error-function expression") {
    // For the unit class the damped pairing has the explicit form
    //   pi/(1+w) * (erf(1/(w sqrt(2 eps))) + erf(1/sqrt(2 eps))).
    double w = 1.5;
    WeightedSphere sphere = s3(mpq_class(3, 2), -1, 1);
    for (double eps : {0.5, 0.2, 0.05, 0.01}) {
        double expect = M_PI / (1.0 + w) *
                        (std::erf(1.0 / (w * std::sqrt(2.0 * eps))) +
                         std::erf(1.0 / std::sqrt(2.0 * eps)));
        std::complex<double> got = I_epsilon(sphere, one(), eps);
        CHECK(std::abs(got - std::complex<double>(expect, 0.0)) < 1e-12 * std::max(1.0, expect));
    }
}

TEST_CASE("atomic profiles damp with pure Gaussian point masses") {
    // eta = u: I(eps) = sqrt(2 pi) / (i sqrt(eps) (1+w)) *
    //                   (e^{-1/(2 w^2 eps)} - e^{-1/(2 eps)}).
    double w = 1.5;
    WeightedSphere sphere = s3(mpq_class(3, 2), -1, 1);
    EquivariantClass eta(Poly::variable("u"));
    for (double eps : {0.5, 0.1, 0.02}) {
        std::complex<double> expect =
            std::sqrt(2.0 * M_PI) / (std::complex<double>(0.0, 1.0) * std::sqrt(eps) * (1.0 + w)) *
            (std::exp(-1.0 / (2.0 * w * w * eps)) - std::exp(-1.0 / (2.0 * eps)));
        std::complex<double> got = I_epsilon(sphere, eta, eps);
        CHECK(std::abs(got - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("moment recursion agrees with adaptive quadrature") {
    WeightedSphere sphere = s3(mpq_class(3, 2), -1, 1);
    Poly reps[3] = {Poly::constant(ExactScalar(1)), Poly::variable("s"),
                    Poly::variable("u") + Poly::variable("s")};
    for (const auto& rep : reps) {
        PiecewisePolynomial profile = dh_distribution(sphere, EquivariantClass(rep));
        for (double eps : {0.3, 0.05}) {
            std::complex<double> closed = I_epsilon(profile, eps);
            std::complex<double> quad = I_epsilon_quadrature(profile, eps, 1e-10);
            CHECK(std::abs(closed - quad) < 1e-9);
        }
    }
}

TEST_CASE("asymptotic report diagnostics") {
    WeightedSphere sphere = s3(mpq_class(3, 2), -1, 1);
    AsymptoticReport report = asymptotic_report(sphere, one(), {0.2, 0.1, 0.05, 0.025});

    CHECK(report.limit == ExactScalar(mpq_class(4, 5), 0, 1));
    REQUIRE(report.epsilons.size() == 4);
    CHECK(report.epsilons.front() > report.epsilons.back());
    REQUIRE(report.I_values.size() == 4);
    CHECK(report.monotone_approach);
    // True decay rate is 1/(2 w^2) = 2/9; the finite grid overestimates it
    // slightly through the subexponential prefactor.
    CHECK(report.decay_exponent_estimate > 0.1);
    CHECK(report.decay_exponent_estimate < 0.5);
    CHECK(report.fit_r_squared > 0.99);
    CHECK(report.fit_amplitude > 0.0);
}

TEST_CASE("asymptotic report of a mass-free class") {
    WeightedSphere sphere = s3(mpq_class(3, 2), -1, 1);
    EquivariantClass eta(Poly::variable("u"));
    AsymptoticReport report = asymptotic_report(sphere, eta, {0.2, 0.1, 0.05});
    CHECK(report.limit == ExactScalar());
    for (const auto& value : report.I_values) {
        // Atom masses at +-1-ish locations are exponentially small already.
        CHECK(std::abs(value) < 1.0);
    }
}

TEST_CASE("degenerate and nonregular inputs are rejected") {
    CHECK_THROWS_AS(dh_distribution(s3(mpq_class(1), 1, 1), one()), DegenerateCriticalSet);
    CHECK_THROWS_AS(dh_distribution(s3(mpq_class(1), 0, 1), one()), LambdaZero);
}

TEST_CASE("piecewise polynomial construction rules") {
    std::vector<mpq_class> breaks{mpq_class(0), mpq_class(1)};
    std::vector<Poly> pieces{Poly::constant(ExactScalar(1))};
    CHECK_NOTHROW(PiecewisePolynomial(breaks, pieces, {}, 1));

    CHECK_THROWS_AS(PiecewisePolynomial({mpq_class(0)}, pieces, {}, 1), Error);
    CHECK_THROWS_AS(PiecewisePolynomial({mpq_class(1), mpq_class(0)}, pieces, {}, 1), Error);
    CHECK_THROWS_AS(PiecewisePolynomial(breaks, {Poly::variable("u")}, {}, 1), Error);

    // Linear piece integrates exactly: integral of y over [0, 1) is 1/2.
    PiecewisePolynomial ramp(breaks, {Poly::variable("y")}, {}, 0);
    CHECK(ramp.integral() == ExactScalar(mpq_class(1, 2)));
    CHECK(ramp.value_at(mpq_class(1, 4)) == ExactScalar(mpq_class(1, 4)));

    // Order-0 atoms enter the mass; higher orders do not.
    PiecewisePolynomial atoms({}, {}, {DiracAtom{mpq_class(0), 0, ExactScalar(3)},
                                       DiracAtom{mpq_class(1, 2), 1, ExactScalar(7)}},
                              0);
    CHECK(atoms.integral() == ExactScalar(3));
    auto sup = atoms.support();
    REQUIRE(sup.has_value());
    CHECK(sup->first == mpq_class(0));
    CHECK(sup->second == mpq_class(1, 2));
}

TEST_CASE("Gaussian tail bound dominates the integral on a parameter grid") {
    for (int n = 0; n <= 4; ++n) {
        for (double delta : {0.5, 1.0, 2.0}) {
            for (double a : {0.5, 1.0, 3.0}) {
                double bound = gaussian_tail_bound(n, delta, a);
                double value = gaussian_tail_integral_numeric(n, delta, a);
                CHECK(value >= 0.0);
                CHECK(value <= bound * (1.0 + 1e-12) + 1e-15);
            }
        }
    }

    // Reference point: integral of e^{-x^2} over [1, inf).
    CHECK(gaussian_tail_integral_numeric(0, 1.0, 1.0) == doctest::Approx(0.139403).epsilon(1e-4));
    CHECK(gaussian_tail_bound(0, 1.0, 1.0) == doctest::Approx(0.537495).epsilon(1e-4));

    // n = 1 has the closed form e^{-a delta^2} / (2a).
    for (double delta : {0.5, 1.0, 2.0}) {
        for (double a : {0.5, 1.0, 3.0}) {
            double exact = std::exp(-a * delta * delta) / (2.0 * a);
            CHECK(std::abs(gaussian_tail_integral_numeric(1, delta, a) - exact) < 1e-10);
        }
    }
}
