#include "contactloc/sphere_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "contactloc/errors.hpp"

namespace contactloc {

WeightedSphere::WeightedSphere(int n_in, std::vector<mpq_class> w_in,
                               std::vector<mpz_class> beta_in)
    : n(n_in), w(std::move(w_in)), beta(std::move(beta_in)) {
    if (n < 0) throw ConfigError("sphere parameter n must be nonnegative");
    size_t count = static_cast<size_t>(n) + 1;
    if (w.size() != count) {
        throw ConfigError("expected " + std::to_string(count) + " Reeb weights, got " +
                          std::to_string(w.size()));
    }
    if (beta.size() != count) {
        throw ConfigError("expected " + std::to_string(count) + " action weights, got " +
                          std::to_string(beta.size()));
    }
    lambda.reserve(count);
    for (size_t j = 0; j < count; ++j) {
        if (w[j].get_den() == 0) {
            throw ConfigError("Reeb weight w_" + std::to_string(j) + " has zero denominator");
        }
        // Callers may pass unreduced fractions; canonicalize before any comparison.
        w[j].canonicalize();
        if (w[j] <= 0) {
            throw ConfigError("Reeb weight w_" + std::to_string(j) + " = " + w[j].get_str() +
                              " must be positive");
        }
        lambda.emplace_back(mpq_class(beta[j]) / w[j]);
    }
    std::set<mpq_class> distinct(lambda.begin(), lambda.end());
    lambda_distinct = distinct.size() == lambda.size();
}

EquivariantClass::EquivariantClass(Poly representative) : rep(std::move(representative)) {
    for (const auto& name : rep.variables()) {
        if (name != kVarU && name != kVarS) {
            throw ConfigError("equivariant class uses variable '" + name +
                              "'; only u and s are allowed");
        }
    }
}

double moment_map(const WeightedSphere& sphere, const std::vector<std::complex<double>>& z) {
    if (z.size() != sphere.w.size()) {
        throw OffSphereInput("point has " + std::to_string(z.size()) + " coordinates, expected " +
                             std::to_string(sphere.w.size()));
    }
    double norm = 0.0, num = 0.0, den = 0.0;
    for (size_t j = 0; j < z.size(); ++j) {
        double r2 = std::norm(z[j]);
        norm += r2;
        num += sphere.beta[j].get_d() * r2;
        den += sphere.w[j].get_d() * r2;
    }
    if (std::abs(norm - 1.0) > 1e-9) {
        throw OffSphereInput("point norm " + std::to_string(norm) + " is not 1");
    }
    return num / den;
}

bool check_zero_regular(const WeightedSphere& sphere) {
    mpq_class lo = sphere.lambda[0], hi = sphere.lambda[0];
    for (const auto& l : sphere.lambda) {
        if (l == 0) return false;
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    return lo < 0 && hi > 0;
}

std::vector<CriticalCircle> critical_circles(const WeightedSphere& sphere) {
    if (!sphere.lambda_distinct) {
        std::string values;
        for (const auto& l : sphere.lambda) values += (values.empty() ? "" : ", ") + l.get_str();
        throw DegenerateCriticalSet("coincident critical values lambda = {" + values +
                                    "}; per-circle data requires them pairwise distinct");
    }
    size_t count = sphere.lambda.size();
    std::vector<CriticalCircle> out;
    out.reserve(count);

    mpq_class two_pow_n(1);
    for (int k = 0; k < sphere.n; ++k) two_pow_n *= 2;

    for (size_t j = 0; j < count; ++j) {
        mpq_class product(1);
        for (size_t k = 0; k < count; ++k) {
            if (k == j) continue;
            product *= mpq_class(sphere.beta[k]) - mpq_class(sphere.beta[j]) * sphere.w[k] / sphere.w[j];
        }
        // (u / 2pi)^n * product
        ExactScalar coeff(product / two_pow_n, 0, -sphere.n);
        Poly euler = Poly::variable(kVarU).pow(static_cast<unsigned>(sphere.n)) * coeff;

        CriticalCircle circle;
        circle.index = static_cast<int>(j);
        circle.mu_value = sphere.lambda[j];
        circle.euler_class = euler;
        circle.restriction_slope = -sphere.lambda[j];
        circle.alpha_integral = ExactScalar(2 / sphere.w[j], 0, 1);
        out.push_back(std::move(circle));
    }
    return out;
}

unsigned long regular_isotropy_order(const WeightedSphere& sphere) {
    if (!check_zero_regular(sphere)) {
        throw ZeroNotRegular("regular isotropy order requires 0 to be a regular value");
    }
    mpz_class g(0);
    for (const auto& b : sphere.beta) g = gcd(g, b);
    g = abs(g);
    return g.get_ui();
}

Poly ring_ideal_generator(const WeightedSphere& sphere) {
    Poly out = Poly::constant(ExactScalar(1));
    Poly u = Poly::variable(kVarU);
    Poly s = Poly::variable(kVarS);
    for (size_t j = 0; j < sphere.w.size(); ++j) {
        out *= u * ExactScalar(mpq_class(sphere.beta[j])) + s * ExactScalar(sphere.w[j]);
    }
    return out;
}

EquivariantClass class_reduce(const EquivariantClass& c, const WeightedSphere& sphere) {
    Poly generator = ring_ideal_generator(sphere);
    int gen_degree = sphere.n + 1;  // s-degree of the generator
    ExactScalar lead = generator.coefficient_of(kVarS, gen_degree).as_constant();  // prod w_j

    Poly rep = c.rep;
    Poly s = Poly::variable(kVarS);
    while (rep.degree_in(kVarS) >= gen_degree) {
        int d = rep.degree_in(kVarS);
        Poly head = rep.coefficient_of(kVarS, d);  // polynomial in u
        Poly quotient = (head / lead) * s.pow(static_cast<unsigned>(d - gen_degree));
        rep -= quotient * generator;
        if (rep.degree_in(kVarS) >= d && !rep.is_zero()) {
            throw Error("class reduction failed to lower the s-degree");
        }
    }
    return EquivariantClass(rep);
}

bool classes_equal(const EquivariantClass& a, const EquivariantClass& b,
                   const WeightedSphere& sphere) {
    return class_reduce(EquivariantClass(a.rep - b.rep), sphere).rep.is_zero();
}

}  // namespace contactloc
