#include "contactloc/numeric.hpp"

#include <cmath>

#include "contactloc/errors.hpp"

namespace contactloc {

namespace {

template <typename Value>
Value simpson_recurse(const std::function<Value(double)>& f, double a, double b, Value fa,
                      Value fm, Value fb, Value whole, double tolerance, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    Value flm = f(lm);
    Value frm = f(rm);
    Value left = (fa + 4.0 * flm + fm) * ((m - a) / 6.0);
    Value right = (fm + 4.0 * frm + fb) * ((b - m) / 6.0);
    Value delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tolerance) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, tolerance / 2.0, depth - 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, tolerance / 2.0, depth - 1);
}

template <typename Value>
Value simpson_driver(const std::function<Value(double)>& f, double a, double b, double tolerance,
                     int max_depth) {
    Value fa = f(a);
    Value fb = f(b);
    Value fm = f(0.5 * (a + b));
    Value whole = (fa + 4.0 * fm + fb) * ((b - a) / 6.0);
    return simpson_recurse(f, a, b, fa, fm, fb, whole, tolerance, max_depth);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance, int max_depth) {
    return simpson_driver(f, a, b, tolerance, max_depth);
}

std::complex<double> adaptive_simpson_complex(const std::function<std::complex<double>(double)>& f,
                                              double a, double b, double tolerance,
                                              int max_depth) {
    return simpson_driver(f, a, b, tolerance, max_depth);
}

const GaussLegendreRule& gauss_legendre_64() {
    static const GaussLegendreRule rule = [] {
        constexpr int n = 64;
        GaussLegendreRule r;
        r.nodes.resize(n);
        r.weights.resize(n);
        // Newton iteration on the Legendre polynomial from the Chebyshev guess.
        for (int k = 0; k < n; ++k) {
            double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double step = p1 / dp;
                x -= step;
                if (std::abs(step) < 1e-15) break;
            }
            r.nodes[static_cast<size_t>(k)] = x;
            r.weights[static_cast<size_t>(k)] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

std::vector<double> gaussian_moments(double a, double b, double eps, int max_k) {
    if (eps <= 0.0) throw Error("gaussian_moments requires eps > 0");
    std::vector<double> g(static_cast<size_t>(max_k) + 1, 0.0);
    double sqrt_2eps = std::sqrt(2.0 * eps);
    double ea = std::exp(-a * a / (2.0 * eps));
    double eb = std::exp(-b * b / (2.0 * eps));
    g[0] = std::sqrt(M_PI * eps / 2.0) * (std::erf(b / sqrt_2eps) - std::erf(a / sqrt_2eps));
    if (max_k >= 1) g[1] = eps * (ea - eb);
    double pow_a = 1.0;  // a^{k-1}
    double pow_b = 1.0;
    for (int k = 2; k <= max_k; ++k) {
        pow_a *= a;
        pow_b *= b;
        g[static_cast<size_t>(k)] =
            eps * (pow_a * ea - pow_b * eb) + (k - 1) * eps * g[static_cast<size_t>(k - 2)];
    }
    return g;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw Error("linear_fit needs >= 2 points");
    double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        sxx += x[k] * x[k];
        sxy += x[k] * y[k];
    }
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0.0, ss_tot = 0.0;
    double mean = sy / n;
    for (size_t k = 0; k < x.size(); ++k) {
        double predicted = fit.intercept + fit.slope * x[k];
        ss_res += (y[k] - predicted) * (y[k] - predicted);
        ss_tot += (y[k] - mean) * (y[k] - mean);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

}  // namespace contactloc
