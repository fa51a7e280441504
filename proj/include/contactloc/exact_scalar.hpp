#pragma once

#include <complex>
#include <map>
#include <string>

#include <gmpxx.h>

#include "contactloc/errors.hpp"

namespace contactloc {

// Exact scalar: a finite formal sum  sum_k (re_k + i*im_k) * pi^k  with
// arbitrary-precision rational coefficients and integer powers k of pi.
//
// pi is a formal grading symbol, never a float.  Addition of two homogeneous
// scalars with different pi powers is stored as the formal sum of both parts;
// multiplication adds pi powers.  Zero is canonical (no parts stored).
// Division is defined only by homogeneous nonzero scalars.  Values are
// immutable in spirit: all operators return fresh values.
class ExactScalar {
public:
    struct Part {
        mpq_class re;
        mpq_class im;
    };

    ExactScalar() = default;
    ExactScalar(long value) : ExactScalar(mpq_class(value)) {}  // NOLINT: implicit by design
    ExactScalar(const mpq_class& re) : ExactScalar(re, 0, 0) {}  // NOLINT
    ExactScalar(const mpq_class& re, const mpq_class& im, int pi_power);

    static ExactScalar unit_i() { return ExactScalar(0, 1, 0); }
    static ExactScalar pi_power_of(int k) { return ExactScalar(1, 0, k); }
    // (2*pi)^k, for any integer k.
    static ExactScalar two_pi_power(int k);

    bool is_zero() const { return parts_.empty(); }
    // True when at most one pi power is present.
    bool is_homogeneous() const { return parts_.size() <= 1; }
    // True when the value is a plain rational number (im = 0, pi power 0).
    bool is_rational() const;

    // Accessors for homogeneous values; zero reports pi_power 0 and re = im = 0.
    int pi_power() const;
    const mpq_class& re() const;
    const mpq_class& im() const;
    mpq_class rational_value() const;  // requires is_rational()

    const std::map<int, Part>& parts() const { return parts_; }

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& rhs) const;
    ExactScalar operator-(const ExactScalar& rhs) const;
    ExactScalar operator*(const ExactScalar& rhs) const;
    // Division by a homogeneous nonzero scalar; throws Error otherwise.
    ExactScalar operator/(const ExactScalar& rhs) const;
    ExactScalar& operator+=(const ExactScalar& rhs) { return *this = *this + rhs; }
    ExactScalar& operator-=(const ExactScalar& rhs) { return *this = *this - rhs; }
    ExactScalar& operator*=(const ExactScalar& rhs) { return *this = *this * rhs; }
    ExactScalar& operator/=(const ExactScalar& rhs) { return *this = *this / rhs; }

    ExactScalar inverse() const;  // homogeneous nonzero only
    ExactScalar pow(unsigned exponent) const;

    bool operator==(const ExactScalar& rhs) const { return parts_ == rhs.parts_; }
    bool operator!=(const ExactScalar& rhs) const { return !(*this == rhs); }

    // Evaluates pi numerically; the only place the grading becomes a float.
    std::complex<double> to_complex() const;

    // Canonical text rendering, e.g. "2*pi^2", "(4/5)*pi", "(1/2+i)*pi^-1".
    std::string str() const;
    // Parses the same grammar; throws ParseError on non-scalar input.
    static ExactScalar parse(const std::string& text);

    // Sign of the lowest-grade part (re first, then im); 0 for zero.  Used to
    // fold signs into " - " when joining sums in the text rendering.
    int display_sign() const;

private:
    void prune_();

    // pi power -> Gaussian rational coefficient; no zero parts stored.
    std::map<int, Part> parts_;
};

inline ExactScalar operator*(long lhs, const ExactScalar& rhs) { return ExactScalar(lhs) * rhs; }
inline ExactScalar operator*(const mpq_class& lhs, const ExactScalar& rhs) {
    return ExactScalar(lhs) * rhs;
}

inline bool operator==(const ExactScalar::Part& a, const ExactScalar::Part& b) {
    return a.re == b.re && a.im == b.im;
}

}  // namespace contactloc
