#pragma once

#include <complex>
#include <string>

#include "contactloc/poly.hpp"

namespace contactloc {

// Rational function in a single named variable over ExactScalar.
//
// The representation is always reduced by the common monomial factor var^k of
// numerator and denominator (full gcd reduction is deliberately not
// performed).  The denominator is nonzero; a zero numerator normalizes the
// denominator to 1.
class RationalFn {
public:
    // Zero function in the given variable.
    explicit RationalFn(const std::string& var);
    RationalFn(const std::string& var, Poly numerator, Poly denominator);

    static RationalFn from_poly(const std::string& var, Poly numerator) {
        return RationalFn(var, std::move(numerator), Poly::constant(ExactScalar(1)));
    }

    const std::string& var() const { return var_; }
    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the reduced denominator is constant.
    bool is_polynomial() const { return den_.is_constant(); }
    // Clears the constant denominator; throws NonPolynomialResult otherwise.
    Poly as_polynomial() const;

    // True when the denominator is c*var^m; reports c and m.  Rational
    // functions outside this shape have poles away from 0 and are rejected by
    // the residue layer.
    bool denominator_monomial(ExactScalar* coefficient, int* pole_order) const;

    RationalFn operator+(const RationalFn& rhs) const;
    RationalFn operator*(const RationalFn& rhs) const;
    RationalFn operator*(const ExactScalar& scale) const;

    std::complex<double> eval(std::complex<double> point) const;

    std::string str() const;

private:
    void reduce_();

    std::string var_;
    Poly num_;
    Poly den_;
};

}  // namespace contactloc
