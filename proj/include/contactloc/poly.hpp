#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "contactloc/exact_scalar.hpp"

namespace contactloc {

// Graded-lexicographic order on exponent vectors of equal length: total
// degree first, then lexicographic.  Fixes the canonical term order of every
// polynomial, hence deterministic text output.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Multivariate polynomial over ExactScalar in named formal variables.
//
// The variable list is kept sorted and contains exactly the variables that
// occur in some term (canonical form), so structural equality is semantic
// equality.  Exponent vectors are dense and aligned with the variable list.
// No zero coefficients are stored.  All operations are exact.
class Poly {
public:
    using TermMap = std::map<std::vector<int>, ExactScalar, GradedLexLess>;

    // Total degree reported for the zero polynomial.
    static constexpr int kZeroDegree = -1;

    Poly() = default;  // zero
    static Poly constant(const ExactScalar& value);
    static Poly variable(const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // The coefficient of the all-zero exponent vector (0 if absent).
    ExactScalar constant_term() const;
    // Requires is_constant(); returns the single value.
    ExactScalar as_constant() const;

    int total_degree() const;  // kZeroDegree for zero
    int degree_in(const std::string& var) const;
    // Smallest exponent of var over all terms; degree_in's counterpart for
    // monomial-factor reduction.  Returns 0 when var is absent, kZeroDegree
    // sentinel is not used here: the zero polynomial reports 0.
    int valuation_in(const std::string& var) const;

    // Coefficient of var^power, as a polynomial in the remaining variables.
    Poly coefficient_of(const std::string& var, int power) const;

    // Exact substitution var -> value.  A variable absent from the
    // polynomial leaves it unchanged.
    Poly substitute(const std::string& var, const Poly& value) const;

    std::complex<double> eval(
        const std::map<std::string, std::complex<double>>& point) const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    Poly pow(unsigned exponent) const;

    Poly operator*(const ExactScalar& scale) const;
    // Exact division by a homogeneous nonzero scalar.
    Poly operator/(const ExactScalar& scale) const { return *this * scale.inverse(); }

    bool operator==(const Poly& rhs) const { return vars_ == rhs.vars_ && terms_ == rhs.terms_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    // Canonical text rendering (descending graded-lex), e.g.
    // "(3/2)*s^2 + (1/2)*s*u - u^2".  parse() reads the same grammar.
    std::string str() const;
    static Poly parse(const std::string& text);

    // Internal canonical-form helper: inserts a term, merging and pruning.
    void add_term(const std::vector<int>& exponents, const ExactScalar& coeff);

private:
    friend Poly aligned_binary_(const Poly& a, const Poly& b, bool subtract);
    void compact_();

    std::vector<std::string> vars_;  // sorted, all used
    TermMap terms_;                  // keys sized to vars_
};

inline Poly operator*(const ExactScalar& scale, const Poly& p) { return p * scale; }

}  // namespace contactloc
