#include "contactloc/rational_fn.hpp"

#include "contactloc/errors.hpp"

namespace contactloc {

namespace {

void check_single_variable(const std::string& var, const Poly& p, const char* role) {
    for (const auto& name : p.variables()) {
        if (name != var) {
            throw Error(std::string(role) + " " + p.str() + " uses variable '" + name +
                        "' outside rational function variable '" + var + "'");
        }
    }
}

// Divides out var^shift; exact because every exponent is >= shift.
Poly shift_down(const Poly& p, const std::string& var, int shift) {
    if (shift == 0 || p.is_zero()) return p;
    Poly out;
    int degree = p.degree_in(var);
    Poly var_poly = Poly::variable(var);
    for (int k = shift; k <= degree; ++k) {
        out += p.coefficient_of(var, k) * var_poly.pow(static_cast<unsigned>(k - shift));
    }
    return out;
}

}  // namespace

RationalFn::RationalFn(const std::string& var)
    : var_(var), num_(), den_(Poly::constant(ExactScalar(1))) {}

RationalFn::RationalFn(const std::string& var, Poly numerator, Poly denominator)
    : var_(var), num_(std::move(numerator)), den_(std::move(denominator)) {
    check_single_variable(var_, num_, "numerator");
    check_single_variable(var_, den_, "denominator");
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    reduce_();
}

void RationalFn::reduce_() {
    if (num_.is_zero()) {
        den_ = Poly::constant(ExactScalar(1));
        return;
    }
    int shift = std::min(num_.valuation_in(var_), den_.valuation_in(var_));
    if (shift > 0) {
        num_ = shift_down(num_, var_, shift);
        den_ = shift_down(den_, var_, shift);
    }
}

Poly RationalFn::as_polynomial() const {
    if (!den_.is_constant()) {
        throw NonPolynomialResult("rational function " + str() +
                                  " does not reduce to a polynomial");
    }
    return num_ / den_.as_constant();
}

bool RationalFn::denominator_monomial(ExactScalar* coefficient, int* pole_order) const {
    int degree = den_.degree_in(var_);
    if (degree < 0) return false;
    for (int k = 0; k < degree; ++k) {
        if (!den_.coefficient_of(var_, k).is_zero()) return false;
    }
    Poly lead = den_.coefficient_of(var_, degree);
    if (!lead.is_constant()) return false;
    if (coefficient != nullptr) *coefficient = lead.as_constant();
    if (pole_order != nullptr) *pole_order = degree;
    return true;
}

RationalFn RationalFn::operator+(const RationalFn& rhs) const {
    if (var_ != rhs.var_) throw Error("adding rational functions in different variables");
    return RationalFn(var_, num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFn RationalFn::operator*(const RationalFn& rhs) const {
    if (var_ != rhs.var_) throw Error("multiplying rational functions in different variables");
    return RationalFn(var_, num_ * rhs.num_, den_ * rhs.den_);
}

RationalFn RationalFn::operator*(const ExactScalar& scale) const {
    return RationalFn(var_, num_ * scale, den_);
}

std::complex<double> RationalFn::eval(std::complex<double> point) const {
    std::map<std::string, std::complex<double>> at{{var_, point}};
    return num_.eval(at) / den_.eval(at);
}

std::string RationalFn::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

}  // namespace contactloc
