#include "contactloc/exact_scalar.hpp"

#include <cmath>
#include <utility>

namespace contactloc {

ExactScalar::ExactScalar(const mpq_class& re, const mpq_class& im, int pi_power) {
    // mpq_class(num, den) stores the fraction unreduced; comparisons and map
    // keys need the canonical form.
    mpq_class re_c(re), im_c(im);
    re_c.canonicalize();
    im_c.canonicalize();
    if (re_c != 0 || im_c != 0) {
        parts_[pi_power] = Part{std::move(re_c), std::move(im_c)};
    }
}

ExactScalar ExactScalar::two_pi_power(int k) {
    mpq_class two_k;
    if (k >= 0) {
        mpz_class num(1);
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
        two_k = num;
    } else {
        mpz_class den(1);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-k));
        two_k = mpq_class(1) / mpq_class(den);
    }
    return ExactScalar(two_k, 0, k);
}

bool ExactScalar::is_rational() const {
    if (parts_.empty()) return true;
    if (parts_.size() != 1) return false;
    const auto& [power, part] = *parts_.begin();
    return power == 0 && part.im == 0;
}

int ExactScalar::pi_power() const {
    if (parts_.empty()) return 0;
    if (parts_.size() != 1) throw Error("pi_power undefined for inhomogeneous scalar " + str());
    return parts_.begin()->first;
}

const mpq_class& ExactScalar::re() const {
    static const mpq_class zero(0);
    if (parts_.empty()) return zero;
    if (parts_.size() != 1) throw Error("re undefined for inhomogeneous scalar " + str());
    return parts_.begin()->second.re;
}

const mpq_class& ExactScalar::im() const {
    static const mpq_class zero(0);
    if (parts_.empty()) return zero;
    if (parts_.size() != 1) throw Error("im undefined for inhomogeneous scalar " + str());
    return parts_.begin()->second.im;
}

mpq_class ExactScalar::rational_value() const {
    if (!is_rational()) throw Error("scalar " + str() + " is not a plain rational");
    return parts_.empty() ? mpq_class(0) : parts_.begin()->second.re;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar out;
    for (const auto& [power, part] : parts_) {
        out.parts_[power] = Part{-part.re, -part.im};
    }
    return out;
}

ExactScalar ExactScalar::operator+(const ExactScalar& rhs) const {
    ExactScalar out(*this);
    for (const auto& [power, part] : rhs.parts_) {
        auto& slot = out.parts_[power];
        slot.re += part.re;
        slot.im += part.im;
    }
    out.prune_();
    return out;
}

ExactScalar ExactScalar::operator-(const ExactScalar& rhs) const { return *this + (-rhs); }

ExactScalar ExactScalar::operator*(const ExactScalar& rhs) const {
    ExactScalar out;
    for (const auto& [pa, a] : parts_) {
        for (const auto& [pb, b] : rhs.parts_) {
            auto& slot = out.parts_[pa + pb];
            slot.re += a.re * b.re - a.im * b.im;
            slot.im += a.re * b.im + a.im * b.re;
        }
    }
    out.prune_();
    return out;
}

ExactScalar ExactScalar::inverse() const {
    if (parts_.empty()) throw Error("division by zero scalar");
    if (parts_.size() != 1) throw Error("division by inhomogeneous scalar " + str());
    const auto& [power, part] = *parts_.begin();
    mpq_class norm = part.re * part.re + part.im * part.im;
    return ExactScalar(part.re / norm, -part.im / norm, -power);
}

ExactScalar ExactScalar::operator/(const ExactScalar& rhs) const { return *this * rhs.inverse(); }

ExactScalar ExactScalar::pow(unsigned exponent) const {
    ExactScalar out(1);
    for (unsigned k = 0; k < exponent; ++k) out *= *this;
    return out;
}

std::complex<double> ExactScalar::to_complex() const {
    std::complex<double> out(0.0, 0.0);
    for (const auto& [power, part] : parts_) {
        double scale = std::pow(M_PI, power);
        out += std::complex<double>(part.re.get_d() * scale, part.im.get_d() * scale);
    }
    return out;
}

int ExactScalar::display_sign() const {
    if (parts_.empty()) return 0;
    const auto& part = parts_.begin()->second;
    if (part.re != 0) return sgn(part.re);
    return sgn(part.im);
}

void ExactScalar::prune_() {
    for (auto it = parts_.begin(); it != parts_.end();) {
        if (it->second.re == 0 && it->second.im == 0) {
            it = parts_.erase(it);
        } else {
            ++it;
        }
    }
}

}  // namespace contactloc
