#include "contactloc/poly.hpp"

#include <algorithm>
#include <cctype>

namespace contactloc {

namespace {

bool valid_variable_name(const std::string& name) {
    if (name.empty() || name == "i" || name == "pi") return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

// Positions of each of `from` inside the sorted superset `to`.
std::vector<size_t> slot_map(const std::vector<std::string>& from,
                             const std::vector<std::string>& to) {
    std::vector<size_t> slots(from.size());
    for (size_t i = 0; i < from.size(); ++i) {
        slots[i] = static_cast<size_t>(
            std::lower_bound(to.begin(), to.end(), from[i]) - to.begin());
    }
    return slots;
}

Poly::TermMap remap_terms(const Poly::TermMap& terms, const std::vector<size_t>& slots,
                          size_t width) {
    Poly::TermMap out;
    for (const auto& [exps, coeff] : terms) {
        std::vector<int> key(width, 0);
        for (size_t i = 0; i < exps.size(); ++i) key[slots[i]] = exps[i];
        out.emplace(std::move(key), coeff);
    }
    return out;
}

}  // namespace

Poly Poly::constant(const ExactScalar& value) {
    Poly p;
    if (!value.is_zero()) p.terms_.emplace(std::vector<int>{}, value);
    return p;
}

Poly Poly::variable(const std::string& name) {
    if (!valid_variable_name(name)) throw Error("invalid variable name '" + name + "'");
    Poly p;
    p.vars_ = {name};
    p.terms_.emplace(std::vector<int>{1}, ExactScalar(1));
    return p;
}

ExactScalar Poly::constant_term() const {
    std::vector<int> zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? ExactScalar() : it->second;
}

ExactScalar Poly::as_constant() const {
    if (!is_constant()) throw Error("polynomial " + str() + " is not constant");
    return constant_term();
}

int Poly::total_degree() const {
    int best = kZeroDegree;
    for (const auto& [exps, coeff] : terms_) {
        int deg = 0;
        for (int e : exps) deg += e;
        best = std::max(best, deg);
    }
    return best;
}

int Poly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return is_zero() ? kZeroDegree : 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int best = kZeroDegree;
    for (const auto& [exps, coeff] : terms_) best = std::max(best, exps[idx]);
    return best;
}

int Poly::valuation_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int best = -1;
    for (const auto& [exps, coeff] : terms_) {
        best = best < 0 ? exps[idx] : std::min(best, exps[idx]);
    }
    return best < 0 ? 0 : best;
}

Poly Poly::coefficient_of(const std::string& var, int power) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return power == 0 ? *this : Poly();
    size_t idx = static_cast<size_t>(it - vars_.begin());
    Poly out;
    out.vars_ = vars_;
    out.vars_.erase(out.vars_.begin() + static_cast<long>(idx));
    for (const auto& [exps, coeff] : terms_) {
        if (exps[idx] != power) continue;
        std::vector<int> key(exps);
        key.erase(key.begin() + static_cast<long>(idx));
        out.terms_.emplace(std::move(key), coeff);
    }
    out.compact_();
    return out;
}

Poly Poly::substitute(const std::string& var, const Poly& value) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return *this;
    size_t idx = static_cast<size_t>(it - vars_.begin());

    int max_power = degree_in(var);
    std::vector<Poly> powers(static_cast<size_t>(max_power) + 1);
    powers[0] = Poly::constant(ExactScalar(1));
    for (int k = 1; k <= max_power; ++k) powers[static_cast<size_t>(k)] = powers[static_cast<size_t>(k - 1)] * value;

    Poly out;
    for (const auto& [exps, coeff] : terms_) {
        Poly rest;
        rest.vars_ = vars_;
        rest.vars_.erase(rest.vars_.begin() + static_cast<long>(idx));
        std::vector<int> key(exps);
        key.erase(key.begin() + static_cast<long>(idx));
        rest.terms_.emplace(std::move(key), coeff);
        rest.compact_();
        out += rest * powers[static_cast<size_t>(exps[idx])];
    }
    return out;
}

std::complex<double> Poly::eval(
    const std::map<std::string, std::complex<double>>& point) const {
    std::complex<double> out(0.0, 0.0);
    for (const auto& [exps, coeff] : terms_) {
        std::complex<double> term = coeff.to_complex();
        for (size_t i = 0; i < exps.size(); ++i) {
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw Error("eval: no value for variable '" + vars_[i] + "'");
            for (int k = 0; k < exps[i]; ++k) term *= it->second;
        }
        out += term;
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
    return out;
}

Poly aligned_binary_(const Poly& a, const Poly& b, bool subtract) {
    std::vector<std::string> merged;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(merged));
    Poly out;
    out.vars_ = merged;
    out.terms_ = remap_terms(a.terms_, slot_map(a.vars_, merged), merged.size());
    Poly::TermMap rhs = remap_terms(b.terms_, slot_map(b.vars_, merged), merged.size());
    for (const auto& [exps, coeff] : rhs) {
        auto [it, inserted] = out.terms_.emplace(exps, subtract ? -coeff : coeff);
        if (!inserted) it->second = subtract ? it->second - coeff : it->second + coeff;
    }
    out.compact_();
    return out;
}

Poly Poly::operator+(const Poly& rhs) const { return aligned_binary_(*this, rhs, false); }

Poly Poly::operator-(const Poly& rhs) const { return aligned_binary_(*this, rhs, true); }

Poly Poly::operator*(const Poly& rhs) const {
    std::vector<std::string> merged;
    std::set_union(vars_.begin(), vars_.end(), rhs.vars_.begin(), rhs.vars_.end(),
                   std::back_inserter(merged));
    TermMap lhs_terms = remap_terms(terms_, slot_map(vars_, merged), merged.size());
    TermMap rhs_terms = remap_terms(rhs.terms_, slot_map(rhs.vars_, merged), merged.size());

    Poly out;
    out.vars_ = merged;
    for (const auto& [ea, ca] : lhs_terms) {
        for (const auto& [eb, cb] : rhs_terms) {
            std::vector<int> key(merged.size());
            for (size_t i = 0; i < merged.size(); ++i) key[i] = ea[i] + eb[i];
            ExactScalar prod = ca * cb;
            auto [it, inserted] = out.terms_.emplace(std::move(key), prod);
            if (!inserted) it->second += prod;
        }
    }
    out.compact_();
    return out;
}

Poly Poly::pow(unsigned exponent) const {
    Poly out = Poly::constant(ExactScalar(1));
    for (unsigned k = 0; k < exponent; ++k) out *= *this;
    return out;
}

Poly Poly::operator*(const ExactScalar& scale) const {
    if (scale.is_zero()) return Poly();
    Poly out(*this);
    for (auto& [exps, coeff] : out.terms_) coeff *= scale;
    out.compact_();
    return out;
}

void Poly::add_term(const std::vector<int>& exponents, const ExactScalar& coeff) {
    if (exponents.size() != vars_.size()) throw Error("add_term: exponent width mismatch");
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) it->second += coeff;
    compact_();
}

void Poly::compact_() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [exps, coeff] : terms_) {
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] != 0) used[i] = true;
        }
    }
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;

    std::vector<std::string> kept;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (used[i]) kept.push_back(vars_[i]);
    }
    TermMap rebuilt;
    for (const auto& [exps, coeff] : terms_) {
        std::vector<int> key;
        key.reserve(kept.size());
        for (size_t i = 0; i < exps.size(); ++i) {
            if (used[i]) key.push_back(exps[i]);
        }
        rebuilt.emplace(std::move(key), coeff);
    }
    vars_ = std::move(kept);
    terms_ = std::move(rebuilt);
}

}  // namespace contactloc
