#include "contactloc/residue_engine.hpp"

#include "contactloc/errors.hpp"
#include "contactloc/residue.hpp"

namespace contactloc {

ExactScalar jkres(const std::vector<LocalizationTerm>& terms, ResidueCone cone) {
    ExactScalar sum;
    for (const auto& term : terms) {
        if (term.amplitude.is_zero()) continue;
        if (term.exponent_lambda == 0) {
            throw LambdaZero("term at circle " + std::to_string(term.circle_index) +
                             " has exponent 0: critical value 0 makes the residue undefined");
        }
        ExactScalar denom_coeff;
        int pole_order = 0;
        if (!term.amplitude.denominator_monomial(&denom_coeff, &pole_order)) {
            throw UnsupportedPole("term at circle " + std::to_string(term.circle_index) +
                                  " has poles away from 0: " + term.amplitude.str());
        }
        bool keep = cone == ResidueCone::positive ? term.exponent_lambda > 0
                                                  : term.exponent_lambda < 0;
        if (!keep || pole_order == 0) continue;
        Poly residue = residue_at_zero(term.amplitude.numerator(), term.amplitude.var(),
                                       term.exponent_lambda, pole_order);
        sum += residue.as_constant() / denom_coeff;
    }
    // The negative cone integrates against the reversed orientation.
    return cone == ResidueCone::positive ? sum : -sum;
}

ExactScalar quotient_pairing(const WeightedSphere& sphere, const EquivariantClass& eta) {
    if (!check_zero_regular(sphere)) {
        std::string values;
        for (const auto& l : sphere.lambda) values += (values.empty() ? "" : ", ") + l.get_str();
        throw ZeroNotRegular("0 is not a regular value of the moment map: lambda = {" + values +
                             "} must straddle 0 with no entry equal to 0");
    }
    unsigned long n0 = regular_isotropy_order(sphere);
    ExactScalar scale = ExactScalar(static_cast<long>(n0)) / circle_group_volume();
    return scale * jkres(pushforward(sphere, eta));
}

}  // namespace contactloc
