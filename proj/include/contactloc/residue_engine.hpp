#pragma once

#include <vector>

#include "contactloc/localization.hpp"

namespace contactloc {

// Half-line cone selecting which oscillatory exponents a residue keeps.
// Both choices yield the same value on pole-free total sums; the negative
// cone flips the orientation of the integration form and is exposed to make
// that independence testable.
enum class ResidueCone { positive, negative };

// Normalized volume of the acting circle group.
inline ExactScalar circle_group_volume() { return ExactScalar(2, 0, 1); }

// Rank-one residue of a sum of terms e^{i xi phi} q(phi) / (c phi^m): terms
// on the selected side of the cone contribute their residue at 0, the others
// contribute nothing.  A term with xi = 0 throws LambdaZero (0 must be a
// regular value); poles away from 0 throw UnsupportedPole.
ExactScalar jkres(const std::vector<LocalizationTerm>& terms,
                  ResidueCone cone = ResidueCone::positive);

// Pairing on the contact quotient at level zero:
//   (n0 / vol G) * jkres(pushforward(sphere, eta))
// with vol G = 2pi.  Requires 0 to be a regular value (ZeroNotRegular
// otherwise); propagates DegenerateCriticalSet from the circle data.
ExactScalar quotient_pairing(const WeightedSphere& sphere, const EquivariantClass& eta);

}  // namespace contactloc
