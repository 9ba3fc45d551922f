#pragma once

#include <json.hpp>

#include <string>

#include "octa/induced.hpp"

namespace octa {

/// Possible factor types of a stable representation built from a RepSpec.
enum class FactorType { I_1, I_inf, II_1, II_inf };

std::string to_string(FactorType t);

/// The least level from which the representation is induced:
/// 0 when both gammas are positive, k when gamma0 vanishes, n-k when
/// gamma1 vanishes, n when both vanish.
int central_depth(const RepSpec& spec);

/// Decision table for the Murray-von Neumann type of the induced
/// representation.
FactorType factor_type(const RepSpec& spec);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::string reason;
};

/// Quasi-equivalence of the representations named by two specs. The
/// asymptotic character must match; the remaining invariants depend on
/// which gammas vanish.
EquivalenceVerdict quasi_equivalent(const RepSpec& a, const RepSpec& b);

/// {"quasi_equivalent":..., "reason":..., "central_depth":[..,..],
///  "factor_type":[..,..]}
nlohmann::json classification_json(const RepSpec& a, const RepSpec& b);

}  // namespace octa
