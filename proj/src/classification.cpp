#include "octa/classification.hpp"

namespace octa {

std::string to_string(FactorType t) {
  switch (t) {
    case FactorType::I_1: return "I_1";
    case FactorType::I_inf: return "I_inf";
    case FactorType::II_1: return "II_1";
    case FactorType::II_inf: return "II_inf";
  }
  throw std::logic_error("unreachable factor type");
}

int central_depth(const RepSpec& spec) {
  bool g0 = spec.thoma.gamma0 > 0, g1 = spec.thoma.gamma1 > 0;
  if (g0 && g1) return 0;
  if (!g0 && g1) return spec.k;
  if (g0 && !g1) return spec.n - spec.k;
  return spec.n;
}

namespace {

/// The whole Thoma mass sits in a single parameter equal to 1; the tail
/// character is then one-dimensional.
bool flat_spec(const ThomaSpec& t) {
  auto single_one = [](const std::vector<ThomaEntry>& v) {
    return v.size() == 1 && v[0].value == 1;
  };
  return (single_one(t.alpha) && t.beta.empty()) || (single_one(t.beta) && t.alpha.empty());
}

}  // namespace

FactorType factor_type(const RepSpec& spec) {
  bool g0 = spec.thoma.gamma0 > 0, g1 = spec.thoma.gamma1 > 0;
  if (g0 && g1) return FactorType::II_1;
  if (!g0 && g1) return spec.k == 0 ? FactorType::II_1 : FactorType::II_inf;
  if (g0 && !g1) return spec.k == spec.n ? FactorType::II_1 : FactorType::II_inf;
  bool flat = flat_spec(spec.thoma);
  if (spec.n == 0) return flat ? FactorType::I_1 : FactorType::II_1;
  return flat ? FactorType::I_inf : FactorType::II_inf;
}

EquivalenceVerdict quasi_equivalent(const RepSpec& a, const RepSpec& b) {
  if (!thoma_equal(a.thoma, b.thoma))
    return {false, "asymptotic characters differ"};

  bool g0 = a.thoma.gamma0 > 0, g1 = a.thoma.gamma1 > 0;
  if (g0 && g1)
    return {true, "II1 case: the asymptotic character is a complete invariant"};
  if (!g0 && !g1) {
    if (a.n != b.n)
      return {false, "both gammas vanish and the inducing levels differ"};
    if (!(a.bp == b.bp))
      return {false, "both gammas vanish and the bipartitions differ"};
    return {true, "both gammas vanish: level, bipartition and character agree"};
  }
  if (!g0) {  // gamma0 = 0, gamma1 > 0: invariants are the character and lambda0
    if (a.k != b.k)
      return {false, "gamma0 vanishes and the central depths k differ"};
    if (!(a.bp.lambda0 == b.bp.lambda0))
      return {false, "gamma0 vanishes and the head partitions lambda0 differ"};
    return {true, "gamma0 vanishes: character and head partition lambda0 agree"};
  }
  // gamma1 = 0, gamma0 > 0: the sign-twist mirror of the previous case
  if (a.n - a.k != b.n - b.k)
    return {false, "gamma1 vanishes and the central depths n-k differ"};
  if (!(a.bp.lambda1 == b.bp.lambda1))
    return {false, "gamma1 vanishes and the tail partitions lambda1 differ"};
  return {true, "gamma1 vanishes: character and tail partition lambda1 agree"};
}

nlohmann::json classification_json(const RepSpec& a, const RepSpec& b) {
  EquivalenceVerdict v = quasi_equivalent(a, b);
  return {{"quasi_equivalent", v.equivalent},
          {"reason", v.reason},
          {"central_depth", {central_depth(a), central_depth(b)}},
          {"factor_type", {to_string(factor_type(a)), to_string(factor_type(b))}}};
}

}  // namespace octa
