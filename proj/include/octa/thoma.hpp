#pragma once

#include <json.hpp>

#include <vector>

#include "octa/group_element.hpp"
#include "octa/partitions.hpp"
#include "octa/rational.hpp"

namespace octa {

/// One Thoma parameter together with its sign label.
struct ThomaEntry {
  Rational value;
  int sigma = 0;  // 0 or 1

  friend bool operator==(const ThomaEntry& a, const ThomaEntry& b) = default;
};

/// Parameters (alpha, beta, gamma0, gamma1, sigma) of an indecomposable
/// character of the infinite signed-permutation group. Only finitely
/// supported parameter lists are representable. The exact identity
/// gamma0 + gamma1 = 1 - sum(alpha) - sum(beta) is enforced by
/// validate_spec.
struct ThomaSpec {
  std::vector<ThomaEntry> alpha;
  std::vector<ThomaEntry> beta;
  Rational gamma0 = 0;
  Rational gamma1 = 0;
};

/// Normalizes (sorts parameters descending, sigma tags traveling with
/// their entries) and verifies every constraint exactly. Throws
/// DomainError on violation.
ThomaSpec validate_spec(ThomaSpec raw);

/// Equality as characters: multisets of (value, sigma) pairs plus the
/// gamma pair. Sign labels on equal values are interchangeable.
bool thoma_equal(const ThomaSpec& a, const ThomaSpec& b);

/// Character value on a single quasi-cycle: the length-k power sums with
/// sign twists for k > 1, and the gamma-weighted branch for k = 1.
Rational quasi_cycle_value(const ThomaSpec& spec, const QuasiCycle& qc);

/// Character of the whole element: product of quasi-cycle values
/// (multiplicativity over disjoint supports).
Rational character_value(const ThomaSpec& spec, const GroupElement& g);

/// The positive-definite function tau_{lambda,alpha,beta} on the
/// permutation subgroup: zero unless s preserves {1..n} (n = weight of
/// lam), otherwise the dimension-normalized irreducible character of the
/// head times the Thoma character of the tail. The element must carry no
/// signs.
Rational tau_lambda_value(const Partition& lam, const ThomaSpec& spec, const GroupElement& s);

/// The automorphism twist by the total sign character: swaps gamma0 and
/// gamma1 and flips every sigma bit. The twisted character satisfies
/// chi'(g) = (-1)^{#signs(g)} chi(g).
ThomaSpec sign_twist(const ThomaSpec& spec);

nlohmann::json thoma_to_json(const ThomaSpec& spec);
ThomaSpec thoma_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& v, const std::string& field);

}  // namespace octa
