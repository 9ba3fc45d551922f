#pragma once

#include <json.hpp>

#include <utility>
#include <vector>

#include "octa/bn.hpp"
#include "octa/group_element.hpp"
#include "octa/partitions.hpp"
#include "octa/rational.hpp"
#include "octa/thoma.hpp"

namespace octa {

/// A finite-type factor representation of the level-n subgroup: the
/// bipartition names the finite block, the Thoma spec the tail character.
struct RepSpec {
  int n = 0;
  int k = 0;
  Bipartition bp;
  ThomaSpec thoma;
};

/// Validates weight consistency and the Thoma constraints; returns the
/// normalized spec.
RepSpec validate_rep_spec(RepSpec raw);

/// The canonical involution representing a coset of the Young subgroup
/// S_k x S_{k..infinity}: pairs (p_i, r_i) with p_1 < p_2 < ... <= k and
/// k < r_1 < r_2 < ...
struct CosetInvolution {
  std::vector<std::pair<int, int>> pairs;

  Permutation as_permutation() const;
  bool is_identity() const { return pairs.empty(); }

  friend bool operator==(const CosetInvolution& a, const CosetInvolution& b) = default;
};

/// The unique such involution in the coset s * (S_k x S_{k..infinity}):
/// pair the holes {1..k} \ s({1..k}) with the escapees s({1..k}) \ {1..k},
/// both ascending. The sign part of an element never moves its coset.
CosetInvolution canonical_coset_involution(const Permutation& s, int k);

/// Normalized trace of the level-n finite-type representation at an
/// element of the level subgroup: the finite-block character times the
/// Thoma character of the tail. Errors if the element does not split.
Rational finite_trace(const RepSpec& spec, const GroupElement& b);

/// Diagonal matrix coefficient of the canonical cyclic vector of the
/// induced representation: finite_trace on the level subgroup and 0 off it.
Rational induced_state(const RepSpec& spec, const GroupElement& g);

/// The asymptotic character recovered numerically: the induced state
/// evaluated on shifted conjugates g_m for three consecutive admissible
/// shifts. The three values must agree (a failure is an internal bug) and
/// the common value equals the Thoma character of g.
Rational asymptotic_character_estimate(const RepSpec& spec, const GroupElement& g);

nlohmann::json rep_spec_to_json(const RepSpec& spec);
RepSpec rep_spec_from_json(const nlohmann::json& j);

}  // namespace octa
