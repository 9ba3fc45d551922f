#include "octa/induced.hpp"

#include <algorithm>
#include <set>

namespace octa {

RepSpec validate_rep_spec(RepSpec raw) {
  if (raw.n < 0) throw DomainError("n", "level must be nonnegative");
  if (raw.k < 0 || raw.k > raw.n) throw DomainError("k", "need 0 <= k <= n");
  if (raw.bp.lambda0.weight() != raw.k)
    throw DomainError("lambda0", "weight must equal k");
  if (raw.bp.lambda1.weight() != raw.n - raw.k)
    throw DomainError("lambda1", "weight must equal n - k");
  raw.thoma = validate_spec(std::move(raw.thoma));
  return raw;
}

Permutation CosetInvolution::as_permutation() const {
  std::vector<std::vector<int>> cycles;
  cycles.reserve(pairs.size());
  for (auto [p, r] : pairs) cycles.push_back({p, r});
  return Permutation::from_cycles(cycles);
}

CosetInvolution canonical_coset_involution(const Permutation& s, int k) {
  if (k < 0) throw DomainError("k", "level must be nonnegative");
  std::set<int> image;
  for (int i = 1; i <= k; ++i) image.insert(s(i));
  std::vector<int> holes, escapees;
  for (int i = 1; i <= k; ++i)
    if (!image.count(i)) holes.push_back(i);
  for (int i : image)
    if (i > k) escapees.push_back(i);
  // both lists are ascending and of equal length
  CosetInvolution inv;
  for (std::size_t i = 0; i < holes.size(); ++i)
    inv.pairs.emplace_back(holes[i], escapees[i]);
  return inv;
}

Rational finite_trace(const RepSpec& spec, const GroupElement& b) {
  auto split = split_in_level(b, spec.n);
  if (!split)
    throw DomainError("element", "element does not lie in the level-" +
                                     std::to_string(spec.n) + " subgroup");
  Rational head = bn_normalized_character(spec.n, spec.bp, split->first);
  return head * character_value(spec.thoma, split->second);
}

Rational induced_state(const RepSpec& spec, const GroupElement& g) {
  if (!g.perm.preserves_prefix(spec.n)) return 0;
  return finite_trace(spec, g);
}

Rational asymptotic_character_estimate(const RepSpec& spec, const GroupElement& g) {
  int base = std::max(max_support(g), spec.n);
  Rational first = induced_state(spec, shift_conjugate(g, base));
  for (int d = 1; d <= 2; ++d) {
    Rational v = induced_state(spec, shift_conjugate(g, base + d));
    if (v != first)
      throw std::logic_error("shifted induced states disagree; the estimate is broken");
  }
  return first;
}

nlohmann::json rep_spec_to_json(const RepSpec& spec) {
  auto parts = [](const Partition& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int x : p.parts()) arr.push_back(x);
    return arr;
  };
  return {{"n", spec.n},
          {"k", spec.k},
          {"lambda0", parts(spec.bp.lambda0)},
          {"lambda1", parts(spec.bp.lambda1)},
          {"thoma", thoma_to_json(spec.thoma)}};
}

RepSpec rep_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("spec", "rep spec must be a JSON object");
  RepSpec spec;
  auto parts = [&](const char* field) {
    std::vector<int> v;
    if (j.contains(field)) {
      if (!j.at(field).is_array()) throw DomainError(field, "expected an integer array");
      for (const auto& x : j.at(field)) v.push_back(x.get<int>());
    }
    try {
      return Partition(v);
    } catch (const DomainError& e) {
      throw DomainError(field, e.what());
    }
  };
  if (!j.contains("n")) throw DomainError("n", "missing level n");
  spec.n = j.at("n").get<int>();
  spec.bp.lambda0 = parts("lambda0");
  spec.bp.lambda1 = parts("lambda1");
  spec.k = j.contains("k") ? j.at("k").get<int>() : spec.bp.lambda0.weight();
  if (!j.contains("thoma")) throw DomainError("thoma", "missing thoma spec");
  spec.thoma = thoma_from_json(j.at("thoma"));
  return validate_rep_spec(std::move(spec));
}

}  // namespace octa
