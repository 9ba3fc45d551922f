#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace octa {

/// Finite-support permutation of the positive integers. Only moved points
/// are stored; every unmapped point is fixed. Composition is right-to-left:
/// (a*b)(i) = a(b(i)).
class Permutation {
public:
  Permutation() = default;

  /// Builds from an explicit point map. Fixed points are dropped; the map
  /// must be a bijection of its keys onto its values.
  static Permutation from_mapping(const std::map<int, int>& mapping);

  /// Builds from disjoint cycles, e.g. {{1,2,3},{5,6}}. Length-1 cycles
  /// are ignored.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);

  static Permutation transposition(int a, int b);

  int operator()(int i) const {
    auto it = map_.find(i);
    return it == map_.end() ? i : it->second;
  }

  Permutation inverse() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  bool is_identity() const { return map_.empty(); }

  /// Points i with s(i) != i, ascending.
  std::vector<int> moved_points() const;

  int max_moved() const { return map_.empty() ? 0 : map_.rbegin()->first; }

  /// Cycle decomposition; each cycle starts at its minimal element and
  /// cycles are listed by minimal element ascending.
  std::vector<std::vector<int>> cycles() const;

  /// True when the permutation maps {1..n} onto itself (equivalently,
  /// no moved point crosses the n boundary).
  bool preserves_prefix(int n) const;

  const std::map<int, int>& mapping() const { return map_; }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.map_ < b.map_;
  }

private:
  std::map<int, int> map_;
};

/// Element of the direct sum of countably many copies of Z_2: the finite
/// set of flipped indices. Adding an index twice cancels.
class SignVector {
public:
  SignVector() = default;
  explicit SignVector(std::set<int> flipped);

  bool contains(int i) const { return flipped_.count(i) != 0; }
  void toggle(int i);
  bool empty() const { return flipped_.empty(); }
  std::size_t count() const { return flipped_.size(); }
  int max_index() const { return flipped_.empty() ? 0 : *flipped_.rbegin(); }
  const std::set<int>& flipped() const { return flipped_; }

  /// Pointwise Z_2 addition (symmetric difference).
  friend SignVector operator+(const SignVector& a, const SignVector& b);

  /// Image under the permutation action: index s(i) is flipped in the
  /// result iff i is flipped here.
  SignVector relabeled_by(const Permutation& s) const;

  friend bool operator==(const SignVector& a, const SignVector& b) = default;
  friend bool operator<(const SignVector& a, const SignVector& b) {
    return a.flipped_ < b.flipped_;
  }

private:
  std::set<int> flipped_;
};

/// Finite-support signed permutation: the pair (perm, signs) names the
/// element that first permutes by `perm` and then flips the signs listed
/// in `signs`. With this reading the group law is
///   (z1, s1) * (z2, s2) = (z1 + s1(z2), s1 s2),
/// matching the semidirect-product composition of sign vectors with
/// permutations acting by s(z)_i = z_{s^{-1}(i)}.
struct GroupElement {
  Permutation perm;
  SignVector signs;

  bool is_identity() const { return perm.is_identity() && signs.empty(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.perm < b.perm) return true;
    if (b.perm < a.perm) return false;
    return a.signs < b.signs;
  }
};

/// One cycle of the permutation part together with the sign bits carried
/// on its orbit. The orbit starts at its minimal element; orbit[j+1] is the
/// image of orbit[j]. A flipped fixed point is a length-1 quasi-cycle.
struct QuasiCycle {
  std::vector<int> orbit;
  std::set<int> bits;  // subset of orbit

  std::size_t length() const { return orbit.size(); }
  int sign_sum() const { return static_cast<int>(bits.size() % 2); }
  bool is_trivial() const { return orbit.size() == 1 && bits.empty(); }
  GroupElement to_element() const;
};

/// Conjugacy invariant: multisets of quasi-cycle lengths split by the
/// parity of their sign sums. Lengths are kept weakly decreasing; trivial
/// fixed points never appear.
struct SignedCycleType {
  std::vector<int> plus;   // even sign sum
  std::vector<int> minus;  // odd sign sum

  friend bool operator==(const SignedCycleType& a, const SignedCycleType& b) = default;
  friend bool operator<(const SignedCycleType& a, const SignedCycleType& b) {
    if (a.plus != b.plus) return a.plus < b.plus;
    return a.minus < b.minus;
  }

  std::string to_string() const;  // "+[2,1]|-[1]"
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement conjugate(const GroupElement& g, const GroupElement& h);  // h g h^-1

/// {i : perm(i) != i or i flipped}, ascending.
std::vector<int> support(const GroupElement& g);
int max_support(const GroupElement& g);  // 0 for the identity

/// Disjoint quasi-cycles ordered by minimal orbit element; recomposing
/// them (in any order) reproduces g. Trivial fixed points are omitted.
std::vector<QuasiCycle> quasi_cycle_decompose(const GroupElement& g);

SignedCycleType signed_cycle_type(const GroupElement& g);

/// Conjugation by t_n = (1 1+n)(2 2+n)...(K K+n) with K = max support:
/// every index of g is shifted up by n. Requires n >= max support so the
/// result lands beyond level n.
GroupElement shift_conjugate(const GroupElement& g, int n);

/// Factors g = b1 * b2 with supp(b1) in [1,n] and supp(b2) in [n+1,oo),
/// which exists iff the permutation part preserves {1..n}. The factors
/// commute. Returns nullopt when g is not in that subgroup.
std::optional<std::pair<GroupElement, GroupElement>> split_in_level(const GroupElement& g, int n);

/// Text grammar: cycles as "(a b c)(d e)", identity as "()" or "e",
/// optional ";signs=i,j,k" suffix (the list may be empty).
GroupElement parse_element(const std::string& text);
std::string to_string(const GroupElement& g);

}  // namespace octa
