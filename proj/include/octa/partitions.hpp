#pragma once

#include <string>
#include <vector>

#include "octa/rational.hpp"

namespace octa {

class Permutation;

/// Integer partition: weakly decreasing positive parts. The empty
/// partition (weight 0) is allowed.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int weight() const;
  std::size_t length() const { return parts_.size(); }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  std::string to_string() const;  // "[3,2,1]", "[]"

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

private:
  std::vector<int> parts_;
};

/// Ordered pair of partitions (lambda0 |- k, lambda1 |- n-k) of total
/// weight n.
struct Bipartition {
  Partition lambda0;
  Partition lambda1;

  int k() const { return lambda0.weight(); }
  int total_weight() const { return lambda0.weight() + lambda1.weight(); }
  std::string to_string() const;  // "[[3],[1,1]]"

  friend bool operator==(const Bipartition& a, const Bipartition& b) = default;
  friend bool operator<(const Bipartition& a, const Bipartition& b) {
    if (!(a.lambda0 == b.lambda0)) return a.lambda0 < b.lambda0;
    return a.lambda1 < b.lambda1;
  }
};

/// All partitions of n in lexicographically descending order,
/// e.g. 4 -> [4],[3,1],[2,2],[2,1,1],[1,1,1,1]. Guarded at n <= 30.
std::vector<Partition> enumerate_partitions(int n);

/// All bipartitions of n, k ascending then lexicographic. Guarded at n <= 12.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// Number of standard Young tableaux of the shape (hook length formula).
Integer hook_dimension(const Partition& lam);

/// Irreducible symmetric-group character value chi_lambda at cycle type mu,
/// by the Murnaghan-Nakayama recursion. Weights must agree.
Integer mn_character(const Partition& lam, const Partition& mu);

/// Centralizer order z_mu = prod_i i^{m_i} m_i! of the class mu in S_n.
Integer z_mu(const Partition& mu);

/// Cycle type of the restriction of s to {lo..hi} as a partition of
/// hi-lo+1 (fixed points included as 1s). The restriction must be closed:
/// every cycle touching the range lies inside it.
Partition cycle_type_in_range(const Permutation& s, int lo, int hi);

}  // namespace octa
