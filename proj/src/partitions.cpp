#include "octa/partitions.hpp"

#include <algorithm>
#include <map>

#include "octa/group_element.hpp"

namespace octa {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition", "parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition", "parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::string Bipartition::to_string() const {
  return "[" + lambda0.to_string() + "," + lambda1.to_string() + "]";
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    emit_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("n", "negative weight");
  if (n > 30) throw DomainError("n", "partition enumeration guarded at n <= 30");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 0) throw DomainError("n", "negative weight");
  if (n > 12) throw DomainError("n", "bipartition enumeration guarded at n <= 12");
  std::vector<Bipartition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& l0 : enumerate_partitions(k))
      for (const auto& l1 : enumerate_partitions(n - k)) out.push_back({l0, l1});
  return out;
}

Integer hook_dimension(const Partition& lam) {
  const auto& p = lam.parts();
  int n = lam.weight();
  std::vector<int> conj(n == 0 ? 0 : p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++conj[j];
  Integer hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j)
      hooks *= p[i] - (j + 1) + conj[j] - static_cast<int>(i + 1) + 1;
  Integer f = factorial(static_cast<unsigned>(n));
  // the hook product always divides n!
  return f / hooks;
}

namespace {

using Parts = std::vector<int>;

Parts partition_from_beta(std::vector<Integer> beta) {
  std::sort(beta.rbegin(), beta.rend());
  Parts out;
  int len = static_cast<int>(beta.size());
  for (int i = 0; i < len; ++i) {
    Integer part = beta[i] - (len - 1 - i);
    if (part > 0) out.push_back(static_cast<int>(part));
  }
  return out;
}

Integer mn_recurse(const Parts& lam, const Parts& mu,
                   std::map<std::pair<Parts, Parts>, Integer>& memo) {
  if (mu.empty()) return lam.empty() ? 1 : 0;
  auto key = std::make_pair(lam, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // remove the largest part of mu first
  int t = mu.front();
  Parts rest(mu.begin() + 1, mu.end());

  int len = static_cast<int>(lam.size());
  std::vector<Integer> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lam[i] + (len - 1 - i);

  Integer total = 0;
  for (int i = 0; i < len; ++i) {
    Integer target = beta[i] - t;
    if (target < 0) continue;
    bool clash = false;
    int crossed = 0;
    for (int j = 0; j < len; ++j) {
      if (j == i) continue;
      if (beta[j] == target) clash = true;
      if (beta[j] > target && beta[j] < beta[i]) ++crossed;
    }
    if (clash) continue;
    auto nb = beta;
    nb[i] = target;
    Integer term = mn_recurse(partition_from_beta(std::move(nb)), rest, memo);
    total += (crossed % 2 == 0) ? term : -term;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight())
    throw DomainError("mu", "cycle type weight " + std::to_string(mu.weight()) +
                                " does not match partition weight " +
                                std::to_string(lam.weight()));
  std::map<std::pair<Parts, Parts>, Integer> memo;  // confined to this call
  return mn_recurse(lam.parts(), mu.parts(), memo);
}

Integer z_mu(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  Integer z = 1;
  for (auto [len, m] : mult) z *= pow_integer(len, m) * factorial(m);
  return z;
}

Partition cycle_type_in_range(const Permutation& s, int lo, int hi) {
  std::vector<int> lengths;
  int covered = 0;
  for (const auto& c : s.cycles()) {
    bool inside = c[0] >= lo && c[0] <= hi;
    for (int x : c)
      if ((x >= lo && x <= hi) != inside)
        throw DomainError("permutation", "cycle crosses the requested range");
    if (inside) {
      lengths.push_back(static_cast<int>(c.size()));
      covered += static_cast<int>(c.size());
    }
  }
  for (int i = covered; i < hi - lo + 1; ++i) lengths.push_back(1);
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

}  // namespace octa
