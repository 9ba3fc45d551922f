#include "octa/lab.hpp"

#include <vector>

namespace octa {

BernoulliParam::BernoulliParam(Rational p_in) : p(std::move(p_in)) {
  if (p <= 0 || p >= 1) throw DomainError("p", "need 0 < p < 1");
}

Rational example1_pairing(int m, int f_index) {
  if (m < 0) throw DomainError("m", "block length must be nonnegative");
  if (f_index < 1) throw DomainError("f_index", "basis index must be positive");
  // (T(z) e_j)(x) = (-1)^{z_x} e_j(x), so the pairing is the sign at j
  return f_index <= m ? Rational(-1) : Rational(1);
}

namespace {

Rational config_sum(const BernoulliParam& p, const GroupElement& g, int m, bool parallel) {
  // weights nu(0) = p, nu(1) = q per coordinate, precomputed as powers
  std::vector<Rational> pow_p(m + 1), pow_q(m + 1);
  pow_p[0] = pow_q[0] = 1;
  for (int i = 1; i <= m; ++i) {
    pow_p[i] = pow_p[i - 1] * p.p;
    pow_q[i] = pow_q[i - 1] * p.q();
  }
  unsigned long long zmask = 0;
  for (int i : g.signs.flipped()) zmask |= 1ull << (i - 1);
  std::vector<int> perm_of(m);  // permutation action on coordinate labels
  for (int i = 1; i <= m; ++i) perm_of[i - 1] = g.perm(i) - 1;

  const unsigned long long total = 1ull << m;
  // the cyclic vector is the constant function on configuration space
  auto one = [](unsigned long long) { return Rational(1); };
  Rational sum = 0;

#pragma omp parallel if (parallel)
  {
    Rational local = 0;
#pragma omp for schedule(static)
    for (long long xs = 0; xs < static_cast<long long>(total); ++xs) {
      const unsigned long long x = static_cast<unsigned long long>(xs);
      // (Pi(g) 1)(x) = (-1)^{sum_i x_i z_i} * 1(x s)
      unsigned long long permuted = 0;
      for (int i = 0; i < m; ++i)
        if (x & (1ull << i)) permuted |= 1ull << perm_of[i];
      Rational value = one(permuted);
      int ones = __builtin_popcountll(x);
      int parity = __builtin_popcountll(x & zmask) & 1;
      Rational weight = pow_p[m - ones] * pow_q[ones];
      if (parity)
        local -= weight * value;
      else
        local += weight * value;
    }
#pragma omp critical
    sum += local;
  }
  return sum;
}

}  // namespace

Rational example3_state_at(const BernoulliParam& p, const GroupElement& g, int m) {
  if (m < max_support(g)) throw DomainError("m", "truncation must cover the support");
  if (m > 21) throw DomainError("m", "truncation guarded at 21");
  return config_sum(p, g, m, true);
}

Rational example3_state_at_serial(const BernoulliParam& p, const GroupElement& g, int m) {
  if (m < max_support(g)) throw DomainError("m", "truncation must cover the support");
  if (m > 21) throw DomainError("m", "truncation guarded at 21");
  return config_sum(p, g, m, false);
}

Rational example3_state(const BernoulliParam& p, const GroupElement& g, int m) {
  if (m > 20) throw DomainError("m", "truncation guarded at 20");
  Rational at_m = example3_state_at(p, g, m);
  Rational at_next = example3_state_at(p, g, m + 1);
  if (at_m != at_next)
    throw std::logic_error("state changed between truncations m and m+1");
  return at_m;
}

Rational example3_defect(const BernoulliParam& p, int n) {
  if (n < 1) throw DomainError("n", "coordinate index must be positive");
  GroupElement flip{Permutation{}, SignVector({n})};
  GroupElement swap{Permutation::transposition(n, n + 1), SignVector{}};
  GroupElement sandwiched = multiply(multiply(flip, swap), flip);
  int m = n + 1;
  return example3_state(p, sandwiched, m) - example3_state(p, swap, m);
}

std::vector<std::pair<int, Rational>> example1_series(int f_index, int max_m) {
  std::vector<std::pair<int, Rational>> out;
  for (int m = 0; m <= max_m; ++m) out.emplace_back(m, example1_pairing(m, f_index));
  return out;
}

std::vector<std::pair<int, Rational>> example3_defect_series(const BernoulliParam& p, int n,
                                                             int max_m) {
  if (n < 1) throw DomainError("n", "coordinate index must be positive");
  GroupElement flip{Permutation{}, SignVector({n})};
  GroupElement swap{Permutation::transposition(n, n + 1), SignVector{}};
  GroupElement sandwiched = multiply(multiply(flip, swap), flip);
  std::vector<std::pair<int, Rational>> out;
  for (int m = n + 1; m <= max_m; ++m)
    out.emplace_back(m, example3_state_at(p, sandwiched, m) - example3_state_at(p, swap, m));
  return out;
}

}  // namespace octa
