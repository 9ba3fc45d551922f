#include "octa/gram.hpp"

#ifdef OCTA_HAVE_EIGEN
#include <Eigen/Dense>
#endif

namespace octa {

namespace {

std::vector<std::vector<Rational>> gram_core(const StateFunction& phi,
                                             const std::vector<GroupElement>& elems,
                                             bool parallel) {
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));

#pragma omp parallel for schedule(dynamic) collapse(2) if (parallel)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j < i) continue;  // fill the upper triangle only
      g[i][j] = phi(multiply(inverse(elems[i]), elems[j]));
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // symmetry of the state: phi(g^{-1}) = phi(g)
      Rational lower = phi(multiply(inverse(elems[j]), elems[i]));
      if (lower != g[i][j])
        throw DomainError("phi", "state is not symmetric: phi(g) != phi(g^-1)");
      g[j][i] = g[i][j];
    }
  return g;
}

}  // namespace

std::vector<std::vector<Rational>> build_gram(const StateFunction& phi,
                                              const std::vector<GroupElement>& elems) {
  return gram_core(phi, elems, true);
}

std::vector<std::vector<Rational>> build_gram_serial(const StateFunction& phi,
                                                     const std::vector<GroupElement>& elems) {
  return gram_core(phi, elems, false);
}

GramCheck gram_psd_check_exact(const std::vector<std::vector<Rational>>& gram) {
  const int n = static_cast<int>(gram.size());
  if (n > 16) throw DomainError("elements", "exact mode guarded at 16 elements");
  auto a = gram;  // working copy, destroyed by elimination
  GramCheck out;
  // indices whose (positive) pivots were used; skipped zero rows are
  // excluded so the witness determinant is the product of pivots
  std::vector<int> used;
  Rational pivot_product = 1;

  for (int j = 0; j < n; ++j) {
    const Rational d = a[j][j];
    if (d < 0) {
      out.psd = false;
      out.witness_indices = used;
      out.witness_indices.push_back(j);
      out.witness_minor = pivot_product * d;
      return out;
    }
    if (d == 0) {
      for (int l = j + 1; l < n; ++l) {
        if (a[j][l] != 0) {
          // the Schur block on {j, l} is [[0, a],[a, *]], determinant -a^2
          out.psd = false;
          out.witness_indices = used;
          out.witness_indices.push_back(j);
          out.witness_indices.push_back(l);
          out.witness_minor = pivot_product * (-a[j][l] * a[j][l]);
          return out;
        }
      }
      continue;  // zero row in the complement: admissible, nothing to eliminate
    }
    used.push_back(j);
    pivot_product *= d;
    for (int r = j + 1; r < n; ++r) {
      if (a[r][j] == 0) continue;
      const Rational f = a[r][j] / d;
      for (int c = j; c < n; ++c) a[r][c] -= f * a[j][c];
    }
  }
  return out;
}

GramCheck gram_psd_check(const StateFunction& phi, const std::vector<GroupElement>& elems) {
  if (elems.size() <= 16) return gram_psd_check_exact(build_gram(phi, elems));

#ifdef OCTA_HAVE_EIGEN
  auto gram = build_gram(phi, elems);
  const int n = static_cast<int>(elems.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<double>(gram[i][j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  GramCheck out;
  out.exact = false;
  out.psd = solver.eigenvalues().minCoeff() >= -1e-9;
  return out;
#else
  throw DomainError("elements", "approximate mode unavailable without Eigen");
#endif
}

}  // namespace octa
