#include "octa/seminormal.hpp"

#include <algorithm>
#include <map>

#include "octa/group_element.hpp"

namespace octa {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

RationalMatrix RationalMatrix::kronecker(const RationalMatrix& o) const {
  RationalMatrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& v = at(i, j);
      if (v == 0) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = v * o.at(k, l);
    }
  return r;
}

void RationalMatrix::scale(const Rational& c) {
  for (auto& x : a_) x *= c;
}

namespace {

void fill_tableaux(const std::vector<int>& shape, std::vector<int>& row_fill, int next, int n,
                   std::vector<std::pair<int, int>>& cells,
                   std::vector<StandardTableau>& out) {
  if (next > n) {
    out.push_back(StandardTableau{cells});
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (row_fill[r] >= shape[r]) continue;
    if (r > 0 && row_fill[r] >= row_fill[r - 1]) continue;  // column condition
    cells.emplace_back(static_cast<int>(r), row_fill[r]);
    ++row_fill[r];
    fill_tableaux(shape, row_fill, next + 1, n, cells, out);
    --row_fill[r];
    cells.pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& lam) {
  std::vector<StandardTableau> out;
  std::vector<int> row_fill(lam.length(), 0);
  std::vector<std::pair<int, int>> cells;
  fill_tableaux(lam.parts(), row_fill, 1, lam.weight(), cells, out);
  return out;
}

SeminormalRep::SeminormalRep(Partition lam)
    : lam_(std::move(lam)), n_(lam_.weight()), tableaux_(standard_tableaux(lam_)) {
  std::size_t dim = tableaux_.size();
  std::map<std::vector<std::pair<int, int>>, std::size_t> index;
  for (std::size_t t = 0; t < dim; ++t) index[tableaux_[t].cell] = t;

  gens_.reserve(n_ > 0 ? n_ - 1 : 0);
  for (int i = 1; i < n_; ++i) {
    RationalMatrix m(dim, dim);
    for (std::size_t t = 0; t < dim; ++t) {
      const auto& T = tableaux_[t];
      int r1 = T.row_of(i), c1 = T.col_of(i);
      int r2 = T.row_of(i + 1), c2 = T.col_of(i + 1);
      int d = (c2 - r2) - (c1 - r1);  // axial distance between i and i+1
      if (r1 == r2) {
        m.at(t, t) = 1;
        continue;
      }
      if (c1 == c2) {
        m.at(t, t) = -1;
        continue;
      }
      auto swapped = T.cell;
      std::swap(swapped[i - 1], swapped[i]);
      std::size_t t2 = index.at(swapped);
      Rational dd(d);
      m.at(t, t) = Rational(1) / dd;
      // the off-diagonal pair multiplies to 1 - 1/d^2
      m.at(t2, t) = d < 0 ? Rational(1) : Rational(1) - Rational(1) / (dd * dd);
    }
    gens_.push_back(std::move(m));
  }
}

const RationalMatrix& SeminormalRep::generator(int i) const {
  if (i < 1 || i >= n_) throw DomainError("generator", "adjacent transposition out of range");
  return gens_[i - 1];
}

RationalMatrix SeminormalRep::matrix(const Permutation& s) const {
  if (s.max_moved() > n_)
    throw DomainError("permutation", "support exceeds the representation degree");
  RationalMatrix result = RationalMatrix::identity(dimension());
  if (n_ == 0) return result;

  // bubble-sort the one-line form; each swap contributes one generator
  std::vector<int> line(n_);
  for (int i = 1; i <= n_; ++i) line[i - 1] = s(i);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n_; ++i) {
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        // line <- line * s_{i+1}; accumulating left gives matrix(s)
        result = gens_[i] * result;
        moved = true;
      }
    }
  }
  return result;
}

}  // namespace octa
