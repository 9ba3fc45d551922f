#include "octa/bn.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace octa {

int omega_value(int k, int n, const SignVector& z) {
  if (k < 0 || k > n) throw DomainError("k", "need 0 <= k <= n");
  if (z.max_index() > n) throw DomainError("signs", "sign support exceeds level n");
  int above = 0;
  for (int i : z.flipped())
    if (i > k) ++above;
  return above % 2 == 0 ? 1 : -1;
}

BnClass bn_class_of(const GroupElement& g, int n) {
  if (max_support(g) > n) throw DomainError("element", "support exceeds level n");
  SignedCycleType t = signed_cycle_type(g);
  int covered = 0;
  for (int l : t.plus) covered += l;
  for (int l : t.minus) covered += l;
  for (int i = covered; i < n; ++i) t.plus.push_back(1);
  std::sort(t.plus.rbegin(), t.plus.rend());
  BnClass cls{std::move(t), 0};
  // centralizer order: prod over both sides of (2 len)^mult mult!
  auto centralizer_side = [](const std::vector<int>& lens) {
    std::map<int, int> mult;
    for (int l : lens) ++mult[l];
    Integer c = 1;
    for (auto [len, m] : mult) c *= pow_integer(2 * len, m) * factorial(m);
    return c;
  };
  Integer order = pow_integer(2, n) * factorial(n);
  cls.size = order / (centralizer_side(cls.type.plus) * centralizer_side(cls.type.minus));
  return cls;
}

GroupElement bn_class_representative(const SignedCycleType& type) {
  std::vector<std::vector<int>> cycles;
  std::set<int> flips;
  int next = 1;
  for (int len : type.plus) {
    std::vector<int> c(len);
    std::iota(c.begin(), c.end(), next);
    next += len;
    if (len > 1) cycles.push_back(std::move(c));
  }
  for (int len : type.minus) {
    std::vector<int> c(len);
    std::iota(c.begin(), c.end(), next);
    flips.insert(next);
    next += len;
    if (len > 1) cycles.push_back(std::move(c));
  }
  return GroupElement{Permutation::from_cycles(cycles), SignVector(std::move(flips))};
}

std::vector<BnClass> bn_classes(int n) {
  if (n < 0) throw DomainError("n", "negative rank");
  if (n > 8) throw DomainError("n", "class formula mode guarded at n <= 8");
  std::vector<BnClass> out;
  Integer total = 0;
  for (int a = n; a >= 0; --a) {
    for (const auto& lp : enumerate_partitions(a)) {
      for (const auto& lm : enumerate_partitions(n - a)) {
        SignedCycleType t{lp.parts(), lm.parts()};
        BnClass cls = bn_class_of(bn_class_representative(t), n);
        total += cls.size;
        out.push_back(std::move(cls));
      }
    }
  }
  if (total != pow_integer(2, n) * factorial(n))
    throw std::logic_error("conjugacy class sizes do not sum to the group order");
  return out;
}

std::vector<GroupElement> enumerate_bn_elements(int n) {
  std::vector<GroupElement> out;
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  do {
    std::map<int, int> m;
    for (int i = 1; i <= n; ++i) m[i] = line[i - 1];
    Permutation p = Permutation::from_mapping(m);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::set<int> flips;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) flips.insert(i + 1);
      out.push_back(GroupElement{p, SignVector(std::move(flips))});
    }
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<BnClass> bn_classes_brute_force(int n) {
  if (n < 0 || n > 5) throw DomainError("n", "brute-force verification mode guarded at n <= 5");
  auto elements = enumerate_bn_elements(n);
  std::vector<GroupElement> conjugators;
  conjugators.push_back(GroupElement{Permutation{}, SignVector({1})});
  for (int i = 1; i < n; ++i)
    conjugators.push_back(GroupElement{Permutation::transposition(i, i + 1), SignVector{}});

  std::map<GroupElement, bool> seen;
  std::vector<BnClass> out;
  for (const auto& g : elements) {
    if (seen.count(g)) continue;
    // conjugation orbit of g under the generator set
    std::vector<GroupElement> queue{g};
    seen[g] = true;
    std::size_t head = 0;
    SignedCycleType type = bn_class_of(g, n).type;
    while (head < queue.size()) {
      GroupElement cur = queue[head++];
      for (const auto& h : conjugators) {
        GroupElement c = conjugate(cur, h);
        if (!seen.count(c)) {
          if (!(bn_class_of(c, n).type == type))
            throw std::logic_error("conjugation changed the signed cycle type");
          seen[c] = true;
          queue.push_back(c);
        }
      }
    }
    out.push_back(BnClass{type, Integer(queue.size())});
  }
  return out;
}

namespace {

struct YoungCosets {
  std::vector<std::vector<int>> subsets;  // lexicographic k-subsets of {1..n}
  std::vector<Permutation> reps;
  std::map<std::vector<int>, std::size_t> index;
};

YoungCosets young_cosets(int n, int k) {
  YoungCosets out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  auto emit = [&]() {
    std::vector<int> comp;
    std::size_t p = 0;
    for (int i = 1; i <= n; ++i) {
      if (p < pick.size() && pick[p] == i)
        ++p;
      else
        comp.push_back(i);
    }
    std::map<int, int> m;
    for (int i = 0; i < k; ++i) m[i + 1] = pick[i];
    for (std::size_t i = 0; i < comp.size(); ++i) m[k + 1 + static_cast<int>(i)] = comp[i];
    out.index[pick] = out.subsets.size();
    out.subsets.push_back(pick);
    out.reps.push_back(Permutation::from_mapping(m));
  };
  if (k == 0) {
    out.index[{}] = 0;
    out.subsets.push_back({});
    out.reps.push_back(Permutation{});
    return out;
  }
  while (true) {
    emit();
    int i = k - 1;
    while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Permutation restrict_relabel(const Permutation& s, int lo, int hi) {
  std::map<int, int> m;
  for (auto [i, j] : s.mapping())
    if (i >= lo && i <= hi) m[i - lo + 1] = j - lo + 1;
  return Permutation::from_mapping(m);
}

}  // namespace

std::vector<Permutation> young_coset_representatives(int n, int k) {
  if (k < 0 || k > n) throw DomainError("k", "need 0 <= k <= n");
  return young_cosets(n, k).reps;
}

Integer bn_induced_character(int n, const Bipartition& bp, const BnClass& cls) {
  if (bp.total_weight() != n)
    throw DomainError("bipartition", "total weight must equal n");
  int type_weight = 0;
  for (int l : cls.type.plus) type_weight += l;
  for (int l : cls.type.minus) type_weight += l;
  if (type_weight != n) throw DomainError("class", "class type weight must equal n");

  int k = bp.k();
  GroupElement g = bn_class_representative(cls.type);
  Integer total = 0;
  for (const auto& x : young_coset_representatives(n, k)) {
    GroupElement rep{x, SignVector{}};
    GroupElement h = multiply(multiply(inverse(rep), g), rep);
    if (!h.perm.preserves_prefix(k)) continue;
    Integer term = omega_value(k, n, h.signs);
    term *= mn_character(bp.lambda0, cycle_type_in_range(h.perm, 1, k));
    term *= mn_character(bp.lambda1, cycle_type_in_range(h.perm, k + 1, n));
    total += term;
  }
  return total;
}

Integer CharacterTable::group_order() const {
  return pow_integer(2, n) * factorial(n);
}

Integer CharacterTable::dims_squared_sum() const {
  Integer s = 0;
  for (const auto& d : dims) s += d * d;
  return s;
}

namespace {

CharacterTable table_core(int n, bool parallel) {
  if (n < 0) throw DomainError("n", "negative rank");
  if (n > 6) throw DomainError("n", "table construction guarded at n <= 6");
  CharacterTable t;
  t.n = n;
  t.bipartitions = enumerate_bipartitions(n);
  t.classes = bn_classes(n);
  t.dims.resize(t.bipartitions.size());
  t.values.assign(t.bipartitions.size(), {});

  int rows = static_cast<int>(t.bipartitions.size());
  for (int r = 0; r < rows; ++r) {
    const auto& bp = t.bipartitions[r];
    t.dims[r] = binomial(n, bp.k()) * hook_dimension(bp.lambda0) * hook_dimension(bp.lambda1);
  }

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int r = 0; r < rows; ++r) {
    std::vector<Integer> row(t.classes.size());
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      row[c] = bn_induced_character(n, t.bipartitions[r], t.classes[c]);
    t.values[r] = std::move(row);
  }

  // the identity column must reproduce the dimensions
  std::size_t id_col = 0;
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    const auto& ty = t.classes[c].type;
    if (ty.minus.empty() && std::all_of(ty.plus.begin(), ty.plus.end(),
                                        [](int l) { return l == 1; }))
      id_col = c;
  }
  for (int r = 0; r < rows; ++r)
    if (t.values[r][id_col] != t.dims[r])
      throw std::logic_error("identity column disagrees with dimension formula");
  if (t.dims_squared_sum() != t.group_order())
    throw std::logic_error("dimension squares do not sum to the group order");
  return t;
}

}  // namespace

CharacterTable bn_character_table(int n) { return table_core(n, true); }
CharacterTable bn_character_table_serial(int n) { return table_core(n, false); }

Rational bn_normalized_character(int n, const Bipartition& bp, const GroupElement& g) {
  if (max_support(g) > n) throw DomainError("element", "support exceeds level n");
  Integer dim = binomial(n, bp.k()) * hook_dimension(bp.lambda0) * hook_dimension(bp.lambda1);
  return Rational(bn_induced_character(n, bp, bn_class_of(g, n))) / Rational(dim);
}

RationalMatrix oracle_matrix(int n, const Bipartition& bp, const GroupElement& g) {
  if (n > 5) throw DomainError("n", "representation oracle guarded at n <= 5");
  if (bp.total_weight() != n) throw DomainError("bipartition", "total weight must equal n");
  if (max_support(g) > n) throw DomainError("element", "support exceeds level n");
  int k = bp.k();
  Integer dim_bound = binomial(n, k) * hook_dimension(bp.lambda0) * hook_dimension(bp.lambda1);
  if (dim_bound > 64) throw DomainError("bipartition", "oracle guarded at dimension <= 64");

  YoungCosets cosets = young_cosets(n, k);
  SeminormalRep head(bp.lambda0), tail(bp.lambda1);
  std::size_t block = head.dimension() * tail.dimension();
  std::size_t total = cosets.reps.size() * block;
  RationalMatrix m(total, total);

  for (std::size_t y = 0; y < cosets.reps.size(); ++y) {
    GroupElement right{cosets.reps[y], SignVector{}};
    GroupElement gy = multiply(g, right);
    std::vector<int> image;
    for (int i = 1; i <= k; ++i) image.push_back(gy.perm(i));
    std::sort(image.begin(), image.end());
    std::size_t x = cosets.index.at(image);
    GroupElement h = multiply(GroupElement{cosets.reps[x].inverse(), SignVector{}}, gy);
    if (!h.perm.preserves_prefix(k))
      throw std::logic_error("coset representative does not absorb the permutation part");
    RationalMatrix blk =
        head.matrix(restrict_relabel(h.perm, 1, k))
            .kronecker(tail.matrix(restrict_relabel(h.perm, k + 1, n)));
    blk.scale(Rational(omega_value(k, n, h.signs)));
    for (std::size_t r = 0; r < block; ++r)
      for (std::size_t c = 0; c < block; ++c)
        m.at(x * block + r, y * block + c) = blk.at(r, c);
  }
  return m;
}

Rational oracle_trace(int n, const Bipartition& bp, const GroupElement& g) {
  return oracle_matrix(n, bp, g).trace();
}

std::string table_to_csv(const CharacterTable& t) {
  std::ostringstream out;
  auto cell = [](const std::string& s) { return "\"" + s + "\""; };
  out << cell("bipartition") << "," << cell("dim");
  for (const auto& c : t.classes) out << "," << cell(c.type.to_string());
  out << "\n";
  out << cell("class size") << ",";
  for (const auto& c : t.classes) out << "," << c.size.str();
  out << "\n";
  for (std::size_t r = 0; r < t.bipartitions.size(); ++r) {
    out << cell(t.bipartitions[r].to_string()) << "," << t.dims[r].str();
    for (const auto& v : t.values[r]) out << "," << v.str();
    out << "\n";
  }
  return out.str();
}

nlohmann::json table_to_json(const CharacterTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : t.classes)
    classes.push_back({{"type", c.type.to_string()},
                       {"size", static_cast<std::int64_t>(c.size)}});
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < t.bipartitions.size(); ++r) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : t.values[r]) vals.push_back(static_cast<std::int64_t>(v));
    rows.push_back({{"bipartition", t.bipartitions[r].to_string()},
                    {"dim", static_cast<std::int64_t>(t.dims[r])},
                    {"values", vals}});
  }
  return {{"n", t.n},
          {"classes", classes},
          {"rows", rows},
          {"dims_squared_sum", static_cast<std::int64_t>(t.dims_squared_sum())}};
}

}  // namespace octa
