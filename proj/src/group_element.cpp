#include "octa/group_element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "octa/rational.hpp"

namespace octa {

Permutation Permutation::from_mapping(const std::map<int, int>& mapping) {
  Permutation p;
  std::set<int> keys, values;
  for (auto [i, j] : mapping) {
    if (i <= 0 || j <= 0) throw DomainError("permutation", "points must be positive");
    if (i == j) continue;
    p.map_[i] = j;
    keys.insert(i);
    values.insert(j);
  }
  std::set<int> moved_keys, moved_values;
  for (auto [i, j] : p.map_) {
    moved_keys.insert(i);
    moved_values.insert(j);
  }
  if (moved_keys != moved_values)
    throw DomainError("permutation", "mapping is not a bijection of its moved points");
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
  std::map<int, int> m;
  std::set<int> seen;
  for (const auto& c : cycles) {
    for (int x : c) {
      if (x <= 0) throw DomainError("permutation", "cycle entries must be positive");
      if (!seen.insert(x).second)
        throw DomainError("permutation", "point " + std::to_string(x) + " repeated across cycles");
    }
    if (c.size() < 2) continue;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) m[c[i]] = c[i + 1];
    m[c.back()] = c.front();
  }
  return from_mapping(m);
}

Permutation Permutation::transposition(int a, int b) {
  return from_cycles({{a, b}});
}

Permutation Permutation::inverse() const {
  Permutation r;
  for (auto [i, j] : map_) r.map_[j] = i;
  return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation r;
  std::set<int> points;
  for (auto [i, _] : a.map_) points.insert(i);
  for (auto [i, _] : b.map_) points.insert(i);
  for (int i : points) {
    int j = a(b(i));
    if (j != i) r.map_[i] = j;
  }
  return r;
}

std::vector<int> Permutation::moved_points() const {
  std::vector<int> r;
  r.reserve(map_.size());
  for (auto [i, _] : map_) r.push_back(i);
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> r;
  std::set<int> done;
  for (auto [start, _] : map_) {
    if (done.count(start)) continue;
    std::vector<int> cycle{start};
    done.insert(start);
    for (int i = (*this)(start); i != start; i = (*this)(i)) {
      cycle.push_back(i);
      done.insert(i);
    }
    r.push_back(std::move(cycle));
  }
  // map_ iterates ascending, so each cycle starts at its minimal element
  // and cycles appear by minimal element ascending.
  return r;
}

bool Permutation::preserves_prefix(int n) const {
  for (auto [i, j] : map_)
    if ((i <= n) != (j <= n)) return false;
  return true;
}

SignVector::SignVector(std::set<int> flipped) : flipped_(std::move(flipped)) {
  for (int i : flipped_)
    if (i <= 0) throw DomainError("signs", "sign indices must be positive");
}

void SignVector::toggle(int i) {
  auto [it, inserted] = flipped_.insert(i);
  if (!inserted) flipped_.erase(it);
}

SignVector operator+(const SignVector& a, const SignVector& b) {
  SignVector r = a;
  for (int i : b.flipped_) r.toggle(i);
  return r;
}

SignVector SignVector::relabeled_by(const Permutation& s) const {
  std::set<int> out;
  for (int i : flipped_) out.insert(s(i));
  return SignVector(std::move(out));
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  return GroupElement{g.perm * h.perm, g.signs + h.signs.relabeled_by(g.perm)};
}

GroupElement inverse(const GroupElement& g) {
  Permutation p = g.perm.inverse();
  return GroupElement{p, g.signs.relabeled_by(p)};
}

GroupElement conjugate(const GroupElement& g, const GroupElement& h) {
  return multiply(multiply(h, g), inverse(h));
}

std::vector<int> support(const GroupElement& g) {
  std::set<int> s;
  for (int i : g.perm.moved_points()) s.insert(i);
  for (int i : g.signs.flipped()) s.insert(i);
  return {s.begin(), s.end()};
}

int max_support(const GroupElement& g) {
  return std::max(g.perm.max_moved(), g.signs.max_index());
}

GroupElement QuasiCycle::to_element() const {
  Permutation p = orbit.size() > 1 ? Permutation::from_cycles({orbit}) : Permutation{};
  return GroupElement{p, SignVector(bits)};
}

std::vector<QuasiCycle> quasi_cycle_decompose(const GroupElement& g) {
  std::vector<QuasiCycle> out;
  std::set<int> in_cycles;
  for (auto& orbit : g.perm.cycles()) {
    QuasiCycle qc;
    for (int i : orbit) {
      in_cycles.insert(i);
      if (g.signs.contains(i)) qc.bits.insert(i);
    }
    qc.orbit = std::move(orbit);
    out.push_back(std::move(qc));
  }
  for (int i : g.signs.flipped())
    if (!in_cycles.count(i)) out.push_back(QuasiCycle{{i}, {i}});
  std::sort(out.begin(), out.end(),
            [](const QuasiCycle& a, const QuasiCycle& b) { return a.orbit[0] < b.orbit[0]; });
  return out;
}

SignedCycleType signed_cycle_type(const GroupElement& g) {
  SignedCycleType t;
  for (const auto& qc : quasi_cycle_decompose(g)) {
    auto& side = qc.sign_sum() == 0 ? t.plus : t.minus;
    side.push_back(static_cast<int>(qc.length()));
  }
  std::sort(t.plus.rbegin(), t.plus.rend());
  std::sort(t.minus.rbegin(), t.minus.rend());
  return t;
}

std::string SignedCycleType::to_string() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "]";
  };
  return "+" + list(plus) + "|-" + list(minus);
}

GroupElement shift_conjugate(const GroupElement& g, int n) {
  int k = max_support(g);
  if (n < k)
    throw DomainError("n", "shift level " + std::to_string(n) +
                               " is below max support " + std::to_string(k));
  std::map<int, int> m;
  for (auto [i, j] : g.perm.mapping()) m[i + n] = j + n;
  std::set<int> fl;
  for (int i : g.signs.flipped()) fl.insert(i + n);
  return GroupElement{Permutation::from_mapping(m), SignVector(std::move(fl))};
}

std::optional<std::pair<GroupElement, GroupElement>> split_in_level(const GroupElement& g, int n) {
  if (!g.perm.preserves_prefix(n)) return std::nullopt;
  std::map<int, int> lo, hi;
  for (auto [i, j] : g.perm.mapping()) (i <= n ? lo : hi)[i] = j;
  std::set<int> zlo, zhi;
  for (int i : g.signs.flipped()) (i <= n ? zlo : zhi).insert(i);
  GroupElement b1{Permutation::from_mapping(lo), SignVector(std::move(zlo))};
  GroupElement b2{Permutation::from_mapping(hi), SignVector(std::move(zhi))};
  return std::make_pair(std::move(b1), std::move(b2));
}

namespace {

void skip_blanks(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

int parse_point(const std::string& s, std::size_t& pos) {
  skip_blanks(s, pos);
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw DomainError("element", "expected a positive integer at offset " +
                                                     std::to_string(start));
  int v = std::stoi(s.substr(start, pos - start));
  if (v <= 0) throw DomainError("element", "points must be positive");
  return v;
}

}  // namespace

GroupElement parse_element(const std::string& text) {
  std::string cyc = text, signs_part;
  bool has_signs = false;
  if (auto semi = text.find(';'); semi != std::string::npos) {
    cyc = text.substr(0, semi);
    std::string rest = text.substr(semi + 1);
    std::size_t p = 0;
    skip_blanks(rest, p);
    if (rest.compare(p, 6, "signs=") != 0)
      throw DomainError("element", "expected ';signs=' suffix");
    signs_part = rest.substr(p + 6);
    has_signs = true;
  }

  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  skip_blanks(cyc, pos);
  if (pos < cyc.size() && cyc[pos] == 'e') {
    ++pos;
  } else {
    while (pos < cyc.size() && cyc[pos] == '(') {
      ++pos;
      std::vector<int> cycle;
      skip_blanks(cyc, pos);
      while (pos < cyc.size() && cyc[pos] != ')') {
        cycle.push_back(parse_point(cyc, pos));
        skip_blanks(cyc, pos);
      }
      if (pos >= cyc.size()) throw DomainError("element", "unclosed cycle");
      ++pos;  // ')'
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_blanks(cyc, pos);
    }
  }
  skip_blanks(cyc, pos);
  if (pos != cyc.size())
    throw DomainError("element", "trailing garbage in element text at offset " + std::to_string(pos));

  std::set<int> flipped;
  if (has_signs) {
    std::size_t p = 0;
    skip_blanks(signs_part, p);
    while (p < signs_part.size()) {
      int v = parse_point(signs_part, p);
      if (!flipped.insert(v).second)
        throw DomainError("element", "sign index " + std::to_string(v) + " repeated");
      skip_blanks(signs_part, p);
      if (p < signs_part.size()) {
        if (signs_part[p] != ',') throw DomainError("element", "expected ',' in signs list");
        ++p;
        skip_blanks(signs_part, p);
      }
    }
  }
  return GroupElement{Permutation::from_cycles(cycles), SignVector(std::move(flipped))};
}

std::string to_string(const GroupElement& g) {
  std::ostringstream out;
  if (g.perm.is_identity()) {
    out << "e";
  } else {
    for (const auto& c : g.perm.cycles()) {
      out << "(";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << " ";
        out << c[i];
      }
      out << ")";
    }
  }
  if (!g.signs.empty()) {
    out << ";signs=";
    bool first = true;
    for (int i : g.signs.flipped()) {
      if (!first) out << ",";
      out << i;
      first = false;
    }
  }
  return out.str();
}

}  // namespace octa
