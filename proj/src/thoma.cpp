#include "octa/thoma.hpp"

#include <algorithm>

namespace octa {

namespace {

bool entry_order(const ThomaEntry& a, const ThomaEntry& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.sigma < b.sigma;
}

void check_entries(const std::vector<ThomaEntry>& entries, const char* field) {
  for (const auto& e : entries) {
    if (e.value <= 0) throw DomainError(field, "parameters must be strictly positive");
    if (e.value > 1) throw DomainError(field, "parameters must be at most 1");
    if (e.sigma != 0 && e.sigma != 1) throw DomainError(field, "sigma labels must be 0 or 1");
  }
}

}  // namespace

ThomaSpec validate_spec(ThomaSpec raw) {
  check_entries(raw.alpha, "alpha");
  check_entries(raw.beta, "beta");
  if (raw.gamma0 < 0) throw DomainError("gamma0", "gamma0 must be nonnegative");
  if (raw.gamma1 < 0) throw DomainError("gamma1", "gamma1 must be nonnegative");
  Rational mass = 0;
  for (const auto& e : raw.alpha) mass += e.value;
  for (const auto& e : raw.beta) mass += e.value;
  if (mass > 1)
    throw DomainError("alpha", "sum of alpha and beta exceeds 1 (got " + format_rational(mass) + ")");
  if (raw.gamma0 + raw.gamma1 != Rational(1) - mass)
    throw DomainError("gamma0",
                      "gamma0 + gamma1 must equal 1 - sum(alpha) - sum(beta); got " +
                          format_rational(raw.gamma0 + raw.gamma1) + " vs " +
                          format_rational(Rational(1) - mass));
  std::sort(raw.alpha.begin(), raw.alpha.end(), entry_order);
  std::sort(raw.beta.begin(), raw.beta.end(), entry_order);
  return raw;
}

bool thoma_equal(const ThomaSpec& a, const ThomaSpec& b) {
  auto key = [](const ThomaSpec& s) {
    auto sorted = [](std::vector<ThomaEntry> v) {
      std::sort(v.begin(), v.end(), entry_order);
      return v;
    };
    return std::make_tuple(sorted(s.alpha), sorted(s.beta), s.gamma0, s.gamma1);
  };
  auto ka = key(a), kb = key(b);
  auto eq = [](const std::vector<ThomaEntry>& x, const std::vector<ThomaEntry>& y) {
    return x == y;
  };
  return eq(std::get<0>(ka), std::get<0>(kb)) && eq(std::get<1>(ka), std::get<1>(kb)) &&
         std::get<2>(ka) == std::get<2>(kb) && std::get<3>(ka) == std::get<3>(kb);
}

Rational quasi_cycle_value(const ThomaSpec& spec, const QuasiCycle& qc) {
  unsigned k = static_cast<unsigned>(qc.length());
  int s = qc.sign_sum();
  auto twist = [s](int sigma) { return (sigma && s) ? -1 : 1; };
  if (k > 1) {
    Rational v = 0;
    for (const auto& e : spec.alpha) v += pow_rational(e.value, k) * twist(e.sigma);
    Rational w = 0;
    for (const auto& e : spec.beta) w += pow_rational(e.value, k) * twist(e.sigma);
    return (k % 2 == 1) ? Rational(v + w) : Rational(v - w);
  }
  Rational v = spec.gamma0 + (s ? -spec.gamma1 : spec.gamma1);
  for (const auto& e : spec.alpha) v += e.value * twist(e.sigma);
  for (const auto& e : spec.beta) v += e.value * twist(e.sigma);
  return v;
}

Rational character_value(const ThomaSpec& spec, const GroupElement& g) {
  Rational v = 1;
  for (const auto& qc : quasi_cycle_decompose(g)) v *= quasi_cycle_value(spec, qc);
  return v;
}

Rational tau_lambda_value(const Partition& lam, const ThomaSpec& spec, const GroupElement& s) {
  if (!s.signs.empty())
    throw DomainError("element", "tau is defined on sign-free permutations only");
  int n = lam.weight();
  auto split = split_in_level(s, n);
  if (!split) return 0;
  Rational head = Rational(mn_character(lam, cycle_type_in_range(split->first.perm, 1, n))) /
                  Rational(hook_dimension(lam));
  return head * character_value(spec, split->second);
}

ThomaSpec sign_twist(const ThomaSpec& spec) {
  ThomaSpec out = spec;
  std::swap(out.gamma0, out.gamma1);
  for (auto& e : out.alpha) e.sigma = 1 - e.sigma;
  for (auto& e : out.beta) e.sigma = 1 - e.sigma;
  return validate_spec(std::move(out));
}

nlohmann::json thoma_to_json(const ThomaSpec& spec) {
  auto entries = [](const std::vector<ThomaEntry>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : v)
      arr.push_back({{"value", format_rational(e.value)}, {"sigma", e.sigma}});
    return arr;
  };
  return {{"alpha", entries(spec.alpha)},
          {"beta", entries(spec.beta)},
          {"gamma0", format_rational(spec.gamma0)},
          {"gamma1", format_rational(spec.gamma1)}};
}

Rational rational_from_json(const nlohmann::json& v, const std::string& field) {
  if (v.is_string()) return parse_rational(v.get<std::string>(), field);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw DomainError(field, "expected a rational as a \"p/q\" string");
}

ThomaSpec thoma_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("thoma", "spec must be a JSON object");
  ThomaSpec spec;
  auto entries = [&](const char* field) {
    std::vector<ThomaEntry> out;
    if (!j.contains(field)) return out;
    const auto& arr = j.at(field);
    if (!arr.is_array()) throw DomainError(field, "expected an array of {value, sigma}");
    for (const auto& item : arr) {
      if (!item.is_object() || !item.contains("value"))
        throw DomainError(field, "entries must be objects with a 'value'");
      ThomaEntry e;
      e.value = rational_from_json(item.at("value"), field);
      e.sigma = item.value("sigma", 0);
      out.push_back(e);
    }
    return out;
  };
  spec.alpha = entries("alpha");
  spec.beta = entries("beta");
  if (j.contains("gamma0")) spec.gamma0 = rational_from_json(j.at("gamma0"), "gamma0");
  if (j.contains("gamma1")) spec.gamma1 = rational_from_json(j.at("gamma1"), "gamma1");
  return validate_spec(std::move(spec));
}

}  // namespace octa
