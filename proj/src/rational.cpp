#include "octa/rational.hpp"

#include <cctype>

namespace octa {

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

Rational parse_rational(const std::string& text, const std::string& field) {
  auto fail = [&]() -> Rational {
    throw DomainError(field, "malformed rational '" + text + "', expected p or p/q");
  };
  if (text.empty()) return fail();
  auto slash = text.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) return fail();
      return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return fail();
    Integer d(den);
    if (d == 0) throw DomainError(field, "zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    return fail();
  }
}

}  // namespace octa
