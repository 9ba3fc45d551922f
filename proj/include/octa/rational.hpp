#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace octa {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an input violates a documented precondition or guard.
/// The CLI turns these into structured error objects; library callers
/// may catch them to distinguish bad input from internal bugs.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

inline Integer pow_integer(const Integer& base, unsigned exp) {
  Integer r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
  Rational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// Renders a rational in lowest terms as "p/q", omitting "/q" when q = 1.
/// The sign always sits on the numerator.
std::string format_rational(const Rational& r);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// DomainError with the given field name on malformed input.
Rational parse_rational(const std::string& text, const std::string& field = "rational");

}  // namespace octa
