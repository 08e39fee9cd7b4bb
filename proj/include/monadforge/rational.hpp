#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monadforge {

// mpq_class keeps values in lowest terms with a positive denominator after
// every arithmetic operation; values built from raw parts must go through
// make_rational, which canonicalizes.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Nonnegative extended rational: a finite value or +infinity.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(const Rational& v);  // NOLINT: implicit on purpose
  ExtRational(long v) : ExtRational(make_rational(v)) {}  // NOLINT

  static ExtRational infinity();

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  // 0 * infinity = 0.
  friend ExtRational operator*(const Rational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  std::string str() const;
  static ExtRational parse(std::string_view text);

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

ExtRational min(const ExtRational& a, const ExtRational& b);
ExtRational max(const ExtRational& a, const ExtRational& b);

}  // namespace monadforge
