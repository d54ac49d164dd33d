#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tempoflow {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// after every arithmetic operation, which is exactly the invariant we need.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "p/q", "-p/q". Throws PreconditionError on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

Rational floor_div(const Rational& a, const Rational& b);
BigInt ceil(const Rational& value);
BigInt floor(const Rational& value);

// Nonnegative rational or the distinguished infinite value.
class Capacity {
 public:
  Capacity() = default;
  Capacity(Rational value);  // NOLINT(google-explicit-constructor)
  Capacity(long value) : Capacity(Rational(value)) {}  // NOLINT

  static Capacity infinite();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Precondition: is_finite().
  const Rational& value() const;

  friend bool operator==(const Capacity& a, const Capacity& b);
  friend bool operator<(const Capacity& a, const Capacity& b);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

Capacity min(const Capacity& a, const Capacity& b);
Capacity parse_capacity(std::string_view text);  // "inf" or a rational
std::string to_string(const Capacity& value);

}  // namespace tempoflow
