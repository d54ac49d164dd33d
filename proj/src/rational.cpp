#include "tempoflow/rational.hpp"

#include <cctype>
#include <utility>

#include "tempoflow/errors.hpp"

namespace tempoflow {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt d{std::string(den)};
  if (d == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

BigInt floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational floor_div(const Rational& a, const Rational& b) {
  return Rational(floor(Rational(a / b)));
}

Capacity::Capacity(Rational value) : value_(std::move(value)) {
  if (value_ < 0) throw PreconditionError("negative capacity " + value_.get_str());
}

Capacity Capacity::infinite() {
  Capacity c;
  c.infinite_ = true;
  return c;
}

const Rational& Capacity::value() const {
  if (infinite_) throw PreconditionError("value() on infinite capacity");
  return value_;
}

bool operator==(const Capacity& a, const Capacity& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

bool operator<(const Capacity& a, const Capacity& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

Capacity min(const Capacity& a, const Capacity& b) { return b < a ? b : a; }

Capacity parse_capacity(std::string_view text) {
  if (text == "inf" || text == "infinity") return Capacity::infinite();
  return Capacity(parse_rational(text));
}

std::string to_string(const Capacity& value) {
  return value.is_infinite() ? std::string("inf") : to_string(value.value());
}

}  // namespace tempoflow
