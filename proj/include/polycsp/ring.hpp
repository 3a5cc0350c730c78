#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polycsp/errors.hpp"

namespace polycsp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A ring element: an exact rational, or a canonical residue in [0, m).
// Which alternative is live is dictated by the RingSpec that owns the value;
// all arithmetic goes through RingSpec so the modulus is always at hand.
class Scalar {
 public:
  Scalar() : value_(std::uint64_t{0}) {}

  bool holds_rational() const { return std::holds_alternative<Rational>(value_); }

  const Rational& rational() const {
    if (!holds_rational()) throw StructuralError("scalar is not rational");
    return std::get<Rational>(value_);
  }

  std::uint64_t residue() const {
    if (holds_rational()) throw StructuralError("scalar is not a residue");
    return std::get<std::uint64_t>(value_);
  }

  bool operator==(const Scalar& o) const { return value_ == o.value_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return value_ < o.value_; }

 private:
  friend class RingSpec;
  explicit Scalar(Rational r) : value_(std::move(r)) {}
  explicit Scalar(std::uint64_t r) : value_(r) {}

  std::variant<Rational, std::uint64_t> value_;
};

enum class RingKind { Rationals, IntegersMod };

// The coefficient ring: the rationals, or the integers modulo m >= 2 with
// m's prime factorization kept alongside (the spanning-subset machinery
// needs the distinct prime divisors).
class RingSpec {
 public:
  static RingSpec rationals() { return RingSpec(); }
  static RingSpec integers_mod(std::uint64_t m);

  RingKind kind() const { return kind_; }

  std::uint64_t modulus() const {
    if (kind_ != RingKind::IntegersMod) throw StructuralError("ring has no modulus");
    return modulus_;
  }

  // Sorted (prime, multiplicity) pairs multiplying to the modulus.
  const std::vector<std::pair<std::uint64_t, int>>& prime_factors() const {
    if (kind_ != RingKind::IntegersMod) throw StructuralError("ring has no modulus");
    return prime_factors_;
  }

  std::size_t distinct_prime_count() const { return prime_factors().size(); }

  bool is_field() const {
    return kind_ == RingKind::Rationals ||
           (prime_factors_.size() == 1 && prime_factors_[0].second == 1);
  }

  bool operator==(const RingSpec& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  std::string to_string() const;

  // --- element construction ---
  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const Rational& r) const;  // rationals only
  Scalar from_residue(std::uint64_t v) const;     // reduced into [0, m)

  // --- arithmetic ---
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Multiplicative inverse; requires an invertible element (unit).
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  std::string scalar_to_string(const Scalar& a) const;

 private:
  RingSpec() : kind_(RingKind::Rationals), modulus_(0) {}

  void check(const Scalar& a) const;

  RingKind kind_;
  std::uint64_t modulus_;
  std::vector<std::pair<std::uint64_t, int>> prime_factors_;
};

// Extended Euclid on machine words: returns g = gcd(a, b) and (x, y)
// with a*x + b*y = g over the integers.
struct XgcdResult {
  std::uint64_t g;
  std::int64_t x;
  std::int64_t y;
};
XgcdResult xgcd_u64(std::uint64_t a, std::uint64_t b);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
// Inverse of a modulo m; a must be coprime to m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);
// A unit u modulo m with u*a == gcd(a, m) (mod m); a must be nonzero mod m.
std::uint64_t unit_lifting_gcd(std::uint64_t a, std::uint64_t m);

bool is_prime_u64(std::uint64_t n);

}  // namespace polycsp
