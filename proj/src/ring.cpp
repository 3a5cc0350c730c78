#include "polycsp/ring.hpp"


namespace polycsp {

RingSpec RingSpec::integers_mod(std::uint64_t m) {
  if (m < 2) throw StructuralError("modulus must be at least 2");
  if (m > (std::uint64_t{1} << 31))
    throw StructuralError("modulus exceeds the supported range (2^31)");
  RingSpec ring;
  ring.kind_ = RingKind::IntegersMod;
  ring.modulus_ = m;
  std::uint64_t rem = m;
  for (std::uint64_t p = 2; p * p <= rem; ++p) {
    if (rem % p == 0) {
      int mult = 0;
      while (rem % p == 0) {
        rem /= p;
        ++mult;
      }
      ring.prime_factors_.emplace_back(p, mult);
    }
  }
  if (rem > 1) ring.prime_factors_.emplace_back(rem, 1);
  return ring;
}

std::string RingSpec::to_string() const {
  if (kind_ == RingKind::Rationals) return "Q";
  return "Zmod " + std::to_string(modulus_);
}

void RingSpec::check(const Scalar& a) const {
  if (kind_ == RingKind::Rationals) {
    if (!a.holds_rational()) throw StructuralError("residue scalar used in Q");
  } else {
    if (a.holds_rational()) throw StructuralError("rational scalar used mod m");
    if (a.residue() >= modulus_) throw StructuralError("residue out of range");
  }
}

Scalar RingSpec::zero() const {
  return kind_ == RingKind::Rationals ? Scalar(Rational(0)) : Scalar(std::uint64_t{0});
}

Scalar RingSpec::one() const {
  return kind_ == RingKind::Rationals ? Scalar(Rational(1)) : Scalar(std::uint64_t{1} % modulus_);
}

Scalar RingSpec::from_int(long long v) const {
  if (kind_ == RingKind::Rationals) return Scalar(Rational(v));
  long long r = v % static_cast<long long>(modulus_);
  if (r < 0) r += static_cast<long long>(modulus_);
  return Scalar(static_cast<std::uint64_t>(r));
}

Scalar RingSpec::from_rational(const Rational& r) const {
  if (kind_ != RingKind::Rationals)
    throw StructuralError("rational constant in a modular ring");
  return Scalar(r);
}

Scalar RingSpec::from_residue(std::uint64_t v) const {
  if (kind_ != RingKind::IntegersMod)
    throw StructuralError("residue constant in Q");
  return Scalar(v % modulus_);
}

Scalar RingSpec::add(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (kind_ == RingKind::Rationals) return Scalar(a.rational() + b.rational());
  std::uint64_t s = a.residue() + b.residue();
  if (s >= modulus_) s -= modulus_;
  return Scalar(s);
}

Scalar RingSpec::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar RingSpec::mul(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (kind_ == RingKind::Rationals) return Scalar(a.rational() * b.rational());
  return Scalar(mul_mod(a.residue(), b.residue(), modulus_));
}

Scalar RingSpec::neg(const Scalar& a) const {
  check(a);
  if (kind_ == RingKind::Rationals) return Scalar(Rational(-a.rational()));
  return Scalar(a.residue() == 0 ? 0 : modulus_ - a.residue());
}

Scalar RingSpec::inv(const Scalar& a) const {
  check(a);
  if (kind_ == RingKind::Rationals) {
    if (a.rational() == 0) throw StructuralError("division by zero");
    return Scalar(Rational(1) / a.rational());
  }
  if (gcd_u64(a.residue(), modulus_) != 1)
    throw StructuralError("element is not a unit mod " + std::to_string(modulus_));
  return Scalar(inv_mod(a.residue(), modulus_));
}

bool RingSpec::is_zero(const Scalar& a) const {
  check(a);
  return kind_ == RingKind::Rationals ? a.rational() == 0 : a.residue() == 0;
}

bool RingSpec::is_one(const Scalar& a) const {
  check(a);
  return kind_ == RingKind::Rationals ? a.rational() == 1 : a.residue() == 1 % modulus_;
}

std::string RingSpec::scalar_to_string(const Scalar& a) const {
  check(a);
  if (kind_ == RingKind::IntegersMod) return std::to_string(a.residue());
  const Rational& r = a.rational();
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

XgcdResult xgcd_u64(std::uint64_t a, std::uint64_t b) {
  // Iterative extended Euclid; coefficients stay within int64 for word inputs.
  std::int64_t old_x = 1, x = 0, old_y = 0, y = 1;
  std::uint64_t old_r = a, r = b;
  while (r != 0) {
    std::uint64_t q = old_r / r;
    std::uint64_t tmp_r = old_r - q * r;
    old_r = r;
    r = tmp_r;
    std::int64_t tmp = old_x - static_cast<std::int64_t>(q) * x;
    old_x = x;
    x = tmp;
    tmp = old_y - static_cast<std::int64_t>(q) * y;
    old_y = y;
    y = tmp;
  }
  return {old_r, old_x, old_y};
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  XgcdResult r = xgcd_u64(a % m, m);
  if (r.g != 1) throw StructuralError("inv_mod of a non-unit");
  std::int64_t x = r.x % static_cast<std::int64_t>(m);
  if (x < 0) x += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(x);
}

std::uint64_t unit_lifting_gcd(std::uint64_t a, std::uint64_t m) {
  a %= m;
  if (a == 0) throw StructuralError("unit_lifting_gcd of zero");
  std::uint64_t g = gcd_u64(a, m);
  std::uint64_t a1 = a / g;
  std::uint64_t m1 = m / g;
  // a1 is invertible mod m1; lift its inverse to a unit mod m.
  std::uint64_t u0 = (m1 == 1) ? 0 : inv_mod(a1 % m1, m1);
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t u = (u0 + k * m1) % m;
    if (u == 0) continue;
    if (gcd_u64(u, m) == 1) {
      if (mul_mod(u, a, m) != g % m)
        throw StructuralError("unit normalization failed");
      return u;
    }
    if (k > m) throw StructuralError("unit search exhausted");
  }
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace polycsp
