#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polycsp/ring.hpp"

namespace polycsp {

// 0/1 values per variable, index order.
using Assignment = std::vector<std::uint8_t>;

// A product of distinct variables, stored as a strictly increasing index
// list; the empty list is the constant monomial. Ordering is graded-lex,
// which fixes the matrix column order everywhere.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> vars);

  static Monomial constant() { return Monomial(); }
  static Monomial variable(std::uint32_t i) { return Monomial({i}); }

  const std::vector<std::uint32_t>& vars() const { return vars_; }
  std::size_t degree() const { return vars_.size(); }
  bool is_constant() const { return vars_.empty(); }

  // Multilinear product: the set union of the two variable sets.
  Monomial merged_with(const Monomial& o) const;

  // Graded-lex: degree first, then lexicographic on the index lists.
  bool operator<(const Monomial& o) const {
    if (vars_.size() != o.vars_.size()) return vars_.size() < o.vars_.size();
    return vars_ < o.vars_;
  }
  bool operator==(const Monomial& o) const { return vars_ == o.vars_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string to_string() const;  // "1" or "v1*v3" (variables 1-based in text)

 private:
  std::vector<std::uint32_t> vars_;
};

inline constexpr std::size_t kDefaultTermGuard = 2'000'000;

// Sparse multilinear polynomial: monomial -> nonzero coefficient.
// Immutable in spirit; the only mutator accumulates a term and keeps the
// map canonical (no zero coefficients, indices below n_vars).
class MultilinearPoly {
 public:
  MultilinearPoly(RingSpec ring, std::uint32_t n_vars)
      : ring_(std::move(ring)), n_vars_(n_vars) {}

  static MultilinearPoly zero(const RingSpec& ring, std::uint32_t n_vars) {
    return MultilinearPoly(ring, n_vars);
  }
  static MultilinearPoly constant(const RingSpec& ring, std::uint32_t n_vars,
                                  const Scalar& c);
  static MultilinearPoly variable(const RingSpec& ring, std::uint32_t n_vars,
                                  std::uint32_t i);

  const RingSpec& ring() const { return ring_; }
  std::uint32_t n_vars() const { return n_vars_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Max monomial degree; 0 for the zero polynomial.
  std::size_t degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
  }

  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  bool operator==(const MultilinearPoly& o) const {
    return ring_ == o.ring_ && n_vars_ == o.n_vars_ && terms_ == o.terms_;
  }

 private:
  RingSpec ring_;
  std::uint32_t n_vars_;
  std::map<Monomial, Scalar> terms_;
};

MultilinearPoly poly_add(const MultilinearPoly& a, const MultilinearPoly& b);
MultilinearPoly poly_sub(const MultilinearPoly& a, const MultilinearPoly& b);
MultilinearPoly poly_scale(const MultilinearPoly& a, const Scalar& c);

// Distributive product with multilinear reduction (x*x collapses to x), so
// the result agrees with the plain product on every 0/1-assignment. Throws
// ResourceError once the accumulating term map exceeds max_terms.
MultilinearPoly poly_mul(const MultilinearPoly& a, const MultilinearPoly& b,
                         std::size_t max_terms = kDefaultTermGuard);

Scalar poly_eval(const MultilinearPoly& f, const Assignment& a);

// Dense univariate polynomial, coefficient index = power, trailing
// coefficient nonzero; the zero polynomial has an empty list.
class UnivariatePoly {
 public:
  UnivariatePoly(RingSpec ring, std::vector<Scalar> coeffs);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  Scalar eval(const Scalar& x) const;

 private:
  RingSpec ring_;
  std::vector<Scalar> coeffs_;
};

// prod_{s in S} (x - s); requires a field so the root set is exact.
UnivariatePoly root_set_polynomial(const std::vector<Scalar>& roots,
                                   const RingSpec& ring);

// Multilinear polynomial equal to F(f(x)) on every 0/1-assignment.
MultilinearPoly compose_univariate(const UnivariatePoly& F,
                                   const MultilinearPoly& f,
                                   std::size_t max_terms = kDefaultTermGuard);

}  // namespace polycsp
