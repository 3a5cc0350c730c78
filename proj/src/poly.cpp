#include "polycsp/poly.hpp"

#include <algorithm>

namespace polycsp {

Monomial::Monomial(std::vector<std::uint32_t> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 1; i < vars_.size(); ++i)
    if (vars_[i - 1] >= vars_[i])
      throw StructuralError("monomial indices must be strictly increasing");
}

Monomial Monomial::merged_with(const Monomial& o) const {
  std::vector<std::uint32_t> merged;
  merged.reserve(vars_.size() + o.vars_.size());
  std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                 std::back_inserter(merged));
  Monomial m;
  m.vars_ = std::move(merged);
  return m;
}

std::string Monomial::to_string() const {
  if (vars_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += "*";
    s += "v" + std::to_string(vars_[i] + 1);
  }
  return s;
}

MultilinearPoly MultilinearPoly::constant(const RingSpec& ring,
                                          std::uint32_t n_vars,
                                          const Scalar& c) {
  MultilinearPoly p(ring, n_vars);
  p.add_term(Monomial::constant(), c);
  return p;
}

MultilinearPoly MultilinearPoly::variable(const RingSpec& ring,
                                          std::uint32_t n_vars,
                                          std::uint32_t i) {
  MultilinearPoly p(ring, n_vars);
  p.add_term(Monomial::variable(i), ring.one());
  return p;
}

Scalar MultilinearPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ring_.zero() : it->second;
}

void MultilinearPoly::add_term(const Monomial& m, const Scalar& c) {
  if (!m.vars().empty() && m.vars().back() >= n_vars_)
    throw StructuralError("monomial variable out of range");
  if (ring_.is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    Scalar sum = ring_.add(it->second, c);
    if (ring_.is_zero(sum))
      terms_.erase(it);
    else
      it->second = sum;
  }
}

static void require_compatible(const MultilinearPoly& a, const MultilinearPoly& b) {
  if (a.ring() != b.ring()) throw StructuralError("polynomial ring mismatch");
  if (a.n_vars() != b.n_vars()) throw StructuralError("polynomial arity mismatch");
}

MultilinearPoly poly_add(const MultilinearPoly& a, const MultilinearPoly& b) {
  require_compatible(a, b);
  MultilinearPoly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

MultilinearPoly poly_sub(const MultilinearPoly& a, const MultilinearPoly& b) {
  require_compatible(a, b);
  MultilinearPoly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, a.ring().neg(c));
  return out;
}

MultilinearPoly poly_scale(const MultilinearPoly& a, const Scalar& c) {
  MultilinearPoly out(a.ring(), a.n_vars());
  for (const auto& [m, coef] : a.terms()) out.add_term(m, a.ring().mul(coef, c));
  return out;
}

MultilinearPoly poly_mul(const MultilinearPoly& a, const MultilinearPoly& b,
                         std::size_t max_terms) {
  require_compatible(a, b);
  MultilinearPoly out(a.ring(), a.n_vars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.add_term(ma.merged_with(mb), a.ring().mul(ca, cb));
      if (out.term_count() > max_terms)
        throw ResourceError("poly_mul exceeded the term guard of " +
                            std::to_string(max_terms) + " terms");
    }
  }
  return out;
}

Scalar poly_eval(const MultilinearPoly& f, const Assignment& a) {
  if (a.size() != f.n_vars()) throw StructuralError("assignment arity mismatch");
  for (std::uint8_t bit : a)
    if (bit > 1) throw StructuralError("assignment entries must be 0 or 1");
  // On 0/1 inputs a monomial evaluates to 1 exactly when all its variables
  // are set, so the value is the sum of the selected coefficients.
  Scalar total = f.ring().zero();
  for (const auto& [m, c] : f.terms()) {
    bool selected = true;
    for (std::uint32_t v : m.vars())
      if (!a[v]) {
        selected = false;
        break;
      }
    if (selected) total = f.ring().add(total, c);
  }
  return total;
}

UnivariatePoly::UnivariatePoly(RingSpec ring, std::vector<Scalar> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

Scalar UnivariatePoly::eval(const Scalar& x) const {
  Scalar acc = ring_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = ring_.add(ring_.mul(acc, x), *it);
  return acc;
}

UnivariatePoly root_set_polynomial(const std::vector<Scalar>& roots,
                                   const RingSpec& ring) {
  if (!ring.is_field())
    throw StructuralError(
        "root-set polynomials need a field (rationals or a prime modulus)");
  std::vector<Scalar> coeffs = {ring.one()};
  for (const Scalar& s : roots) {
    // Multiply by (x - s).
    std::vector<Scalar> next(coeffs.size() + 1, ring.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = ring.add(next[i + 1], coeffs[i]);
      next[i] = ring.sub(next[i], ring.mul(coeffs[i], s));
    }
    coeffs = std::move(next);
  }
  return UnivariatePoly(ring, std::move(coeffs));
}

MultilinearPoly compose_univariate(const UnivariatePoly& F,
                                   const MultilinearPoly& f,
                                   std::size_t max_terms) {
  if (F.ring() != f.ring()) throw StructuralError("composition ring mismatch");
  if (!F.ring().is_field())
    throw StructuralError("compose_univariate needs a field ring");
  // Horner over the multilinear ring.
  MultilinearPoly acc = MultilinearPoly::zero(f.ring(), f.n_vars());
  const auto& c = F.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = poly_mul(acc, f, max_terms);
    acc.add_term(Monomial::constant(), c[i]);
  }
  return acc;
}

}  // namespace polycsp
