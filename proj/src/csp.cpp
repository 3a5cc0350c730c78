#include "polycsp/csp.hpp"

#include <algorithm>

namespace polycsp {

void CspInstance::add_constraint(Constraint c) {
  if (c.poly.ring() != ring_) throw StructuralError("constraint ring mismatch");
  if (c.poly.n_vars() != n_vars_) throw StructuralError("constraint arity mismatch");
  if (c.poly.degree() > degree_bound_)
    throw StructuralError("constraint degree exceeds the instance bound");
  if (mode_ == CspMode::AllRoot && c.relation != Relation::RootEq0)
    throw StructuralError("non-root constraint in an all-root instance");
  if (mode_ == CspMode::AllNonRoot && c.relation != Relation::NonRootNe0)
    throw StructuralError("root constraint in an all-non-root instance");
  constraints_.push_back(std::move(c));
}

MonomialIndex monomial_index(std::uint32_t n_vars, std::uint32_t degree_bound) {
  MonomialIndex idx;
  idx.monomials.push_back(Monomial::constant());
  std::vector<std::uint32_t> stack;
  // Depth-first subset generation emits each degree level in lex order.
  auto emit_level = [&](std::uint32_t target) {
    stack.clear();
    auto rec = [&](auto&& self, std::uint32_t next) -> void {
      if (stack.size() == target) {
        idx.monomials.emplace_back(stack);
        return;
      }
      for (std::uint32_t v = next; v < n_vars; ++v) {
        if (n_vars - v < target - stack.size()) break;
        stack.push_back(v);
        self(self, v + 1);
        stack.pop_back();
      }
    };
    rec(rec, 0);
  };
  for (std::uint32_t deg = 1; deg <= degree_bound && deg <= n_vars; ++deg)
    emit_level(deg);
  for (std::size_t i = 0; i < idx.monomials.size(); ++i)
    idx.position.emplace(idx.monomials[i], i);
  return idx;
}

std::size_t monomial_count(std::uint32_t n_vars, std::uint32_t degree_bound) {
  std::size_t total = 0;
  std::size_t binom = 1;  // C(n, 0)
  for (std::uint32_t i = 0; i <= degree_bound && i <= n_vars; ++i) {
    total += binom;
    binom = binom * (n_vars - i) / (i + 1);
  }
  return total;
}

std::pair<RingMatrix, MonomialIndex> coefficient_matrix(const CspInstance& inst) {
  if (inst.mode() != CspMode::AllRoot)
    throw StructuralError("coefficient_matrix needs an all-root instance");
  MonomialIndex idx = monomial_index(inst.n_vars(), inst.degree_bound());
  RingMatrix a(inst.ring(), inst.size(), idx.monomials.size());
  for (std::size_t r = 0; r < inst.size(); ++r)
    for (const auto& [m, c] : inst.constraints()[r].poly.terms())
      a.set(r, idx.position.at(m), c);
  return {std::move(a), std::move(idx)};
}

bool satisfies(const CspInstance& inst, const Assignment& a) {
  for (const Constraint& c : inst.constraints()) {
    bool zero = inst.ring().is_zero(poly_eval(c.poly, a));
    if (c.relation == Relation::RootEq0 ? !zero : zero) return false;
  }
  return true;
}

std::vector<Assignment> satisfying_set(const CspInstance& inst,
                                       std::size_t oracle_limit) {
  if (inst.n_vars() > oracle_limit)
    throw ResourceError("oracle limit exceeded: " + std::to_string(inst.n_vars()) +
                        " variables with limit " + std::to_string(oracle_limit));
  std::uint32_t n = inst.n_vars();
  std::vector<Assignment> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Assignment a(n);
    for (std::uint32_t j = 0; j < n; ++j) a[j] = (bits >> (n - 1 - j)) & 1;
    if (satisfies(inst, a)) out.push_back(std::move(a));
  }
  return out;
}

bool equivalent(const CspInstance& a, const CspInstance& b,
                std::size_t oracle_limit) {
  if (a.n_vars() != b.n_vars())
    throw StructuralError("equivalence needs matching variable counts");
  return satisfying_set(a, oracle_limit) == satisfying_set(b, oracle_limit);
}

}  // namespace polycsp
