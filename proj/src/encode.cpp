#include "polycsp/encode.hpp"

#include <algorithm>
#include <set>

namespace polycsp {

namespace {

void warn(std::vector<std::string>* warnings, const std::string& msg) {
  if (warnings) warnings->push_back(msg);
}

// Sum of literal polynomials: x for a positive literal, 1 - x for a negative
// one. Degree 1; the value on an assignment is the satisfied-literal count.
MultilinearPoly literal_count_poly(const std::vector<Literal>& clause,
                                   const RingSpec& ring, std::uint32_t n_vars) {
  MultilinearPoly f(ring, n_vars);
  for (const Literal& lit : clause) {
    if (lit.negated) {
      f.add_term(Monomial::constant(), ring.one());
      f.add_term(Monomial::variable(lit.var), ring.neg(ring.one()));
    } else {
      f.add_term(Monomial::variable(lit.var), ring.one());
    }
  }
  return f;
}

}  // namespace

void validate_cnf(const CnfFormula& f) {
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    std::set<std::uint32_t> seen;
    for (const Literal& lit : f.clauses[i]) {
      if (lit.var >= f.n_vars)
        throw StructuralError("clause " + std::to_string(i + 1) +
                              " references an out-of-range variable");
      if (!seen.insert(lit.var).second)
        throw StructuralError("clause " + std::to_string(i + 1) +
                              " repeats a variable");
    }
  }
}

bool clause_satisfied(const std::vector<Literal>& clause, const Assignment& a) {
  for (const Literal& lit : clause)
    if (static_cast<bool>(a[lit.var]) != lit.negated) return true;
  return false;
}

std::size_t satisfied_literal_count(const std::vector<Literal>& clause,
                                    const Assignment& a) {
  std::size_t count = 0;
  for (const Literal& lit : clause)
    if (static_cast<bool>(a[lit.var]) != lit.negated) ++count;
  return count;
}

CspInstance encode_exact_sat(const CnfFormula& f, const RingSpec& ring,
                             std::vector<std::string>* warnings) {
  validate_cnf(f);
  if (ring.kind() != RingKind::Rationals)
    throw StructuralError(
        "exact-one encoding is only faithful over the rationals");
  CspInstance out(ring, f.n_vars, 1, CspMode::AllRoot);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (f.clauses[i].empty())
      warn(warnings, "clause " + std::to_string(i + 1) +
                         " is empty and encodes an unsatisfiable constraint");
    MultilinearPoly poly = literal_count_poly(f.clauses[i], ring, f.n_vars);
    poly.add_term(Monomial::constant(), ring.neg(ring.one()));
    out.add_root(std::move(poly));
  }
  return out;
}

CspInstance encode_generalized_sat(std::uint32_t n_vars,
                                   const std::vector<GeneralizedClause>& clauses,
                                   const RingSpec& ring,
                                   std::vector<std::string>* warnings) {
  if (!ring.is_field())
    throw StructuralError(
        "generalized clause encoding needs a field ring; root-set polynomials "
        "may not exist over a composite modulus");
  std::uint32_t degree = 1;
  for (const auto& clause : clauses)
    degree = std::max(degree, static_cast<std::uint32_t>(clause.allowed.size()));
  CspInstance out(ring, n_vars, degree, CspMode::AllRoot);

  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const GeneralizedClause& clause = clauses[i];
    std::set<std::uint32_t> seen;
    for (const Literal& lit : clause.literals) {
      if (lit.var >= n_vars)
        throw StructuralError("clause " + std::to_string(i + 1) +
                              " references an out-of-range variable");
      if (!seen.insert(lit.var).second)
        throw StructuralError("clause " + std::to_string(i + 1) +
                              " repeats a variable");
    }
    std::vector<Scalar> roots;
    for (std::uint64_t value : clause.allowed) {
      if (ring.kind() == RingKind::Rationals) {
        if (value > clause.literals.size()) {
          warn(warnings, "clause " + std::to_string(i + 1) + ": allowed count " +
                             std::to_string(value) +
                             " exceeds the clause length and was dropped");
          continue;
        }
        roots.push_back(ring.from_int(static_cast<long long>(value)));
      } else {
        if (value >= ring.modulus()) {
          warn(warnings, "clause " + std::to_string(i + 1) + ": allowed value " +
                             std::to_string(value) +
                             " is not a residue and was dropped");
          continue;
        }
        roots.push_back(ring.from_residue(value));
      }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (roots.empty())
      warn(warnings, "clause " + std::to_string(i + 1) +
                         " allows no achievable count and is unsatisfiable");
    UnivariatePoly selector = root_set_polynomial(roots, ring);
    MultilinearPoly count = literal_count_poly(clause.literals, ring, n_vars);
    out.add_root(compose_univariate(selector, count));
  }
  return out;
}

CspInstance encode_nae(const CnfFormula& f, const RingSpec& ring,
                       std::vector<std::string>* warnings) {
  validate_cnf(f);
  if (!ring.is_field())
    throw StructuralError("not-all-equal encoding needs a field ring");
  std::size_t max_len = 0;
  for (const auto& clause : f.clauses) max_len = std::max(max_len, clause.size());
  if (ring.kind() == RingKind::IntegersMod && ring.modulus() < max_len)
    throw StructuralError(
        "modulus " + std::to_string(ring.modulus()) +
        " is too small for clauses of length " + std::to_string(max_len) +
        "; counts would wrap and break faithfulness");
  std::vector<GeneralizedClause> clauses;
  clauses.reserve(f.clauses.size());
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    GeneralizedClause gc;
    gc.literals = f.clauses[i];
    for (std::uint64_t v = 1; v < f.clauses[i].size(); ++v) gc.allowed.push_back(v);
    if (gc.allowed.empty())
      warn(warnings, "clause " + std::to_string(i + 1) +
                         " has fewer than two literals and cannot be "
                         "not-all-equal satisfied");
    clauses.push_back(std::move(gc));
  }
  return encode_generalized_sat(f.n_vars, clauses, ring, warnings);
}

CspInstance encode_cnf_nonroot(const CnfFormula& f, const RingSpec& ring,
                               std::vector<std::string>* warnings) {
  validate_cnf(f);
  std::size_t max_len = 0;
  for (const auto& clause : f.clauses) max_len = std::max(max_len, clause.size());
  if (ring.kind() == RingKind::IntegersMod) {
    if (!ring.is_field())
      throw StructuralError("non-root encoding needs the rationals or a prime modulus");
    if (ring.modulus() <= max_len)
      throw StructuralError(
          "modulus " + std::to_string(ring.modulus()) +
          " must exceed the longest clause (" + std::to_string(max_len) +
          "); a fully satisfied clause could sum to zero");
  }
  CspInstance out(ring, f.n_vars, 1, CspMode::AllNonRoot);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (f.clauses[i].empty())
      warn(warnings, "clause " + std::to_string(i + 1) +
                         " is empty: 0 != 0 is unsatisfiable");
    out.add_nonroot(literal_count_poly(f.clauses[i], ring, f.n_vars));
  }
  return out;
}

}  // namespace polycsp
