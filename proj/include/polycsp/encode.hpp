#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polycsp/csp.hpp"

namespace polycsp {

struct Literal {
  std::uint32_t var;  // 0-based
  bool negated;

  bool operator==(const Literal& o) const {
    return var == o.var && negated == o.negated;
  }
};

// Plain CNF: clauses are sets of literals over distinct variables.
struct CnfFormula {
  std::uint32_t n_vars = 0;
  std::vector<std::vector<Literal>> clauses;
};

// Validates variable ranges and the distinct-variables-per-clause rule.
void validate_cnf(const CnfFormula& f);

// A clause plus the set of satisfied-literal counts that satisfy it
// (counted modulo p when the ring is Z/pZ).
struct GeneralizedClause {
  std::vector<Literal> literals;
  std::vector<std::uint64_t> allowed;
};

bool clause_satisfied(const std::vector<Literal>& clause, const Assignment& a);
std::size_t satisfied_literal_count(const std::vector<Literal>& clause,
                                    const Assignment& a);

// Exactly-one semantics: one degree-1 equality per clause, sum of literal
// polynomials minus one. Rationals only; a single linear congruence cannot
// express exactly-one mod m.
CspInstance encode_exact_sat(const CnfFormula& f, const RingSpec& ring,
                             std::vector<std::string>* warnings = nullptr);

// Per clause: F(f) = 0 with f the satisfied-literal count (degree 1) and F
// the root-set polynomial of the allowed counts. Field rings only.
CspInstance encode_generalized_sat(std::uint32_t n_vars,
                                   const std::vector<GeneralizedClause>& clauses,
                                   const RingSpec& ring,
                                   std::vector<std::string>* warnings = nullptr);

// Not-all-equal: allowed counts {1, ..., k-1} per size-k clause, so degree
// at most k-1.
CspInstance encode_nae(const CnfFormula& f, const RingSpec& ring,
                       std::vector<std::string>* warnings = nullptr);

// Plain CNF as inequalities: the satisfied-literal count is nonzero. Needs
// the rationals or a prime modulus exceeding the longest clause.
CspInstance encode_cnf_nonroot(const CnfFormula& f, const RingSpec& ring,
                               std::vector<std::string>* warnings = nullptr);

}  // namespace polycsp
