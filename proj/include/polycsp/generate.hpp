#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycsp/csp.hpp"
#include "polycsp/encode.hpp"

namespace polycsp {

// Red-blue dominating set input: bipartite graph with a budget k on the red
// side. Indices are 0-based internally.
struct RbdsInstance {
  std::size_t n_red = 0;
  std::size_t n_blue = 0;
  std::size_t k = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (red, blue)

  void validate() const;  // ranges, duplicate edges, k <= n_red
  std::vector<std::vector<std::size_t>> blue_adjacency() const;
};

// Bipartite graph with stable vertex labels and a designated blue subset on
// which exact domination is waived. Output of the cross-composition and
// input to the degree-d composition.
struct ErbdsGraph {
  std::vector<std::string> red_labels;
  std::vector<std::string> blue_labels;
  std::vector<std::vector<std::size_t>> blue_adj;  // sorted red indices per blue
  std::vector<bool> blue_exempt;
  // Construction parameters (zero when the graph was not generated).
  std::size_t t = 0, k = 0, m_red = 0, m_blue = 0;
};

// The composition of t same-sized RBDS inputs into one graph whose
// semi-exact domination status is the OR of the inputs' RBDS answers. If t
// is not a perfect square the first input is duplicated until it is.
ErbdsGraph gen_erbds_cross(const std::vector<RbdsInstance>& inputs);

inline constexpr std::size_t kDefaultSolveLimit = 24;

// Minimum red subset of size <= k dominating every blue at least once.
std::optional<std::vector<std::size_t>> solve_rbds(const RbdsInstance& g,
                                                   std::size_t limit = 20);

// Red subset dominating every blue exactly once (no size bound).
std::optional<std::vector<std::size_t>> solve_erbds(
    const ErbdsGraph& g, std::size_t limit = kDefaultSolveLimit);

// Exempt blues need at least one chosen neighbor, all others exactly one.
std::optional<std::vector<std::size_t>> solve_semi_erbds(
    const ErbdsGraph& g, const std::vector<bool>& exempt,
    std::size_t limit = kDefaultSolveLimit);

// One variable per red vertex, one degree-1 equality per blue vertex:
// satisfiable exactly when the graph has an exact dominating set.
CspInstance erbds_to_csp(const ErbdsGraph& g, const RingSpec& ring);

// Degree-1 system over Z/mZ forcing exactly one of the first n_original
// variables to 1, built from a complete binary tree of dummy counters.
struct ModLinearSystem {
  std::uint64_t modulus = 0;
  std::size_t n_original = 0;
  CspInstance system;
};

ModLinearSystem gen_tree_gadget(std::size_t n, std::uint64_t m);

// Degree-d instance over shared red variables plus (d-1)*r selectors that is
// satisfiable exactly when some group graph has a semi-exact dominating set
// with respect to the shared exempt blues.
CspInstance gen_degree_d_composition(const std::vector<ErbdsGraph>& groups,
                                     std::uint64_t m, std::size_t d);

// Degree <= d multilinear polynomial over d*(p-1) variables that is nonzero
// mod p exactly on nonzero 0/1 inputs.
MultilinearPoly or_polynomial_mod_p(std::uint64_t p, std::size_t d);

// Clause system under the "satisfied-literal count is prime" semantics.
struct PrimeSatInstance {
  std::uint32_t n_vars = 0;
  std::vector<std::vector<Literal>> clauses;
  std::uint32_t n_original = 0;
  std::uint64_t ap_start = 0;   // a
  std::uint64_t ap_step = 0;    // b
  std::size_t ap_length = 0;    // d
};

// Reduction from a d-uniform CNF to an equisatisfiable prime-count instance
// built on an arithmetic progression of d primes that stops being prime.
PrimeSatInstance gen_primesat_from_cnf(const CnfFormula& f);

// Smallest (b, then a) with a, a+b, ..., a+(d-1)b all prime and a+db not.
std::pair<std::uint64_t, std::uint64_t> find_prime_ap(std::size_t d);

bool prime_count_satisfies(const PrimeSatInstance& inst, const Assignment& a);

}  // namespace polycsp
