#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "polycsp/linalg.hpp"
#include "polycsp/poly.hpp"

namespace polycsp {

enum class Relation { RootEq0, NonRootNe0 };
enum class CspMode { AllRoot, AllNonRoot, Mixed };

struct Constraint {
  MultilinearPoly poly;
  Relation relation;
};

inline constexpr std::size_t kDefaultOracleLimit = 20;

// A binary CSP given by polynomial (in)equalities: every constraint demands
// its polynomial evaluate to zero (root) or nonzero (non-root) on the 0/1
// assignment, in the instance's ring.
class CspInstance {
 public:
  CspInstance(RingSpec ring, std::uint32_t n_vars, std::uint32_t degree_bound,
              CspMode mode)
      : ring_(std::move(ring)),
        n_vars_(n_vars),
        degree_bound_(degree_bound),
        mode_(mode) {}

  const RingSpec& ring() const { return ring_; }
  std::uint32_t n_vars() const { return n_vars_; }
  std::uint32_t degree_bound() const { return degree_bound_; }
  CspMode mode() const { return mode_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }

  void add_constraint(Constraint c);
  void add_root(MultilinearPoly poly) {
    add_constraint({std::move(poly), Relation::RootEq0});
  }
  void add_nonroot(MultilinearPoly poly) {
    add_constraint({std::move(poly), Relation::NonRootNe0});
  }

 private:
  RingSpec ring_;
  std::uint32_t n_vars_;
  std::uint32_t degree_bound_;
  CspMode mode_;
  std::vector<Constraint> constraints_;
};

// All multilinear monomials of degree <= degree_bound over n variables, in
// graded-lex order, with the reverse lookup. This order is the matrix column
// order everywhere.
struct MonomialIndex {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> position;
};

MonomialIndex monomial_index(std::uint32_t n_vars, std::uint32_t degree_bound);

// Number of monomials of degree <= d over n variables (= column count).
std::size_t monomial_count(std::uint32_t n_vars, std::uint32_t degree_bound);

// The constraint-coefficient matrix of an all-root instance: one row per
// constraint, one column per monomial (constant included).
std::pair<RingMatrix, MonomialIndex> coefficient_matrix(const CspInstance& inst);

bool satisfies(const CspInstance& inst, const Assignment& a);

// Exhaustive ground-truth oracle: every satisfying assignment, in
// lexicographic order.
std::vector<Assignment> satisfying_set(const CspInstance& inst,
                                       std::size_t oracle_limit = kDefaultOracleLimit);

bool equivalent(const CspInstance& a, const CspInstance& b,
                std::size_t oracle_limit = kDefaultOracleLimit);

}  // namespace polycsp
