#pragma once

#include "polycsp/csp.hpp"

namespace polycsp {

// Indices of the constraints a greedy row-basis selection keeps; the kept
// rows are independent and span the coefficient row space. All-root field
// instances only.
std::vector<std::size_t> sparsify_field_indices(const CspInstance& inst);

// Keeps the selected sublist of the original constraints; the output has at
// most n^d + 1 constraints and the same satisfying set.
CspInstance sparsify_field(const CspInstance& inst);

// Rebuilds constraints from the nonzero rows of the Howell form of the
// coefficient matrix. Not a sublist of the input in general, but at most
// n^d + 1 constraints with the same satisfying set. Z/mZ all-root instances.
CspInstance sparsify_howell(const CspInstance& inst);

std::vector<std::size_t> sparsify_subset_indices(const CspInstance& inst);

// Sublist selection over Z/mZ through the row spanning subset; at most
// r*(n^d + 1) constraints where r counts the distinct prime divisors of m.
CspInstance sparsify_subset_modm(const CspInstance& inst);

// Lifts every inequality f != 0 over Z/pZ to the equality F(f) = 0, where F
// has root set {1, ..., p-1}. Constraint order is preserved one-to-one.
CspInstance nonroot_to_root(const CspInstance& inst,
                            std::size_t max_terms = kDefaultTermGuard);

// Lift, sparsify over the field, and map the kept rows back to the original
// inequalities: a sublist with at most n^{d(p-1)} + 1 constraints.
CspInstance sparsify_nonroot(const CspInstance& inst,
                             std::size_t max_terms = kDefaultTermGuard);

}  // namespace polycsp
