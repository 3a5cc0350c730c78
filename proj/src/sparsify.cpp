#include "polycsp/sparsify.hpp"

namespace polycsp {

namespace {

void require_all_root(const CspInstance& inst, const char* who) {
  if (inst.mode() != CspMode::AllRoot)
    throw StructuralError(std::string(who) + " needs an all-root instance");
}

CspInstance keep_sublist(const CspInstance& inst,
                         const std::vector<std::size_t>& indices) {
  CspInstance out(inst.ring(), inst.n_vars(), inst.degree_bound(), inst.mode());
  for (std::size_t i : indices) out.add_constraint(inst.constraints()[i]);
  return out;
}

}  // namespace

std::vector<std::size_t> sparsify_field_indices(const CspInstance& inst) {
  require_all_root(inst, "sparsify_field");
  if (!inst.ring().is_field())
    throw StructuralError("sparsify_field needs a field ring");
  auto [matrix, index] = coefficient_matrix(inst);
  (void)index;
  return row_basis_subset_field(matrix);
}

CspInstance sparsify_field(const CspInstance& inst) {
  return keep_sublist(inst, sparsify_field_indices(inst));
}

CspInstance sparsify_howell(const CspInstance& inst) {
  require_all_root(inst, "sparsify_howell");
  if (inst.ring().kind() != RingKind::IntegersMod)
    throw StructuralError("sparsify_howell is defined over Z/mZ");
  auto [matrix, index] = coefficient_matrix(inst);
  HowellResult result = howell_form(matrix);
  CspInstance out(inst.ring(), inst.n_vars(), inst.degree_bound(), CspMode::AllRoot);
  for (std::size_t r = 0; r < result.row_count; ++r) {
    MultilinearPoly poly(inst.ring(), inst.n_vars());
    for (std::size_t c = 0; c < result.h.cols(); ++c)
      poly.add_term(index.monomials[c], result.h.at(r, c));
    out.add_root(std::move(poly));
  }
  return out;
}

std::vector<std::size_t> sparsify_subset_indices(const CspInstance& inst) {
  require_all_root(inst, "sparsify_subset_modm");
  if (inst.ring().kind() != RingKind::IntegersMod)
    throw StructuralError("sparsify_subset_modm is defined over Z/mZ");
  auto [matrix, index] = coefficient_matrix(inst);
  (void)index;
  return row_spanning_subset_modm(matrix).chosen;
}

CspInstance sparsify_subset_modm(const CspInstance& inst) {
  return keep_sublist(inst, sparsify_subset_indices(inst));
}

CspInstance nonroot_to_root(const CspInstance& inst, std::size_t max_terms) {
  if (inst.mode() != CspMode::AllNonRoot)
    throw StructuralError("nonroot_to_root needs an all-non-root instance");
  if (inst.ring().kind() != RingKind::IntegersMod || !inst.ring().is_field())
    throw StructuralError(
        "non-root lifting needs a prime modulus; the composite case is open");
  std::uint64_t p = inst.ring().modulus();
  std::vector<Scalar> nonzero_residues;
  for (std::uint64_t v = 1; v < p; ++v)
    nonzero_residues.push_back(inst.ring().from_residue(v));
  UnivariatePoly lift = root_set_polynomial(nonzero_residues, inst.ring());

  std::uint32_t out_degree =
      inst.degree_bound() * static_cast<std::uint32_t>(p - 1);
  CspInstance out(inst.ring(), inst.n_vars(), out_degree, CspMode::AllRoot);
  for (const Constraint& c : inst.constraints())
    out.add_root(compose_univariate(lift, c.poly, max_terms));
  return out;
}

CspInstance sparsify_nonroot(const CspInstance& inst, std::size_t max_terms) {
  CspInstance lifted = nonroot_to_root(inst, max_terms);
  std::vector<std::size_t> kept = sparsify_field_indices(lifted);
  CspInstance out(inst.ring(), inst.n_vars(), inst.degree_bound(),
                  CspMode::AllNonRoot);
  for (std::size_t i : kept) out.add_constraint(inst.constraints()[i]);
  return out;
}

}  // namespace polycsp
