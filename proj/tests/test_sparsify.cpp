#include <doctest.h>

#include "polycsp/sparsify.hpp"
#include "testutil.hpp"

using namespace polycsp;
using namespace polycsp::testutil;

namespace {

MultilinearPoly linear(const RingSpec& ring, std::uint32_t n,
                       const std::vector<long long>& coeffs_with_constant) {
  // coeffs_with_constant: [c0, c1, ..., cn] for c0 + c1*x1 + ...
  MultilinearPoly f(ring, n);
  f.add_term(Monomial::constant(), ring.from_int(coeffs_with_constant[0]));
  for (std::uint32_t v = 0; v < n; ++v)
    f.add_term(Monomial::variable(v), ring.from_int(coeffs_with_constant[v + 1]));
  return f;
}

CspInstance random_nonroot_instance(const RingSpec& ring, std::uint32_t n,
                                    std::size_t count, std::mt19937_64& rng) {
  CspInstance inst(ring, n, 1, CspMode::AllNonRoot);
  for (std::size_t i = 0; i < count; ++i)
    inst.add_nonroot(random_poly(ring, n, 1, 3, rng));
  return inst;
}

}  // namespace

TEST_CASE("field sparsifier keeps the greedy sublist") {
  RingSpec q = RingSpec::rationals();
  CspInstance inst(q, 2, 1, CspMode::AllRoot);
  MultilinearPoly x1 = MultilinearPoly::variable(q, 2, 0);
  inst.add_root(x1);
  inst.add_root(poly_scale(x1, q.from_int(2)));
  MultilinearPoly sum(q, 2);
  sum.add_term(Monomial::variable(0), q.one());
  sum.add_term(Monomial::variable(1), q.one());
  inst.add_root(sum);

  CHECK(sparsify_field_indices(inst) == std::vector<std::size_t>{0, 2});
  CspInstance out = sparsify_field(inst);
  REQUIRE(out.size() == 2);
  CHECK(out.constraints()[0].poly == x1);
  CHECK(out.constraints()[1].poly == sum);
  CHECK(is_sublist(out, inst));
  CHECK(equivalent(inst, out));
}

TEST_CASE("independent systems pass through unchanged") {
  RingSpec z5 = RingSpec::integers_mod(5);
  CspInstance inst(z5, 3, 1, CspMode::AllRoot);
  inst.add_root(MultilinearPoly::variable(z5, 3, 0));
  inst.add_root(MultilinearPoly::variable(z5, 3, 1));
  inst.add_root(MultilinearPoly::variable(z5, 3, 2));
  CspInstance out = sparsify_field(inst);
  CHECK(out.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(out.constraints()[i].poly == inst.constraints()[i].poly);
}

TEST_CASE("field sparsifier rejects wrong modes and rings") {
  RingSpec q = RingSpec::rationals();
  CspInstance nonroot(q, 2, 1, CspMode::AllNonRoot);
  CHECK_THROWS_AS(sparsify_field(nonroot), StructuralError);
  RingSpec z6 = RingSpec::integers_mod(6);
  CspInstance composite(z6, 2, 1, CspMode::AllRoot);
  CHECK_THROWS_AS(sparsify_field(composite), StructuralError);
}

TEST_CASE("field sparsification is idempotent and bounded") {
  auto rng = make_rng(101);
  for (const RingSpec& ring : {RingSpec::rationals(), RingSpec::integers_mod(3)}) {
    for (int rep = 0; rep < 10; ++rep) {
      CspInstance inst = random_root_instance(ring, 6, 2, 40, rng);
      CspInstance once = sparsify_field(inst);
      CHECK(once.size() <= monomial_count(6, 2));
      CHECK(once.size() <= 6 * 6 + 1);
      CHECK(is_sublist(once, inst));
      CHECK(equivalent(inst, once, 10));
      CspInstance twice = sparsify_field(once);
      REQUIRE(twice.size() == once.size());
      for (std::size_t i = 0; i < twice.size(); ++i)
        CHECK(twice.constraints()[i].poly == once.constraints()[i].poly);
    }
  }
}

TEST_CASE("howell sparsifier collapses duplicates mod 4") {
  RingSpec z4 = RingSpec::integers_mod(4);
  CspInstance inst(z4, 1, 1, CspMode::AllRoot);
  MultilinearPoly two_x1(z4, 1);
  two_x1.add_term(Monomial::variable(0), z4.from_residue(2));
  inst.add_root(two_x1);
  inst.add_root(two_x1);

  CspInstance out = sparsify_howell(inst);
  CHECK(out.size() == 1);
  CHECK(equivalent(inst, out));
  auto sats = satisfying_set(out);
  REQUIRE(sats.size() == 1);
  CHECK(sats[0] == Assignment{0});
}

TEST_CASE("howell sparsifier on empty input") {
  RingSpec z6 = RingSpec::integers_mod(6);
  CspInstance inst(z6, 3, 1, CspMode::AllRoot);
  CspInstance out = sparsify_howell(inst);
  CHECK(out.size() == 0);
}

TEST_CASE("howell sparsifier bounds and equivalence on random mod-6 systems") {
  auto rng = make_rng(103);
  RingSpec z6 = RingSpec::integers_mod(6);
  for (int rep = 0; rep < 8; ++rep) {
    CspInstance inst = random_root_instance(z6, 6, 1, 40, rng);
    CspInstance out = sparsify_howell(inst);
    CHECK(out.size() <= 7);
    CHECK(equivalent(inst, out));
  }
}

TEST_CASE("subset sparsifier matches the field bound for prime moduli") {
  auto rng = make_rng(107);
  RingSpec z5 = RingSpec::integers_mod(5);
  for (int rep = 0; rep < 8; ++rep) {
    CspInstance inst = random_root_instance(z5, 5, 1, 25, rng);
    CspInstance out = sparsify_subset_modm(inst);
    CHECK(out.size() <= 6);  // r = 1, so the field bound n + 1
    CHECK(is_sublist(out, inst));
    CHECK(equivalent(inst, out));
    CHECK(sparsify_field(inst).size() <= out.size());
  }
}

TEST_CASE("subset sparsifier keeps single constraints") {
  RingSpec z6 = RingSpec::integers_mod(6);
  CspInstance inst(z6, 2, 1, CspMode::AllRoot);
  inst.add_root(linear(z6, 2, {1, 2, 3}));
  CspInstance out = sparsify_subset_modm(inst);
  REQUIRE(out.size() == 1);
  CHECK(out.constraints()[0].poly == inst.constraints()[0].poly);
}

TEST_CASE("subset sparsifier bound r*(n^d+1) over mod 6") {
  auto rng = make_rng(109);
  RingSpec z6 = RingSpec::integers_mod(6);
  for (int rep = 0; rep < 8; ++rep) {
    CspInstance inst = random_root_instance(z6, 5, 1, 30, rng);
    CspInstance out = sparsify_subset_modm(inst);
    CHECK(out.size() <= 2 * 6);
    CHECK(is_sublist(out, inst));
    CHECK(equivalent(inst, out));
  }
}

TEST_CASE("nonroot lift turns inequalities into equalities") {
  SUBCASE("p = 2 shifts by one") {
    RingSpec z2 = RingSpec::integers_mod(2);
    CspInstance inst(z2, 2, 1, CspMode::AllNonRoot);
    inst.add_nonroot(MultilinearPoly::variable(z2, 2, 0));
    CspInstance lifted = nonroot_to_root(inst);
    REQUIRE(lifted.size() == 1);
    // f - 1: the lone nonzero residue is 1.
    MultilinearPoly expected(z2, 2);
    expected.add_term(Monomial::variable(0), z2.one());
    expected.add_term(Monomial::constant(), z2.one());
    CHECK(lifted.constraints()[0].poly == expected);
    CHECK(equivalent(inst, lifted));
  }
  SUBCASE("p = 3 composition is the OR of two variables") {
    RingSpec z3 = RingSpec::integers_mod(3);
    CspInstance inst(z3, 2, 1, CspMode::AllNonRoot);
    MultilinearPoly sum(z3, 2);
    sum.add_term(Monomial::variable(0), z3.one());
    sum.add_term(Monomial::variable(1), z3.one());
    inst.add_nonroot(sum);
    CspInstance lifted = nonroot_to_root(inst);
    auto sats = satisfying_set(lifted);
    REQUIRE(sats.size() == 3);  // everything except 00
    CHECK(sats[0] == Assignment{0, 1});
    CHECK(equivalent(inst, lifted));
  }
  SUBCASE("empty instance stays empty") {
    RingSpec z3 = RingSpec::integers_mod(3);
    CspInstance inst(z3, 2, 1, CspMode::AllNonRoot);
    CHECK(nonroot_to_root(inst).size() == 0);
  }
  SUBCASE("composite and rational rings are rejected") {
    RingSpec z6 = RingSpec::integers_mod(6);
    CspInstance composite(z6, 2, 1, CspMode::AllNonRoot);
    CHECK_THROWS_AS(nonroot_to_root(composite), StructuralError);
    RingSpec q = RingSpec::rationals();
    CspInstance rational(q, 2, 1, CspMode::AllNonRoot);
    CHECK_THROWS_AS(nonroot_to_root(rational), StructuralError);
    CspInstance root_mode(RingSpec::integers_mod(3), 2, 1, CspMode::AllRoot);
    CHECK_THROWS_AS(nonroot_to_root(root_mode), StructuralError);
  }
}

TEST_CASE("nonroot sparsifier returns a bounded sublist of inequalities") {
  auto rng = make_rng(113);
  RingSpec z3 = RingSpec::integers_mod(3);
  SUBCASE("p=3 d=1 n=4 with 30 inequalities") {
    CspInstance inst = random_nonroot_instance(z3, 4, 30, rng);
    CspInstance out = sparsify_nonroot(inst);
    CHECK(out.size() <= 17);  // n^{d(p-1)} + 1 = 4^2 + 1
    CHECK(out.mode() == CspMode::AllNonRoot);
    CHECK(is_sublist(out, inst));
    CHECK(equivalent(inst, out));
  }
  SUBCASE("single inequality unchanged") {
    CspInstance inst = random_nonroot_instance(z3, 3, 1, rng);
    if (inst.constraints()[0].poly.is_zero()) return;  // 0 != 0 still kept
    CspInstance out = sparsify_nonroot(inst);
    CHECK(out.size() == 1);
  }
  SUBCASE("p=2 keeps the degree-1 bound") {
    RingSpec z2 = RingSpec::integers_mod(2);
    CspInstance inst = random_nonroot_instance(z2, 5, 20, rng);
    CspInstance out = sparsify_nonroot(inst);
    CHECK(out.size() <= 6);  // degree d(p-1) = 1, so n + 1
    CHECK(is_sublist(out, inst));
    CHECK(equivalent(inst, out));
  }
}

TEST_CASE("every sparsifier preserves satisfying sets on random instances") {
  auto rng = make_rng(127);
  for (int rep = 0; rep < 5; ++rep) {
    CspInstance rational = random_root_instance(RingSpec::rationals(), 7, 2, 25, rng);
    CHECK(equivalent(rational, sparsify_field(rational), 10));

    CspInstance mod12 = random_root_instance(RingSpec::integers_mod(12), 6, 1, 20, rng);
    CHECK(equivalent(mod12, sparsify_howell(mod12), 10));
    CHECK(equivalent(mod12, sparsify_subset_modm(mod12), 10));

    CspInstance ineq = random_nonroot_instance(RingSpec::integers_mod(3), 5, 15, rng);
    CHECK(equivalent(ineq, sparsify_nonroot(ineq), 10));
  }
}
