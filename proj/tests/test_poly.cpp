#include <doctest.h>

#include "testutil.hpp"

using namespace polycsp;
using namespace polycsp::testutil;

namespace {

MultilinearPoly var_sum(const RingSpec& ring, std::uint32_t n,
                        std::initializer_list<std::uint32_t> vars) {
  MultilinearPoly f(ring, n);
  for (std::uint32_t v : vars) f.add_term(Monomial::variable(v), ring.one());
  return f;
}

}  // namespace

TEST_CASE("monomial ordering is graded-lex") {
  Monomial one = Monomial::constant();
  Monomial x0 = Monomial::variable(0);
  Monomial x2 = Monomial::variable(2);
  Monomial x0x1 = Monomial({0, 1});
  Monomial x0x2 = Monomial({0, 2});
  Monomial x1x2 = Monomial({1, 2});
  CHECK(one < x0);
  CHECK(x0 < x2);
  CHECK(x2 < x0x1);
  CHECK(x0x1 < x0x2);
  CHECK(x0x2 < x1x2);
  CHECK_THROWS_AS(Monomial({1, 1}), StructuralError);
  CHECK_THROWS_AS(Monomial({2, 1}), StructuralError);
  CHECK(x0x1.merged_with(x1x2) == Monomial({0, 1, 2}));
}

TEST_CASE("poly_add cancels and respects identity") {
  RingSpec q = RingSpec::rationals();
  MultilinearPoly x1_plus_x2 = var_sum(q, 3, {0, 1});
  MultilinearPoly minus_x2(q, 3);
  minus_x2.add_term(Monomial::variable(1), q.from_int(-1));

  MultilinearPoly sum = poly_add(x1_plus_x2, minus_x2);
  CHECK(sum == var_sum(q, 3, {0}));

  MultilinearPoly zero = MultilinearPoly::zero(q, 3);
  CHECK(poly_add(zero, x1_plus_x2) == x1_plus_x2);

  RingSpec z3 = RingSpec::integers_mod(3);
  MultilinearPoly two_x1(z3, 2);
  two_x1.add_term(Monomial::variable(0), z3.from_residue(2));
  MultilinearPoly doubled = poly_add(two_x1, two_x1);
  CHECK(doubled.coefficient(Monomial::variable(0)).residue() == 1);
}

TEST_CASE("poly_add rejects mismatched operands") {
  RingSpec q = RingSpec::rationals();
  RingSpec z3 = RingSpec::integers_mod(3);
  CHECK_THROWS_AS(poly_add(MultilinearPoly::zero(q, 2), MultilinearPoly::zero(z3, 2)),
                  StructuralError);
  CHECK_THROWS_AS(poly_add(MultilinearPoly::zero(q, 2), MultilinearPoly::zero(q, 3)),
                  StructuralError);
}

TEST_CASE("poly_mul reduces repeated variables") {
  RingSpec q = RingSpec::rationals();
  MultilinearPoly x1 = var_sum(q, 2, {0});
  CHECK(poly_mul(x1, x1) == x1);

  // (x1 + x2)(x1 - x2) collapses to x1 - x2 after multilinear reduction.
  MultilinearPoly a = var_sum(q, 2, {0, 1});
  MultilinearPoly b(q, 2);
  b.add_term(Monomial::variable(0), q.one());
  b.add_term(Monomial::variable(1), q.from_int(-1));
  MultilinearPoly prod = poly_mul(a, b);
  CHECK(prod == b);
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    Assignment assn = nth_assignment(2, bits);
    CHECK(poly_eval(prod, assn) ==
          q.mul(poly_eval(a, assn), poly_eval(b, assn)));
  }

  CHECK(poly_mul(a, MultilinearPoly::zero(q, 2)).is_zero());
}

TEST_CASE("poly_mul term guard fails loudly") {
  RingSpec q = RingSpec::rationals();
  MultilinearPoly wide(q, 12);
  MultilinearPoly wide2(q, 12);
  for (std::uint32_t v = 0; v < 6; ++v) {
    wide.add_term(Monomial::variable(v), q.one());
    wide2.add_term(Monomial::variable(v + 6), q.one());
  }
  CHECK_THROWS_AS(poly_mul(wide, wide2, 10), ResourceError);
  CHECK_NOTHROW(poly_mul(wide, wide2, 36));
}

TEST_CASE("poly_eval matches the satisfied-literal reading") {
  RingSpec q = RingSpec::rationals();
  // x1 + x3 + (1 - x5) - 1 over five variables
  MultilinearPoly f(q, 5);
  f.add_term(Monomial::variable(0), q.one());
  f.add_term(Monomial::variable(2), q.one());
  f.add_term(Monomial::constant(), q.one());
  f.add_term(Monomial::variable(4), q.from_int(-1));
  f.add_term(Monomial::constant(), q.from_int(-1));

  CHECK(q.is_zero(poly_eval(f, {1, 0, 0, 0, 1})));
  CHECK(poly_eval(f, {1, 0, 1, 0, 1}) == q.one());
  CHECK(q.is_zero(poly_eval(MultilinearPoly::zero(q, 5), {0, 1, 0, 1, 0})));
  CHECK_THROWS_AS(poly_eval(f, {1, 0}), StructuralError);
  CHECK_THROWS_AS(poly_eval(f, {2, 0, 0, 0, 0}), StructuralError);
}

TEST_CASE("eval is multiplicative over 0/1 inputs") {
  auto rng = make_rng(42);
  for (const RingSpec& ring :
       {RingSpec::rationals(), RingSpec::integers_mod(4), RingSpec::integers_mod(7)}) {
    for (int rep = 0; rep < 20; ++rep) {
      MultilinearPoly f = random_poly(ring, 5, 3, 5, rng);
      MultilinearPoly g = random_poly(ring, 5, 2, 4, rng);
      MultilinearPoly fg = poly_mul(f, g);
      for (std::uint64_t bits = 0; bits < 32; ++bits) {
        Assignment a = nth_assignment(5, bits);
        CHECK(poly_eval(fg, a) == ring.mul(poly_eval(f, a), poly_eval(g, a)));
      }
    }
  }
}

TEST_CASE("multilinear canonical form is unique") {
  auto rng = make_rng(7);
  for (const RingSpec& ring :
       {RingSpec::rationals(), RingSpec::integers_mod(6), RingSpec::integers_mod(5)}) {
    for (int rep = 0; rep < 15; ++rep) {
      MultilinearPoly f = random_poly(ring, 6, 4, 8, rng);
      CHECK(interpolate_from_truth_table(f) == f);
    }
  }
}

TEST_CASE("root_set_polynomial has the prescribed roots") {
  RingSpec z3 = RingSpec::integers_mod(3);
  UnivariatePoly empty = root_set_polynomial({}, z3);
  CHECK(empty.degree() == 0);
  CHECK(empty.coeffs().size() == 1);
  CHECK(z3.is_one(empty.coeffs()[0]));

  // (x-1)(x-2) == x^2 + 2 mod 3
  UnivariatePoly f = root_set_polynomial({z3.from_residue(1), z3.from_residue(2)}, z3);
  REQUIRE(f.coeffs().size() == 3);
  CHECK(f.coeffs()[0].residue() == 2);
  CHECK(f.coeffs()[1].residue() == 0);
  CHECK(f.coeffs()[2].residue() == 1);
  CHECK(!z3.is_zero(f.eval(z3.from_residue(0))));
  CHECK(z3.is_zero(f.eval(z3.from_residue(1))));
  CHECK(z3.is_zero(f.eval(z3.from_residue(2))));

  RingSpec z5 = RingSpec::integers_mod(5);
  std::vector<Scalar> nonzero;
  for (std::uint64_t v = 1; v < 5; ++v) nonzero.push_back(z5.from_residue(v));
  UnivariatePoly g = root_set_polynomial(nonzero, z5);
  CHECK(g.degree() == 4);
  CHECK(!z5.is_zero(g.eval(z5.from_residue(0))));
  for (std::uint64_t v = 1; v < 5; ++v) CHECK(z5.is_zero(g.eval(z5.from_residue(v))));

  CHECK_THROWS_AS(root_set_polynomial({}, RingSpec::integers_mod(6)), StructuralError);
}

TEST_CASE("root set exactness over every small prime field") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 97ull}) {
    RingSpec ring = RingSpec::integers_mod(p);
    std::vector<Scalar> roots;
    for (std::uint64_t v = 0; v < p; v += 3) roots.push_back(ring.from_residue(v));
    UnivariatePoly f = root_set_polynomial(roots, ring);
    for (std::uint64_t e = 0; e < p; ++e) {
      bool in_roots = (e % 3 == 0);
      CHECK(ring.is_zero(f.eval(ring.from_residue(e))) == in_roots);
    }
  }
  // Over Q: the roots plus a few non-members.
  RingSpec q = RingSpec::rationals();
  std::vector<Scalar> roots = {q.from_int(1), q.from_int(-2), q.from_rational(Rational(1, 2))};
  UnivariatePoly f = root_set_polynomial(roots, q);
  for (const Scalar& r : roots) CHECK(q.is_zero(f.eval(r)));
  for (int e = 2; e < 18; ++e)
    CHECK(!q.is_zero(f.eval(q.from_int(e))));
}

TEST_CASE("compose_univariate agrees with evaluation order swap") {
  RingSpec q = RingSpec::rationals();
  MultilinearPoly f = var_sum(q, 2, {0, 1});

  UnivariatePoly identity(q, {q.zero(), q.one()});
  CHECK(compose_univariate(identity, f) == f);

  UnivariatePoly shift(q, {q.from_int(-1), q.one()});  // x - 1
  MultilinearPoly composed = compose_univariate(shift, f);
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    Assignment a = nth_assignment(2, bits);
    bool weight_one = (a[0] + a[1]) == 1;
    CHECK(q.is_zero(poly_eval(composed, a)) == weight_one);
  }

  RingSpec z3 = RingSpec::integers_mod(3);
  MultilinearPoly g = var_sum(z3, 3, {0, 1, 2});
  UnivariatePoly roots12 =
      root_set_polynomial({z3.from_residue(1), z3.from_residue(2)}, z3);
  MultilinearPoly h = compose_univariate(roots12, g);
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    Assignment a = nth_assignment(3, bits);
    int weight = a[0] + a[1] + a[2];
    CHECK(z3.is_zero(poly_eval(h, a)) == (weight == 1 || weight == 2));
  }
}

TEST_CASE("composition property on random inputs") {
  auto rng = make_rng(99);
  for (const RingSpec& ring : {RingSpec::rationals(), RingSpec::integers_mod(5)}) {
    for (int rep = 0; rep < 10; ++rep) {
      MultilinearPoly f = random_poly(ring, 4, 2, 4, rng);
      std::vector<Scalar> coeffs;
      for (int i = 0; i < 3; ++i) coeffs.push_back(random_scalar(ring, rng));
      UnivariatePoly F(ring, coeffs);
      MultilinearPoly composed = compose_univariate(F, f);
      for (std::uint64_t bits = 0; bits < 16; ++bits) {
        Assignment a = nth_assignment(4, bits);
        CHECK(poly_eval(composed, a) == F.eval(poly_eval(f, a)));
      }
    }
  }
}
