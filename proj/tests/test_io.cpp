#include <doctest.h>

#include "polycsp/io.hpp"
#include "testutil.hpp"

using namespace polycsp;
using namespace polycsp::testutil;

TEST_CASE("pcsp round trip on the intro constraint") {
  std::string text =
      "pcsp Q 5 1 root\n"
      "1 v1 + 1 v3 + -1 v5 + 0/1\n";
  CspInstance inst = parse_pcsp(text);
  REQUIRE(inst.size() == 1);
  const MultilinearPoly& poly = inst.constraints()[0].poly;
  CHECK(poly.term_count() == 3);  // the zero constant is canonicalized away
  std::string out = serialize_pcsp(inst);
  CHECK(out ==
        "pcsp Q 5 1 root\n"
        "1 v1 + 1 v3 + -1 v5\n");
  CHECK(serialize_pcsp(parse_pcsp(out)) == out);
}

TEST_CASE("pcsp grammar violations carry line positions") {
  CHECK_THROWS_AS(parse_pcsp("pcsp Q 3 1 root\n1 v9\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Q 3 1 root\n1 v0\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Q 3 1 root\nx v1\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Q 3 1 root\n1 v1*v1\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Q 3 1 root\n1 v1*v2\n"), ParseError);  // degree
  CHECK_THROWS_AS(parse_pcsp("pcsp Zmod 6 3 1 root\n1/2 v1\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("nothing here\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Zmod 3 1 root\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp(""), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Q 3 1 maybe\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Q 3 1 root\nne0 1 v1\n"), ParseError);

  try {
    parse_pcsp("pcsp Q 3 1 root\n# fine\n1 v7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("numeric token edge cases") {
  // Leading zeros are plain decimal, not an octal prefix.
  CspInstance z = parse_pcsp("pcsp Q 2 1 root\n09 v1 + -007\n");
  CHECK(z.constraints()[0].poly.coefficient(Monomial::variable(0)) ==
        RingSpec::rationals().from_int(9));
  CHECK(z.constraints()[0].poly.coefficient(Monomial::constant()) ==
        RingSpec::rationals().from_int(-7));

  CHECK_THROWS_AS(parse_pcsp("pcsp Q 2 1 root\n2/-3 v1\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Q 2 1 root\n2/0 v1\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Zmod 1 2 1 root\n"), ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Zmod 99999999999999999999 2 1 root\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_pcsp("pcsp Q 99999999999999999999 1 root\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 99999999999999999999 0\n"), ParseError);
  CHECK_THROWS_AS(parse_erbds_graph("erbds 2 1 1 1 1 v\n"), ParseError);
}

TEST_CASE("empty bodies and zero polynomials survive the round trip") {
  CspInstance empty = parse_pcsp("pcsp Zmod 6 4 2 root\n");
  CHECK(empty.size() == 0);
  CHECK(empty.ring().modulus() == 6);
  CHECK(empty.degree_bound() == 2);

  CspInstance zero = parse_pcsp("pcsp Q 2 1 root\n0\n");
  REQUIRE(zero.size() == 1);
  CHECK(zero.constraints()[0].poly.is_zero());
  CHECK(serialize_pcsp(zero) == "pcsp Q 2 1 root\n0\n");
}

TEST_CASE("pcsp keeps rational coefficients in lowest terms") {
  CspInstance inst = parse_pcsp("pcsp Q 2 1 root\n2/4 v1 + -6/3 v2 + 3/1\n");
  std::string out = serialize_pcsp(inst);
  CHECK(out == "pcsp Q 2 1 root\n3 + 1/2 v1 + -2 v2\n");
}

TEST_CASE("nonroot mode and relation tags") {
  CspInstance inst = parse_pcsp("pcsp Zmod 5 2 1 nonroot\n1 v1 + 1 v2\n");
  CHECK(inst.mode() == CspMode::AllNonRoot);
  CHECK(inst.constraints()[0].relation == Relation::NonRootNe0);
  CspInstance tagged = parse_pcsp("pcsp Zmod 5 2 1 nonroot\nne0 1 v1 + 1 v2\n");
  CHECK(tagged.constraints()[0].relation == Relation::NonRootNe0);
  CHECK(serialize_pcsp(inst) == serialize_pcsp(tagged));
}

TEST_CASE("pcsp round trip is the identity on random canonical instances") {
  auto rng = make_rng(301);
  for (const RingSpec& ring : {RingSpec::rationals(), RingSpec::integers_mod(6),
                               RingSpec::integers_mod(5)}) {
    for (int rep = 0; rep < 15; ++rep) {
      CspInstance inst = random_root_instance(ring, 6, 2, 8, rng);
      std::string text = serialize_pcsp(inst);
      CspInstance back = parse_pcsp(text);
      REQUIRE(back.size() == inst.size());
      for (std::size_t i = 0; i < inst.size(); ++i)
        CHECK(back.constraints()[i].poly == inst.constraints()[i].poly);
      CHECK(serialize_pcsp(back) == text);
    }
  }
}

TEST_CASE("dimacs parsing") {
  CnfFormula f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  CHECK(f.n_vars == 2);
  REQUIRE(f.clauses.size() == 1);
  REQUIRE(f.clauses[0].size() == 2);
  CHECK(f.clauses[0][0] == Literal{0, false});
  CHECK(f.clauses[0][1] == Literal{1, true});

  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 -1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);

  CnfFormula multi = parse_dimacs("c header comment\np cnf 3 2\n1 2\n3 0\n-1 0\n");
  CHECK(multi.clauses.size() == 2);
  CHECK(multi.clauses[0].size() == 3);

  std::string text = serialize_dimacs(multi, "note");
  CnfFormula again = parse_dimacs(text);
  CHECK(again.clauses.size() == multi.clauses.size());
}

TEST_CASE("rbds file format") {
  RbdsInstance g = parse_rbds("rbds 2 2 1\ne r1 b1\ne r2 b2\n");
  CHECK(g.n_red == 2);
  CHECK(g.k == 1);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0] == std::pair<std::size_t, std::size_t>{0, 0});

  CHECK_THROWS_AS(parse_rbds("rbds 2 2 1\ne r3 b1\n"), ParseError);
  CHECK_THROWS_AS(parse_rbds("rbds 2 2 1\ne r1 b1\ne r1 b1\n"), ParseError);
  CHECK_THROWS_AS(parse_rbds("rbds 1 1 2\n"), ParseError);  // k > reds
  CHECK_THROWS_AS(parse_rbds("e r1 b1\n"), ParseError);

  CHECK(serialize_rbds(g) == "rbds 2 2 1\ne r1 b1\ne r2 b2\n");
  RbdsInstance back = parse_rbds(serialize_rbds(g));
  CHECK(back.edges == g.edges);
}

TEST_CASE("erbds graph file round trip") {
  auto g = gen_erbds_cross({parse_rbds("rbds 1 1 1\ne r1 b1\n")});
  std::string text = serialize_erbds_graph(g);
  ErbdsGraph back = parse_erbds_graph(text);
  CHECK(back.red_labels == g.red_labels);
  CHECK(back.blue_labels == g.blue_labels);
  CHECK(back.blue_adj == g.blue_adj);
  CHECK(back.blue_exempt == g.blue_exempt);
  CHECK(back.t == g.t);
  CHECK(serialize_erbds_graph(back) == text);

  CHECK_THROWS_AS(parse_erbds_graph("erbds 1 1 1 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_erbds_graph("r only\n"), ParseError);
}

TEST_CASE("primesat serialization carries the progression") {
  CnfFormula f;
  f.n_vars = 1;
  f.clauses = {{{0, false}}};
  std::string text = serialize_primesat(gen_primesat_from_cnf(f));
  CHECK(text.find("primesat a=3 b=1 d=1") != std::string::npos);
  CnfFormula shape = parse_dimacs(text);
  CHECK(shape.n_vars == 4);
}
