#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polycsp/cli.hpp"
#include "polycsp/io.hpp"
#include "polycsp/sparsify.hpp"

namespace py = pybind11;
using namespace polycsp;

namespace {

py::object to_pyint(const BigInt& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

RingSpec ring_from_mod(std::uint64_t mod) {
  return mod == 0 ? RingSpec::rationals() : RingSpec::integers_mod(mod);
}

std::string encode_text(const std::string& dimacs, const std::string& scheme,
                        std::uint64_t mod,
                        const std::vector<std::uint64_t>& allowed) {
  CnfFormula f = parse_dimacs(dimacs);
  RingSpec ring = ring_from_mod(mod);
  CspInstance inst = [&] {
    if (scheme == "exact") return encode_exact_sat(f, ring);
    if (scheme == "nae") return encode_nae(f, ring);
    if (scheme == "cnf-nonroot") return encode_cnf_nonroot(f, ring);
    if (scheme == "gen-sat") {
      std::vector<GeneralizedClause> clauses;
      for (const auto& c : f.clauses) clauses.push_back({c, allowed});
      return encode_generalized_sat(f.n_vars, clauses, ring);
    }
    throw StructuralError("unknown scheme '" + scheme + "'");
  }();
  return serialize_pcsp(inst);
}

std::string sparsify_text(const std::string& pcsp, const std::string& method,
                          std::size_t max_terms) {
  CspInstance inst = parse_pcsp(pcsp);
  CspInstance out = [&] {
    if (method == "field") return sparsify_field(inst);
    if (method == "howell") return sparsify_howell(inst);
    if (method == "subset") return sparsify_subset_modm(inst);
    if (method == "nonroot") return sparsify_nonroot(inst, max_terms);
    throw StructuralError("unknown method '" + method + "'");
  }();
  return serialize_pcsp(out);
}

bool verify_text(const std::string& a, const std::string& b, std::size_t limit) {
  return equivalent(parse_pcsp(a), parse_pcsp(b), limit);
}

py::dict stats_text(const std::string& pcsp) {
  CspInstance inst = parse_pcsp(pcsp);
  std::size_t max_degree = 0, terms = 0;
  for (const Constraint& c : inst.constraints()) {
    max_degree = std::max(max_degree, c.poly.degree());
    terms += c.poly.term_count();
  }
  py::dict d;
  d["ring"] = inst.ring().to_string();
  d["n_vars"] = inst.n_vars();
  d["degree_bound"] = inst.degree_bound();
  d["max_degree"] = max_degree;
  d["constraints"] = inst.size();
  d["terms"] = terms;
  return d;
}

std::vector<std::vector<int>> satisfying_text(const std::string& pcsp,
                                              std::size_t limit) {
  std::vector<std::vector<int>> out;
  for (const Assignment& a : satisfying_set(parse_pcsp(pcsp), limit))
    out.emplace_back(a.begin(), a.end());
  return out;
}

std::string or_poly_text(std::uint64_t p, std::size_t d) {
  MultilinearPoly f = or_polynomial_mod_p(p, d);
  CspInstance inst(f.ring(), f.n_vars(), static_cast<std::uint32_t>(f.degree()),
                   CspMode::AllNonRoot);
  inst.add_nonroot(f);
  return serialize_pcsp(inst);
}

std::string tree_gadget_text(std::size_t n, std::uint64_t m) {
  return serialize_pcsp(gen_tree_gadget(n, m).system);
}

std::string erbds_cross_text(const std::vector<std::string>& rbds_texts) {
  std::vector<RbdsInstance> inputs;
  for (const auto& text : rbds_texts) inputs.push_back(parse_rbds(text));
  return serialize_erbds_graph(gen_erbds_cross(inputs));
}

std::string degree_comp_text(const std::vector<std::string>& graph_texts,
                             std::uint64_t m, std::size_t d) {
  std::vector<ErbdsGraph> groups;
  for (const auto& text : graph_texts) groups.push_back(parse_erbds_graph(text));
  return serialize_pcsp(gen_degree_d_composition(groups, m, d));
}

std::string primesat_text(const std::string& dimacs) {
  return serialize_primesat(gen_primesat_from_cnf(parse_dimacs(dimacs)));
}

std::vector<std::vector<std::uint64_t>> howell_text(
    const std::vector<std::vector<long long>>& rows, std::uint64_t m) {
  RingSpec ring = RingSpec::integers_mod(m);
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  RingMatrix a(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw StructuralError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) a.set(r, c, ring.from_int(rows[r][c]));
  }
  HowellResult h = howell_form(a);
  std::vector<std::vector<std::uint64_t>> out(h.row_count,
                                              std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < h.row_count; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r][c] = h.h.at(r, c).residue();
  return out;
}

py::tuple bezout_py(const std::vector<long long>& values) {
  std::vector<BigInt> v(values.begin(), values.end());
  BezoutResult r = bezout(v);
  py::list coeffs;
  for (const BigInt& c : r.coefficients) coeffs.append(to_pyint(c));
  return py::make_tuple(to_pyint(r.g), coeffs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polynomial CSP sparsification toolkit";

  py::register_exception<StructuralError>(m, "StructuralError");
  py::register_exception<ResourceError>(m, "ResourceError");
  py::register_exception<ParseError>(m, "FormatError");

  m.def("encode", &encode_text, py::arg("dimacs"), py::arg("scheme"),
        py::arg("mod") = 0, py::arg("allowed") = std::vector<std::uint64_t>{},
        "Encode a DIMACS CNF as a pcsp instance");
  m.def("sparsify", &sparsify_text, py::arg("pcsp"), py::arg("method"),
        py::arg("max_terms") = kDefaultTermGuard,
        "Sparsify a pcsp instance; returns the reduced instance");
  m.def("verify_equivalent", &verify_text, py::arg("a"), py::arg("b"),
        py::arg("limit") = kDefaultOracleLimit,
        "Exhaustive equivalence check of two pcsp instances");
  m.def("stats", &stats_text, py::arg("pcsp"));
  m.def("satisfying_assignments", &satisfying_text, py::arg("pcsp"),
        py::arg("limit") = kDefaultOracleLimit);
  m.def("or_polynomial", &or_poly_text, py::arg("p"), py::arg("d"),
        "Degree-d polynomial mod p that is nonzero exactly on nonzero inputs, "
        "as a one-constraint non-root pcsp instance");
  m.def("tree_gadget", &tree_gadget_text, py::arg("n"), py::arg("m"),
        "Mod-m system forcing exactly one of the first n variables to 1");
  m.def("erbds_cross", &erbds_cross_text, py::arg("rbds_texts"),
        "Compose RBDS instances into one exact-domination graph");
  m.def("degree_composition", &degree_comp_text, py::arg("graph_texts"),
        py::arg("m"), py::arg("d"));
  m.def("primesat_from_cnf", &primesat_text, py::arg("dimacs"));
  m.def("find_prime_ap", [](std::size_t d) { return find_prime_ap(d); },
        py::arg("d"),
        "Smallest (a, b) with a, a+b, ..., a+(d-1)b prime and a+db composite");
  m.def("howell_form", &howell_text, py::arg("rows"), py::arg("m"),
        "Howell form of an integer matrix over Z/mZ");
  m.def("bezout", &bezout_py, py::arg("values"),
        "gcd and coefficients with sum(c_i * v_i) == gcd");
  m.def("cli", [](const std::vector<std::string>& args) { return cli_main(args); },
        py::arg("args"), "Run the command-line interface in-process");
}
