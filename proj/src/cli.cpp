#include "polycsp/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "polycsp/io.hpp"
#include "polycsp/sparsify.hpp"

namespace polycsp {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInequivalent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitResource = 4;

RingSpec ring_from_mod(std::uint64_t mod) {
  return mod == 0 ? RingSpec::rationals() : RingSpec::integers_mod(mod);
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

int run_encode(const std::string& scheme, std::uint64_t mod,
               const std::string& allowed_csv, const std::string& in_path,
               const std::string& out_path) {
  CnfFormula formula = parse_dimacs(read_file(in_path));
  RingSpec ring = ring_from_mod(mod);
  std::vector<std::string> warnings;
  CspInstance inst = [&] {
    if (scheme == "exact") return encode_exact_sat(formula, ring, &warnings);
    if (scheme == "nae") return encode_nae(formula, ring, &warnings);
    if (scheme == "cnf-nonroot") return encode_cnf_nonroot(formula, ring, &warnings);
    if (scheme == "gen-sat") {
      std::vector<std::uint64_t> allowed;
      std::istringstream in(allowed_csv);
      std::string piece;
      while (std::getline(in, piece, ','))
        if (!piece.empty()) allowed.push_back(std::stoull(piece));
      if (allowed_csv.empty())
        throw StructuralError("--allowed is required for the gen-sat scheme");
      std::vector<GeneralizedClause> clauses;
      for (const auto& c : formula.clauses) clauses.push_back({c, allowed});
      return encode_generalized_sat(formula.n_vars, clauses, ring, &warnings);
    }
    throw StructuralError("unknown scheme '" + scheme + "'");
  }();
  print_warnings(warnings);
  write_file(out_path, serialize_pcsp(inst));
  return kExitOk;
}

int run_sparsify(const std::string& method, const std::string& in_path,
                 const std::string& out_path, std::size_t max_terms) {
  CspInstance inst = parse_pcsp(read_file(in_path));
  CspInstance out = [&] {
    if (method == "field") return sparsify_field(inst);
    if (method == "howell") return sparsify_howell(inst);
    if (method == "subset") return sparsify_subset_modm(inst);
    if (method == "nonroot") return sparsify_nonroot(inst, max_terms);
    throw StructuralError("unknown method '" + method + "'");
  }();
  write_file(out_path, serialize_pcsp(out));
  std::cout << "constraints: " << inst.size() << " -> " << out.size() << "\n";
  return kExitOk;
}

int run_verify(const std::string& a_path, const std::string& b_path,
               std::size_t limit) {
  CspInstance a = parse_pcsp(read_file(a_path));
  CspInstance b = parse_pcsp(read_file(b_path));
  bool same = equivalent(a, b, limit);
  std::cout << (same ? "equivalent" : "inequivalent") << "\n";
  return same ? kExitOk : kExitInequivalent;
}

int run_generate(const std::string& construction,
                 const std::vector<std::string>& in_paths,
                 const std::string& out_path, std::uint64_t mod, std::size_t n,
                 std::size_t d, std::uint64_t p) {
  if (construction == "erbds-cross") {
    if (in_paths.empty()) throw StructuralError("erbds-cross needs --in inputs");
    std::vector<RbdsInstance> inputs;
    for (const auto& path : in_paths) inputs.push_back(parse_rbds(read_file(path)));
    ErbdsGraph g = gen_erbds_cross(inputs);
    write_file(out_path, serialize_erbds_graph(g));
    std::cout << "red: " << g.red_labels.size() << " blue: " << g.blue_labels.size()
              << " total: " << g.red_labels.size() + g.blue_labels.size() << "\n";
    return kExitOk;
  }
  if (construction == "tree-gadget") {
    ModLinearSystem sys = gen_tree_gadget(n, mod);
    write_file(out_path, serialize_pcsp(sys.system));
    std::cout << "variables: " << sys.system.n_vars() << " (originals: "
              << sys.n_original << ", dummies: "
              << sys.system.n_vars() - sys.n_original << ")\n";
    return kExitOk;
  }
  if (construction == "degree-comp") {
    if (in_paths.empty()) throw StructuralError("degree-comp needs --in inputs");
    std::vector<ErbdsGraph> groups;
    for (const auto& path : in_paths)
      groups.push_back(parse_erbds_graph(read_file(path)));
    CspInstance inst = gen_degree_d_composition(groups, mod, d);
    write_file(out_path, serialize_pcsp(inst));
    std::cout << "variables: " << inst.n_vars() << " constraints: " << inst.size()
              << "\n";
    return kExitOk;
  }
  if (construction == "primesat") {
    if (in_paths.size() != 1) throw StructuralError("primesat needs one --in file");
    CnfFormula f = parse_dimacs(read_file(in_paths[0]));
    PrimeSatInstance inst = gen_primesat_from_cnf(f);
    write_file(out_path, serialize_primesat(inst));
    std::cout << "progression: a=" << inst.ap_start << " b=" << inst.ap_step
              << " d=" << inst.ap_length << " variables: " << inst.n_vars << "\n";
    return kExitOk;
  }
  if (construction == "or-poly") {
    MultilinearPoly f = or_polynomial_mod_p(p, d);
    CspInstance inst(f.ring(), f.n_vars(), static_cast<std::uint32_t>(f.degree()),
                     CspMode::AllNonRoot);
    inst.add_nonroot(f);
    write_file(out_path, serialize_pcsp(inst));
    std::cout << "variables: " << f.n_vars() << " terms: " << f.term_count() << "\n";
    return kExitOk;
  }
  throw StructuralError("unknown construction '" + construction + "'");
}

int run_stats(const std::string& in_path) {
  CspInstance inst = parse_pcsp(read_file(in_path));
  std::size_t max_degree = 0;
  std::size_t terms = 0;
  for (const Constraint& c : inst.constraints()) {
    max_degree = std::max(max_degree, c.poly.degree());
    terms += c.poly.term_count();
  }
  std::size_t n = inst.n_vars();
  std::size_t nd1 = 1;
  for (std::uint32_t i = 0; i < inst.degree_bound(); ++i) nd1 *= n;
  nd1 += 1;
  std::cout << "ring: " << inst.ring().to_string() << "\n"
            << "variables: " << n << "\n"
            << "degree bound: " << inst.degree_bound() << "\n"
            << "max degree: " << max_degree << "\n"
            << "constraints: " << inst.size() << "\n"
            << "terms: " << terms << "\n"
            << "bound n^d+1: " << nd1 << "\n";
  if (inst.ring().kind() == RingKind::IntegersMod) {
    std::size_t r = inst.ring().distinct_prime_count();
    std::cout << "bound r(n^d+1): " << r * nd1 << "\n";
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("polycsp");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Polynomial CSP sparsification toolkit"};
  app.require_subcommand(1);

  std::string scheme, method, construction;
  std::string in_path, out_path, a_path, b_path, allowed_csv;
  std::vector<std::string> in_paths;
  std::uint64_t mod = 0, p = 2;
  std::size_t limit = kDefaultOracleLimit;
  std::size_t max_terms = kDefaultTermGuard;
  std::size_t n = 1, d = 1;

  CLI::App* encode = app.add_subcommand("encode", "CNF to polynomial constraints");
  encode->add_option("--scheme", scheme, "exact | nae | cnf-nonroot | gen-sat")
      ->required();
  encode->add_option("--mod", mod, "modulus (omit for Q)");
  encode->add_option("--allowed", allowed_csv,
                     "comma-separated allowed counts (gen-sat)");
  encode->add_option("--in", in_path, "DIMACS input")->required();
  encode->add_option("--out", out_path, "pcsp output")->required();

  CLI::App* sparsify = app.add_subcommand("sparsify", "reduce the constraint count");
  sparsify->add_option("--method", method, "field | howell | subset | nonroot")
      ->required();
  sparsify->add_option("--in", in_path, "pcsp input")->required();
  sparsify->add_option("--out", out_path, "pcsp output")->required();
  sparsify->add_option("--max-terms", max_terms, "term guard for compositions");

  CLI::App* verify = app.add_subcommand("verify", "oracle equivalence of two instances");
  verify->add_option("--a", a_path, "first pcsp file")->required();
  verify->add_option("--b", b_path, "second pcsp file")->required();
  verify->add_option("--limit", limit, "oracle variable limit");

  CLI::App* generate = app.add_subcommand("generate", "hard-instance constructions");
  generate
      ->add_option("--construction", construction,
                   "erbds-cross | tree-gadget | degree-comp | primesat | or-poly")
      ->required();
  generate->add_option("--in", in_paths, "input files (repeatable)");
  generate->add_option("--out", out_path, "output file")->required();
  generate->add_option("--mod", mod, "modulus");
  generate->add_option("--n", n, "variable count (tree-gadget)");
  generate->add_option("--d", d, "degree / progression length");
  generate->add_option("--p", p, "prime modulus (or-poly)");

  CLI::App* stats = app.add_subcommand("stats", "instance summary");
  stats->add_option("--in", in_path, "pcsp input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*encode) return run_encode(scheme, mod, allowed_csv, in_path, out_path);
    if (*sparsify) return run_sparsify(method, in_path, out_path, max_terms);
    if (*verify) return run_verify(a_path, b_path, limit);
    if (*generate)
      return run_generate(construction, in_paths, out_path, mod, n, d, p);
    if (*stats) return run_stats(in_path);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace polycsp
