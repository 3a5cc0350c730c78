#include "polycsp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace polycsp {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::uint64_t parse_count(const std::string& tok, std::size_t line_no,
                          const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, 1, std::string("malformed ") + what + " '" + tok + "'");
  return value;
}

long long parse_signed(const std::string& tok, std::size_t line_no,
                       const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, 1, std::string("malformed ") + what + " '" + tok + "'");
  return value;
}

BigInt to_bigint(const std::string& tok) {
  // cpp_int reads a leading zero as an octal prefix; strip the sign and any
  // zero padding before handing the digits over.
  std::size_t start = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  while (start + 1 < tok.size() && tok[start] == '0') ++start;
  BigInt v{tok.substr(start)};
  return tok[0] == '-' ? BigInt(-v) : v;
}

Scalar parse_coefficient(const std::string& tok, const RingSpec& ring,
                         std::size_t line_no) {
  std::size_t slash = tok.find('/');
  if (slash != std::string::npos) {
    if (ring.kind() != RingKind::Rationals)
      throw ParseError(line_no, 1, "fractional coefficient in a modular ring");
    std::string num = tok.substr(0, slash);
    std::string den = tok.substr(slash + 1);
    bool den_unsigned =
        !den.empty() && std::all_of(den.begin(), den.end(),
                                    [](char c) { return c >= '0' && c <= '9'; });
    if (!is_integer_token(num) || !den_unsigned)
      throw ParseError(line_no, 1, "malformed coefficient '" + tok + "'");
    BigInt d = to_bigint(den);
    if (d == 0) throw ParseError(line_no, 1, "zero denominator in '" + tok + "'");
    return ring.from_rational(Rational(to_bigint(num), d));
  }
  if (!is_integer_token(tok))
    throw ParseError(line_no, 1, "malformed coefficient '" + tok + "'");
  if (ring.kind() == RingKind::Rationals)
    return ring.from_rational(Rational(to_bigint(tok)));
  BigInt v = to_bigint(tok);
  BigInt m(ring.modulus());
  BigInt r = v % m;
  if (r < 0) r += m;
  return ring.from_residue(static_cast<std::uint64_t>(r));
}

Monomial parse_monomial(const std::string& tok, std::uint32_t n_vars,
                        std::size_t line_no) {
  std::vector<std::uint32_t> vars;
  std::size_t pos = 0;
  while (pos < tok.size()) {
    if (tok[pos] != 'v')
      throw ParseError(line_no, pos + 1, "expected variable, got '" + tok + "'");
    std::size_t end = pos + 1;
    while (end < tok.size() && tok[end] >= '0' && tok[end] <= '9') ++end;
    if (end == pos + 1)
      throw ParseError(line_no, pos + 1, "missing variable index in '" + tok + "'");
    std::uint64_t v = parse_count(tok.substr(pos + 1, end - pos - 1), line_no,
                                  "variable index");
    if (v == 0) throw ParseError(line_no, pos + 1, "variables are 1-based");
    if (v > n_vars)
      throw ParseError(line_no, pos + 1,
                       "variable v" + std::to_string(v) + " exceeds the declared " +
                           std::to_string(n_vars) + " variables");
    vars.push_back(static_cast<std::uint32_t>(v - 1));
    pos = end;
    if (pos < tok.size()) {
      if (tok[pos] != '*')
        throw ParseError(line_no, pos + 1, "expected '*' in '" + tok + "'");
      ++pos;
    }
  }
  std::vector<std::uint32_t> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParseError(line_no, 1, "repeated variable in monomial '" + tok + "'");
  return Monomial(sorted);
}

}  // namespace

CspInstance parse_pcsp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  // Header.
  RingSpec ring = RingSpec::rationals();
  std::uint32_t n_vars = 0, degree_bound = 0;
  CspMode mode = CspMode::AllRoot;
  bool have_header = false;
  std::vector<std::pair<std::size_t, std::string>> body;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      auto tok = split_ws(line);
      if (tok.empty() || tok[0] != "pcsp")
        throw ParseError(line_no, 1, "expected 'pcsp' header");
      std::size_t at = 1;
      if (at >= tok.size()) throw ParseError(line_no, 1, "missing ring tag");
      if (tok[at] == "Q") {
        ring = RingSpec::rationals();
        ++at;
      } else if (tok[at] == "Zmod") {
        if (at + 1 >= tok.size())
          throw ParseError(line_no, 1, "missing modulus after 'Zmod'");
        if (!is_integer_token(tok[at + 1]))
          throw ParseError(line_no, 1, "malformed modulus '" + tok[at + 1] + "'");
        try {
          ring = RingSpec::integers_mod(parse_count(tok[at + 1], line_no, "modulus"));
        } catch (const StructuralError& e) {
          throw ParseError(line_no, 1, e.what());
        }
        at += 2;
      } else {
        throw ParseError(line_no, 1, "unknown ring tag '" + tok[at] + "'");
      }
      if (at + 3 != tok.size())
        throw ParseError(line_no, 1, "header needs n_vars, degree bound and mode");
      if (!is_integer_token(tok[at]) || !is_integer_token(tok[at + 1]))
        throw ParseError(line_no, 1, "malformed header counts");
      std::uint64_t n_raw = parse_count(tok[at], line_no, "variable count");
      std::uint64_t d_raw = parse_count(tok[at + 1], line_no, "degree bound");
      if (n_raw > 1'000'000 || d_raw > 1'000'000)
        throw ParseError(line_no, 1, "header counts out of range");
      n_vars = static_cast<std::uint32_t>(n_raw);
      degree_bound = static_cast<std::uint32_t>(d_raw);
      if (tok[at + 2] == "root")
        mode = CspMode::AllRoot;
      else if (tok[at + 2] == "nonroot")
        mode = CspMode::AllNonRoot;
      else
        throw ParseError(line_no, 1, "mode must be 'root' or 'nonroot'");
      have_header = true;
      continue;
    }
    body.emplace_back(line_no, line);
  }
  if (!have_header) throw ParseError(1, 1, "missing 'pcsp' header");

  CspInstance inst(ring, n_vars, degree_bound, mode);
  for (const auto& [no, text_line] : body) {
    std::string content = text_line;
    Relation relation =
        mode == CspMode::AllNonRoot ? Relation::NonRootNe0 : Relation::RootEq0;
    auto first = split_ws(content);
    if (!first.empty() && (first[0] == "eq0" || first[0] == "ne0")) {
      Relation tagged = first[0] == "eq0" ? Relation::RootEq0 : Relation::NonRootNe0;
      if ((mode == CspMode::AllRoot && tagged != Relation::RootEq0) ||
          (mode == CspMode::AllNonRoot && tagged != Relation::NonRootNe0))
        throw ParseError(no, 1, "relation tag conflicts with the file mode");
      relation = tagged;
      content = content.substr(content.find(first[0]) + first[0].size());
    }

    MultilinearPoly poly(ring, n_vars);
    // Terms are '+'-separated; signs live inside the coefficients.
    std::size_t start = 0;
    std::vector<std::string> terms;
    while (start <= content.size()) {
      std::size_t plus = content.find('+', start);
      std::string piece = content.substr(
          start, plus == std::string::npos ? std::string::npos : plus - start);
      terms.push_back(piece);
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    for (const std::string& piece : terms) {
      auto tok = split_ws(piece);
      if (tok.empty()) throw ParseError(no, 1, "empty term");
      if (tok.size() > 2) throw ParseError(no, 1, "too many tokens in term");
      Scalar coef = parse_coefficient(tok[0], ring, no);
      Monomial mono =
          tok.size() == 2 ? parse_monomial(tok[1], n_vars, no) : Monomial::constant();
      if (mono.degree() > degree_bound)
        throw ParseError(no, 1, "term degree exceeds the declared bound");
      poly.add_term(mono, coef);
    }
    try {
      inst.add_constraint({std::move(poly), relation});
    } catch (const StructuralError& e) {
      throw ParseError(no, 1, e.what());
    }
  }
  return inst;
}

std::string serialize_pcsp(const CspInstance& inst) {
  std::ostringstream out;
  out << "pcsp " << inst.ring().to_string() << " " << inst.n_vars() << " "
      << inst.degree_bound() << " "
      << (inst.mode() == CspMode::AllNonRoot ? "nonroot" : "root") << "\n";
  if (inst.mode() == CspMode::Mixed)
    throw StructuralError("mixed-mode instances have no file form");
  for (const Constraint& c : inst.constraints()) {
    if (c.poly.is_zero()) {
      out << "0\n";
      continue;
    }
    bool first = true;
    for (const auto& [m, coef] : c.poly.terms()) {
      if (!first) out << " + ";
      first = false;
      out << inst.ring().scalar_to_string(coef);
      if (!m.is_constant()) out << " " << m.to_string();
    }
    out << "\n";
  }
  return out.str();
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  CnfFormula f;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::vector<Literal> current;
  bool in_clause = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "c" || tok[0] == "c%" || tok[0][0] == '%') continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, 1, "duplicate 'p' header");
      if (tok.size() != 4 || tok[1] != "cnf" || !is_integer_token(tok[2]) ||
          !is_integer_token(tok[3]))
        throw ParseError(line_no, 1, "expected 'p cnf <vars> <clauses>'");
      std::uint64_t n_raw = parse_count(tok[2], line_no, "variable count");
      if (n_raw > 1'000'000)
        throw ParseError(line_no, 1, "variable count out of range");
      f.n_vars = static_cast<std::uint32_t>(n_raw);
      declared_clauses = parse_count(tok[3], line_no, "clause count");
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError(line_no, 1, "clause before the 'p cnf' header");
    for (const std::string& t : tok) {
      if (!is_integer_token(t))
        throw ParseError(line_no, 1, "malformed literal '" + t + "'");
      long long lit = parse_signed(t, line_no, "literal");
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
        in_clause = false;
        continue;
      }
      in_clause = true;
      unsigned long long var = static_cast<unsigned long long>(lit < 0 ? -lit : lit);
      if (var > f.n_vars)
        throw ParseError(line_no, 1, "literal " + t + " exceeds the declared " +
                                         std::to_string(f.n_vars) + " variables");
      current.push_back({static_cast<std::uint32_t>(var - 1), lit < 0});
    }
  }
  if (in_clause) throw ParseError(line_no, 1, "unterminated clause");
  if (f.clauses.size() != declared_clauses)
    throw ParseError(line_no, 1,
                     "clause count mismatch: header says " +
                         std::to_string(declared_clauses) + ", found " +
                         std::to_string(f.clauses.size()));
  try {
    validate_cnf(f);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  return f;
}

std::string serialize_dimacs(const CnfFormula& f, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << "\n";
  out << "p cnf " << f.n_vars << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (const Literal& lit : clause)
      out << (lit.negated ? "-" : "") << (lit.var + 1) << " ";
    out << "0\n";
  }
  return out.str();
}

RbdsInstance parse_rbds(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  RbdsInstance g;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "#") continue;
    if (tok[0] == "rbds") {
      if (have_header) throw ParseError(line_no, 1, "duplicate header");
      if (tok.size() != 4 || !is_integer_token(tok[1]) ||
          !is_integer_token(tok[2]) || !is_integer_token(tok[3]))
        throw ParseError(line_no, 1, "expected 'rbds <m_R> <m_B> <k>'");
      g.n_red = parse_count(tok[1], line_no, "red count");
      g.n_blue = parse_count(tok[2], line_no, "blue count");
      g.k = parse_count(tok[3], line_no, "budget");
      have_header = true;
      continue;
    }
    if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, 1, "edge before header");
      if (tok.size() != 3 || tok[1].size() < 2 || tok[2].size() < 2 ||
          tok[1][0] != 'r' || tok[2][0] != 'b' ||
          !is_integer_token(tok[1].substr(1)) || !is_integer_token(tok[2].substr(1)))
        throw ParseError(line_no, 1, "expected 'e r<i> b<j>'");
      std::size_t r = parse_count(tok[1].substr(1), line_no, "red index");
      std::size_t b = parse_count(tok[2].substr(1), line_no, "blue index");
      if (r == 0 || b == 0 || r > g.n_red || b > g.n_blue)
        throw ParseError(line_no, 1, "edge endpoint out of range");
      g.edges.emplace_back(r - 1, b - 1);
      continue;
    }
    throw ParseError(line_no, 1, "unknown line '" + tok[0] + "'");
  }
  if (!have_header) throw ParseError(1, 1, "missing 'rbds' header");
  try {
    g.validate();
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  return g;
}

std::string serialize_rbds(const RbdsInstance& g) {
  std::ostringstream out;
  out << "rbds " << g.n_red << " " << g.n_blue << " " << g.k << "\n";
  for (const auto& [r, b] : g.edges) out << "e r" << (r + 1) << " b" << (b + 1) << "\n";
  return out.str();
}

ErbdsGraph parse_erbds_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  ErbdsGraph g;
  bool have_header = false;
  std::size_t n_red = 0, n_blue = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "#") continue;
    if (tok[0] == "erbds") {
      if (tok.size() != 7)
        throw ParseError(line_no, 1, "expected 'erbds nR nB t k mR mB'");
      n_red = parse_count(tok[1], line_no, "red count");
      n_blue = parse_count(tok[2], line_no, "blue count");
      g.t = parse_count(tok[3], line_no, "instance count");
      g.k = parse_count(tok[4], line_no, "budget");
      g.m_red = parse_count(tok[5], line_no, "input red count");
      g.m_blue = parse_count(tok[6], line_no, "input blue count");
      have_header = true;
    } else if (tok[0] == "r") {
      if (!have_header || tok.size() != 2)
        throw ParseError(line_no, 1, "expected 'r <label>'");
      g.red_labels.push_back(tok[1]);
    } else if (tok[0] == "b") {
      if (!have_header || tok.size() != 3)
        throw ParseError(line_no, 1, "expected 'b <label> <0|1>'");
      g.blue_labels.push_back(tok[1]);
      g.blue_exempt.push_back(tok[2] == "1");
      g.blue_adj.emplace_back();
    } else if (tok[0] == "e") {
      if (!have_header || tok.size() != 3 || !is_integer_token(tok[1]) ||
          !is_integer_token(tok[2]))
        throw ParseError(line_no, 1, "expected 'e <red> <blue>'");
      std::size_t r = parse_count(tok[1], line_no, "red index");
      std::size_t b = parse_count(tok[2], line_no, "blue index");
      if (r == 0 || b == 0 || r > g.red_labels.size() || b > g.blue_labels.size())
        throw ParseError(line_no, 1, "edge endpoint out of range");
      g.blue_adj[b - 1].push_back(r - 1);
    } else {
      throw ParseError(line_no, 1, "unknown line '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError(1, 1, "missing 'erbds' header");
  if (g.red_labels.size() != n_red || g.blue_labels.size() != n_blue)
    throw ParseError(line_no, 1, "vertex count mismatch with header");
  for (auto& adj : g.blue_adj) std::sort(adj.begin(), adj.end());
  return g;
}

std::string serialize_erbds_graph(const ErbdsGraph& g) {
  std::ostringstream out;
  out << "erbds " << g.red_labels.size() << " " << g.blue_labels.size() << " "
      << g.t << " " << g.k << " " << g.m_red << " " << g.m_blue << "\n";
  for (const auto& label : g.red_labels) out << "r " << label << "\n";
  for (std::size_t b = 0; b < g.blue_labels.size(); ++b)
    out << "b " << g.blue_labels[b] << " " << (g.blue_exempt[b] ? 1 : 0) << "\n";
  for (std::size_t b = 0; b < g.blue_adj.size(); ++b)
    for (std::size_t r : g.blue_adj[b]) out << "e " << (r + 1) << " " << (b + 1) << "\n";
  return out.str();
}

std::string serialize_primesat(const PrimeSatInstance& inst) {
  CnfFormula f;
  f.n_vars = inst.n_vars;
  f.clauses = inst.clauses;
  return serialize_dimacs(
      f, "primesat a=" + std::to_string(inst.ap_start) +
             " b=" + std::to_string(inst.ap_step) +
             " d=" + std::to_string(inst.ap_length) +
             " originals=" + std::to_string(inst.n_original));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot open '" + path + "' for writing");
  out << content;
}

}  // namespace polycsp
