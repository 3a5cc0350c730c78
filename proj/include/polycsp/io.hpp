#pragma once

#include <string>

#include "polycsp/csp.hpp"
#include "polycsp/encode.hpp"
#include "polycsp/generate.hpp"

namespace polycsp {

// Text format for polynomial CSP instances:
//
//   pcsp <Q | Zmod m> <n_vars> <degree_bound> <root | nonroot>
//   [eq0|ne0] coef [v<i>[*v<j>...]] + coef ... one constraint per line
//
// Coefficients are integers, or num/den over Q. Variables are 1-based in
// files. '#' starts a comment line. Zero-coefficient terms are legal and
// canonicalized away; the serializer never emits them.
CspInstance parse_pcsp(const std::string& text);
std::string serialize_pcsp(const CspInstance& inst);

CnfFormula parse_dimacs(const std::string& text);
std::string serialize_dimacs(const CnfFormula& f,
                             const std::string& comment = "");

// "rbds <m_R> <m_B> <k>" header and "e r<i> b<j>" edge lines, 1-based.
RbdsInstance parse_rbds(const std::string& text);
std::string serialize_rbds(const RbdsInstance& g);

// Labeled bipartite graph with the exempt flags:
//
//   erbds <nR> <nB> <t> <k> <mR> <mB>
//   r <label>
//   b <label> <0|1>
//   e <red_index> <blue_index>
ErbdsGraph parse_erbds_graph(const std::string& text);
std::string serialize_erbds_graph(const ErbdsGraph& g);

std::string serialize_primesat(const PrimeSatInstance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace polycsp
