#include "polycsp/generate.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace polycsp {

namespace {

std::string idx(std::size_t i) { return "[" + std::to_string(i) + "]"; }

std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Minimal GF(p)[t] arithmetic for the norm construction below. Polynomials
// are coefficient vectors, index = power, trailing zeros trimmed.
namespace gf {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

// Remainder of a modulo a monic divisor.
Poly mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  while (a.size() >= f.size()) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::uint64_t sub = mul_mod(lead, f[i], p);
      a[i + shift] = (a[i + shift] + p - sub) % p;
    }
    trim(a);
  }
  return a;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
  trim(out);
  return out;
}

bool divides(const Poly& g, const Poly& f, std::uint64_t p) {
  // g monic; true when g | f.
  return mod(f, g, p).empty();
}

// Smallest monic irreducible of the given degree, by trial division against
// every monic polynomial of degree up to half the target.
Poly find_irreducible(std::uint64_t p, std::size_t degree) {
  if (degree == 1) return {0, 1};  // t itself
  std::vector<Poly> divisors;
  for (std::size_t deg = 1; 2 * deg <= degree; ++deg) {
    std::vector<std::uint64_t> coeffs(deg, 0);
    while (true) {
      Poly g(coeffs.begin(), coeffs.end());
      g.push_back(1);
      divisors.push_back(std::move(g));
      std::size_t i = 0;
      while (i < deg && ++coeffs[i] == p) coeffs[i++] = 0;
      if (i == deg) break;
    }
  }
  std::vector<std::uint64_t> coeffs(degree, 0);
  while (true) {
    Poly f(coeffs.begin(), coeffs.end());
    f.push_back(1);
    bool irreducible = true;
    for (const Poly& g : divisors)
      if (divides(g, f, p)) {
        irreducible = false;
        break;
      }
    if (irreducible) return f;
    std::size_t i = 0;
    while (i < degree && ++coeffs[i] == p) coeffs[i++] = 0;
    if (i == degree)
      throw StructuralError("no irreducible polynomial found");  // unreachable
  }
}

Poly pow_p(const Poly& a, std::uint64_t p, const Poly& f) {
  // a^p mod f by square and multiply.
  Poly result = {1};
  Poly base = a;
  std::uint64_t e = p;
  while (e) {
    if (e & 1) result = mod(mul(result, base, p), f, p);
    base = mod(mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

}  // namespace gf

}  // namespace

void RbdsInstance::validate() const {
  if (k > n_red) throw StructuralError("budget k exceeds the red vertex count");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [r, b] : edges) {
    if (r >= n_red || b >= n_blue)
      throw StructuralError("edge endpoint out of range");
    if (!seen.insert({r, b}).second) throw StructuralError("duplicate edge");
  }
}

std::vector<std::vector<std::size_t>> RbdsInstance::blue_adjacency() const {
  std::vector<std::vector<std::size_t>> adj(n_blue);
  for (const auto& [r, b] : edges) adj[b].push_back(r);
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

ErbdsGraph gen_erbds_cross(const std::vector<RbdsInstance>& inputs_in) {
  if (inputs_in.empty()) throw StructuralError("no input instances");
  std::vector<RbdsInstance> inputs = inputs_in;
  for (const RbdsInstance& g : inputs) {
    g.validate();
    if (g.n_red != inputs[0].n_red || g.n_blue != inputs[0].n_blue ||
        g.k != inputs[0].k)
      throw StructuralError("inputs must share red count, blue count and budget");
  }
  // Pad to a perfect square by duplicating the first input.
  std::size_t side = 1;
  while (side * side < inputs.size()) ++side;
  while (inputs.size() < side * side) inputs.push_back(inputs[0]);

  const std::size_t s = side;
  const std::size_t k = inputs[0].k;
  const std::size_t m_red = inputs[0].n_red;
  const std::size_t m_blue = inputs[0].n_blue;
  if (k == 0) throw StructuralError("budget k must be positive");

  ErbdsGraph g;
  g.t = s * s;
  g.k = k;
  g.m_red = m_red;
  g.m_blue = m_blue;

  std::map<std::string, std::size_t> red_index;
  auto add_red = [&](const std::string& label) {
    red_index.emplace(label, g.red_labels.size());
    g.red_labels.push_back(label);
  };
  auto add_blue = [&](const std::string& label, bool exempt) {
    g.blue_labels.push_back(label);
    g.blue_adj.emplace_back();
    g.blue_exempt.push_back(exempt);
    return g.blue_labels.size() - 1;
  };

  // Red vertices: the U grid, the instance-column selectors Z, the gadget
  // vertices, and the gadget disablers Y.
  for (std::size_t l = 1; l <= s; ++l)
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 1; j <= m_red; ++j)
        add_red("u" + idx(l) + idx(i) + idx(j));
  for (std::size_t j = 1; j <= s; ++j) add_red("z" + idx(j));
  for (std::size_t l = 1; l <= s; ++l)
    for (std::size_t x = 1; x <= k + 1; ++x)
      for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= m_blue; ++j)
          add_red("a" + idx(l) + idx(x) + idx(i) + idx(j));
  for (std::size_t l = 1; l <= s; ++l) add_red("y" + idx(l));

  auto red_at = [&](const std::string& label) { return red_index.at(label); };
  auto u_of = [&](std::size_t l, std::size_t i, std::size_t j) {
    return red_at("u" + idx(l) + idx(i) + idx(j));
  };

  std::vector<std::vector<std::vector<std::size_t>>> input_adj;  // [l][l'] -> blue adj
  input_adj.reserve(inputs.size());
  for (const RbdsInstance& inst : inputs) input_adj.push_back(inst.blue_adjacency());
  auto instance_at = [&](std::size_t l, std::size_t lp) -> const auto& {
    return input_adj[(l - 1) * s + (lp - 1)];
  };

  // Blue grid V (the exempt set): v[l'][i][j'] sees u[l][i][j] whenever red j
  // and blue j' are adjacent in input X_{l,l'}.
  for (std::size_t lp = 1; lp <= s; ++lp)
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t jp = 1; jp <= m_blue; ++jp) {
        std::size_t b = add_blue("v" + idx(lp) + idx(i) + idx(jp), true);
        for (std::size_t l = 1; l <= s; ++l)
          for (std::size_t j : instance_at(l, lp)[jp - 1])
            g.blue_adj[b].push_back(u_of(l, i, j + 1));
        // Gadget reds serving this blue: vertex a[l'][i][q][j'] of gadget
        // c^{l'}_{q,j'} is wired to v^{l'}_{i,j'} for every gadget row q.
        for (std::size_t q = 1; q <= k; ++q)
          g.blue_adj[b].push_back(red_at("a" + idx(lp) + idx(i) + idx(q) + idx(jp)));
      }

  // Row selectors W: one element per U row across all grids.
  for (std::size_t i = 1; i <= k; ++i) {
    std::size_t b = add_blue("w" + idx(i), false);
    for (std::size_t l = 1; l <= s; ++l)
      for (std::size_t j = 1; j <= m_red; ++j)
        g.blue_adj[b].push_back(u_of(l, i, j));
  }

  // Row-uniqueness vertices D, wired to their U row and to the foreign
  // column selectors.
  for (std::size_t l = 1; l <= s; ++l)
    for (std::size_t i = 1; i <= k; ++i) {
      std::size_t b = add_blue("d" + idx(l) + idx(i), false);
      for (std::size_t j = 1; j <= m_red; ++j)
        g.blue_adj[b].push_back(u_of(l, i, j));
      for (std::size_t j = 1; j <= s; ++j)
        if (j != l) g.blue_adj[b].push_back(red_at("z" + idx(j)));
    }

  // Instance-column selector: s sees all of Z.
  {
    std::size_t b = add_blue("s", false);
    for (std::size_t j = 1; j <= s; ++j)
      g.blue_adj[b].push_back(red_at("z" + idx(j)));
  }

  // Gadget blues: each sees its k+1 gadget reds; the first gadget row of
  // grid l is additionally covered by y[l].
  for (std::size_t l = 1; l <= s; ++l)
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 1; j <= m_blue; ++j) {
        std::size_t b = add_blue("b" + idx(l) + idx(i) + idx(j), false);
        for (std::size_t x = 1; x <= k + 1; ++x)
          g.blue_adj[b].push_back(red_at("a" + idx(l) + idx(x) + idx(i) + idx(j)));
        if (i == 1) g.blue_adj[b].push_back(red_at("y" + idx(l)));
      }

  // Gadget disabler selector: s' sees all of Y.
  {
    std::size_t b = add_blue("s'", false);
    for (std::size_t l = 1; l <= s; ++l)
      g.blue_adj[b].push_back(red_at("y" + idx(l)));
  }

  for (auto& adj : g.blue_adj) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

std::optional<std::vector<std::size_t>> solve_rbds(const RbdsInstance& g,
                                                   std::size_t limit) {
  g.validate();
  if (g.n_red > limit)
    throw ResourceError("rbds enumeration limit exceeded: " +
                        std::to_string(g.n_red) + " red vertices");
  auto adj = g.blue_adjacency();
  std::vector<std::uint64_t> blue_masks(g.n_blue, 0);
  for (std::size_t b = 0; b < g.n_blue; ++b)
    for (std::size_t r : adj[b]) blue_masks[b] |= std::uint64_t{1} << r;

  std::optional<std::uint64_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n_red); ++mask) {
    if (std::popcount(mask) > static_cast<int>(g.k)) continue;
    bool ok = true;
    for (std::uint64_t bm : blue_masks)
      if ((bm & mask) == 0) {
        ok = false;
        break;
      }
    if (ok && (!best || std::popcount(mask) < std::popcount(*best))) best = mask;
  }
  if (!best) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < g.n_red; ++r)
    if (*best >> r & 1) out.push_back(r);
  return out;
}

std::optional<std::vector<std::size_t>> solve_semi_erbds(
    const ErbdsGraph& g, const std::vector<bool>& exempt, std::size_t limit) {
  if (exempt.size() != g.blue_labels.size())
    throw StructuralError("exempt flag count must match the blue count");
  std::size_t n_red = g.red_labels.size();
  if (n_red > limit || n_red > 63)
    throw ResourceError("exact-domination enumeration limit exceeded: " +
                        std::to_string(n_red) + " red vertices");
  std::size_t n_blue = g.blue_labels.size();
  std::vector<std::uint64_t> blue_masks(n_blue, 0);
  for (std::size_t b = 0; b < n_blue; ++b)
    for (std::size_t r : g.blue_adj[b]) blue_masks[b] |= std::uint64_t{1} << r;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_red); ++mask) {
    bool ok = true;
    for (std::size_t b = 0; b < n_blue; ++b) {
      int covered = std::popcount(blue_masks[b] & mask);
      if (exempt[b] ? covered < 1 : covered != 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<std::size_t> out;
      for (std::size_t r = 0; r < n_red; ++r)
        if (mask >> r & 1) out.push_back(r);
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> solve_erbds(const ErbdsGraph& g,
                                                    std::size_t limit) {
  return solve_semi_erbds(g, std::vector<bool>(g.blue_labels.size(), false), limit);
}

CspInstance erbds_to_csp(const ErbdsGraph& g, const RingSpec& ring) {
  if (!ring.is_field()) throw StructuralError("erbds_to_csp needs a field ring");
  auto n = static_cast<std::uint32_t>(g.red_labels.size());
  CspInstance out(ring, n, 1, CspMode::AllRoot);
  for (const auto& adj : g.blue_adj) {
    MultilinearPoly poly(ring, n);
    for (std::size_t r : adj)
      poly.add_term(Monomial::variable(static_cast<std::uint32_t>(r)), ring.one());
    poly.add_term(Monomial::constant(), ring.neg(ring.one()));
    out.add_root(std::move(poly));
  }
  return out;
}

ModLinearSystem gen_tree_gadget(std::size_t n, std::uint64_t m) {
  if (n == 0) throw StructuralError("need at least one variable");
  if (m < 3)
    throw StructuralError(
        "tree gadget needs modulus >= 3; counters wrap mod 2");
  std::size_t leaves = 1;
  while (leaves < n) leaves *= 2;

  // Variable layout: originals, then dummy leaves, then internal counters in
  // heap order (node 1 is the root; leaves occupy heap slots leaves..2*leaves-1).
  std::size_t dummy_leaves = leaves - n;
  std::size_t internal = leaves >= 2 ? leaves - 1 : 0;
  auto total = static_cast<std::uint32_t>(n + dummy_leaves + internal);

  auto var_of_heap = [&](std::size_t h) -> std::uint32_t {
    if (h >= leaves) {
      std::size_t leaf = h - leaves;
      return static_cast<std::uint32_t>(leaf < n ? leaf : n + (leaf - n));
    }
    return static_cast<std::uint32_t>(n + dummy_leaves + (h - 1));
  };

  RingSpec ring = RingSpec::integers_mod(m);
  CspInstance system(ring, total, 1, CspMode::AllRoot);

  MultilinearPoly sum(ring, total);
  for (std::size_t i = 0; i < n; ++i)
    sum.add_term(Monomial::variable(static_cast<std::uint32_t>(i)), ring.one());
  sum.add_term(Monomial::constant(), ring.neg(ring.one()));
  system.add_root(std::move(sum));

  for (std::size_t h = 1; h < leaves; ++h) {
    MultilinearPoly node(ring, total);
    node.add_term(Monomial::variable(var_of_heap(2 * h)), ring.one());
    node.add_term(Monomial::variable(var_of_heap(2 * h + 1)), ring.one());
    node.add_term(Monomial::variable(var_of_heap(h)), ring.neg(ring.one()));
    system.add_root(std::move(node));
  }
  return {m, n, std::move(system)};
}

CspInstance gen_degree_d_composition(const std::vector<ErbdsGraph>& groups,
                                     std::uint64_t m, std::size_t d) {
  if (d < 2) throw StructuralError("composition needs degree at least 2");
  if (groups.empty()) throw StructuralError("no group graphs");
  for (const ErbdsGraph& g : groups) {
    if (g.red_labels != groups[0].red_labels ||
        g.blue_labels != groups[0].blue_labels ||
        g.blue_exempt != groups[0].blue_exempt)
      throw StructuralError("group graphs must share vertex labels and exempt set");
  }
  // groups.size() must be r^(d-1) for the selector grid.
  std::size_t r = 1;
  while (true) {
    std::size_t power = 1;
    bool overflow = false;
    for (std::size_t i = 0; i + 1 < d; ++i) {
      power *= r;
      if (power > groups.size()) {
        overflow = true;
        break;
      }
    }
    if (!overflow && power == groups.size()) break;
    if (overflow) throw StructuralError("group count is not a perfect (d-1)-th power");
    ++r;
  }

  const std::size_t n_red = groups[0].red_labels.size();
  auto n_vars = static_cast<std::uint32_t>(n_red + (d - 1) * r);
  RingSpec ring = RingSpec::integers_mod(m);
  CspInstance out(ring, n_vars, static_cast<std::uint32_t>(d), CspMode::AllRoot);

  auto selector_var = [&](std::size_t z, std::size_t j) {  // z in [1,d-1], j in [1,r]
    return static_cast<std::uint32_t>(n_red + (z - 1) * r + (j - 1));
  };

  // One selector per level must fire.
  for (std::size_t z = 1; z <= d - 1; ++z) {
    MultilinearPoly sum(ring, n_vars);
    for (std::size_t j = 1; j <= r; ++j)
      sum.add_term(Monomial::variable(selector_var(z, j)), ring.one());
    sum.add_term(Monomial::constant(), ring.neg(ring.one()));
    out.add_root(std::move(sum));
  }

  // Domination equations, gated per graph by its selector product.
  for (std::size_t flat = 0; flat < groups.size(); ++flat) {
    std::vector<std::uint32_t> selector_vars;
    std::size_t rest = flat;
    for (std::size_t z = d - 1; z >= 1; --z) {
      selector_vars.push_back(selector_var(z, rest % r + 1));
      rest /= r;
    }
    std::sort(selector_vars.begin(), selector_vars.end());
    Monomial gate(selector_vars);

    for (const auto& adj : groups[flat].blue_adj) {
      MultilinearPoly eq(ring, n_vars);
      for (std::size_t x : adj)
        eq.add_term(gate.merged_with(Monomial::variable(static_cast<std::uint32_t>(x))),
                    ring.one());
      eq.add_term(gate, ring.neg(ring.one()));
      out.add_root(std::move(eq));
    }
  }

  // Exactness pairs for non-exempt blues; neighborhoods agree across groups,
  // so one copy per blue suffices.
  const ErbdsGraph& base = groups[0];
  for (std::size_t b = 0; b < base.blue_labels.size(); ++b) {
    if (base.blue_exempt[b]) continue;
    const auto& adj = base.blue_adj[b];
    for (std::size_t i = 0; i < adj.size(); ++i)
      for (std::size_t j = i + 1; j < adj.size(); ++j) {
        MultilinearPoly pair(ring, n_vars);
        pair.add_term(Monomial({static_cast<std::uint32_t>(adj[i]),
                                static_cast<std::uint32_t>(adj[j])}),
                      ring.one());
        out.add_root(std::move(pair));
      }
  }
  return out;
}

MultilinearPoly or_polynomial_mod_p(std::uint64_t p, std::size_t d) {
  if (d == 0) throw StructuralError("degree must be positive");
  if (p < 2 || d * (p - 1) > 20)
    throw ResourceError("exhaustive verification needs 2^(d(p-1)) <= 2^20 inputs");
  if (!is_prime_u64(p)) throw StructuralError("modulus must be prime");
  std::size_t n = d * (p - 1);
  RingSpec ring = RingSpec::integers_mod(p);
  auto n_vars = static_cast<std::uint32_t>(n);

  auto verify = [&](const MultilinearPoly& f) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      Assignment a(n);
      for (std::size_t j = 0; j < n; ++j) a[j] = (bits >> j) & 1;
      bool nonzero = !ring.is_zero(poly_eval(f, a));
      if (nonzero != (bits != 0)) return false;
    }
    return true;
  };

  // Symmetric ansatz: sum of elementary symmetric polynomials e_1..e_d with
  // coefficients c; the value on a weight-w input is sum_i c_i * C(w, i).
  {
    std::vector<std::uint64_t> c(d, 0);
    auto advance = [&]() {
      for (std::size_t i = d; i-- > 0;) {
        if (++c[i] < p) return true;
        c[i] = 0;
      }
      return false;
    };
    while (advance()) {
      bool ok = true;
      for (std::size_t w = 1; w <= n && ok; ++w) {
        std::uint64_t value = 0;
        for (std::size_t i = 1; i <= d; ++i)
          value = (value + mul_mod(c[i - 1] % p, binom_u64(w, i) % p, p)) % p;
        ok = value != 0;
      }
      if (!ok) continue;
      MultilinearPoly f(ring, n_vars);
      for (std::size_t deg = 1; deg <= d; ++deg) {
        if (c[deg - 1] == 0) continue;
        // all degree-`deg` monomials
        std::vector<std::uint32_t> combo(deg);
        for (std::size_t i = 0; i < deg; ++i) combo[i] = static_cast<std::uint32_t>(i);
        while (true) {
          f.add_term(Monomial(combo), ring.from_residue(c[deg - 1]));
          std::size_t i = deg;
          while (i-- > 0) {
            if (combo[i] + (deg - i) < n) {
              ++combo[i];
              for (std::size_t j = i + 1; j < deg; ++j) combo[j] = combo[j - 1] + 1;
              break;
            }
            if (i == 0) goto next_degree;
          }
        }
      next_degree:;
      }
      if (verify(f)) return f;
    }
  }

  // Norm construction. Group the variables into d blocks of p-1; the block
  // sums never wrap mod p, so (s_1, ..., s_d) vanishes exactly on the zero
  // input. Read that vector as an element of GF(p^d) and take its field
  // norm: a product of the d Frobenius conjugates of one linear form, hence
  // degree d, zero exactly when the element is zero, with coefficients that
  // collapse into GF(p).
  {
    gf::Poly irreducible = gf::find_irreducible(p, d);
    // conjugates[k][j] = (t^j)^(p^k) mod the irreducible
    std::vector<std::vector<gf::Poly>> conjugates(d, std::vector<gf::Poly>(d));
    for (std::size_t j = 0; j < d; ++j) {
      gf::Poly basis(j + 1, 0);
      basis[j] = 1;
      gf::Poly image = gf::mod(basis, irreducible, p);
      for (std::size_t k = 0; k < d; ++k) {
        conjugates[k][j] = image;
        image = gf::pow_p(image, p, irreducible);
      }
    }

    std::map<Monomial, gf::Poly> acc = {{Monomial::constant(), gf::Poly{1}}};
    for (std::size_t k = 0; k < d; ++k) {
      std::map<Monomial, gf::Poly> next;
      for (const auto& [mono, coef] : acc) {
        for (std::size_t j = 0; j < d; ++j) {
          gf::Poly scaled = gf::mod(gf::mul(coef, conjugates[k][j], p),
                                    irreducible, p);
          if (scaled.empty()) continue;
          for (std::size_t i = 0; i < p - 1; ++i) {
            Monomial merged = mono.merged_with(Monomial::variable(
                static_cast<std::uint32_t>(j * (p - 1) + i)));
            auto [it, inserted] = next.emplace(merged, scaled);
            if (!inserted) {
              it->second = gf::add(it->second, scaled, p);
              if (it->second.empty()) next.erase(it);
            }
          }
        }
      }
      acc = std::move(next);
    }

    MultilinearPoly f(ring, n_vars);
    bool in_base_field = true;
    for (const auto& [mono, coef] : acc) {
      if (coef.size() > 1) {
        in_base_field = false;
        break;
      }
      f.add_term(mono, ring.from_residue(coef.empty() ? 0 : coef[0]));
    }
    if (in_base_field && f.degree() <= d && verify(f)) return f;
  }

  throw StructuralError(
      "no degree-" + std::to_string(d) + " polynomial found mod " +
      std::to_string(p) +
      "; both the symmetric search and the norm construction failed");
}

std::pair<std::uint64_t, std::uint64_t> find_prime_ap(std::size_t d) {
  if (d == 0) throw StructuralError("progression length must be positive");
  if (d > 10)
    throw ResourceError("prime progression search is bounded to lengths <= 10");
  constexpr std::uint64_t kMaxStep = 10'000;
  constexpr std::uint64_t kMaxStart = 1'000'000;
  for (std::uint64_t b = 1; b <= kMaxStep; ++b) {
    for (std::uint64_t a = 2; a <= kMaxStart; ++a) {
      bool ok = true;
      for (std::size_t i = 0; i < d && ok; ++i) ok = is_prime_u64(a + i * b);
      if (ok && !is_prime_u64(a + d * b)) return {a, b};
    }
  }
  throw ResourceError("prime progression search bound exceeded");
}

PrimeSatInstance gen_primesat_from_cnf(const CnfFormula& f) {
  validate_cnf(f);
  if (f.clauses.empty()) throw StructuralError("formula has no clauses");
  std::size_t d = f.clauses[0].size();
  for (const auto& clause : f.clauses)
    if (clause.size() != d)
      throw StructuralError("clauses must have uniform size for the reduction");
  if (d == 0) throw StructuralError("clauses must be nonempty");

  auto [a, b] = find_prime_ap(d);
  if (b >= 2 && a < 3)
    throw StructuralError("progression start too small for the copy gadget");

  const std::uint32_t n = f.n_vars;
  PrimeSatInstance out;
  out.n_original = n;
  out.ap_start = a;
  out.ap_step = b;
  out.ap_length = d;
  out.n_vars = static_cast<std::uint32_t>(n * b + a);

  // Copy c of variable v (1-based c; copy 1 is v itself).
  auto copy_var = [&](std::uint32_t v, std::uint64_t c) -> std::uint32_t {
    return c == 1 ? v
                  : static_cast<std::uint32_t>(n + v * (b - 1) + (c - 2));
  };
  auto true_var = [&](std::uint64_t i) -> std::uint32_t {  // 1-based
    return static_cast<std::uint32_t>(n * b + (i - 1));
  };

  // Chain forcing every T to true: two satisfied literals is prime, fewer not.
  for (std::uint64_t i = 1; i + 1 <= a; ++i)
    out.clauses.push_back({{true_var(i), false}, {true_var(i + 1), false}});

  // Tie all copies of a variable together: with the three T's true the count
  // is 3 or 5 exactly when the copies agree.
  if (b >= 2)
    for (std::uint32_t v = 0; v < n; ++v)
      for (std::uint64_t c = 1; c + 1 <= b; ++c)
        out.clauses.push_back({{true_var(1), false},
                               {true_var(2), false},
                               {true_var(3), false},
                               {copy_var(v, c), false},
                               {copy_var(v, c + 1), false}});

  // Main clauses: a forced trues plus b negated copies of every literal, so
  // i satisfied source literals yield a + (d-i)b satisfied literals here.
  for (const auto& clause : f.clauses) {
    std::vector<Literal> big;
    for (std::uint64_t i = 1; i <= a; ++i) big.push_back({true_var(i), false});
    for (const Literal& lit : clause)
      for (std::uint64_t c = 1; c <= b; ++c)
        big.push_back({copy_var(lit.var, c), !lit.negated});
    out.clauses.push_back(std::move(big));
  }
  return out;
}

bool prime_count_satisfies(const PrimeSatInstance& inst, const Assignment& a) {
  if (a.size() != inst.n_vars) throw StructuralError("assignment arity mismatch");
  for (const auto& clause : inst.clauses)
    if (!is_prime_u64(satisfied_literal_count(clause, a))) return false;
  return true;
}

}  // namespace polycsp
