#include "polycsp/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace polycsp {

namespace {

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

// --- field elimination with tracked combinations -------------------------

struct FieldRow {
  std::vector<Scalar> vec;
  std::vector<Scalar> comb;  // expresses vec over the original rows
  std::size_t pivot = kNoPivot;
};

class FieldEliminator {
 public:
  FieldEliminator(const RingSpec& ring, std::size_t cols, std::size_t n_orig)
      : ring_(ring), cols_(cols), n_orig_(n_orig) {}

  // Reduces v against the echelon rows, accumulating the combination of
  // echelon rows used into out_comb (if given). Returns the pivot column of
  // the residual, or kNoPivot when it vanished.
  std::size_t reduce(std::vector<Scalar>& v, std::vector<Scalar>* out_comb) const {
    for (const FieldRow& e : rows_) {
      if (ring_.is_zero(v[e.pivot])) continue;
      Scalar factor = v[e.pivot];  // echelon pivots are normalized to 1
      for (std::size_t c = e.pivot; c < cols_; ++c)
        v[c] = ring_.sub(v[c], ring_.mul(factor, e.vec[c]));
      if (out_comb)
        for (std::size_t j = 0; j < n_orig_; ++j)
          (*out_comb)[j] = ring_.add((*out_comb)[j], ring_.mul(factor, e.comb[j]));
    }
    for (std::size_t c = 0; c < cols_; ++c)
      if (!ring_.is_zero(v[c])) return c;
    return kNoPivot;
  }

  // Inserts the row if independent; comb must express v over the originals.
  bool insert(std::vector<Scalar> v, std::vector<Scalar> comb) {
    std::vector<Scalar> used(n_orig_, ring_.zero());
    std::size_t pivot = reduce(v, &used);
    if (pivot == kNoPivot) return false;
    // comb(v_reduced) = comb - used
    for (std::size_t j = 0; j < n_orig_; ++j) comb[j] = ring_.sub(comb[j], used[j]);
    Scalar scale = ring_.inv(v[pivot]);
    for (auto& x : v) x = ring_.mul(x, scale);
    for (auto& x : comb) x = ring_.mul(x, scale);
    FieldRow row{std::move(v), std::move(comb), pivot};
    auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), row,
        [](const FieldRow& a, const FieldRow& b) { return a.pivot < b.pivot; });
    rows_.insert(pos, std::move(row));
    return true;
  }

 private:
  const RingSpec& ring_;
  std::size_t cols_, n_orig_;
  std::vector<FieldRow> rows_;
};

// --- Howell builder over Z/mZ with tracked combinations ------------------

struct ModRow {
  std::vector<std::uint64_t> vec;
  std::vector<std::uint64_t> comb;
};

bool all_zero(const std::vector<std::uint64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

class HowellBuilder {
 public:
  HowellBuilder(std::uint64_t m, std::size_t cols, std::size_t n_orig)
      : m_(m), cols_(cols), n_orig_(n_orig) {}

  void add(ModRow row) { queue_.push_back(std::move(row)); }

  void run() {
    while (!queue_.empty()) {
      ModRow v = std::move(queue_.front());
      queue_.pop_front();
      absorb(std::move(v));
    }
    normalize_above_pivots();
  }

  // pivot column -> row; populated after run()
  const std::map<std::size_t, ModRow>& echelon() const { return echelon_; }

 private:
  void scale_into(ModRow& dst, std::uint64_t c, const ModRow& src) {
    for (std::size_t i = 0; i < cols_; ++i)
      dst.vec[i] = (dst.vec[i] + mul_mod(c, src.vec[i], m_)) % m_;
    for (std::size_t i = 0; i < n_orig_; ++i)
      dst.comb[i] = (dst.comb[i] + mul_mod(c, src.comb[i], m_)) % m_;
  }

  ModRow scaled(const ModRow& src, std::uint64_t c) const {
    ModRow out{std::vector<std::uint64_t>(cols_, 0),
               std::vector<std::uint64_t>(n_orig_, 0)};
    for (std::size_t i = 0; i < cols_; ++i) out.vec[i] = mul_mod(c, src.vec[i], m_);
    for (std::size_t i = 0; i < n_orig_; ++i) out.comb[i] = mul_mod(c, src.comb[i], m_);
    return out;
  }

  void enqueue_annihilator_shift(const ModRow& row, std::uint64_t pivot) {
    // (m/pivot)*row has a zero pivot entry but may reach further columns;
    // feeding it back closes the row space downward (the Howell property).
    std::uint64_t shift = m_ / gcd_u64(pivot, m_);
    ModRow s = scaled(row, shift % m_);
    if (!all_zero(s.vec)) queue_.push_back(std::move(s));
  }

  void absorb(ModRow v) {
    for (std::size_t col = 0; col < cols_; ++col) {
      if (v.vec[col] == 0) continue;
      auto it = echelon_.find(col);
      if (it == echelon_.end()) {
        std::uint64_t u = unit_lifting_gcd(v.vec[col], m_);
        ModRow e = scaled(v, u);  // pivot becomes gcd(v[col], m), a divisor of m
        enqueue_annihilator_shift(e, e.vec[col]);
        echelon_.emplace(col, std::move(e));
        return;
      }
      ModRow& e = it->second;
      std::uint64_t p = e.vec[col];
      std::uint64_t b = v.vec[col];
      if (b % p == 0) {
        std::uint64_t q = (b / p) % m_;
        ModRow neg = scaled(e, (m_ - q) % m_);
        scale_into(v, 1, neg);
        assert(v.vec[col] == 0);
        continue;
      }
      // Unimodular 2x2 combine: the pivot refines to gcd(p, b).
      XgcdResult x = xgcd_u64(p, b);
      std::uint64_t g = x.g;
      auto to_res = [&](std::int64_t z) {
        std::int64_t r = z % static_cast<std::int64_t>(m_);
        if (r < 0) r += static_cast<std::int64_t>(m_);
        return static_cast<std::uint64_t>(r);
      };
      ModRow new_e = scaled(e, to_res(x.x));
      scale_into(new_e, to_res(x.y), v);
      ModRow new_v = scaled(v, (p / g) % m_);
      scale_into(new_v, (m_ - (b / g) % m_) % m_, e);
      assert(new_e.vec[col] == g % m_);
      assert(new_v.vec[col] == 0);
      enqueue_annihilator_shift(new_e, g);
      e = std::move(new_e);
      v = std::move(new_v);
    }
    // Fully reduced; anything left is a relation among originals, not a row.
  }

  void normalize_above_pivots() {
    for (auto it = echelon_.begin(); it != echelon_.end(); ++it) {
      std::size_t col = it->first;
      std::uint64_t pivot = it->second.vec[col];
      for (auto above = echelon_.begin(); above != it; ++above) {
        std::uint64_t entry = above->second.vec[col];
        std::uint64_t q = entry / pivot;
        if (q == 0) continue;
        ModRow neg = scaled(it->second, (m_ - q % m_) % m_);
        scale_into(above->second, 1, neg);
      }
    }
  }

  std::uint64_t m_;
  std::size_t cols_, n_orig_;
  std::map<std::size_t, ModRow> echelon_;
  std::deque<ModRow> queue_;
};

std::vector<std::vector<std::uint64_t>> residue_rows(const RingMatrix& a) {
  std::vector<std::vector<std::uint64_t>> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    rows[r].resize(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a.at(r, c).residue();
  }
  return rows;
}

HowellBuilder build_howell(const RingMatrix& a, bool track) {
  std::uint64_t m = a.ring().modulus();
  HowellBuilder builder(m, a.cols(), track ? a.rows() : 0);
  auto rows = residue_rows(a);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    ModRow row{std::move(rows[r]), std::vector<std::uint64_t>(track ? a.rows() : 0, 0)};
    if (track) row.comb[r] = 1 % m;
    builder.add(std::move(row));
  }
  builder.run();
  return builder;
}

// Extended Euclid folded left to right; zeros are tolerated here (the
// public bezout() validates positivity separately).
BezoutResult bezout_fold(const std::vector<BigInt>& values) {
  BezoutResult out;
  out.g = values[0];
  out.coefficients = {BigInt(1)};
  for (std::size_t i = 1; i < values.size(); ++i) {
    BigInt a = out.g, b = values[i];
    BigInt old_x = 1, x = 0, old_y = 0, y = 1;
    while (b != 0) {
      BigInt q = a / b;
      BigInt t = a - q * b;
      a = b;
      b = t;
      t = old_x - q * x;
      old_x = x;
      x = t;
      t = old_y - q * y;
      old_y = y;
      y = t;
    }
    for (BigInt& c : out.coefficients) c *= old_x;
    out.coefficients.push_back(old_y);
    out.g = a;
  }
  return out;
}

}  // namespace

std::vector<std::size_t> row_basis_subset_field(const RingMatrix& a) {
  if (!a.ring().is_field())
    throw StructuralError("row_basis_subset_field needs a field ring");
  FieldEliminator elim(a.ring(), a.cols(), 0);
  std::vector<std::size_t> selected;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (elim.insert(a.row(r), {})) selected.push_back(r);
  return selected;
}

HowellResult howell_form(const RingMatrix& a) {
  if (a.ring().kind() != RingKind::IntegersMod)
    throw StructuralError("howell_form is defined over Z/mZ");
  HowellBuilder builder = build_howell(a, /*track=*/false);
  const auto& echelon = builder.echelon();
  RingMatrix h(a.ring(), echelon.size(), a.cols());
  std::size_t r = 0;
  for (const auto& [col, row] : echelon) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      h.set(r, c, a.ring().from_residue(row.vec[c]));
    ++r;
  }
  return {std::move(h), r};
}

std::optional<std::vector<Scalar>> row_space_member(const RingMatrix& a,
                                                    const std::vector<Scalar>& v) {
  if (v.size() != a.cols()) throw StructuralError("vector length mismatch");
  const RingSpec& ring = a.ring();
  if (ring.is_field() && ring.kind() == RingKind::Rationals) {
    FieldEliminator elim(ring, a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::vector<Scalar> comb(a.rows(), ring.zero());
      comb[r] = ring.one();
      elim.insert(a.row(r), std::move(comb));
    }
    std::vector<Scalar> res = v;
    std::vector<Scalar> used(a.rows(), ring.zero());
    if (elim.reduce(res, &used) != kNoPivot) return std::nullopt;
    return used;
  }
  // Z/mZ (prime or not): reduce against the tracked Howell form. Divisibility
  // by the pivot at every pivot column is exactly membership.
  std::uint64_t m = ring.modulus();
  HowellBuilder builder = build_howell(a, /*track=*/true);
  const auto& echelon = builder.echelon();
  std::vector<std::uint64_t> res(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) res[c] = v[c].residue();
  std::vector<std::uint64_t> used(a.rows(), 0);
  for (std::size_t col = 0; col < a.cols(); ++col) {
    if (res[col] == 0) continue;
    auto it = echelon.find(col);
    if (it == echelon.end()) return std::nullopt;
    std::uint64_t pivot = it->second.vec[col];
    if (res[col] % pivot != 0) return std::nullopt;
    std::uint64_t q = (res[col] / pivot) % m;
    for (std::size_t c2 = col; c2 < a.cols(); ++c2) {
      std::uint64_t sub = mul_mod(q, it->second.vec[c2], m);
      res[c2] = (res[c2] + m - sub) % m;
    }
    for (std::size_t j = 0; j < a.rows(); ++j)
      used[j] = (used[j] + mul_mod(q, it->second.comb[j], m)) % m;
  }
  if (!all_zero(res)) return std::nullopt;
  std::vector<Scalar> out(a.rows(), ring.zero());
  for (std::size_t j = 0; j < a.rows(); ++j) out[j] = ring.from_residue(used[j]);
  return out;
}

int valuation_nu(std::uint64_t a, std::uint64_t p, std::uint64_t m) {
  if (p < 2 || m < 2 || m % p != 0)
    throw StructuralError("valuation prime must divide the modulus");
  if (a >= m) throw StructuralError("residue out of range for valuation");
  int cap = 0;
  std::uint64_t t = m;
  while (t % p == 0) {
    t /= p;
    ++cap;
  }
  if (a == 0) return cap;  // zero is divisible by everything; cap at m's valuation
  int k = 0;
  while (a % p == 0 && k < cap) {
    a /= p;
    ++k;
  }
  return k;
}

BezoutResult bezout(const std::vector<BigInt>& values) {
  if (values.empty()) throw StructuralError("bezout needs a nonempty list");
  for (const BigInt& v : values)
    if (v <= 0) throw StructuralError("bezout values must be positive");
  return bezout_fold(values);
}

SpanningCertificate spanning_subset_modm(const std::vector<std::uint64_t>& elems,
                                         std::uint64_t m) {
  if (elems.empty()) throw StructuralError("spanning_subset_modm needs a nonempty set");
  RingSpec ring = RingSpec::integers_mod(m);
  for (std::uint64_t e : elems)
    if (e >= m) throw StructuralError("element out of range mod m");

  SpanningCertificate cert;
  std::set<std::size_t> chosen_set;
  for (const auto& [p, mult] : ring.prime_factors()) {
    (void)mult;
    std::size_t best = 0;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      int vi = valuation_nu(elems[i], p, m);
      int vb = valuation_nu(elems[best], p, m);
      if (vi < vb || (vi == vb && elems[i] < elems[best])) best = i;
    }
    chosen_set.insert(best);
  }
  cert.chosen.assign(chosen_set.begin(), chosen_set.end());

  // gcd(m, S') and one Bezout expansion serve every non-chosen element.
  std::vector<BigInt> values = {BigInt(m)};
  for (std::size_t idx : cert.chosen) values.emplace_back(elems[idx]);
  BezoutResult bz = bezout_fold(values);
  const BigInt& g = bz.g;

  BigInt big_m(m);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (chosen_set.count(i)) continue;
    BigInt b(elems[i]);
    if (g != 0 && b % g != 0)
      throw StructuralError("spanning invariant violated: gcd does not divide element");
    BigInt scale = (g == 0) ? BigInt(0) : BigInt(b / g);
    std::vector<Scalar> coeffs;
    coeffs.reserve(cert.chosen.size());
    std::uint64_t check = 0;
    for (std::size_t j = 0; j < cert.chosen.size(); ++j) {
      BigInt c = (scale * bz.coefficients[j + 1]) % big_m;
      if (c < 0) c += big_m;
      std::uint64_t cu = static_cast<std::uint64_t>(c);
      coeffs.push_back(ring.from_residue(cu));
      check = (check + mul_mod(cu, elems[cert.chosen[j]], m)) % m;
    }
    if (check != elems[i])
      throw StructuralError("spanning certificate failed to reproduce element");
    cert.combinations.emplace(i, std::move(coeffs));
  }
  return cert;
}

SpanningCertificate row_spanning_subset_modm(const RingMatrix& a) {
  if (a.ring().kind() != RingKind::IntegersMod)
    throw StructuralError("row_spanning_subset_modm is defined over Z/mZ");
  std::uint64_t m = a.ring().modulus();
  auto work = residue_rows(a);
  std::vector<std::size_t> alive(a.rows());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  std::set<std::size_t> chosen_set;
  while (!alive.empty()) {
    // First column still holding a nonzero among the alive rows.
    std::size_t col = kNoPivot;
    for (std::size_t c = 0; c < a.cols() && col == kNoPivot; ++c)
      for (std::size_t i : alive)
        if (work[i][c] != 0) {
          col = c;
          break;
        }
    if (col == kNoPivot) break;

    std::vector<std::uint64_t> values;  // distinct nonzero entries, ascending
    for (std::size_t i : alive)
      if (work[i][col] != 0) values.push_back(work[i][col]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    SpanningCertificate col_cert = spanning_subset_modm(values, m);

    // Representative row per chosen value: the lowest original index.
    std::vector<std::size_t> rep_rows;
    std::vector<std::vector<std::uint64_t>> rep_vecs;
    std::vector<std::uint64_t> rep_values;
    for (std::size_t vi : col_cert.chosen) {
      std::uint64_t value = values[vi];
      std::size_t rep = kNoPivot;
      for (std::size_t i : alive)
        if (work[i][col] == value) {
          rep = i;
          break;
        }
      rep_rows.push_back(rep);
      rep_vecs.push_back(work[rep]);
      rep_values.push_back(value);
      chosen_set.insert(rep);
    }

    std::vector<std::size_t> next_alive;
    for (std::size_t i : alive) {
      if (std::find(rep_rows.begin(), rep_rows.end(), i) != rep_rows.end()) continue;
      std::uint64_t e = work[i][col];
      if (e != 0) {
        std::vector<std::uint64_t> coeffs(rep_rows.size(), 0);
        auto chosen_pos = std::find(rep_values.begin(), rep_values.end(), e);
        if (chosen_pos != rep_values.end()) {
          coeffs[static_cast<std::size_t>(chosen_pos - rep_values.begin())] = 1 % m;
        } else {
          std::size_t value_idx =
              static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), e) -
                                       values.begin());
          const auto& combo = col_cert.combinations.at(value_idx);
          for (std::size_t j = 0; j < combo.size(); ++j) coeffs[j] = combo[j].residue();
        }
        for (std::size_t j = 0; j < rep_vecs.size(); ++j) {
          if (coeffs[j] == 0) continue;
          for (std::size_t c = 0; c < a.cols(); ++c) {
            std::uint64_t sub = mul_mod(coeffs[j], rep_vecs[j][c], m);
            work[i][c] = (work[i][c] + m - sub) % m;
          }
        }
        assert(work[i][col] == 0);
      }
      next_alive.push_back(i);
    }
    alive = std::move(next_alive);
  }

  SpanningCertificate cert;
  cert.chosen.assign(chosen_set.begin(), chosen_set.end());

  RingMatrix chosen_matrix(a.ring(), cert.chosen.size(), a.cols());
  for (std::size_t i = 0; i < cert.chosen.size(); ++i)
    for (std::size_t c = 0; c < a.cols(); ++c)
      chosen_matrix.set(i, c, a.at(cert.chosen[i], c));

  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (chosen_set.count(i)) continue;
    auto combo = row_space_member(chosen_matrix, a.row(i));
    if (!combo)
      throw StructuralError("row spanning invariant violated: row not reproducible");
    cert.combinations.emplace(i, std::move(*combo));
  }
  return cert;
}

}  // namespace polycsp
