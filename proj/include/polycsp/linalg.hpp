#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polycsp/ring.hpp"

namespace polycsp {

// Dense matrix of canonical ring scalars, row-major. Empty dimensions are
// allowed; a 0xC or Rx0 matrix behaves as expected.
class RingMatrix {
 public:
  RingMatrix(RingSpec ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)),
        rows_(rows),
        cols_(cols),
        entries_(rows * cols, ring_.zero()) {}

  const RingSpec& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, const Scalar& v) {
    entries_[r * cols_ + c] = v;
  }

  std::vector<Scalar> row(std::size_t r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  bool operator==(const RingMatrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           entries_ == o.entries_;
  }

 private:
  RingSpec ring_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

// Greedy row-basis selection over a field: a row is kept exactly when it is
// outside the span of the rows kept before it, so the result is a subset of
// the original rows, in order.
std::vector<std::size_t> row_basis_subset_field(const RingMatrix& a);

struct HowellResult {
  RingMatrix h;            // Howell form, zero rows removed
  std::size_t row_count;   // number of (nonzero) rows of h
};

// Canonical Howell form over Z/mZ: same row space as the input, pivots
// divide m, pivot columns strictly increase, entries above a pivot are
// reduced modulo it, and the form is closed under annihilator shifts.
HowellResult howell_form(const RingMatrix& a);

// Coefficients c with c*A = v when v lies in the row space of A, else
// nothing. Works over fields (elimination) and Z/mZ (reduction against a
// combination-tracked Howell form).
std::optional<std::vector<Scalar>> row_space_member(const RingMatrix& a,
                                                    const std::vector<Scalar>& v);

// Largest k with p^k dividing both a and m; by convention the valuation of 0
// is capped at m's own p-valuation. p must divide m and 0 <= a < m.
int valuation_nu(std::uint64_t a, std::uint64_t p, std::uint64_t m);

// Witness that the chosen elements (or rows) span the rest: replaying each
// stored combination over the chosen entries reproduces the non-chosen one.
struct SpanningCertificate {
  std::vector<std::size_t> chosen;  // strictly increasing input indices
  // non-chosen input index -> coefficients aligned with `chosen`
  std::map<std::size_t, std::vector<Scalar>> combinations;
};

// For a set of residues mod m with r distinct prime divisors, picks at most
// r elements spanning the whole set over Z/mZ, by taking a minimizer of the
// p-valuation for each prime divisor p of m.
SpanningCertificate spanning_subset_modm(const std::vector<std::uint64_t>& elems,
                                         std::uint64_t m);

struct BezoutResult {
  BigInt g;
  std::vector<BigInt> coefficients;  // sum coefficients[i]*values[i] == g exactly
};

BezoutResult bezout(const std::vector<BigInt>& values);

// Row variant: at most r*k rows of A spanning its row space over Z/mZ,
// where k counts the columns containing a nonzero. Recursive elimination of
// the first nonzero column through spanning_subset_modm.
SpanningCertificate row_spanning_subset_modm(const RingMatrix& a);

}  // namespace polycsp
