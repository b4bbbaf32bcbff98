#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polarity/field.hpp"

namespace polarity {

// Canonical label of a Sidon element: a = i + m*(q+1) with i in 1..q,
// and theta^a = theta + b.
struct SidonLabel {
  int i = 0;
  int m = 0;
  int b = 0;
  int64_t a = 0;
};

// Bose-Chowla set A = {a in Z_{q^2-1} : theta^a - theta in GF(q)} together
// with its canonical labels and the subgroup H = <q+1>.
struct SidonSet {
  int q = 0;
  int64_t n = 0;                   // q^2 - 1
  std::vector<int64_t> elements;   // sorted, size q
  std::vector<SidonLabel> labels;  // ordered by residue i = 1..q
  std::vector<int64_t> subgroup;   // H = {0, q+1, ..., (q-2)(q+1)}
  std::vector<uint8_t> member;     // size n membership bitmap

  bool contains(int64_t x) const { return member[static_cast<size_t>(x)] != 0; }
  int64_t reduce(int64_t x) const {
    int64_t r = x % n;
    return r < 0 ? r + n : r;
  }
  // b value for residue class i (1..q)
  int b_of(int i) const { return labels[static_cast<size_t>(i - 1)].b; }
  int64_t a_of(int i) const { return labels[static_cast<size_t>(i - 1)].a; }
};

SidonSet bose_chowla(const ExtFieldCtx& ctx);

struct SidonVerdict {
  bool ok = true;
  // smallest colliding sum and the two pairs realizing it
  int64_t sum = -1;
  std::array<int64_t, 2> first_pair{-1, -1};
  std::array<int64_t, 2> second_pair{-1, -1};
};

// All pairwise sums a+b (a <= b) distinct mod n.
SidonVerdict verify_sidon(const std::vector<int64_t>& set, int64_t n);

struct SpectrumVerdict {
  bool ok = true;
  std::vector<int64_t> missing;  // expected in A-A but absent
  std::vector<int64_t> extra;    // present but expected excluded
};

// A - A must equal Z_n minus the q-2 nonzero multiples of q+1.
SpectrumVerdict difference_spectrum(const SidonSet& s);

// Recomputes labels from the extension tables and validates them against the
// stored set. Throws LabelCollision if two elements share a residue mod q+1.
std::vector<SidonLabel> canonical_labels(const ExtFieldCtx& ctx, const SidonSet& s);

// Shift data: c with theta^c + theta = theta^q, the shifted set
// B = {b : theta^{bq} + theta^b = -1} (the trace form; the sign vanishes in
// characteristic 2), and for q = 2^a the special vertex x = c - 2^{2a-1} c
// whose translate fixes A.
struct LindstromData {
  int64_t c = -1;
  std::vector<int64_t> shifted_set;  // B, sorted
  bool shift_matches = false;        // A - c == B  (mod n)
  bool scale_matches = false;        // p*B == B    (mod n)
  std::optional<int64_t> x_special;  // even q only
  bool special_matches = false;      // x + 2^{2a-1}*A == A
  int64_t halving_multiplier = 0;    // 2^{2a-1} mod n (even q), else 0
};

LindstromData lindstrom_shift(const ExtFieldCtx& ctx, const SidonSet& s);

}  // namespace polarity
