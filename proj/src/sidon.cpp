#include "polarity/sidon.hpp"

#include <algorithm>

namespace polarity {

SidonSet bose_chowla(const ExtFieldCtx& ctx) {
  SidonSet s;
  s.q = ctx.q();
  s.n = ctx.n;
  s.member.assign(static_cast<size_t>(s.n), 0);

  // theta^a - theta in GF(q)  <=>  the theta-coefficient of theta^a is 1
  for (int64_t a = 0; a < s.n; ++a) {
    if (ctx.pow_table[static_cast<size_t>(a)][1] == 1) {
      s.elements.push_back(a);
      s.member[static_cast<size_t>(a)] = 1;
    }
  }
  if (static_cast<int>(s.elements.size()) != s.q)
    throw Error("InternalSizeMismatch",
                "|A| = " + std::to_string(s.elements.size()) + ", expected q = " +
                    std::to_string(s.q));

  for (int64_t h = 0; h <= static_cast<int64_t>(s.q) - 2; ++h)
    s.subgroup.push_back(h * (s.q + 1));

  s.labels = canonical_labels(ctx, s);
  return s;
}

SidonVerdict verify_sidon(const std::vector<int64_t>& set, int64_t n) {
  SidonVerdict v;
  // first pair seen per sum value; smallest colliding sum wins
  std::vector<std::array<int64_t, 2>> seen(static_cast<size_t>(n), {-1, -1});
  int64_t best_sum = -1;
  for (size_t i = 0; i < set.size(); ++i) {
    for (size_t j = i; j < set.size(); ++j) {
      const int64_t sum = (set[i] + set[j]) % n;
      auto& slot = seen[static_cast<size_t>(sum)];
      if (slot[0] < 0) {
        slot = {set[i], set[j]};
      } else if (best_sum < 0 || sum < best_sum) {
        best_sum = sum;
        v.ok = false;
        v.sum = sum;
        v.first_pair = slot;
        v.second_pair = {set[i], set[j]};
      }
    }
  }
  return v;
}

SpectrumVerdict difference_spectrum(const SidonSet& s) {
  SpectrumVerdict v;
  std::vector<uint8_t> present(static_cast<size_t>(s.n), 0);
  for (int64_t a : s.elements)
    for (int64_t b : s.elements)
      present[static_cast<size_t>(s.reduce(a - b))] = 1;

  std::vector<uint8_t> excluded(static_cast<size_t>(s.n), 0);
  for (int64_t h : s.subgroup)
    if (h != 0) excluded[static_cast<size_t>(h)] = 1;

  for (int64_t x = 0; x < s.n; ++x) {
    const bool want = !excluded[static_cast<size_t>(x)];
    const bool have = present[static_cast<size_t>(x)] != 0;
    if (want && !have) v.missing.push_back(x);
    if (!want && have) v.extra.push_back(x);
  }
  v.ok = v.missing.empty() && v.extra.empty();
  return v;
}

std::vector<SidonLabel> canonical_labels(const ExtFieldCtx& ctx, const SidonSet& s) {
  const int q = s.q;
  std::vector<SidonLabel> labels(static_cast<size_t>(q));
  std::vector<uint8_t> taken(static_cast<size_t>(q) + 1, 0);
  for (int64_t a : s.elements) {
    const int i = static_cast<int>(a % (q + 1));
    if (i == 0 || taken[static_cast<size_t>(i)])
      throw Error("LabelCollision",
                  "residue " + std::to_string(i) + " mod q+1 repeats or is 0");
    taken[static_cast<size_t>(i)] = 1;
    const auto val = ctx.pow(a);
    if (val[1] != 1)
      throw Error("LabelCollision", "element " + std::to_string(a) + " is not theta + b");
    labels[static_cast<size_t>(i - 1)] =
        SidonLabel{i, static_cast<int>((a - i) / (q + 1)), val[0], a};
  }
  return labels;
}

LindstromData lindstrom_shift(const ExtFieldCtx& ctx, const SidonSet& s) {
  LindstromData d;
  const int q = ctx.q();
  const int64_t n = ctx.n;

  // theta^q - theta is nonzero for a generator theta, so c is well defined.
  const auto tq = ctx.pow(q);
  const auto diff = ctx.sub(tq, {0, 1});
  d.c = ctx.dlog(diff);

  // B = {b : theta^{bq} + theta^b = -1}: the shifted elements have trace -1
  // (for even q the sign is immaterial and this is theta^{bq} + theta^b = 1)
  const std::array<int, 2> minus_one = {ctx.base.neg(1), 0};
  std::vector<uint8_t> in_b(static_cast<size_t>(n), 0);
  for (int64_t b = 0; b < n; ++b) {
    const auto val = ctx.add(ctx.pow(b * q % n), ctx.pow(b));
    if (val == minus_one) {
      d.shifted_set.push_back(b);
      in_b[static_cast<size_t>(b)] = 1;
    }
  }

  d.shift_matches = true;
  for (int64_t a : s.elements)
    if (!in_b[static_cast<size_t>(s.reduce(a - d.c))]) d.shift_matches = false;
  d.shift_matches = d.shift_matches && d.shifted_set.size() == s.elements.size();

  d.scale_matches = true;
  for (int64_t b : d.shifted_set)
    if (!in_b[static_cast<size_t>(b * ctx.base.p % n)]) d.scale_matches = false;

  if (ctx.base.p == 2) {
    // q = 2^a; 2^{2a-1} is the inverse of 2 mod q^2-1
    int a_exp = 0;
    for (int v = q; v > 1; v >>= 1) ++a_exp;
    int64_t mult = 1;
    for (int i = 0; i < 2 * a_exp - 1; ++i) mult = mult * 2 % n;
    d.halving_multiplier = mult;
    d.x_special = s.reduce(d.c - mult * d.c % n);

    d.special_matches = true;
    for (int64_t a : s.elements) {
      const int64_t image = s.reduce(*d.x_special + mult * a);
      if (!s.contains(image)) d.special_matches = false;
    }
  }
  return d;
}

}  // namespace polarity
