#include "polarity/field.hpp"

#include <algorithm>
#include <numeric>

namespace polarity {
namespace {

using Poly = std::vector<int>;  // coefficients low to high, not normalized

Poly poly_mul_mod_p(const Poly& a, const Poly& b, int p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

int64_t ipow(int64_t b, int e) {
  int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

// Exhaustive factorization trial: a monic polynomial of degree m is
// irreducible iff no product of monic factors of degrees d and m-d matches.
bool is_irreducible(const Poly& poly, int p) {
  const int m = static_cast<int>(poly.size()) - 1;
  if (m == 1) return true;
  for (int d1 = 1; d1 <= m / 2; ++d1) {
    const int d2 = m - d1;
    const int64_t count1 = ipow(p, d1);
    const int64_t count2 = ipow(p, d2);
    for (int64_t f = 0; f < count1; ++f) {
      Poly a(d1 + 1, 0);
      int64_t ff = f;
      for (int i = 0; i < d1; ++i) { a[i] = static_cast<int>(ff % p); ff /= p; }
      a[d1] = 1;
      for (int64_t g = 0; g < count2; ++g) {
        Poly b(d2 + 1, 0);
        int64_t gg = g;
        for (int i = 0; i < d2; ++i) { b[i] = static_cast<int>(gg % p); gg /= p; }
        b[d2] = 1;
        if (poly_mul_mod_p(a, b, p) == poly) return false;
      }
    }
  }
  return true;
}

std::vector<int> to_digits(int value, int p, int m) {
  std::vector<int> digits(m, 0);
  for (int i = 0; i < m; ++i) { digits[i] = value % p; value /= p; }
  return digits;
}

int from_digits(const std::vector<int>& digits, int p) {
  int value = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i)
    value = value * p + digits[i];
  return value;
}

}  // namespace

int FieldCtx::pow(int a, int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const int64_t ord = q - 1;
  e %= ord;
  if (e < 0) e += ord;
  int acc = 1;
  int base_v = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base_v);
    base_v = mul(base_v, base_v);
    e >>= 1;
  }
  return acc;
}

int FieldCtx::frobenius(int a, int times) const {
  int out = a;
  for (int i = 0; i < times; ++i) out = pow(out, p);
  return out;
}

std::string FieldCtx::modulus_string() const {
  std::string s;
  for (int d = m; d >= 0; --d) {
    const int c = modulus[d];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (d == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (d == 1) ? "x" : "x^" + std::to_string(d);
    }
  }
  return s.empty() ? "0" : s;
}

bool is_prime(int64_t v) {
  if (v < 2) return false;
  for (int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool is_prime_power(int64_t v, int* p_out, int* m_out) {
  if (v < 2) return false;
  for (int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      int m = 0;
      int64_t rest = v;
      while (rest % d == 0) { rest /= d; ++m; }
      if (rest != 1) return false;
      if (p_out) *p_out = static_cast<int>(d);
      if (m_out) *m_out = m;
      return true;
    }
  }
  // v itself is prime
  if (p_out) *p_out = static_cast<int>(v);
  if (m_out) *m_out = 1;
  return true;
}

FieldCtx build_base_field(int p, int m, int max_degree) {
  if (!is_prime(p)) throw Error("NonPrime", std::to_string(p) + " is not prime");
  if (m < 1 || m > max_degree)
    throw Error("DegreeTooLarge",
                "degree " + std::to_string(m) + " outside 1.." + std::to_string(max_degree));

  FieldCtx f;
  f.p = p;
  f.m = m;
  f.q = 1;
  for (int i = 0; i < m; ++i) f.q *= p;

  // Lexicographically smallest monic irreducible: candidates ordered with
  // the low coefficient compared first.
  bool found = false;
  int64_t total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  for (int64_t idx = 0; idx < total && !found; ++idx) {
    Poly cand(m + 1, 0);
    int64_t rem = idx;
    for (int i = m - 1; i >= 0; --i) { cand[i] = static_cast<int>(rem % p); rem /= p; }
    cand[m] = 1;
    if (is_irreducible(cand, p)) {
      f.modulus = cand;
      found = true;
    }
  }
  if (!found) throw Error("NoIrreducible", "no irreducible modulus found");  // unreachable

  const int q = f.q;
  f.add_table.assign(static_cast<size_t>(q) * q, 0);
  f.mul_table.assign(static_cast<size_t>(q) * q, 0);
  f.neg_table.assign(q, 0);
  f.inv_table.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    const auto da = to_digits(a, p, m);
    for (int b = 0; b < q; ++b) {
      const auto db = to_digits(b, p, m);
      std::vector<int> sum(m);
      for (int i = 0; i < m; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_table[static_cast<size_t>(a) * q + b] = from_digits(sum, p);

      // polynomial product reduced mod the modulus
      std::vector<int> prod(2 * m - 1, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 2 * m - 2; d >= m; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i)
          prod[d - m + i] = ((prod[d - m + i] - c * f.modulus[i]) % p + p) % p;
      }
      prod.resize(m);
      f.mul_table[static_cast<size_t>(a) * q + b] = from_digits(prod, p);
    }
    std::vector<int> na(m);
    for (int i = 0; i < m; ++i) na[i] = (p - da[i]) % p;
    f.neg_table[a] = from_digits(na, p);
  }

  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (f.mul_table[static_cast<size_t>(a) * q + b] == 1) {
        f.inv_table[a] = b;
        break;
      }
    }
    if (f.inv_table[a] == 0)
      throw Error("NotAField", "element " + std::to_string(a) + " has no inverse");
  }
  return f;
}

std::array<int, 2> ExtFieldCtx::mul(std::array<int, 2> a, std::array<int, 2> b) const {
  // (a0 + a1 t)(b0 + b1 t) with t^2 = alpha t + beta
  const auto& f = base;
  const int cross = f.add(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
  const int high = f.mul(a[1], b[1]);
  return {f.add(f.mul(a[0], b[0]), f.mul(high, beta)), f.add(cross, f.mul(high, alpha))};
}

std::array<int, 2> ExtFieldCtx::add(std::array<int, 2> a, std::array<int, 2> b) const {
  return {base.add(a[0], b[0]), base.add(a[1], b[1])};
}

std::array<int, 2> ExtFieldCtx::sub(std::array<int, 2> a, std::array<int, 2> b) const {
  return {base.sub(a[0], b[0]), base.sub(a[1], b[1])};
}

int ExtFieldCtx::mu_pow(int64_t t) const {
  const int64_t ord = base.q - 1;
  int64_t r = t % ord;
  if (r < 0) r += ord;
  return base.pow(mu, r);
}

ExtFieldCtx make_quadratic_extension(const FieldCtx& base, int alpha, int beta) {
  if (base.p == 2 && alpha != 1)
    throw Error("BadThetaOverride", "even q requires the alpha = 1 form");
  // x^2 - alpha x - beta must have no root in GF(q)
  for (int r = 0; r < base.q; ++r) {
    const int lhs = base.mul(r, r);
    const int rhs = base.add(base.mul(alpha, r), beta);
    if (lhs == rhs)
      throw Error("NoPrimitiveQuadratic",
                  "x^2-" + std::to_string(alpha) + "x-" + std::to_string(beta) +
                      " has a root in GF(" + std::to_string(base.q) + ")");
  }

  ExtFieldCtx e;
  e.base = base;
  e.alpha = alpha;
  e.beta = beta;
  e.n = static_cast<int64_t>(base.q) * base.q - 1;

  e.pow_table.assign(static_cast<size_t>(e.n), {0, 0});
  e.dlog_table.assign(static_cast<size_t>(base.q) * base.q, -1);

  std::array<int, 2> acc = {1, 0};
  for (int64_t a = 0; a < e.n; ++a) {
    if (a > 0 && acc == std::array<int, 2>{1, 0})
      throw Error("NoPrimitiveQuadratic",
                  "theta has order " + std::to_string(a) + " < " + std::to_string(e.n));
    e.pow_table[static_cast<size_t>(a)] = acc;
    e.dlog_table[static_cast<size_t>(acc[0] + acc[1] * base.q)] = a;
    acc = e.mul(acc, {0, 1});
  }
  if (acc != std::array<int, 2>{1, 0})
    throw Error("NoPrimitiveQuadratic", "theta^n != 1; arithmetic is broken");

  const auto norm = e.pow(base.q + 1);
  if (norm[1] != 0) throw Error("InternalError", "theta^{q+1} escaped the base field");
  e.theta_norm = norm[0];
  e.mu = base.inv(norm[0]);
  return e;
}

ExtFieldCtx find_primitive_quadratic(const FieldCtx& base, int max_q) {
  if (base.q > max_q)
    throw Error("QTooLarge",
                "q=" + std::to_string(base.q) + " exceeds cap " + std::to_string(max_q));
  const bool even = (base.p == 2);
  for (int alpha = even ? 1 : 0; alpha < (even ? 2 : base.q); ++alpha) {
    for (int beta = 0; beta < base.q; ++beta) {
      try {
        return make_quadratic_extension(base, alpha, beta);
      } catch (const Error&) {
        continue;
      }
    }
  }
  throw Error("NoPrimitiveQuadratic",
              "no primitive quadratic over GF(" + std::to_string(base.q) + ")");
}

}  // namespace polarity
