#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarity/error.hpp"

namespace polarity {

// Arithmetic context for GF(p^m). Elements are integers in 0..q-1 read as
// base-p coefficient vectors (value = c0 + c1*p + ... + c_{m-1}*p^{m-1}).
// All operations are table lookups; tables are built once at construction.
struct FieldCtx {
  int p = 0;
  int m = 1;
  int q = 0;
  std::vector<int> modulus;  // monic irreducible, coefficients low to high, size m+1

  std::vector<int> add_table;  // q*q
  std::vector<int> mul_table;  // q*q
  std::vector<int> neg_table;  // q
  std::vector<int> inv_table;  // q, inv_table[0] = 0 (unused)

  int add(int a, int b) const { return add_table[a * q + b]; }
  int sub(int a, int b) const { return add_table[a * q + neg_table[b]]; }
  int mul(int a, int b) const { return mul_table[a * q + b]; }
  int neg(int a) const { return neg_table[a]; }

  int inv(int a) const {
    if (a == 0) throw Error("ZeroNotInvertible", "0 has no multiplicative inverse");
    return inv_table[a];
  }

  int pow(int a, int64_t e) const;

  // x -> x^p iterated `times` times (used to locate subfields)
  int frobenius(int a, int times = 1) const;

  std::string modulus_string() const;  // e.g. "x^2+x+1"
};

// Quadratic extension GF(q^2) = GF(q)[theta], theta^2 = alpha*theta + beta.
// Elements are (c0, c1) pairs meaning c0 + c1*theta; the full power and
// discrete-log tables for theta are materialized (theta is a generator).
struct ExtFieldCtx {
  FieldCtx base;
  int alpha = 0;
  int beta = 0;
  int64_t n = 0;  // q^2 - 1

  std::vector<std::array<int, 2>> pow_table;  // exponent -> (c0, c1)
  std::vector<int64_t> dlog_table;            // (c0 + c1*q) -> exponent, -1 for 0
  int theta_norm = 0;  // theta^{q+1}, lies in GF(q)
  int mu = 0;          // (theta^{q+1})^{-1} in GF(q)

  int q() const { return base.q; }

  std::array<int, 2> mul(std::array<int, 2> a, std::array<int, 2> b) const;
  std::array<int, 2> add(std::array<int, 2> a, std::array<int, 2> b) const;
  std::array<int, 2> sub(std::array<int, 2> a, std::array<int, 2> b) const;

  // theta^a with the exponent reduced mod q^2-1 (negative exponents allowed)
  std::array<int, 2> pow(int64_t a) const {
    int64_t r = a % n;
    if (r < 0) r += n;
    return pow_table[static_cast<size_t>(r)];
  }

  int64_t dlog(std::array<int, 2> x) const {
    int64_t d = dlog_table[static_cast<size_t>(x[0] + x[1] * base.q)];
    if (d < 0) throw Error("ZeroHasNoLog", "dlog(0) is undefined");
    return d;
  }

  // GF(q) power of mu, exponent mod q-1
  int mu_pow(int64_t t) const;
};

inline constexpr int kDefaultMaxDegree = 4;
inline constexpr int kDefaultMaxQ = 64;

bool is_prime(int64_t v);
bool is_prime_power(int64_t v, int* p_out = nullptr, int* m_out = nullptr);

// GF(p^m) with the lexicographically smallest monic irreducible modulus
// (coefficients compared low to high). Deterministic across runs.
FieldCtx build_base_field(int p, int m, int max_degree = kDefaultMaxDegree);

// Extension with an explicit (alpha, beta). Throws NoPrimitiveQuadratic if
// x^2 - alpha*x - beta is reducible over GF(q) or theta does not generate
// GF(q^2)*.
ExtFieldCtx make_quadratic_extension(const FieldCtx& base, int alpha, int beta);

// First primitive (alpha, beta) in ascending element order; for even q the
// search is restricted to alpha = 1.
ExtFieldCtx find_primitive_quadratic(const FieldCtx& base, int max_q = kDefaultMaxQ);

}  // namespace polarity
