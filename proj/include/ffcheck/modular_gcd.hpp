#pragma once

// Multi-modular gcd of integer polynomials (Brown/Collins style): images
// modulo word-size primes are combined by CRT until the lifted candidate
// stabilizes and divides both inputs exactly over the integers.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffcheck/rational.hpp"

namespace ffcheck::detail {

using IntPoly = std::vector<BigInt>;  // index = exponent, no trailing zeros
using ModPoly = std::vector<std::uint64_t>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

/// Primes just below 2^31, largest first.
inline const std::vector<std::uint64_t>& gcd_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = (1ULL << 31) - 1; out.size() < 4096; n -= 2)
      if (is_prime_u32(n)) out.push_back(n);
    return out;
  }();
  return primes;
}

inline void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
  ModPoly out(f.size());
  BigInt r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  trim_mod(out);
  return out;
}

/// Monic gcd over Z/p.
inline ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
      const std::uint64_t q = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) {
        const std::uint64_t sub = mulmod(q, b[j], p);
        std::uint64_t& slot = a[shift + j];
        slot = slot >= sub ? slot - sub : slot + p - sub;
      }
      trim_mod(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

/// Returns the primitive gcd (positive leading coefficient) of two primitive
/// integer polynomials of positive degree, or nullopt if the prime supply is
/// exhausted. `divides` checks exact divisibility of an integer polynomial
/// candidate into both inputs.
template <class DividesBoth>
std::optional<IntPoly> modular_gcd(const IntPoly& f, const IntPoly& g, DividesBoth divides_both) {
  const BigInt gamma = gcd(f.back(), g.back());
  const std::size_t bound_deg = std::min(f.size(), g.size()) - 1;
  std::size_t best = bound_deg + 1;
  IntPoly acc;
  BigInt modulus;
  std::optional<IntPoly> previous;
  for (std::uint64_t p : gcd_primes()) {
    if (mpz_divisible_ui_p(gamma.get_mpz_t(), p) != 0) continue;
    ModPoly h = gcd_mod(reduce_mod(f, p), reduce_mod(g, p), p);
    const std::size_t d = h.size() - 1;
    if (d == 0) return IntPoly{BigInt(1)};
    if (d > best) continue;
    BigInt gr;
    mpz_fdiv_r_ui(gr.get_mpz_t(), gamma.get_mpz_t(), p);
    const std::uint64_t gamma_mod = gr.get_ui();
    for (auto& c : h) c = mulmod(c, gamma_mod, p);
    if (d < best) {
      best = d;
      acc.assign(h.size(), BigInt(0));
      for (std::size_t i = 0; i < h.size(); ++i) acc[i] = h[i];
      modulus = p;
      previous.reset();
    } else {
      // x = acc + modulus * ((h - acc) * modulus^{-1} mod p)
      BigInt mr;
      mpz_fdiv_r_ui(mr.get_mpz_t(), modulus.get_mpz_t(), p);
      const std::uint64_t minv = powmod(mr.get_ui(), p - 2, p);
      BigInt r;
      for (std::size_t i = 0; i < h.size(); ++i) {
        mpz_fdiv_r_ui(r.get_mpz_t(), acc[i].get_mpz_t(), p);
        const std::uint64_t ai = r.get_ui();
        const std::uint64_t diff = h[i] >= ai ? h[i] - ai : h[i] + p - ai;
        const std::uint64_t t = mulmod(diff, minv, p);
        acc[i] += modulus * BigInt(static_cast<unsigned long>(t));
      }
      modulus *= static_cast<unsigned long>(p);
    }
    IntPoly lifted = acc;
    const BigInt half = modulus / 2;
    for (auto& c : lifted)
      if (c > half) c -= modulus;
    if (previous && *previous == lifted) {
      BigInt content(0);
      for (const auto& c : lifted) content = gcd(content, c);
      IntPoly candidate = lifted;
      if (content != 0)
        for (auto& c : candidate) c /= content;
      if (candidate.back() < 0)
        for (auto& c : candidate) c = -c;
      if (divides_both(candidate)) return candidate;
    }
    previous = std::move(lifted);
  }
  return std::nullopt;
}

}  // namespace ffcheck::detail
