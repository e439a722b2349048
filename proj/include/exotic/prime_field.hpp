#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exotic {

enum class errc {
  not_prime,
  dimension_mismatch,
  singular_matrix,
  empty_space,
  not_nilpotent,
  invalid_recursion,
  not_self_adjoint,
  not_duplex_pattern,
  inconsistent_membership,
  representative_search_failed,
  genericity_unstable,
  not_bijective,
  bad_argument,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

/// Deterministic 64-bit stream; the library's only entropy source.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Child stream for work item `index`, independent of draw order.
  SplitMix64 fork(std::uint64_t index) const {
    SplitMix64 mixer(state_ ^ (0x632be59bd9b4e019ULL * (index + 1)));
    mixer.next();
    return mixer;
  }

 private:
  std::uint64_t state_;
};

/// Arithmetic in F_p for an odd prime p < 2^62. Elements are residues in
/// [0, p) carried as plain uint64_t; the field object holds the modulus.
class PrimeField {
 public:
  static constexpr std::uint64_t default_prime = 2305843009213693951ULL;  // 2^61 - 1

  explicit PrimeField(std::uint64_t p = default_prime) : p_(p) {
    if (p >= (1ULL << 62) || !is_prime(p) || p == 2)
      throw error(errc::not_prime, "modulus must be an odd prime below 2^62: " + std::to_string(p));
  }

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (a %= p_; e; e >>= 1) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw error(errc::bad_argument, "inverse of zero");
    return pow(a, p_ - 2);
  }

  /// Reduce a signed integer into [0, p).
  std::uint64_t from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    return m < 0 ? static_cast<std::uint64_t>(m + static_cast<long long>(p_)) : static_cast<std::uint64_t>(m);
  }

  /// Uniform draw from [0, p), by rejection.
  std::uint64_t sample(SplitMix64& rng) const {
    const std::uint64_t limit = ~0ULL - ~0ULL % p_;  // multiple of p
    for (;;) {
      std::uint64_t r = rng.next();
      if (r < limit) return r % p_;
    }
  }

  /// Uniform draw from [1, p).
  std::uint64_t sample_nonzero(SplitMix64& rng) const {
    for (;;) {
      std::uint64_t r = sample(rng);
      if (r != 0) return r;
    }
  }

  bool operator==(const PrimeField& o) const = default;

  /// Deterministic Miller-Rabin, valid for all 64-bit inputs.
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
      if (n == q) return true;
      if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    auto mulm = [n](std::uint64_t a, std::uint64_t b) {
      return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto powm = [&](std::uint64_t a, std::uint64_t e) {
      std::uint64_t r = 1;
      for (; e; e >>= 1) {
        if (e & 1) r = mulm(r, a);
        a = mulm(a, a);
      }
      return r;
    };
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
      std::uint64_t x = powm(a, d);
      if (x == 1 || x == n - 1) continue;
      bool witness = true;
      for (int i = 1; i < s; ++i) {
        x = mulm(x, x);
        if (x == n - 1) {
          witness = false;
          break;
        }
      }
      if (witness) return false;
    }
    return true;
  }

 private:
  std::uint64_t p_;
};

}  // namespace exotic
