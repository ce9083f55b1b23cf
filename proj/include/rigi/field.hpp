#pragma once

#include <Eigen/Core>

#include <cassert>
#include <cstdint>
#include <ostream>
#include <random>
#include <string_view>

#ifndef RIGI_FIELD_PRIME
#define RIGI_FIELD_PRIME 4611686018427387847ULL
#endif

namespace rigi {

/// Scalar of the prime field Z/pZ that underlies every rank computation.
///
/// The default modulus is p = 2^62 - 57, the largest prime below 2^62.  All
/// rigidity predicates decide whether determinantal polynomials vanish at
/// random field points, so the per-evaluation failure probability is bounded
/// by deg/p; with p > 2^61 and degrees below 2^11 at the graph sizes this
/// project handles, a single evaluation errs with probability below 2^-50.
class Fp {
 public:
  static constexpr std::uint64_t modulus = RIGI_FIELD_PRIME;
  static_assert(modulus > (1ULL << 61), "field modulus must exceed 2^61");
  static_assert(modulus < (1ULL << 63), "field modulus must leave headroom for 64-bit sums");

  constexpr Fp() = default;
  constexpr explicit Fp(std::uint64_t value) : value_(value % modulus) {}
  constexpr explicit Fp(long long value)
      : value_(value >= 0
                   ? static_cast<std::uint64_t>(value) % modulus
                   : modulus - 1 - static_cast<std::uint64_t>(-(value + 1)) % modulus) {}
  constexpr explicit Fp(int value) : Fp(static_cast<long long>(value)) {}

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.value_ + b.value_;
    if (s >= modulus) s -= modulus;
    return from_raw(s);
  }
  friend constexpr Fp operator-(Fp a, Fp b) {
    return from_raw(a.value_ >= b.value_ ? a.value_ - b.value_
                                         : a.value_ + (modulus - b.value_));
  }
  friend constexpr Fp operator*(Fp a, Fp b) {
    return from_raw(reduce_product(a.value_, b.value_));
  }
  friend constexpr Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

  constexpr Fp operator-() const { return from_raw(value_ == 0 ? 0 : modulus - value_); }
  constexpr Fp& operator+=(Fp o) { return *this = *this + o; }
  constexpr Fp& operator-=(Fp o) { return *this = *this - o; }
  constexpr Fp& operator*=(Fp o) { return *this = *this * o; }
  constexpr Fp& operator/=(Fp o) { return *this = *this / o; }

  friend constexpr bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(Fp a, Fp b) { return a.value_ != b.value_; }

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc = from_raw(1 % modulus);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  constexpr Fp inverse() const {
    assert(value_ != 0 && "zero has no multiplicative inverse");
    return pow(modulus - 2);
  }

  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value_; }

 private:
  static constexpr Fp from_raw(std::uint64_t v) {
    Fp r;
    r.value_ = v;
    return r;
  }

  static constexpr std::uint64_t reduce_product(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    if constexpr (modulus == 4611686018427387847ULL) {
      // p = 2^62 - 57: fold the bits above 2^62 back down twice.
      constexpr std::uint64_t fold = 57;
      constexpr std::uint64_t low_mask = (std::uint64_t{1} << 62) - 1;
      const std::uint64_t hi = static_cast<std::uint64_t>(x >> 62);
      const std::uint64_t lo = static_cast<std::uint64_t>(x) & low_mask;
      const unsigned __int128 y = static_cast<unsigned __int128>(hi) * fold + lo;
      const std::uint64_t hi2 = static_cast<std::uint64_t>(y >> 62);
      std::uint64_t r = (static_cast<std::uint64_t>(y) & low_mask) + hi2 * fold;
      if (r >= modulus) r -= modulus;
      return r;
    } else {
      return static_cast<std::uint64_t>(x % modulus);
    }
  }

  std::uint64_t value_ = 0;
};

/// splitmix64 finalizer; used to derive independent seeds.
constexpr std::uint64_t mix_bits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix_bits(seed ^ mix_bits(salt));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the tag bytes
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix_seed(seed, h);
}

/// Deterministic random source.  Draws go through explicit rejection
/// sampling so that streams are identical across platforms and standard
/// library implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;  // multiple of bound
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform over the whole field, including zero.
  Fp field_element() { return Fp(below(Fp::modulus)); }

  /// Uniform over [1, p-1]; used wherever a generic nonzero value is wanted.
  Fp field_nonzero() { return Fp(1 + below(Fp::modulus - 1)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rigi

namespace Eigen {

template <>
struct NumTraits<rigi::Fp> {
  using Real = rigi::Fp;
  using NonInteger = rigi::Fp;
  using Nested = rigi::Fp;
  using Literal = rigi::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 9,
  };
  static inline Real epsilon() { return rigi::Fp(); }
  static inline Real dummy_precision() { return rigi::Fp(); }
  static inline int digits10() { return 18; }
};

}  // namespace Eigen
