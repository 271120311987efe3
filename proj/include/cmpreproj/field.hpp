#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace cmpreproj {

using Rng = std::mt19937_64;

// Residues mod a prime p; elements are plain integers in [0, p).
struct PrimeField {
  using Elem = std::uint32_t;

  std::uint32_t p = 101;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t prime);

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
  }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem random(Rng& rng) const { return static_cast<Elem>(rng() % p); }
  std::string str(Elem a) const;
  std::uint32_t characteristic() const { return p; }
  std::string name() const { return "F" + std::to_string(p); }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

// Rationals with arbitrary-precision numerator and denominator (GMP).
struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  // small integers keep entry growth in check during randomized searches
  Elem random(Rng& rng) const { return Elem(static_cast<long>(rng() % 19) - 9); }
  std::string str(const Elem& a) const { return a.get_str(); }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

bool is_prime(std::uint32_t n);

}  // namespace cmpreproj
