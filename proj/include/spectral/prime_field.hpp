#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "spectral/errors.hpp"

namespace spectral {

bool is_prime(std::uint64_t n);

/// Element of the prime field F_p with the modulus carried by the value.
///
/// Values built from plain integers (as Eigen does with `Scalar(0)` / `Scalar(1)`)
/// are unbound: they adopt the modulus of whatever bound value they meet.
class Fp {
 public:
  Fp() = default;
  Fp(int n) : raw_(n) {}
  Fp(long n) : raw_(n) {}
  Fp(std::int64_t n, std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  bool bound() const { return modulus_ != 0; }
  /// Canonical representative in [0, p) (or the raw integer when unbound).
  std::int64_t value() const { return bound() ? static_cast<std::int64_t>(value_) : raw_; }
  bool is_zero() const { return bound() ? value_ == 0 : raw_ == 0; }

  Fp inverse() const;

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  friend Fp operator-(const Fp& a) { return Fp(0) - a; }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b);

  std::string str() const { return std::to_string(value()); }

 private:
  Fp bind(std::uint64_t modulus) const;
  static std::uint64_t common_modulus(const Fp& a, const Fp& b);

  std::int64_t raw_ = 0;
  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline Fp::Fp(std::int64_t n, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) {
    raw_ = n;
    return;
  }
  const auto m = static_cast<std::int64_t>(modulus);
  value_ = static_cast<std::uint64_t>(((n % m) + m) % m);
}

inline Fp Fp::bind(std::uint64_t modulus) const {
  if (bound() || modulus == 0) return *this;
  return Fp(raw_, modulus);
}

inline std::uint64_t Fp::common_modulus(const Fp& a, const Fp& b) {
  if (a.bound() && b.bound() && a.modulus_ != b.modulus_) {
    throw std::logic_error("mixing elements of different prime fields");
  }
  return a.bound() ? a.modulus_ : b.modulus_;
}

inline Fp operator+(const Fp& a, const Fp& b) {
  const std::uint64_t m = Fp::common_modulus(a, b);
  if (m == 0) return Fp(a.raw_ + b.raw_);
  const Fp x = a.bind(m), y = b.bind(m);
  return Fp(static_cast<std::int64_t>((x.value_ + y.value_) % m), m);
}

inline Fp operator-(const Fp& a, const Fp& b) {
  const std::uint64_t m = Fp::common_modulus(a, b);
  if (m == 0) return Fp(a.raw_ - b.raw_);
  const Fp x = a.bind(m), y = b.bind(m);
  return Fp(static_cast<std::int64_t>((x.value_ + m - y.value_) % m), m);
}

inline Fp operator*(const Fp& a, const Fp& b) {
  const std::uint64_t m = Fp::common_modulus(a, b);
  if (m == 0) return Fp(a.raw_ * b.raw_);
  const Fp x = a.bind(m), y = b.bind(m);
  const auto prod = static_cast<unsigned __int128>(x.value_) * y.value_;
  return Fp(static_cast<std::int64_t>(prod % m), m);
}

inline bool operator==(const Fp& a, const Fp& b) {
  const std::uint64_t m = Fp::common_modulus(a, b);
  if (m == 0) return a.raw_ == b.raw_;
  return a.bind(m).value_ == b.bind(m).value_;
}

inline Fp Fp::inverse() const {
  if (is_zero()) throw DomainError("division_by_zero", "inverse of zero in a prime field");
  if (!bound()) {
    if (raw_ == 1 || raw_ == -1) return *this;
    throw std::logic_error("inverse of an unbound prime-field constant");
  }
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = value_, e = modulus_ - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % modulus_);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % modulus_);
    e >>= 1;
  }
  return Fp(static_cast<std::int64_t>(result), modulus_);
}

}  // namespace spectral
