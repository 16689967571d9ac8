#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "spectral/errors.hpp"
#include "spectral/prime_field.hpp"
#include "spectral/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<spectral::Rational> : GenericNumTraits<spectral::Rational> {
  using Real = spectral::Rational;
  using NonInteger = spectral::Rational;
  using Literal = spectral::Rational;
  using Nested = spectral::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
};

template <>
struct NumTraits<spectral::Fp> : GenericNumTraits<spectral::Fp> {
  using Real = spectral::Fp;
  using NonInteger = spectral::Fp;
  using Literal = spectral::Fp;
  using Nested = spectral::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};

}  // namespace Eigen

namespace spectral {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// The coefficient field k. Hom criteria do not depend on it; ranks may.
struct ScalarField {
  enum class Kind { ExactRationals, PrimeField };
  Kind kind = Kind::ExactRationals;
  std::uint64_t prime = 0;

  static ScalarField rationals() { return {}; }
  static ScalarField prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("not_prime", std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 62)) throw DomainError("not_prime", "prime modulus too large");
    return {Kind::PrimeField, p};
  }
  friend bool operator==(const ScalarField&, const ScalarField&) = default;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

inline std::size_t pivot_cost(const Rational& r) { return r.bit_size(); }
inline std::size_t pivot_cost(const Fp&) { return 1; }

inline std::string scalar_string(const Rational& r) { return r.str(); }
inline std::string scalar_string(const Fp& x) { return x.str(); }

/// Embeds an exact rational into the scalar type S over `field`.
template <class S>
S make_scalar(const Rational& r, const ScalarField& field);

template <>
inline Rational make_scalar<Rational>(const Rational& r, const ScalarField&) {
  return r;
}

template <>
inline Fp make_scalar<Fp>(const Rational& r, const ScalarField& field) {
  const std::uint64_t p = field.prime;
  if (p == 0) throw DomainError("field_mismatch", "prime field scalar requested without a modulus");
  const auto reduce = [p](const mpz_class& z) {
    mpz_class m;
    mpz_fdiv_r_ui(m.get_mpz_t(), z.get_mpz_t(), p);
    return Fp(static_cast<std::int64_t>(m.get_ui()), p);
  };
  const Fp den = reduce(r.denominator());
  if (den.is_zero()) {
    throw DomainError("not_invertible", "denominator of " + r.str() + " vanishes mod " + std::to_string(p));
  }
  return reduce(r.numerator()) / den;
}

}  // namespace spectral
