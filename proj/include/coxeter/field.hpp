#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cox {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element of the real field Q(sqrt2, sqrt3, sqrt5).
///
/// Coordinates are over the basis {1, r2, r3, r5, r6, r10, r15, r30} where
/// rK = sqrt(K). Basis index b is a bitmask over the primes {2,3,5}:
/// the radicand of index b is 2^(b&1) * 3^(b>>1&1) * 5^(b>>2&1).
/// The basis is linearly independent over Q, so an element is zero iff
/// all eight coordinates are zero.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(int n) { c_[0] = n; }
  explicit FieldElement(Rational r) { c_[0] = std::move(r); }

  /// sqrt(k) for k in {1,2,3,5,6,10,15,30}.
  static FieldElement sqrt_of(int k);

  /// cos(pi/m) for m in {1,2,3,4,5,6}: -1, 0, 1/2, r2/2, (1+r5)/4, r3/2.
  static FieldElement cos_pi_over(int m);

  static int radicand(int basis_index);

  const Rational& coeff(int basis_index) const { return c_[basis_index]; }

  bool is_zero() const;
  bool is_rational() const;

  /// Sign under the real embedding with all radicals positive.
  /// Exact: zero iff all coordinates vanish, otherwise decided by interval
  /// refinement with doubling precision (terminates for nonzero values).
  int sign() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;

  /// Exact division. Throws std::domain_error on zero divisor.
  FieldElement operator/(const FieldElement& o) const;

  /// Multiplicative inverse. Throws std::domain_error if zero.
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const { return c_ == o.c_; }
  bool operator!=(const FieldElement& o) const { return c_ != o.c_; }

  std::string str() const;

private:
  // Conjugate flipping the sign of the radical for prime bit `bit` (0->r2,
  // 1->r3, 2->r5): negates every coordinate whose basis index has that bit.
  FieldElement conjugate(int bit) const;

  std::array<Rational, 8> c_{};
};

/// Coordinate vector over the simple roots alpha_s.
using RootVector = std::vector<FieldElement>;

/// True iff every coordinate is >= 0 or every coordinate is <= 0.
bool sign_coherent(const RootVector& v);

/// True iff all coordinates <= 0 and the vector is nonzero.
bool is_negative_root(const RootVector& v);

}  // namespace cox
