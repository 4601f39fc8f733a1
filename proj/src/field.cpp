#include "coxeter/field.hpp"

#include <sstream>

namespace cox {

namespace {

int shared_factor(int a, int b) {
  int g = 1;
  if (a & b & 1) g *= 2;
  if (a & b & 2) g *= 3;
  if (a & b & 4) g *= 5;
  return g;
}

}  // namespace

int FieldElement::radicand(int b) {
  int r = 1;
  if (b & 1) r *= 2;
  if (b & 2) r *= 3;
  if (b & 4) r *= 5;
  return r;
}

FieldElement FieldElement::sqrt_of(int k) {
  for (int b = 0; b < 8; ++b) {
    if (radicand(b) == k) {
      FieldElement e;
      e.c_[b] = 1;
      return e;
    }
  }
  throw std::domain_error("sqrt_of: radicand not in {1,2,3,5,6,10,15,30}");
}

FieldElement FieldElement::cos_pi_over(int m) {
  switch (m) {
    case 1: return FieldElement(-1);
    case 2: return FieldElement(0);
    case 3: return FieldElement(Rational(1, 2));
    case 4: {
      FieldElement e = sqrt_of(2);
      e.c_[1] /= 2;
      return e;
    }
    case 5: {
      FieldElement e = sqrt_of(5);
      e.c_[4] /= 4;
      e.c_[0] = Rational(1, 4);
      return e;
    }
    case 6: {
      FieldElement e = sqrt_of(3);
      e.c_[2] /= 2;
      return e;
    }
    default:
      throw std::domain_error("cos_pi_over: m out of range");
  }
}

bool FieldElement::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (int b = 1; b < 8; ++b)
    if (c_[b] != 0) return false;
  return true;
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  // All basis values are positive reals, so uniform coefficient signs decide.
  bool has_pos = false, has_neg = false;
  for (const auto& q : c_) {
    if (q > 0) has_pos = true;
    if (q < 0) has_neg = true;
  }
  if (!has_neg) return 1;
  if (!has_pos) return -1;

  // Interval refinement: enclose each sqrt(rad) in [n, n+1] / 2^p.
  for (unsigned p = 32; p <= 4096; p *= 2) {
    Rational lo = 0, hi = 0;
    Int scale = Int(1) << p;
    for (int b = 0; b < 8; ++b) {
      if (c_[b] == 0) continue;
      Rational slo, shi;
      if (b == 0) {
        slo = shi = 1;
      } else {
        Int n = sqrt(Int(radicand(b)) * scale * scale);
        slo = Rational(n, scale);
        shi = Rational(n + 1, scale);
      }
      if (c_[b] > 0) {
        lo += c_[b] * slo;
        hi += c_[b] * shi;
      } else {
        lo += c_[b] * shi;
        hi += c_[b] * slo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw std::logic_error("FieldElement::sign: refinement did not separate");
}

FieldElement FieldElement::operator-() const {
  FieldElement r;
  for (int b = 0; b < 8; ++b) r.c_[b] = -c_[b];
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  for (int b = 0; b < 8; ++b) c_[b] += o.c_[b];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  for (int b = 0; b < 8; ++b) c_[b] -= o.c_[b];
  return *this;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldElement r = *this;
  r += o;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  FieldElement r = *this;
  r -= o;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  FieldElement r;
  for (int a = 0; a < 8; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < 8; ++b) {
      if (o.c_[b] == 0) continue;
      // sqrt(ra) * sqrt(rb) = g * sqrt(r(a^b)) with g the shared prime part.
      r.c_[a ^ b] += c_[a] * o.c_[b] * shared_factor(a, b);
    }
  }
  return r;
}

FieldElement FieldElement::conjugate(int bit) const {
  FieldElement r = *this;
  for (int b = 0; b < 8; ++b)
    if (b & (1 << bit)) r.c_[b] = -r.c_[b];
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: division by zero");
  // Successive norm descent through the tower Q(r2,r3,r5) -> Q(r3,r5) -> Q(r5) -> Q.
  FieldElement x2 = conjugate(0);
  FieldElement y2 = *this * x2;        // free of r2
  FieldElement x3 = y2.conjugate(1);
  FieldElement y3 = y2 * x3;           // free of r2, r3
  FieldElement x5 = y3.conjugate(2);
  FieldElement y5 = y3 * x5;           // rational
  if (!y5.is_rational() || y5.c_[0] == 0)
    throw std::logic_error("FieldElement::inverse: norm descent failed");
  FieldElement r = x2 * x3 * x5;
  Rational n = y5.c_[0];
  for (int b = 0; b < 8; ++b) r.c_[b] /= n;
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

std::string FieldElement::str() const {
  static const char* names[8] = {"1",  "r2",  "r3",  "r5",
                                 "r6", "r10", "r15", "r30"};
  std::ostringstream os;
  bool first = true;
  for (int b = 0; b < 8; ++b) {
    if (c_[b] == 0) continue;
    if (!first) os << " + ";
    os << c_[b];
    if (b > 0) os << "*" << names[b];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool sign_coherent(const RootVector& v) {
  bool has_pos = false, has_neg = false;
  for (const auto& c : v) {
    int s = c.sign();
    if (s > 0) has_pos = true;
    if (s < 0) has_neg = true;
  }
  return !(has_pos && has_neg);
}

bool is_negative_root(const RootVector& v) {
  bool nonzero = false;
  for (const auto& c : v) {
    int s = c.sign();
    if (s > 0) return false;
    if (s < 0) nonzero = true;
  }
  return nonzero;
}

}  // namespace cox
