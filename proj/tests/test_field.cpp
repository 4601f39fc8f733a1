#include "doctest.h"

#include "coxeter/engine.hpp"
#include "coxeter/field.hpp"
#include "coxeter/system.hpp"
#include "helpers.hpp"

using cox::FieldElement;
using cox::Rational;

namespace {

FieldElement random_element() {
  FieldElement e;
  for (int b = 0; b < 8; ++b) {
    int num = testutil::uniform(-6, 6);
    int den = testutil::uniform(1, 4);
    e += FieldElement(Rational(num, den)) * FieldElement::sqrt_of(
                                                FieldElement::radicand(b));
  }
  return e;
}

FieldElement bilinear_value(const cox::Engine& eng, const cox::RootVector& u,
                            const cox::RootVector& v) {
  FieldElement out;
  for (int s = 0; s < eng.rank(); ++s)
    for (int t = 0; t < eng.rank(); ++t)
      out += u[s] * v[t] * eng.sys().bilinear(s, t);
  return out;
}

cox::RootVector random_root_vector(int rank) {
  cox::RootVector v(rank);
  for (auto& c : v)
    c = FieldElement(Rational(testutil::uniform(-5, 5), testutil::uniform(1, 3)));
  return v;
}

}  // namespace

TEST_CASE("basis products") {
  auto r2 = FieldElement::sqrt_of(2);
  auto r3 = FieldElement::sqrt_of(3);
  auto r5 = FieldElement::sqrt_of(5);
  CHECK(r2 * r3 == FieldElement::sqrt_of(6));
  CHECK(r2 * r2 == FieldElement(2));
  CHECK(r2 * r3 * r5 == FieldElement::sqrt_of(30));
  CHECK(FieldElement::sqrt_of(6) * FieldElement::sqrt_of(10) ==
        FieldElement(2) * FieldElement::sqrt_of(15));
  // (1 + r2)(r2 - 1) = 1
  CHECK((FieldElement(1) + r2) * (r2 - FieldElement(1)) == FieldElement(1));
}

TEST_CASE("field axioms on random elements") {
  for (int i = 0; i < 200; ++i) {
    FieldElement a = random_element(), b = random_element(),
                 c = random_element();
    CHECK(a - a == FieldElement(0));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK_THROWS_AS(FieldElement(1) / FieldElement(0), std::domain_error);
}

TEST_CASE("exact sign") {
  CHECK(FieldElement(0).sign() == 0);
  CHECK((FieldElement::sqrt_of(6) - FieldElement::sqrt_of(5)).sign() == 1);
  // 2 cos(pi/5) - 1 = (1 + r5)/2 - 1 > 0
  auto phi = FieldElement(2) * FieldElement::cos_pi_over(5);
  CHECK((phi - FieldElement(1)).sign() == 1);
  // Mixed-sign coordinates need interval refinement.
  auto r2 = FieldElement::sqrt_of(2), r3 = FieldElement::sqrt_of(3),
       r5 = FieldElement::sqrt_of(5);
  CHECK((r2 + r3 - r5).sign() == 1);          // ~ 0.910
  CHECK((FieldElement(3) - r2 - r3).sign() == -1);  // ~ -0.146
  CHECK((r2 * r3 - FieldElement::sqrt_of(6)).sign() == 0);
}

TEST_CASE("golden ratio identity") {
  // phi = 2 cos(pi/5) satisfies phi^2 = phi + 1.
  auto phi = FieldElement(2) * FieldElement::cos_pi_over(5);
  CHECK(phi * phi == phi + FieldElement(1));
  auto c4 = FieldElement::cos_pi_over(4);
  CHECK(c4 * c4 == FieldElement(Rational(1, 2)));
}

TEST_CASE("simple root reflections") {
  cox::Engine eng(cox::CoxeterSystem::preset("B3"));  // bonds 3 and 4
  const int s = 0, t = 1;
  // sigma_s(alpha_s) = -alpha_s
  auto v = eng.root_through({s}, s);
  CHECK(v[s] == FieldElement(-1));
  CHECK(v[t].is_zero());
  // m(s1,s3) = 2: reflection fixes the root
  auto fixed = eng.root_through({0}, 2);
  CHECK(fixed[2] == FieldElement(1));
  CHECK(fixed[0].is_zero());
  // m(s,t) = 3: sigma_s(alpha_t) = alpha_t + alpha_s
  auto moved = eng.root_through({s}, t);
  CHECK(moved[s] == FieldElement(1));
  CHECK(moved[t] == FieldElement(1));
  // m(s2,s3) = 4: sigma_{s2}(alpha_{s3}) = alpha_{s3} + sqrt(2) alpha_{s2}
  auto four = eng.root_through({1}, 2);
  CHECK(four[1] == FieldElement::sqrt_of(2));
  CHECK(four[2] == FieldElement(1));
}

TEST_CASE("reflections preserve the bilinear form and are involutive") {
  for (const char* name : {"A3", "B3", "H3", "I2(inf)"}) {
    cox::Engine eng(cox::CoxeterSystem::preset(name));
    for (int trial = 0; trial < 50; ++trial) {
      auto u = random_root_vector(eng.rank());
      auto v = random_root_vector(eng.rank());
      cox::Word w = testutil::random_word(eng.rank(), 6);
      cox::RootVector uw(eng.rank()), vw(eng.rank());
      // Push u and v through the same chain of reflections.
      auto push = [&](const cox::RootVector& x) {
        cox::RootVector cur = x;
        for (int s : w) {
          FieldElement dot;
          for (int q = 0; q < eng.rank(); ++q)
            dot += eng.sys().bilinear(s, q) * cur[q];
          cur[s] -= dot + dot;
        }
        return cur;
      };
      uw = push(u);
      vw = push(v);
      CHECK(bilinear_value(eng, uw, vw) == bilinear_value(eng, u, v));
      // Applying the reversed chain undoes it.
      cox::Word rev(w.rbegin(), w.rend());
      cox::RootVector back = uw;
      for (int s : rev) {
        FieldElement dot;
        for (int q = 0; q < eng.rank(); ++q)
          dot += eng.sys().bilinear(s, q) * back[q];
        back[s] -= dot + dot;
      }
      CHECK(back == u);
    }
  }
}

TEST_CASE("roots through group elements are sign-coherent") {
  for (const char* name : {"A3", "H3", "I2(5)", "B3"}) {
    cox::Engine eng(cox::CoxeterSystem::preset(name));
    cox::Ball group = cox::full_group(eng);
    for (cox::Elem w : group.vertices)
      for (int s = 0; s < eng.rank(); ++s) {
        auto v = eng.root_through(eng.word(w), s);
        CHECK(cox::sign_coherent(v));
      }
  }
}
