#include <cmath>
#include <functional>

#include "doctest.h"
#include "negabeta/base.hpp"
#include "negabeta/errors.hpp"
#include "test_util.hpp"

using namespace negabeta;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected an Error");
}

}  // namespace

TEST_CASE("base construction validates its input") {
  CHECK(kind_of([] { mk({Int(5)}); }) == ErrorKind::DegenerateDegree);
  CHECK(kind_of([] { mk({1, 0, 1}); }) == ErrorKind::NoSuchRoot);  // x^2+1
  // x - 1 is one of the always-stripped factors, so nothing remains
  CHECK(kind_of([] { mk({1, -1}); }) == ErrorKind::DegenerateDegree);
  // a root below 1 is found but rejected
  CHECK(kind_of([] { mk({-1, 3}); }) == ErrorKind::NoSuchRoot);  // root 1/3

  // factors x, x-1 and x+1 are stripped before the root hunt
  auto g1 = mk(golden_poly());
  auto g2 = mk({0, -1, -1, 1});  // x * (x^2 - x - 1)
  CHECK(g2->degree == 2);
  CHECK(g2->modulus_int == g1->modulus_int);
  auto g3 = mk({-1, -2, 0, 1});  // (x + 1)(x^2 - x - 1)
  CHECK(g3->degree == 2);
  CHECK(g3->modulus_int == g1->modulus_int);

  // repeated factors are reduced away
  auto g4 = mk({1, 2, -1, -2, 1});  // (x^2 - x - 1)^2
  CHECK(g4->degree == 2);
  CHECK(floor_beta(g4) == 1);
}

TEST_CASE("root selection among several real roots") {
  auto largest = mk(golden_sq_poly());  // roots ~0.382, ~2.618
  CHECK(floor_beta(largest) == 2);

  BaseOptions pick;
  pick.root_index = 1;
  auto same = mk(golden_sq_poly(), pick);
  CHECK(floor_beta(same) == 2);

  pick.root_index = 0;  // ~0.382, not a valid base
  CHECK(kind_of([&] { mk(golden_sq_poly(), pick); }) == ErrorKind::NoSuchRoot);
  pick.root_index = 7;
  CHECK(kind_of([&] { mk(golden_sq_poly(), pick); }) == ErrorKind::NoSuchRoot);
}

TEST_CASE("field arithmetic is exact") {
  auto ctx = mk(tribonacci_poly());
  FieldElement b = FieldElement::beta(ctx);
  FieldElement one = FieldElement::one(ctx);

  CHECK(b * b * b == b * b + b + one);  // the defining relation
  CHECK(b.pow(5) == b.pow(2) * b.pow(3));
  CHECK(b.pow(0) == one);
  CHECK((b - one) * (b - one).inverse() == one);
  CHECK(one / b == b.inverse());
  // 1/beta has the closed form beta^2 - beta - 1
  CHECK(b.inverse() == b * b - b - one);
  CHECK((-b).abs() == b);
  CHECK(b.abs() == b);

  CHECK(FieldElement::from_rat(ctx, Rat(3, 4)) +
            FieldElement::from_rat(ctx, Rat(1, 4)) ==
        one);
  CHECK(FieldElement::from_int(ctx, Int(-2)) ==
        FieldElement::from_rat(ctx, Rat(-2)));

  CHECK(kind_of([&] { FieldElement::zero(ctx).inverse(); }) ==
        ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { (void)(b / FieldElement::zero(ctx)); }) ==
        ErrorKind::DivisionByZero);
}

TEST_CASE("exact sign, floor and order") {
  auto ctx = mk(tribonacci_poly());
  FieldElement b = FieldElement::beta(ctx);
  FieldElement one = FieldElement::one(ctx);

  CHECK(b.sign() == 1);
  CHECK((-b).sign() == -1);
  CHECK(FieldElement::zero(ctx).sign() == 0);
  CHECK(FieldElement::zero(ctx).is_zero());

  CHECK(b.floor() == 1);
  CHECK((b * b).floor() == 3);
  CHECK((-b).floor() == -2);
  CHECK(floor_beta(ctx) == 1);
  CHECK_FALSE(beta_is_integer(ctx));
  CHECK(beta_is_integer(mk(base_two_poly())));

  CHECK(b - one < one);       // beta - 1 ~ 0.839
  CHECK(one <= b);
  CHECK_FALSE(b < b);
  CHECK(b != one);

  CHECK_FALSE(b.is_rational());
  FieldElement q = FieldElement::from_rat(ctx, Rat(-7, 3));
  CHECK(q.is_rational());
  CHECK(q.rational_value() == Rat(-7, 3));
}

TEST_CASE("coordinates round-trip") {
  auto ctx = mk(tribonacci_poly());
  std::vector<Rat> c = {Rat(1, 2), Rat(-3), Rat(5, 7)};
  FieldElement v(ctx, c);
  CHECK(v.coords() == c);
  FieldElement w = FieldElement::from_rat(ctx, Rat(1, 2)) -
                   FieldElement::beta(ctx) * Rat(3) +
                   FieldElement::beta(ctx) * FieldElement::beta(ctx) *
                       Rat(5, 7);
  CHECK(v == w);
}

TEST_CASE("numeric embeddings") {
  auto trib = mk(tribonacci_poly());
  FieldElement b = FieldElement::beta(trib);

  CReal b0 = b.embed(0);
  CHECK(b0.im == 0);  // the defining place is exactly real
  CHECK(std::abs(static_cast<double>(b0.re) - 1.8392867552141612) < 1e-12);
  CHECK(std::abs(b.approx_double() - 1.8392867552141612) < 1e-12);

  // the other two places form a complex conjugate pair of modulus ~0.7374
  CReal b1 = b.embed(1);
  CHECK(b1.im != 0);
  CHECK(std::abs(static_cast<double>(b1.abs()) - 0.7373527057543752) < 1e-10);

  const auto& all = base_embeddings(trib, 96);
  CHECK(all.size() == 3);
  CHECK(all[0].im == 0);

  auto golden = mk(golden_poly());
  CReal conj = FieldElement::beta(golden).embed(1);
  CHECK(conj.im == 0);
  CHECK(std::abs(static_cast<double>(conj.re) + 0.6180339887498949) < 1e-12);

  CHECK(kind_of([&] { b.embed(9); }) == ErrorKind::BadEmbeddingIndex);

  // embedding respects arithmetic: (b^2)(1) == (b(1))^2
  CReal sq = (b * b).embed(1);
  CReal prod = b1 * b1;
  CHECK(static_cast<double>((sq - prod).abs()) < 1e-20);
}

TEST_CASE("domain endpoints") {
  auto ctx = mk(tribonacci_poly());
  FieldElement l = domain_left(ctx);
  FieldElement r = domain_right(ctx);
  FieldElement b = FieldElement::beta(ctx);
  CHECK(l * (b + FieldElement::one(ctx)) == -b);
  CHECK(r * (b + FieldElement::one(ctx)) == FieldElement::one(ctx));
  CHECK(l.sign() < 0);
  CHECK(r.sign() > 0);
  CHECK(r - l == FieldElement::one(ctx));
}

TEST_CASE("sign refinement respects the precision budget") {
  BaseOptions tiny;
  tiny.precision_bits = 8;
  auto ctx = mk(tribonacci_poly(), tiny);
  FieldElement b = FieldElement::beta(ctx);
  // beta^2 = 3.3829757679... ; a rational this close needs more than 8 bits
  FieldElement nearby = FieldElement::from_rat(ctx, Rat(33829757679LL, Int(10000000000LL)));
  CHECK(kind_of([&] { (b * b - nearby).sign(); }) ==
        ErrorKind::RefinementBudgetExceeded);
}

TEST_CASE("non-invertible residues in a reducible quotient") {
  // (x^2 - x - 1)(x^2 - 3x + 1): the base is the largest root ~2.618, a
  // root of the second factor. Arithmetic happens modulo the product, so
  // the image of the first factor is a zero divisor that is nonzero at the
  // base; the second factor's image is the zero of the represented number.
  auto ctx = mk({-1, 2, 3, -4, 1});
  CHECK(ctx->degree == 4);
  FieldElement b = FieldElement::beta(ctx);
  FieldElement one = FieldElement::one(ctx);
  CHECK(floor_beta(ctx) == 2);

  FieldElement stranger = b * b - b - one;
  CHECK(stranger.sign() > 0);  // nonzero at the chosen root
  CHECK(kind_of([&] { stranger.inverse(); }) == ErrorKind::NonInvertible);

  FieldElement vanisher = b * b - (b + b + b) + one;
  CHECK(kind_of([&] { vanisher.inverse(); }) == ErrorKind::DivisionByZero);
}
