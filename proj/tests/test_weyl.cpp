#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "weylab/parser.hpp"
#include "weylab/weyl.hpp"

using namespace weylab;
using namespace weylab::testing;

using Op = WeylOp<Rat>;

TEST_CASE("defining relation and basic products") {
  CHECK(commutator(Op::d(), Op::x()) == Op::one());
  // D x = x D + 1
  CHECK(Op::d() * Op::x() == Op::x() * Op::d() + Op::one());
  // D^2 x^2 = x^2 D^2 + 4 x D + 2
  const Op lhs = op_pow(Op::d(), 2) * op_pow(Op::x(), 2);
  const Op rhs = op_pow(Op::x(), 2) * op_pow(Op::d(), 2) +
                 Rat(4) * (Op::x() * Op::d()) + Rat(2) * Op::one();
  CHECK(lhs == rhs);
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(21);
  for (int t = 0; t < 500; ++t) {
    const Op a = random_op(rng, 5, 4);
    const Op b = random_op(rng, 5, 4);
    const Op c = random_op(rng, 5, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("order is additive for nonzero factors") {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const Op a = random_op_nonzero(rng, 5, 4);
    const Op b = random_op_nonzero(rng, 5, 4);
    CHECK((a * b).order() == a.order() + b.order());
  }
}

TEST_CASE("op_pow matches repeated product") {
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const Op a = random_op(rng, 2, 2, 3);
    Op acc = Op::one();
    for (int k = 0; k <= 4; ++k) {
      CHECK(op_pow(a, k) == acc);
      acc = acc * a;
    }
  }
}

TEST_CASE("adjoint examples") {
  CHECK(formal_adjoint(Op::d()) == -Op::d());
  CHECK(formal_adjoint(Op::x()) == Op::x());
  // (x D)^dag = -D x = -x D - 1
  CHECK(formal_adjoint(Op::x() * Op::d()) == -(Op::x() * Op::d()) - Op::one());
  CHECK(is_self_adjoint(parse_op("(D^2 + x^3 + 5)^2 + 2*x")));
}

TEST_CASE("adjoint laws on random pairs") {
  Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    const Op a = random_op(rng, 4, 3);
    const Op b = random_op(rng, 4, 3);
    CHECK(formal_adjoint(a * b) == formal_adjoint(b) * formal_adjoint(a));
    CHECK(formal_adjoint(a + b) == formal_adjoint(a) + formal_adjoint(b));
    CHECK(formal_adjoint(formal_adjoint(a)) == a);
  }
}

TEST_CASE("commuting with x differentiates in D") {
  // [L, x] = dL/dD term by term: [D^j, x] = j D^(j-1)
  Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    const Op a = random_op(rng, 5, 4);
    Op expect;
    for (int j = 1; j <= a.order(); ++j)
      expect += Rat(j) * Op::term(a.coeff(j), j - 1);
    CHECK(commutator(a, Op::x()) == expect);
  }
}

TEST_CASE("homomorphism respects sums and products") {
  Rng rng(26);
  for (int t = 0; t < 100; ++t) {
    const AutWord w = random_word(rng, 3, 8);
    auto [X, D] = images_of_word(w);
    REQUIRE(verify_endomorphism(X, D));
    for (int s = 0; s < 10; ++s) {
      const Op a = random_op(rng, 3, 3, 4);
      const Op b = random_op(rng, 3, 3, 4);
      const Op fa = apply_homomorphism(X, D, a);
      const Op fb = apply_homomorphism(X, D, b);
      CHECK(apply_homomorphism(X, D, a * b) == fa * fb);
      CHECK(apply_homomorphism(X, D, a + b) == fa + fb);
    }
  }
  CHECK_THROWS_AS(apply_homomorphism(Op::x(), Op::x(), Op::d()), NotEndomorphism);
}

TEST_CASE("triple ad examples") {
  CHECK(triple_ad_x(op_pow(Op::d(), 4)) == Rat(24) * Op::d());
  CHECK(triple_ad_x(op_pow(Op::d(), 3)) == Rat(6) * Op::one());
  CHECK(triple_ad_x(Op::x()).is_zero());
  CHECK(triple_ad_x(op_pow(Op::d(), 2)).is_zero());
}

TEST_CASE("triple ad of a squared second-order operator") {
  // L = (a D^2 + b D + c)^2 + d with polynomial a, b, c, d:
  // [[[L, x], x], x] = 24 a^2 D + 12 a b + 12 a a'
  Rng rng(27);
  for (int t = 0; t < 100; ++t) {
    const Poly<Rat> a = random_poly(rng, 4);
    const Poly<Rat> b = random_poly(rng, 4);
    const Poly<Rat> c = random_poly(rng, 4);
    const Poly<Rat> d = random_poly(rng, 4);
    Op B = Op::term(a, 2) + Op::term(b, 1) + Op::constant(c);
    const Op L = B * B + Op::constant(d);
    const Op expect = Op::term(Rat(24) * (a * a), 1) +
                      Op::constant(Rat(12) * (a * b) + Rat(12) * (a * a.derive()));
    CHECK(triple_ad_x(L) == expect);
  }
}

TEST_CASE("printing normal forms") {
  CHECK(op_to_string(Op::d() * Op::x()) == "(x)*D + 1");
  CHECK(op_to_string(op_pow(Op::x(), 2) * op_pow(Op::d(), 2)) == "(x^2)*D^2");
  CHECK(op_to_string(Op::zero()) == "0");
  CHECK(op_to_string(op_pow(Op::d(), 3)) == "D^3");
  CHECK(op_to_string(Op::one() - Op::x()) == "-x + 1");
}
