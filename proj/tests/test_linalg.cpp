#include <catch2/catch_amalgamated.hpp>

#include "gsp4/linalg.hpp"
#include "gsp4/ratfun.hpp"

using namespace gsp4;

namespace {
Scalar s(long n) { return Scalar(n); }
Scalar q(long a, long b) { return Scalar(Rational(a, b)); }
}  // namespace

TEST_CASE("matrix arithmetic over exact scalars", "[linalg]") {
  Mat<Scalar> a{{s(1), s(2)}, {s(3), s(4)}};
  Mat<Scalar> b{{s(0), s(1)}, {s(1), s(0)}};

  CHECK(a * b == Mat<Scalar>{{s(2), s(1)}, {s(4), s(3)}});
  CHECK(b * a == Mat<Scalar>{{s(3), s(4)}, {s(1), s(2)}});
  CHECK(a + (-a) == Mat<Scalar>(2, 2));
  CHECK(a.transpose().transpose() == a);
  CHECK(a.trace() == s(5));
  CHECK((a * Mat<Scalar>::identity(2)) == a);
  CHECK(s(2) * a == a + a);
}

TEST_CASE("determinant inverse and rank", "[linalg]") {
  Mat<Scalar> a{{s(1), s(2)}, {s(3), s(4)}};
  CHECK(a.det() == s(-2));
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * a == Mat<Scalar>::identity(2));
  CHECK(a * *inv == Mat<Scalar>::identity(2));
  CHECK((*inv)(0, 0) == s(-2));
  CHECK((*inv)(0, 1) == s(1));

  Mat<Scalar> sing{{s(1), s(2)}, {s(2), s(4)}};
  CHECK(sing.det() == s(0));
  CHECK(sing.rank() == 1);
  CHECK_FALSE(sing.inverse().has_value());

  Mat<Scalar> c{{s(1), q(1, 2), s(0)},
                {s(0), s(1), Scalar::i()},
                {s(0), s(0), s(1)}};
  CHECK(c.det() == s(1));
  CHECK(c.rank() == 3);
}

TEST_CASE("solving linear systems", "[linalg]") {
  Mat<Scalar> a{{s(2), s(1)}, {s(1), s(-1)}};
  auto x = a.solve({s(5), s(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == s(2));
  CHECK((*x)[1] == s(1));

  // inconsistent system
  Mat<Scalar> b{{s(1), s(1)}, {s(1), s(1)}};
  CHECK_FALSE(b.solve({s(0), s(1)}).has_value());

  // underdetermined: returned solution must still satisfy the system
  Mat<Scalar> c{{s(1), s(2), s(3)}};
  auto y = c.solve({s(6)});
  REQUIRE(y.has_value());
  Scalar acc = (*y)[0] + s(2) * (*y)[1] + s(3) * (*y)[2];
  CHECK(acc == s(6));
}

TEST_CASE("null space basis", "[linalg]") {
  Mat<Scalar> a{{s(1), s(2), s(3)}, {s(2), s(4), s(6)}};
  auto ns = a.nullspace();
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) {
    auto img = mat_apply(a, v);
    for (const auto& e : img) CHECK(e.is_zero());
  }

  Mat<Scalar> full = Mat<Scalar>::identity(3);
  CHECK(full.nullspace().empty());

  Mat<Scalar> zero(2, 3);
  CHECK(zero.nullspace().size() == 3);
}

TEST_CASE("matrices over rational functions", "[linalg]") {
  RatFun c = RatFun::var("c");
  RatFun s2 = RatFun::var("s");
  Mat<RatFun> rot{{c, s2}, {-s2, c}};
  RatFun d = rot.det();
  CHECK(d == c * c + s2 * s2);

  auto inv = rot.inverse();
  REQUIRE(inv.has_value());
  Mat<RatFun> prod = *inv * rot;
  CHECK(prod(0, 0) == RatFun(1));
  CHECK(prod(0, 1) == RatFun(0));
  CHECK(prod(1, 0) == RatFun(0));
  CHECK(prod(1, 1) == RatFun(1));
}
