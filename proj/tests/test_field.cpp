#include "doctest.h"
#include "helpers.hpp"

using namespace uc;
using th::num;

TEST_CASE("rational arithmetic") {
  auto k = th::Q();
  CHECK(num(k, "1/3") + num(k, "1/6") == num(k, "1/2"));
  CHECK((num(k, "1/3") + num(k, "1/6")).str() == "1/2");
  CHECK(num(k, "4/2").str() == "2");
  CHECK(num(k, "-6/4").str() == "-3/2");
  CHECK_THROWS_AS(num(k, "1") / Scalar::zero(k), Error);
}

TEST_CASE("prime field arithmetic") {
  auto k = th::Fp(7);
  CHECK(num(k, "2").inverse() == num(k, "4"));
  CHECK(field_arith(num(k, "1"), num(k, "2"), ArithOp::Div).residue() == 4);
  CHECK(num(k, "-1").residue() == 6);
  CHECK(num(k, "1/3").residue() == 5);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
  auto k2 = th::Fp(2);
  CHECK(num(k2, "1") + num(k2, "1") == Scalar::zero(k2));
}

TEST_CASE("function field reduces fractions") {
  auto k = th::QST();
  Scalar q = num(k, "s^2 - t^2") / num(k, "s - t");
  CHECK(q == num(k, "s + t"));
  CHECK(q.canonicalize() == q);
  Scalar a = num(k, "(s + 1)/(2*t)");
  CHECK(a * a.inverse() == Scalar::one(k));
  CHECK(a.specialize(num(th::Q(), "1"), num(th::Q(), "1")) == num(th::Q(), "1"));
  CHECK_THROWS_AS(a.specialize(num(th::Q(), "1"), num(th::Q(), "0")), Error);
}

TEST_CASE("field specs parse") {
  CHECK(FieldSpec::parse("Q").is_rationals());
  CHECK(FieldSpec::parse("Fp:7").characteristic() == 7);
  CHECK(FieldSpec::parse("Q(s,t)").is_function_field());
  CHECK(FieldSpec::parse("Fp:2(s,t)").characteristic() == 2);
  CHECK(FieldSpec::parse("Fp:2(s,t)").str() == "Fp:2(s,t)");
  CHECK_THROWS_AS(FieldSpec::parse("Fp:4"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(num(th::Q(), "1") + num(th::Fp(5), "1"), Error);
  try {
    (void)(num(th::Q(), "1") * num(th::Fp(5), "1"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("random scalars") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(th::Fp(5), 100, rng);
    CHECK(a.residue() < 5);
    Scalar b = random_scalar(th::Q(), 10, rng);
    CHECK(b.rational().get_den() == 1);
    CHECK(abs(b.rational()) <= 10);
  }
  Rng r1(42), r2(42);
  for (int i = 0; i < 20; ++i) CHECK(random_scalar(th::Q(), 1000, r1) == random_scalar(th::Q(), 1000, r2));
  CHECK_THROWS_AS(random_scalar(th::QST(), 10, rng), Error);
}

TEST_CASE("field axioms on random triples") {
  Rng rng(11);
  for (const auto& k : {th::Q(), th::Fp(101), th::Fp(2)}) {
    for (int i = 0; i < 100; ++i) {
      Scalar a = random_scalar(k, 1000, rng), b = random_scalar(k, 1000, rng), c = random_scalar(k, 1000, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(k));
      CHECK(a.canonicalize().canonicalize() == a.canonicalize());
    }
  }
  auto k = th::QST();
  Scalar s = Scalar::var_s(k), t = Scalar::var_t(k);
  for (int i = 0; i < 20; ++i) {
    Scalar a = s.pow(static_cast<unsigned>(i % 3)) + t * Scalar::from_int(k, i + 1);
    Scalar b = s - t * Scalar::from_int(k, i);
    CHECK((a / b) * b == a);
  }
}
