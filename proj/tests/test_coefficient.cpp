#include <doctest.h>

#include <random>

#include "qpr/coefficient.hpp"
#include "qpr/errors.hpp"
#include "qpr/field.hpp"

using namespace qpr;

TEST_CASE("rationals parse in lowest terms") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
}

TEST_CASE("coefficient grammar") {
  auto lambda = Coefficient::parameter("lambda");
  CHECK(parse_coefficient("1/2") == Coefficient(Rational(1, 2)));
  CHECK(parse_coefficient("lambda") == lambda);
  CHECK(parse_coefficient("-3*lambda") == Coefficient(-3) * lambda);
  CHECK(parse_coefficient("lambda+1-lambda") == Coefficient(1));
  CHECK(parse_coefficient("2*lambda^2*mu") ==
        Coefficient(2) * lambda * lambda * Coefficient::parameter("mu"));
  CHECK(parse_coefficient("0").is_zero());
  CHECK_THROWS_AS(parse_coefficient("1 +"), DomainError);
  CHECK_THROWS_AS(parse_coefficient("2**x"), DomainError);
  CHECK_THROWS_AS(parse_coefficient(""), DomainError);
}

TEST_CASE("coefficient text round-trips") {
  for (const char* text : {"-3*lambda+1/2", "lambda", "0", "-1", "lambda^2*mu-mu+7/3"}) {
    Coefficient c = parse_coefficient(text);
    CHECK(parse_coefficient(c.to_string()) == c);
  }
  CHECK((Coefficient(-3) * Coefficient::parameter("lambda") + Coefficient(Rational(1, 2))).to_string() ==
        "1/2-3*lambda");
}

TEST_CASE("zero terms are never stored") {
  auto lambda = Coefficient::parameter("lambda");
  Coefficient c = lambda - lambda;
  CHECK(c.is_zero());
  CHECK(c.terms().empty());
  CHECK((lambda * Coefficient(0)).terms().empty());
}

TEST_CASE("specialization") {
  Coefficient c = parse_coefficient("lambda^2-2*lambda+1/3");
  CHECK(c.specialize({{"lambda", Rational(3)}}) == Rational(10, 3));
  CHECK_THROWS_AS(c.specialize({}), DomainError);
  Coefficient two = parse_coefficient("lambda*mu");
  CHECK(two.partially_specialize({{"mu", Rational(2)}}) == Coefficient(2) * Coefficient::parameter("lambda"));
  CHECK(c.parameters() == std::set<std::string>{"lambda"});
}

TEST_CASE("specialization is a ring homomorphism") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  auto random_coefficient = [&]() {
    Coefficient c(static_cast<long>(small(rng)));
    for (int k = 0; k < 3; ++k) {
      Rational r(small(rng), 1 + std::abs(small(rng)));
      r.canonicalize();
      Coefficient term(r);
      for (int e = std::abs(small(rng)); e > 0; --e) term *= Coefficient::parameter(k % 2 ? "a" : "b");
      c += term;
    }
    return c;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Coefficient x = random_coefficient();
    Coefficient y = random_coefficient();
    Rational a(small(rng), 2);
    a.canonicalize();
    ParamAssignment at{{"a", a}, {"b", Rational(small(rng))}};
    CHECK((x + y).specialize(at) == x.specialize(at) + y.specialize(at));
    CHECK((x * y).specialize(at) == x.specialize(at) * y.specialize(at));
    PrimeField f5(5);
    std::map<std::string, Fp> mod{{"a", f5.from_rational(at["a"])}, {"b", f5.from_rational(at["b"])}};
    CHECK((x * y).evaluate(mod, f5) == f5.from_rational((x * y).specialize(at)));
  }
}

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  PrimeField f7(7);
  Fp three = f7.from_int(3);
  CHECK((three * three.inverse()) == f7.one());
  CHECK((f7.from_int(-1)).residue() == 6);
  CHECK(f7.from_rational(Rational(1, 2)).residue() == 4);
  CHECK_THROWS_AS(reduce_mod(Rational(1, 7), 7), DomainError);
  CHECK_THROWS_AS(PrimeField(6), DomainError);
  CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), DomainError);
  CHECK_THROWS_AS(f7.zero().inverse(), DomainError);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f7.mul(a, f7.inv(a)) == 1);
}
