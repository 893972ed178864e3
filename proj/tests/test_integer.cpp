#include <random>

#include "doctest.h"
#include "fbc/integer.hpp"

using fbc::Integer;

TEST_CASE("integer arithmetic agrees with long long on small values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    long long a = d(rng), b = d(rng);
    CHECK(Integer(a) + Integer(b) == Integer(a + b));
    CHECK(Integer(a) - Integer(b) == Integer(a - b));
    CHECK(Integer(a) * Integer(b) == Integer(a * b));
    if (b != 0) {
      CHECK(Integer(a) / Integer(b) == Integer(a / b));
      CHECK(Integer(a) % Integer(b) == Integer(a % b));
    }
    CHECK((Integer(a) < Integer(b)) == (a < b));
  }
}

TEST_CASE("division identity on large values") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> d(-1000000000, 1000000000);
  for (int i = 0; i < 500; ++i) {
    Integer a = Integer(d(rng)) * Integer(d(rng)) * Integer(d(rng));
    Integer b = Integer(d(rng)) * Integer(d(rng));
    if (b.is_zero()) continue;
    Integer q, r;
    Integer::div_mod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    // Truncated division: remainder sign follows the dividend.
    if (!r.is_zero()) CHECK(r.sgn() == a.sgn());
  }
}

TEST_CASE("string round trip and factorial growth") {
  Integer f = 1;
  for (int i = 2; i <= 30; ++i) f *= Integer(i);
  CHECK(f.to_string() == "265252859812191058636308480000000");
  CHECK(Integer::from_string(f.to_string()) == f);
  CHECK(Integer::from_string("-42") == Integer(-42));
  Integer g = f / Integer::from_string("265252859812191058636308480000000");
  CHECK(g.is_one());
}

TEST_CASE("gcd and parity") {
  CHECK(Integer::gcd(12, -18) == Integer(6));
  CHECK(Integer::gcd(0, 5) == Integer(5));
  CHECK(Integer(7).odd());
  CHECK(!Integer(-4).odd());
  CHECK(Integer(-3).odd());
}

TEST_CASE("long long conversion range") {
  bool ok = true;
  CHECK(Integer(123).to_ll(ok) == 123);
  CHECK(ok);
  Integer big = Integer(1) ;
  for (int i = 0; i < 5; ++i) big *= Integer(1000000000000000ll);
  big.to_ll(ok);
  CHECK(!ok);
}
