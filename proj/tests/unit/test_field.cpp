#include <doctest.h>

#include "fplab/field.hpp"
#include "fplab/random.hpp"
#include "gen.hpp"

using namespace fplab;

TEST_CASE("prime field construction") {
  CHECK(PrimeField(5).modulus() == 5);
  CHECK(PrimeField(101).modulus() == 101);
  CHECK(PrimeField(2).modulus() == 2);
  CHECK_ERROR_CODE(PrimeField(4), ErrorCode::CompositeModulus);
  CHECK_ERROR_CODE(PrimeField(1), ErrorCode::CompositeModulus);
  CHECK_ERROR_CODE(PrimeField(0), ErrorCode::CompositeModulus);
  CHECK_ERROR_CODE(PrimeField(1'000'003), ErrorCode::CompositeModulus);  // prime, but past desk scale
  CHECK_ERROR_CODE(Field::prime(91), ErrorCode::CompositeModulus);
}

TEST_CASE("is_prime against a sieve") {
  std::vector<bool> composite(2000, false);
  for (std::size_t i = 2; i < composite.size(); ++i)
    for (std::size_t j = i * i; j < composite.size(); j += i) composite[j] = true;
  for (std::uint64_t n = 0; n < composite.size(); ++n) CHECK(is_prime(n) == (n >= 2 && !composite[n]));
}

TEST_CASE("inverse examples") {
  const PrimeField f5(5), f7(7);
  CHECK(inverse(f5.element(2)) == f5.element(3));
  CHECK(inverse(f7.element(1)) == f7.element(1));
  CHECK_ERROR_CODE(inverse(f5.element(0)), ErrorCode::ZeroInverse);
  CHECK_ERROR_CODE(f5.inv(0), ErrorCode::ZeroInverse);
  CHECK(f5.element(-1).value == 4);
}

TEST_CASE("element operators reject mixed moduli") {
  const PrimeField f5(5), f7(7);
  CHECK_ERROR_CODE(f5.element(1) + f7.element(1), ErrorCode::MixedContexts);
  CHECK_ERROR_CODE(f5.element(1) * f7.element(1), ErrorCode::MixedContexts);
  CHECK_ERROR_CODE(f5.element(1) - f7.element(1), ErrorCode::MixedContexts);
  CHECK((f5.element(3) + f5.element(4)).value == 2);
  CHECK((f5.element(3) - f5.element(4)).value == 4);
  CHECK((f5.element(3) * f5.element(4)).value == 2);
  CHECK((-f5.element(3)).value == 2);
}

TEST_CASE("extension field delta") {
  CHECK(ExtensionField(3).delta() == 2);
  CHECK(ExtensionField(5).delta() == 2);
  CHECK(ExtensionField(7).delta() == 3);
  CHECK_ERROR_CODE(ExtensionField(2), ErrorCode::EvenCharacteristic);
  CHECK_ERROR_CODE(ExtensionField(9), ErrorCode::CompositeModulus);
  for (const std::uint64_t p : {3, 5, 7, 11, 13, 101}) {
    const ExtensionField ext(p);
    const PrimeField& b = ext.base();
    CHECK(b.pow(ext.delta(), (p - 1) / 2) == p - 1);
    for (Elem d = 2; d < ext.delta(); ++d) CHECK(b.is_square(d));
  }
}

TEST_CASE("ext_mul examples") {
  const ExtensionField ext(3);
  const auto one_plus_w = ext.element(1, 1);
  CHECK(ext_mul(one_plus_w, one_plus_w) == ext.element(0, 2));
  CHECK(ext_mul(ext.omega(), ext.omega()) == ext.element(2, 0));
  const auto x = ext.element(2, 1);
  CHECK(ext_mul(ext.element(1, 0), x) == x);
  CHECK_ERROR_CODE(ext_mul(ext.element(1, 1), ExtensionField(5).element(1, 1)), ErrorCode::MixedContexts);
  CHECK_ERROR_CODE(ext_add(ext.element(1, 1), ExtensionField(7).element(1, 1)), ErrorCode::MixedContexts);
}

TEST_CASE("field axioms on random triples") {
  Rng rng(7);
  for (const std::uint64_t p : {3, 5, 7, 101}) {
    for (const bool quad : {false, true}) {
      const Field f = quad ? Field::quadratic(p) : Field::prime(p);
      CAPTURE(f.describe());
      for (int i = 0; i < 1000; ++i) {
        const Elem x = gen::elem(rng, f), y = gen::elem(rng, f), z = gen::elem(rng, f);
        REQUIRE(x < f.order());
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
        CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        CHECK(f.add(x, f.neg(x)) == 0);
        CHECK(f.sub(f.add(x, y), y) == x);
        CHECK(f.mul(x, 1) == x);
        CHECK(f.mul(x, y) < f.order());
      }
    }
  }
}

TEST_CASE("every nonzero element has an inverse") {
  for (const std::uint64_t p : {2, 3, 5, 7, 101}) {
    const Field f = Field::prime(p);
    for (Elem x = 1; x < f.order(); ++x) CHECK(f.mul(x, f.inv(x)) == 1);
    CHECK_ERROR_CODE(f.inv(0), ErrorCode::ZeroInverse);
  }
  for (const std::uint64_t p : {3, 5, 7, 11}) {
    const Field f = Field::quadratic(p);
    for (Elem x = 1; x < f.order(); ++x) CHECK(f.mul(x, f.inv(x)) == 1);
  }
}

TEST_CASE("quadratic field structure") {
  const Field f9 = Field::quadratic(3);
  CHECK(f9.order() == 9);
  CHECK(f9.characteristic() == 3);
  const Elem w = f9.make(0, 1);
  CHECK(f9.mul(w, w) == f9.make(f9.delta(), 0));
  // Exhaustive orders: F_9^* is cyclic of order 8, so some element has order 8
  // and every order divides 8.
  std::size_t max_order = 0;
  for (Elem x = 1; x < 9; ++x) {
    Elem acc = x;
    std::size_t order = 1;
    while (acc != 1) {
      acc = f9.mul(acc, x);
      ++order;
    }
    CHECK(8 % order == 0);
    max_order = std::max(max_order, order);
  }
  CHECK(max_order == 8);
  // The prime subfield is closed.
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      CHECK(f9.in_prime_subfield(f9.add(a, b)));
      CHECK(f9.in_prime_subfield(f9.mul(a, b)));
    }
  CHECK_ERROR_CODE(Field::quadratic(2), ErrorCode::EvenCharacteristic);
  CHECK_ERROR_CODE(Field::quadratic(46'049), ErrorCode::TooLarge);
}

TEST_CASE("unified field agrees with ExtFieldElement arithmetic") {
  const ExtensionField ext(7);
  const Field f = Field::quadratic(7);
  for (Elem x = 0; x < f.order(); ++x)
    for (Elem y = 0; y < f.order(); y += 3) {
      const auto ex = ext.element(f.part0(x), f.part1(x));
      const auto ey = ext.element(f.part0(y), f.part1(y));
      const auto prod = ext_mul(ex, ey);
      const auto sum = ext_add(ex, ey);
      CHECK(f.mul(x, y) == f.make(prod.a0, prod.a1));
      CHECK(f.add(x, y) == f.make(sum.a0, sum.a1));
    }
}

TEST_CASE("require_same_field") {
  CHECK_NOTHROW(require_same_field(Field::prime(5), Field::prime(5), "t"));
  CHECK_ERROR_CODE(require_same_field(Field::prime(5), Field::prime(7), "t"), ErrorCode::MixedContexts);
  CHECK_ERROR_CODE(require_same_field(Field::prime(3), Field::quadratic(3), "t"), ErrorCode::MixedContexts);
}
