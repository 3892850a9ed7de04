#include <doctest.h>

#include "fplab/energy.hpp"
#include "fplab/oracle/brute_force.hpp"
#include "gen.hpp"

using namespace fplab;

TEST_CASE("additive_energy examples") {
  const Field f5 = Field::prime(5);
  CHECK(additive_energy(f5, std::vector<Elem>{0}) == 1);
  CHECK(additive_energy(f5, std::vector<Elem>{0, 1}) == 6);
  CHECK(additive_energy(f5, std::vector<Elem>{0, 1, 2, 3, 4}) == 125);
  CHECK(additive_energy(f5, std::vector<Elem>{}) == 0);
  CHECK(additive_energy(f5, std::vector<Elem>{1, 0, 1}) == 6);  // duplicates ignored
  CHECK_ERROR_CODE(additive_energy(f5, std::vector<Elem>{7}), ErrorCode::InvalidArgument);
  const Field big = Field::prime(10007);
  CHECK_ERROR_CODE(additive_energy(big, interval_set(big, 4097)), ErrorCode::ScaleExceeded);
  CHECK_NOTHROW(additive_energy(big, interval_set(big, 4096)));
}

TEST_CASE("cross_energy examples") {
  const Field f5 = Field::prime(5);
  const std::vector<Elem> c{0, 1};
  CHECK(cross_energy(f5, c, c) == additive_energy(f5, c));
  CHECK(cross_energy(f5, c, std::vector<Elem>{0}) == 2);
  CHECK(cross_energy(f5, c, dilate(f5, c, 1)) == 6);
  CHECK(dilate(f5, c, 3) == ElemSet{0, 3});
}

TEST_CASE("energies match the quartic oracle") {
  Rng rng(201);
  for (int trial = 0; trial < 300; ++trial) {
    const Field f = trial % 5 == 4 ? Field::quadratic(3) : Field::prime(std::array<std::uint64_t, 4>{5, 7, 31, 101}[trial % 4]);
    const auto c = gen::elems(rng, f, 0, 32);
    const auto d = gen::elems(rng, f, 0, 32);
    const auto e = additive_energy(f, c);
    CHECK(e == oracle::additive_energy(f, c));
    CHECK(cross_energy(f, c, d) == oracle::cross_energy(f, c, d));
    const auto n = static_cast<std::uint64_t>(c.size());
    CHECK(n * n <= e);
    CHECK(e <= n * n * n);
  }
}

TEST_CASE("eight_tuple_count examples and oracle") {
  const Field f5 = Field::prime(5);
  CHECK(eight_tuple_count(f5, std::vector<Elem>{0}) == 1);
  CHECK(eight_tuple_count(f5, std::vector<Elem>{0, 1}) == 152);
  CHECK(oracle::eight_tuple_count(f5, std::vector<Elem>{0, 1}) == 152);
  const Field f101 = Field::prime(101);
  const std::vector<Elem> c4{0, 1, 2, 3};
  CHECK(eight_tuple_count(f101, c4) == oracle::eight_tuple_count(f101, c4));
  Rng rng(203);
  for (int trial = 0; trial < 40; ++trial) {
    const Field f = Field::prime(std::array<std::uint64_t, 3>{7, 13, 101}[trial % 3]);
    const auto c = gen::elems(rng, f, 1, trial < 4 ? 8 : 5);
    CHECK(eight_tuple_count(f, c) == oracle::eight_tuple_count(f, c));
  }
  CHECK_ERROR_CODE(eight_tuple_count(f101, interval_set(f101, 65)), ErrorCode::ScaleExceeded);
}

TEST_CASE("dilate_energy_sum examples") {
  const Field f5 = Field::prime(5);
  const std::vector<Elem> c{0, 1};
  const auto one = dilate_energy_sum(f5, c, std::vector<Elem>{1});
  CHECK(one.sum == 6);
  CHECK(one.rhs == doctest::Approx(23.2));
  CHECK(one.within_rhs);
  const std::vector<Elem> ys{1, 2, 3, 4};
  CHECK(dilate_energy_sum(f5, std::vector<Elem>{0}, ys).sum == 4);
  // Dilation by 2 or 3 makes all four sums distinct, so those dilates only
  // contribute 4 each: 6 + 4 + 4 + 6.
  CHECK(dilate_energy_sum(f5, c, ys).sum == 20);
  CHECK(oracle::dilate_energy_sum(f5, c, ys) == 20);
  CHECK_ERROR_CODE(dilate_energy_sum(f5, c, std::vector<Elem>{0, 1}), ErrorCode::ZeroDilate);
}

TEST_CASE("dilate sums match the oracle and stay under the explicit bound") {
  Rng rng(207);
  for (int trial = 0; trial < 200; ++trial) {
    const Field f = Field::prime(std::array<std::uint64_t, 4>{5, 7, 11, 13}[trial % 4]);
    const auto c = gen::elems(rng, f, 0, f.order());
    const auto ys = random_nonzero_subset(f, rng.between(1, f.order() - 1), rng.next());
    const auto res = dilate_energy_sum(f, c, ys);
    CHECK(res.sum == oracle::dilate_energy_sum(f, c, ys));
    CHECK(res.within_rhs);
    CHECK(static_cast<double>(res.sum) <= res.rhs * (1 + 1e-12));
  }
}
