#include <doctest.h>

#include <set>

#include "fplab/oracle/brute_force.hpp"
#include "fplab/projections.hpp"
#include "gen.hpp"

using namespace fplab;

namespace {

Vec v2(Elem a, Elem b) { return Vec{a, b, 0, 0}; }

PointSet diagonal3() {
  return PointSet(Field::prime(5), 2, {make_point({0, 0}), make_point({1, 1}), make_point({2, 2})});
}

// Canonical coset label of x + W: the smallest member.
Vec coset_min(const Field& f, const Vec& x, const std::vector<Vec>& w, int d) {
  Vec best{};
  bool first = true;
  for (const auto& v : w) {
    Vec y{};
    for (int i = 0; i < d; ++i) y[i] = f.add(x[i], v[i]);
    if (first || y < best) best = y;
    first = false;
  }
  return best;
}

}  // namespace

TEST_CASE("projection_size examples") {
  const Field f5 = Field::prime(5);
  const PointSet line(f5, 2, {make_point({0, 0}), make_point({1, 0}), make_point({2, 0})});
  CHECK(projection_size(line, make_subspace(f5, {v2(0, 1)}, 2)) == 1);
  CHECK(projection_size(diagonal3(), make_subspace(f5, {v2(1, 4)}, 2)) == 1);
  CHECK(projection_size(diagonal3(), make_subspace(f5, {v2(1, 1)}, 2)) == 3);
  CHECK(projection_size(PointSet(f5, 2), make_subspace(f5, {v2(1, 1)}, 2)) == 0);
  const Vec w3{1, 0, 0, 0};
  CHECK_ERROR_CODE(projection_size(diagonal3(), make_subspace(f5, {w3}, 3)), ErrorCode::DimensionMismatch);
}

TEST_CASE("exceptional_set examples") {
  const Field f5 = Field::prime(5);
  const PointSet line = horizontal_line_set(f5);
  const auto r = exceptional_set(line, 2, 1, Comparison::Strict);
  REQUIRE(r.size() == 1);
  CHECK(r.members[0].subspace == make_subspace(f5, {v2(0, 1)}, 2));
  CHECK(r.members[0].projection_size == 1);
  CHECK(r.grassmannian_size == 6);
  CHECK(r.concentration == 1);
  CHECK(exceptional_set(line, 6, 1, Comparison::Strict).size() == 6);
  // Non-strict at t = 1 still only catches the collapsing direction.
  CHECK(exceptional_set(line, 1, 1, Comparison::NonStrict).size() == 1);
  CHECK(exceptional_set(line, 5, 1, Comparison::NonStrict).size() == 6);

  const auto empty = exceptional_set(PointSet(f5, 2), 1, 1, Comparison::Strict);
  CHECK(empty.size() == 6);
  for (const auto& m : empty.members) CHECK(m.projection_size == 0);

  const auto none = exceptional_set(diagonal3(), 1, 1, Comparison::Strict);
  CHECK(none.size() == 0);
  CHECK(none.concentration == 0);
  CHECK(r.s == doctest::Approx(std::log(2.0) / std::log(5.0)));
}

TEST_CASE("exceptional_set members are sorted and respect the comparison") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Field f = Field::prime(7);
    const PointSet e = gen::points(rng, f, 2, 49);
    const auto t = rng.between(1, 8);
    for (const auto cmp : {Comparison::Strict, Comparison::NonStrict}) {
      const auto r = exceptional_set(e, t, 1, cmp);
      for (std::size_t i = 0; i < r.members.size(); ++i) {
        const auto sz = r.members[i].projection_size;
        CHECK((cmp == Comparison::Strict ? sz < t : sz <= t));
        CHECK(sz == projection_size(e, r.members[i].subspace));
        if (i) CHECK(r.members[i - 1].subspace < r.members[i].subspace);
      }
    }
  }
}

TEST_CASE("exceptional_set agrees with the coset oracle") {
  Rng rng(5);
  for (const auto& f : {Field::prime(3), Field::prime(5), Field::prime(7), Field::quadratic(3)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const PointSet e = gen::points(rng, f, 2, std::uint64_t{f.order()} * f.order());
      const auto t = rng.between(1, f.order() + 1);
      for (const bool strict : {true, false}) {
        const auto r = exceptional_set(e, t, 1, strict ? Comparison::Strict : Comparison::NonStrict);
        const auto scan = oracle::exceptional_directions(e, t, strict);
        CHECK(r.size() == scan.count);
      }
      for (const auto& v : enumerate_grassmannian(1, 2, f)) {
        CHECK(projection_size(e, v) == oracle::projection_size_by_cosets(e, v.rows[0]));
      }
    }
  }
}

TEST_CASE("coset inequality and the equality case") {
  Rng rng(9);
  for (const std::uint64_t q : {2, 3, 5}) {
    const Field f = Field::prime(q);
    for (int d = 2; d <= 3; ++d)
      for (int k = 1; k < d; ++k) {
        const auto grass = enumerate_grassmannian(k, d, f);
        for (int trial = 0; trial < 20; ++trial) {
          std::uint64_t total = 1;
          for (int i = 0; i < d; ++i) total *= q;
          const PointSet e = gen::points(rng, f, d, total);
          for (const auto& v : grass) {
            const auto w = orthogonal_complement(f, v).vectors(f);
            std::set<Vec> cosets;
            for (const auto& pt : e) cosets.insert(coset_min(f, pt.coords, w, d));
            const auto size = projection_size(e, v);
            CHECK(size == cosets.size());
            CHECK(size * w.size() >= e.size());
            // Equality iff every coset met is fully contained in E.
            bool full = true;
            for (const auto& c : cosets)
              for (const auto& x : w) {
                Point pt;
                pt.dim = static_cast<std::uint8_t>(d);
                for (int i = 0; i < d; ++i) pt.coords[i] = f.add(c[i], x[i]);
                full = full && e.contains(pt);
              }
            CHECK((size * w.size() == e.size()) == full);
          }
        }
      }
  }
}

TEST_CASE("projection sizes are translation invariant") {
  Rng rng(13);
  for (const std::uint64_t q : {5, 7, 11}) {
    const Field f = Field::prime(q);
    const auto grass = enumerate_grassmannian(1, 2, f);
    for (int trial = 0; trial < 20; ++trial) {
      const PointSet e = gen::points(rng, f, 2, q * q);
      const PointSet moved = e.translated(gen::vec(rng, f, 2));
      CHECK(moved.size() == e.size());
      for (const auto& v : grass) CHECK(projection_size(e, v) == projection_size(moved, v));
    }
  }
}

TEST_CASE("concentration examples") {
  const Field f5 = Field::prime(5);
  const std::vector<Subspace> two_lines{make_subspace(f5, {v2(1, 0)}, 2), make_subspace(f5, {v2(1, 1)}, 2)};
  CHECK(concentration(f5, two_lines) == 1);
  const Field f3 = Field::prime(3);
  const Vec x{1, 0, 0, 0}, y{0, 1, 0, 0}, z{0, 0, 1, 0};
  const std::vector<Subspace> planes{make_subspace(f3, {x, y}, 3), make_subspace(f3, {x, z}, 3)};
  CHECK(concentration(f3, planes) == 2);
  CHECK(concentration(f3, std::vector<Subspace>{planes[0]}) == 1);
  CHECK_ERROR_CODE(concentration(f3, std::vector<Subspace>{}), ErrorCode::EmptyInput);
}

TEST_CASE("concentration is 1 for lines in the plane and matches a recount in F_3^3") {
  Rng rng(17);
  const Field f7 = Field::prime(7);
  const auto lines = enumerate_grassmannian(1, 2, f7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Subspace> pick;
    for (const auto& l : lines)
      if (rng.below(2)) pick.push_back(l);
    if (pick.empty()) pick.push_back(lines[0]);
    CHECK(concentration(f7, pick) == 1);
  }
  const Field f3 = Field::prime(3);
  const auto planes = enumerate_grassmannian(2, 3, f3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Subspace> pick;
    for (const auto& pl : planes)
      if (rng.below(3) == 0) pick.push_back(pl);
    if (pick.empty()) continue;
    std::size_t best = 0;
    for (const auto& xi : oracle::directions(f3, 3)) {
      std::size_t n = 0;
      for (const auto& pl : pick) n += pl.contains(f3, xi);
      best = std::max(best, n);
    }
    CHECK(concentration(f3, pick) == best);
  }
}

TEST_CASE("projection_values examples") {
  const Field f5 = Field::prime(5);
  const PointSet e(f5, 2, {make_point({0, 0}), make_point({1, 1})});
  const std::vector<Elem> ys{1, 2};
  const auto pv = projection_values(ys, e);
  CHECK(pv.counts.at(1) == 2);
  CHECK(pv.counts.at(2) == 2);
  CHECK(pv.max == 2);
  CHECK(pv.min == 2);

  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet r = gen::points(rng, f5, 2, 25);
    const std::vector<Elem> zero{0};
    std::set<Elem> seconds;
    for (const auto& pt : r) seconds.insert(pt.y());
    CHECK(projection_values(zero, r).counts.at(0) == seconds.size());
  }
  const PointSet single(f5, 2, {make_point({3, 4})});
  const std::vector<Elem> all{0, 1, 2, 3, 4};
  for (const auto& [y, n] : projection_values(all, single).counts) CHECK(n == 1);
  const Vec w{1, 0, 0, 0};
  const PointSet cube(f5, 3, {Point{w, 3}});
  CHECK_ERROR_CODE(projection_values(all, cube), ErrorCode::DimensionMismatch);
}
