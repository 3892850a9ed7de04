#include "fplab/energy.hpp"

#include <vector>

namespace fplab {

namespace {

ElemSet checked_set(const Field& f, std::span<const Elem> values, std::size_t cap, const char* what) {
  ElemSet set = make_elem_set({values.begin(), values.end()});
  if (set.size() > cap) {
    throw Error(ErrorCode::ScaleExceeded, std::string(what) + " capped at |C| = " + std::to_string(cap));
  }
  if (!set.empty() && set.back() >= f.order()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": element outside " + f.describe());
  }
  return set;
}

std::uint64_t sum_of_squared_sum_counts(const Field& f, const ElemSet& c, const ElemSet& d) {
  std::vector<std::uint64_t> r(f.order(), 0);
  for (const Elem x : c) {
    for (const Elem y : d) ++r[f.add(x, y)];
  }
  std::uint64_t total = 0;
  for (const auto v : r) total += v * v;
  return total;
}

}  // namespace

std::uint64_t additive_energy(const Field& f, std::span<const Elem> c) {
  const ElemSet set = checked_set(f, c, kMaxEnergySetSize, "additive_energy");
  return sum_of_squared_sum_counts(f, set, set);
}

std::uint64_t cross_energy(const Field& f, std::span<const Elem> c, std::span<const Elem> d) {
  const ElemSet cs = checked_set(f, c, kMaxEnergySetSize, "cross_energy");
  const ElemSet ds = checked_set(f, d, kMaxEnergySetSize, "cross_energy");
  return sum_of_squared_sum_counts(f, cs, ds);
}

ElemSet dilate(const Field& f, std::span<const Elem> c, Elem y) {
  std::vector<Elem> out;
  out.reserve(c.size());
  for (const Elem x : c) out.push_back(f.mul(x, y));
  return make_elem_set(std::move(out));
}

DilateEnergySum dilate_energy_sum(const Field& f, std::span<const Elem> c, std::span<const Elem> ys_in) {
  const ElemSet cs = checked_set(f, c, kMaxEnergySetSize, "dilate_energy_sum");
  const ElemSet ys = make_elem_set({ys_in.begin(), ys_in.end()});
  if (!ys.empty() && ys.front() == 0) throw Error(ErrorCode::ZeroDilate, "Y must not contain 0");
  DilateEnergySum out;
  for (const Elem y : ys) out.sum += sum_of_squared_sum_counts(f, cs, dilate(f, cs, y));
  using u128 = unsigned __int128;
  const u128 n = cs.size(), q = f.order(), ny = ys.size();
  out.within_rhs = q * out.sum <= n * n * n * n * ny + q * q * n * n;
  const double nd = static_cast<double>(cs.size());
  out.rhs = nd * nd * nd * nd * static_cast<double>(ys.size()) / f.order() + static_cast<double>(f.order()) * nd * nd;
  return out;
}

std::uint64_t eight_tuple_count(const Field& f, std::span<const Elem> c) {
  const ElemSet set = checked_set(f, c, kMaxEightTupleSetSize, "eight_tuple_count");
  const Elem q = f.order();
  // Difference multiplicities, then product multiplicities m(v), then sum m(v)^2.
  std::vector<std::uint64_t> diff(q, 0);
  for (const Elem x : set) {
    for (const Elem y : set) ++diff[f.sub(x, y)];
  }
  std::vector<Elem> support;
  for (Elem v = 0; v < q; ++v) {
    if (diff[v]) support.push_back(v);
  }
  std::vector<std::uint64_t> m(q, 0);
  for (const Elem u : support) {
    for (const Elem v : support) m[f.mul(u, v)] += diff[u] * diff[v];
  }
  std::uint64_t total = 0;
  for (const auto v : m) total += v * v;
  return total;
}

}  // namespace fplab
