#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fplab/error.hpp"

namespace fplab {

/// Canonical residue / element index. For F_p this is the residue in [0, p);
/// for F_{p^2} it is a0 + a1 * p where the element is a0 + a1 * omega.
using Elem = std::uint32_t;

/// Largest prime accepted by the trial-division check.
inline constexpr std::uint64_t kMaxPrime = 1'000'000;

bool is_prime(std::uint64_t n);

struct FieldElement {
  Elem value = 0;
  Elem modulus = 2;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement operator+(FieldElement x, FieldElement y);
FieldElement operator-(FieldElement x, FieldElement y);
FieldElement operator*(FieldElement x, FieldElement y);
FieldElement operator-(FieldElement x);
FieldElement inverse(FieldElement x);

/// Arithmetic context for F_p with p prime.
class PrimeField {
 public:
  /// Throws CompositeModulus for p < 2, composite p, or p beyond desk scale.
  explicit PrimeField(std::uint64_t p);

  Elem modulus() const noexcept { return p_; }
  FieldElement element(std::int64_t v) const;

  Elem reduce(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    auto r = v % p;
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
  Elem add(Elem x, Elem y) const noexcept {
    const Elem s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem x, Elem y) const noexcept { return x >= y ? x - y : x + p_ - y; }
  Elem neg(Elem x) const noexcept { return x == 0 ? 0 : p_ - x; }
  Elem mul(Elem x, Elem y) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % p_);
  }
  Elem pow(Elem x, std::uint64_t e) const noexcept;
  /// Throws ZeroInverse on 0.
  Elem inv(Elem x) const;
  /// Euler's criterion; 0 counts as a square.
  bool is_square(Elem x) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Elem p_;
};

struct ExtFieldElement {
  Elem a0 = 0;
  Elem a1 = 0;
  Elem modulus = 3;
  Elem delta = 2;

  friend bool operator==(const ExtFieldElement&, const ExtFieldElement&) = default;
};

ExtFieldElement ext_add(ExtFieldElement x, ExtFieldElement y);
ExtFieldElement ext_mul(ExtFieldElement x, ExtFieldElement y);

/// F_{p^2} = F_p[omega] / (omega^2 - delta), delta the least quadratic non-residue.
class ExtensionField {
 public:
  /// Throws EvenCharacteristic for p = 2, CompositeModulus for composite p.
  explicit ExtensionField(std::uint64_t p);

  const PrimeField& base() const noexcept { return base_; }
  Elem delta() const noexcept { return delta_; }
  ExtFieldElement element(std::int64_t a0, std::int64_t a1) const;
  ExtFieldElement omega() const { return element(0, 1); }

 private:
  PrimeField base_;
  Elem delta_;
};

/// The field F_q used by the geometry layer, with q = p or q = p^2. Elements are
/// canonical indices in [0, q) so they can be used directly as table keys.
class Field {
 public:
  static Field prime(std::uint64_t p);
  /// Throws TooLarge when p^2 would not fit the index type.
  static Field quadratic(std::uint64_t p);

  Elem order() const noexcept { return q_; }
  Elem characteristic() const noexcept { return base_.modulus(); }
  int degree() const noexcept { return degree_; }
  Elem delta() const noexcept { return delta_; }
  const PrimeField& base() const noexcept { return base_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t v) const noexcept { return base_.reduce(v); }
  Elem make(Elem a0, Elem a1) const noexcept { return a0 + a1 * base_.modulus(); }
  Elem part0(Elem x) const noexcept { return degree_ == 1 ? x : x % base_.modulus(); }
  Elem part1(Elem x) const noexcept { return degree_ == 1 ? 0 : x / base_.modulus(); }
  bool in_prime_subfield(Elem x) const noexcept { return part1(x) == 0; }

  Elem add(Elem x, Elem y) const noexcept;
  Elem sub(Elem x, Elem y) const noexcept;
  Elem neg(Elem x) const noexcept;
  Elem mul(Elem x, Elem y) const noexcept;
  /// Throws ZeroInverse on 0.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.q_ == b.q_ && a.degree_ == b.degree_;
  }

 private:
  Field(PrimeField base, int degree, Elem delta);

  PrimeField base_;
  int degree_;
  Elem delta_;
  Elem q_;
};

/// Throws MixedContexts when two operands live over different fields.
void require_same_field(const Field& a, const Field& b, const char* where);

}  // namespace fplab
