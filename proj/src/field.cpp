#include "fplab/field.hpp"

namespace fplab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Element-level helpers trust the modulus carried by the element; it was
// validated when the owning context handed the element out.
Elem mod_add(Elem x, Elem y, Elem p) { return static_cast<Elem>((std::uint64_t{x} + y) % p); }
Elem mod_sub(Elem x, Elem y, Elem p) { return static_cast<Elem>((std::uint64_t{x} + p - y) % p); }
Elem mod_mul(Elem x, Elem y, Elem p) { return static_cast<Elem>(std::uint64_t{x} * y % p); }

void check_same(Elem m1, Elem m2) {
  if (m1 != m2) {
    throw Error(ErrorCode::MixedContexts,
                "operands over F_" + std::to_string(m1) + " and F_" + std::to_string(m2));
  }
}

}  // namespace

FieldElement operator+(FieldElement x, FieldElement y) {
  check_same(x.modulus, y.modulus);
  return {mod_add(x.value, y.value, x.modulus), x.modulus};
}

FieldElement operator-(FieldElement x, FieldElement y) {
  check_same(x.modulus, y.modulus);
  return {mod_sub(x.value, y.value, x.modulus), x.modulus};
}

FieldElement operator*(FieldElement x, FieldElement y) {
  check_same(x.modulus, y.modulus);
  return {mod_mul(x.value, y.value, x.modulus), x.modulus};
}

FieldElement operator-(FieldElement x) { return {mod_sub(0, x.value, x.modulus), x.modulus}; }

FieldElement inverse(FieldElement x) { return {PrimeField(x.modulus).inv(x.value), x.modulus}; }

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p > kMaxPrime) {
    throw Error(ErrorCode::CompositeModulus,
                "modulus " + std::to_string(p) + " exceeds desk scale " + std::to_string(kMaxPrime));
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::CompositeModulus, std::to_string(p) + " is not prime");
  }
  p_ = static_cast<Elem>(p);
}

FieldElement PrimeField::element(std::int64_t v) const { return {reduce(v), p_}; }

Elem PrimeField::pow(Elem x, std::uint64_t e) const noexcept {
  Elem result = 1 % p_;
  Elem base = x % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Elem PrimeField::inv(Elem x) const {
  if (x % p_ == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(p_));
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = p_, r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  return reduce(t0);
}

bool PrimeField::is_square(Elem x) const noexcept {
  if (x == 0 || p_ == 2) return true;
  return pow(x, (p_ - 1) / 2) == 1;
}

ExtFieldElement ext_add(ExtFieldElement x, ExtFieldElement y) {
  if (x.modulus != y.modulus || x.delta != y.delta) {
    throw Error(ErrorCode::MixedContexts, "extension elements from different contexts");
  }
  const Elem p = x.modulus;
  return {mod_add(x.a0, y.a0, p), mod_add(x.a1, y.a1, p), p, x.delta};
}

ExtFieldElement ext_mul(ExtFieldElement x, ExtFieldElement y) {
  if (x.modulus != y.modulus || x.delta != y.delta) {
    throw Error(ErrorCode::MixedContexts, "extension elements from different contexts");
  }
  const Elem p = x.modulus;
  const Elem c0 = mod_add(mod_mul(x.a0, y.a0, p), mod_mul(mod_mul(x.a1, y.a1, p), x.delta, p), p);
  const Elem c1 = mod_add(mod_mul(x.a0, y.a1, p), mod_mul(x.a1, y.a0, p), p);
  return {c0, c1, x.modulus, x.delta};
}

ExtensionField::ExtensionField(std::uint64_t p) : base_(p == 2 ? 3 : p), delta_(0) {
  if (p == 2) {
    throw Error(ErrorCode::EvenCharacteristic, "omega^2 = delta model needs odd p");
  }
  for (Elem d = 2; d < base_.modulus(); ++d) {
    if (!base_.is_square(d)) {
      delta_ = d;
      break;
    }
  }
}

ExtFieldElement ExtensionField::element(std::int64_t a0, std::int64_t a1) const {
  return {base_.reduce(a0), base_.reduce(a1), base_.modulus(), delta_};
}

Field::Field(PrimeField base, int degree, Elem delta)
    : base_(base), degree_(degree), delta_(delta), q_(degree == 1 ? base.modulus() : base.modulus() * base.modulus()) {}

Field Field::prime(std::uint64_t p) { return Field(PrimeField(p), 1, 0); }

Field Field::quadratic(std::uint64_t p) {
  if (p > 46'000) {
    throw Error(ErrorCode::TooLarge, "p^2 index overflows for p = " + std::to_string(p));
  }
  ExtensionField ext(p);
  return Field(ext.base(), 2, ext.delta());
}

Elem Field::add(Elem x, Elem y) const noexcept {
  if (degree_ == 1) return base_.add(x, y);
  const Elem p = base_.modulus();
  return make(base_.add(x % p, y % p), base_.add(x / p, y / p));
}

Elem Field::sub(Elem x, Elem y) const noexcept {
  if (degree_ == 1) return base_.sub(x, y);
  const Elem p = base_.modulus();
  return make(base_.sub(x % p, y % p), base_.sub(x / p, y / p));
}

Elem Field::neg(Elem x) const noexcept {
  if (degree_ == 1) return base_.neg(x);
  const Elem p = base_.modulus();
  return make(base_.neg(x % p), base_.neg(x / p));
}

Elem Field::mul(Elem x, Elem y) const noexcept {
  if (degree_ == 1) return base_.mul(x, y);
  const Elem p = base_.modulus();
  const Elem x0 = x % p, x1 = x / p, y0 = y % p, y1 = y / p;
  const Elem c0 = base_.add(base_.mul(x0, y0), base_.mul(base_.mul(x1, y1), delta_));
  const Elem c1 = base_.add(base_.mul(x0, y1), base_.mul(x1, y0));
  return make(c0, c1);
}

Elem Field::inv(Elem x) const {
  if (degree_ == 1) return base_.inv(x);
  if (x == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse in " + describe());
  // (a0 + a1 w)^{-1} = (a0 - a1 w) / (a0^2 - delta a1^2); the norm is nonzero
  // because delta is a non-residue.
  const Elem a0 = part0(x), a1 = part1(x);
  const Elem norm = base_.sub(base_.mul(a0, a0), base_.mul(delta_, base_.mul(a1, a1)));
  const Elem ninv = base_.inv(norm);
  return make(base_.mul(a0, ninv), base_.mul(base_.neg(a1), ninv));
}

std::string Field::describe() const {
  if (degree_ == 1) return "F_" + std::to_string(q_);
  return "F_" + std::to_string(q_) + " (F_" + std::to_string(base_.modulus()) + "[w]/(w^2-" +
         std::to_string(delta_) + "))";
}

void require_same_field(const Field& a, const Field& b, const char* where) {
  if (!(a == b)) {
    throw Error(ErrorCode::MixedContexts,
                std::string(where) + ": " + a.describe() + " vs " + b.describe());
  }
}

}  // namespace fplab
