#include "pb/field.hpp"

#include <string>

namespace pb {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldCtx::FieldCtx(std::uint32_t q) : q_(q) {
  if (q < 2 || q > (1u << 16))
    throw ParameterError("field modulus out of range: " + std::to_string(q));
  if (!is_prime(q))
    throw ParameterError("field modulus not prime: " + std::to_string(q));
}

Fp::Fp(std::int64_t v, FieldCtx ctx) : q_(ctx.q()) {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  v_ = static_cast<std::uint32_t>(r);
}

void Fp::check_same(Fp rhs) const {
  if (q_ != rhs.q_)
    throw FieldMismatchError("mixed moduli " + std::to_string(q_) + " and " +
                             std::to_string(rhs.q_));
}

Fp Fp::operator+(Fp rhs) const {
  check_same(rhs);
  std::uint32_t s = v_ + rhs.v_;
  if (s >= q_) s -= q_;
  Fp out;
  out.v_ = s;
  out.q_ = q_;
  return out;
}

Fp Fp::operator-(Fp rhs) const { return *this + (-rhs); }

Fp Fp::operator-() const {
  Fp out;
  out.v_ = v_ == 0 ? 0 : q_ - v_;
  out.q_ = q_;
  return out;
}

Fp Fp::operator*(Fp rhs) const {
  check_same(rhs);
  Fp out;
  out.v_ = static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(v_) * rhs.v_) % q_);
  out.q_ = q_;
  return out;
}

Fp Fp::inv() const {
  if (v_ == 0) throw DivisionByZeroError("inverse of zero in GF(q)");
  // extended Euclid
  std::int64_t a = v_, m = q_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t t = a / m;
    a -= t * m;
    std::swap(a, m);
    x0 -= t * x1;
    std::swap(x0, x1);
  }
  return Fp(x0, FieldCtx(q_));
}

Fp Fp::operator/(Fp rhs) const {
  check_same(rhs);
  return *this * rhs.inv();
}

}  // namespace pb
