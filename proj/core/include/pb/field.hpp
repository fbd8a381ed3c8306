#ifndef PB_FIELD_HPP
#define PB_FIELD_HPP

#include <cstdint>
#include <compare>

#include "pb/errors.hpp"

namespace pb {

/// Prime modulus context for GF(q), 2 <= q <= 2^16.
class FieldCtx {
 public:
  explicit FieldCtx(std::uint32_t q);
  std::uint32_t q() const { return q_; }
  bool operator==(const FieldCtx&) const = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint32_t n);

/// Element of GF(q), kept as the canonical residue in [0, q-1].
/// Each element carries its modulus so cross-field mixups are caught.
class Fp {
 public:
  Fp() : v_(0), q_(0) {}
  Fp(std::int64_t v, FieldCtx ctx);

  std::uint32_t value() const { return v_; }
  std::uint32_t q() const { return q_; }
  FieldCtx ctx() const { return FieldCtx(q_); }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp rhs) const;
  Fp operator-(Fp rhs) const;
  Fp operator*(Fp rhs) const;
  Fp operator/(Fp rhs) const;
  Fp operator-() const;
  Fp inv() const;

  Fp& operator+=(Fp rhs) { return *this = *this + rhs; }
  Fp& operator-=(Fp rhs) { return *this = *this - rhs; }
  Fp& operator*=(Fp rhs) { return *this = *this * rhs; }

  bool operator==(const Fp&) const = default;

 private:
  void check_same(Fp rhs) const;
  std::uint32_t v_;
  std::uint32_t q_;
};

inline Fp zero(FieldCtx ctx) { return Fp(0, ctx); }
inline Fp one(FieldCtx ctx) { return Fp(1, ctx); }

}  // namespace pb

#endif
