#pragma once

// Finite fields GF(p^m) with q <= 65536.
//
// An element is stored as a single integer sum(c_i * p^i) of its coefficient
// vector over the canonical modulus. Multiplication, inversion and discrete
// logarithms go through exp/log tables keyed on the canonical primitive
// element; the tables are built once on first use and are safe to share
// between threads.

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace netfield {

using Elem = std::uint32_t;

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// Canonical GF(q). Throws Error(NotPrimePower) or Error(FieldTooLarge).
/// Repeated calls with the same q return the same instance.
Field make_field(std::uint64_t q);

class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxOrder = 65536;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Non-leading coefficients c_0..c_{m-1} of the monic modulus; empty for m = 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::uint32_t modulus_encoding() const noexcept;

  /// Smallest element (by encoding) of multiplicative order q - 1.
  Elem xi() const noexcept { return xi_; }

  bool contains(Elem a) const noexcept { return a < q_; }
  bool same_as(const FieldSpec& other) const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws Error(DivisionByZero) for b = 0.
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  /// Any integer exponent; negative exponents need a != 0. pow(0, 0) = 1.
  Elem pow(Elem a, std::int64_t e) const;

  /// xi^k for any k >= 0.
  Elem exp(std::uint64_t k) const noexcept;
  /// k in [0, q - 1) with xi^k = a. Throws Error(DlogOfZero).
  std::uint32_t dlog(Elem a) const;
  /// Multiplicative order of a != 0.
  std::uint32_t order(Elem a) const;

  /// Integer for prime fields, powers of xi for extension fields.
  std::string format(Elem a) const;

 private:
  friend Field make_field(std::uint64_t q);
  FieldSpec(std::uint32_t p, std::uint32_t m);

  struct Tables {
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Elem> exp;           // 2 (q - 1) entries
  };
  const Tables& tables() const;
  Elem slow_mul(Elem a, Elem b) const;
  Elem slow_pow(Elem a, std::uint64_t e) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem xi_ = 1;

  mutable std::once_flag tables_once_;
  mutable Tables tables_;
};

/// A field value bound to its field; arithmetic checks that both operands
/// come from the same field.
class FieldElement {
 public:
  FieldElement(Field field, Elem value);

  Elem value() const noexcept { return value_; }
  const Field& field() const noexcept { return field_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& o) const;

  std::string to_string() const { return field_->format(value_); }

 private:
  void check_same(const FieldElement& o) const;

  Field field_;
  Elem value_;
};

enum class ArithOp { Add, Sub, Mul, Div, Inv, Neg };

/// Dispatches a binary (or, for Inv/Neg, unary on a) field operation.
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

FieldElement primitive_element(const Field& field);

/// The unique subgroup of the given order in the cyclic group GF(q)^x.
struct Subgroup {
  Field field;
  std::uint32_t order = 0;
  Elem generator = 1;
  std::vector<Elem> elements;  // generator^0, generator^1, ...

  bool contains(Elem a) const;
};

/// Throws Error(NotADivisor) unless order divides q - 1.
Subgroup subgroup_of_order(const Field& field, std::uint32_t order);

/// Divisors d of q - 1 with 1 <= d < q - 1, ascending.
std::vector<std::uint32_t> proper_subgroup_orders(const Field& field);

std::uint32_t dlog(const Field& field, const FieldElement& a);

}  // namespace netfield
