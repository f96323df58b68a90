#include "netfield/gf.hpp"

#include <map>

#include "netfield/error.hpp"
#include "netfield/numbertheory.hpp"

namespace netfield {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

// Remainder of a modulo monic b over Z_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_zero(const Poly& a) {
  for (auto c : a) {
    if (c != 0) return false;
  }
  return true;
}

// Monic polynomial of the given degree whose lower coefficients encode `code`.
Poly monic_from_code(std::uint32_t degree, std::uint32_t code, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[degree] = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t degree = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= degree; ++k) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code) {
      if (is_zero(poly_mod(f, monic_from_code(k, code, p), p))) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m) : p_(p), m_(m), q_(1) {
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
  if (m > 1) {
    for (std::uint32_t code = 0; code < q_; ++code) {
      Poly f = monic_from_code(m, code, p);
      if (is_irreducible(f, p)) {
        f.pop_back();
        modulus_ = std::move(f);
        break;
      }
    }
  }
  const auto factors = prime_factors(q_ - 1);
  for (Elem a = 1; a < q_; ++a) {
    bool generator = true;
    for (auto r : factors) {
      if (slow_pow(a, (q_ - 1) / r) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      xi_ = a;
      break;
    }
  }
}

Field make_field(std::uint64_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > FieldSpec::kMaxOrder) {
    throw Error(Errc::FieldTooLarge, std::to_string(q) + " exceeds 65536");
  }
  static std::mutex mutex;
  static std::map<std::uint64_t, Field> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[q];
  if (!slot) {
    slot = Field(new FieldSpec(static_cast<std::uint32_t>(pp->p), pp->k));
  }
  return slot;
}

std::uint32_t FieldSpec::modulus_encoding() const noexcept {
  std::uint32_t code = 0;
  for (auto it = modulus_.rbegin(); it != modulus_.rend(); ++it) code = code * p_ + *it;
  return code;
}

bool FieldSpec::same_as(const FieldSpec& other) const noexcept {
  return this == &other || (q_ == other.q_ && modulus_ == other.modulus_);
}

Elem FieldSpec::add(Elem a, Elem b) const noexcept {
  if (m_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  Elem out = 0;
  Elem place = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Elem FieldSpec::neg(Elem a) const noexcept {
  if (m_ == 1) return (p_ - a) % p_;
  if (p_ == 2) return a;
  Elem out = 0;
  Elem place = 1;
  while (a != 0) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

Elem FieldSpec::slow_mul(Elem a, Elem b) const {
  if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  Poly x(m_), y(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    x[i] = a % p_;
    y[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  }
  Poly modulus = modulus_;
  modulus.push_back(1);
  prod = poly_mod(std::move(prod), modulus, p_);
  Elem out = 0;
  for (std::size_t i = prod.size(); i-- > 0;) out = out * p_ + prod[i];
  return out;
}

Elem FieldSpec::slow_pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1U) result = slow_mul(result, a);
    a = slow_mul(a, a);
    e >>= 1U;
  }
  return result;
}

const FieldSpec::Tables& FieldSpec::tables() const {
  std::call_once(tables_once_, [this] {
    const std::uint32_t n = q_ - 1;
    tables_.exp.resize(2 * std::size_t{n});
    tables_.log.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
      tables_.exp[k] = x;
      tables_.exp[k + n] = x;
      tables_.log[x] = k;
      x = slow_mul(x, xi_);
    }
  });
  return tables_;
}

Elem FieldSpec::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  const auto& t = tables();
  return t.exp[t.log[a] + t.log[b]];
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  const auto& t = tables();
  return t.exp[(q_ - 1 - t.log[a]) % (q_ - 1)];
}

Elem FieldSpec::div(Elem a, Elem b) const {
  if (b == 0) throw Error(Errc::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem FieldSpec::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t k = ((static_cast<std::int64_t>(tables().log[a]) * (e % n)) % n + n) % n;
  return tables().exp[static_cast<std::size_t>(k)];
}

Elem FieldSpec::exp(std::uint64_t k) const noexcept {
  return tables().exp[k % (q_ - 1)];
}

std::uint32_t FieldSpec::dlog(Elem a) const {
  if (a == 0) throw Error(Errc::DlogOfZero, "discrete log of zero");
  return tables().log[a];
}

std::uint32_t FieldSpec::order(Elem a) const {
  const std::uint32_t n = q_ - 1;
  const std::uint32_t k = dlog(a);
  std::uint32_t g = n, r = k;
  while (r != 0) {
    const std::uint32_t t = g % r;
    g = r;
    r = t;
  }
  return n / g;
}

std::string FieldSpec::format(Elem a) const {
  if (m_ == 1 || a <= 1) return std::to_string(a);
  const auto k = dlog(a);
  return k == 1 ? std::string("ξ") : "ξ^" + std::to_string(k);
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(Errc::InvalidParam, "null field");
  if (!field_->contains(value)) {
    throw Error(Errc::InvalidParam,
                std::to_string(value) + " is not an element of GF(" + std::to_string(field_->q()) + ")");
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) {
    throw Error(Errc::FieldMismatch, "GF(" + std::to_string(field_->q()) + ") vs GF(" +
                                         std::to_string(o.field_->q()) + ")");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  return value_ == o.value_ && field_->same_as(*o.field_);
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Inv: return a.inv();
    case ArithOp::Neg: return -a;
  }
  throw Error(Errc::InvalidParam, "unknown operation");
}

FieldElement primitive_element(const Field& field) { return {field, field->xi()}; }

bool Subgroup::contains(Elem a) const {
  return a != 0 && field->pow(a, order) == 1;
}

Subgroup subgroup_of_order(const Field& field, std::uint32_t order) {
  const std::uint32_t n = field->q() - 1;
  if (order == 0 || n % order != 0) {
    throw Error(Errc::NotADivisor,
                std::to_string(order) + " does not divide " + std::to_string(n));
  }
  Subgroup g{field, order, field->exp(n / order), {}};
  Elem x = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    g.elements.push_back(x);
    x = field->mul(x, g.generator);
  }
  return g;
}

std::vector<std::uint32_t> proper_subgroup_orders(const Field& field) {
  const std::uint32_t n = field->q() - 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::uint32_t dlog(const Field& field, const FieldElement& a) {
  if (!field->same_as(*a.field())) throw Error(Errc::FieldMismatch, "element from another field");
  return field->dlog(a.value());
}

}  // namespace netfield
