#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>

namespace syzlab {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { prime_field, rationals };

struct FieldSpec {
  FieldKind kind = FieldKind::prime_field;
  std::int64_t characteristic = 2;  // 0 for the rationals
};

// Exact field element. Prime-field values are canonical residues in [0, p);
// rational values are kept in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar() : v_(std::int64_t{0}) {}
  static Scalar residue(std::int64_t r) { return Scalar(r); }
  static Scalar rational(Rational q) { return Scalar(std::move(q)); }

  bool holds_residue() const { return std::holds_alternative<std::int64_t>(v_); }
  std::int64_t res() const { return std::get<std::int64_t>(v_); }
  const Rational& rat() const { return std::get<Rational>(v_); }

 private:
  explicit Scalar(std::int64_t r) : v_(r) {}
  explicit Scalar(Rational q) : v_(std::move(q)) {}
  std::variant<std::int64_t, Rational> v_;
};

class Field {
 public:
  Field() = default;
  explicit Field(FieldSpec spec);
  static Field gf(std::int64_t p) { return Field({FieldKind::prime_field, p}); }
  static Field rationals() { return Field({FieldKind::rationals, 0}); }

  const FieldSpec& spec() const { return spec_; }
  bool is_prime_field() const { return spec_.kind == FieldKind::prime_field; }
  std::int64_t characteristic() const { return spec_.characteristic; }
  bool operator==(const Field& o) const {
    return spec_.kind == o.spec_.kind && spec_.characteristic == o.spec_.characteristic;
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // a must be nonzero
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  // Canonical text form: decimal residue over GF(p); "n" or "n/d" over the rationals.
  std::string to_string(const Scalar& a) const;
  std::string name() const;  // "gf2", "gf3", ..., "q"

 private:
  FieldSpec spec_;
};

bool is_prime(std::int64_t p);

}  // namespace syzlab
