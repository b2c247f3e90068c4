#include "syzlab/field.hpp"

#include <sstream>

#include "syzlab/error.hpp"

namespace syzlab {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::prime_field) {
    if (!is_prime(spec_.characteristic))
      fail(Errc::semantic_error, "field characteristic must be prime, got " +
                                     std::to_string(spec_.characteristic));
    if (spec_.characteristic > (std::int64_t{1} << 31))
      fail(Errc::semantic_error, "prime field characteristic too large");
  } else {
    spec_.characteristic = 0;
  }
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (is_prime_field()) {
    std::int64_t p = spec_.characteristic;
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return Scalar::residue(r);
  }
  return Scalar::rational(Rational(n));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return Scalar::residue((a.res() + b.res()) % spec_.characteristic);
  return Scalar::rational(a.rat() + b.rat());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::int64_t r = (a.res() - b.res()) % spec_.characteristic;
    if (r < 0) r += spec_.characteristic;
    return Scalar::residue(r);
  }
  return Scalar::rational(a.rat() - b.rat());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return Scalar::residue((a.res() * b.res()) % spec_.characteristic);
  return Scalar::rational(a.rat() * b.rat());
}

Scalar Field::neg(const Scalar& a) const { return sub(zero(), a); }

namespace {
// Inverse of a modulo p by extended Euclid; a in (0, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t inv = old_s % p;
  if (inv < 0) inv += p;
  return inv;
}
}  // namespace

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) fail(Errc::internal_error, "inverse of zero");
  if (is_prime_field()) return Scalar::residue(mod_inverse(a.res(), spec_.characteristic));
  return Scalar::rational(Rational(1) / a.rat());
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const Scalar& a) const {
  if (is_prime_field()) return a.res() == 0;
  return a.rat() == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (is_prime_field()) return a.res() == 1;
  return a.rat() == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) return a.res() == b.res();
  return a.rat() == b.rat();
}

std::string Field::to_string(const Scalar& a) const {
  if (is_prime_field()) return std::to_string(a.res());
  std::ostringstream os;
  os << a.rat();
  return os.str();
}

std::string Field::name() const {
  if (is_prime_field()) return "gf" + std::to_string(spec_.characteristic);
  return "q";
}

}  // namespace syzlab
