#include "zfsolve/ff.hpp"

#include <ostream>

namespace zfsolve::ff {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p == 2) {
    throw std::invalid_argument("gfp requires an odd prime; use gf2 for characteristic 2");
  }
  if (p >= kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not an odd prime below 2^31");
  }
  return FieldSpec(FieldKind::prime, p);
}

Residue FieldSpec::inv(Residue a) const {
  if (a == 0) throw DivisionByZero();
  if (is_gf2()) return a;
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = modulus_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += modulus_;
  return static_cast<Residue>(t);
}

std::string FieldSpec::to_string() const {
  return is_gf2() ? std::string("gf2") : "gfp " + std::to_string(modulus_);
}

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec) {
  return os << spec.to_string();
}

FieldElement::FieldElement(FieldSpec spec, std::uint64_t value) : spec_(spec) {
  if (!spec.contains(value)) {
    throw std::invalid_argument("value " + std::to_string(value) +
                                " is not a canonical residue of " + spec.to_string());
  }
  value_ = static_cast<Residue>(value);
}

const FieldSpec& FieldElement::common(const FieldElement& o) const {
  if (!(spec_ == o.spec_)) throw FieldMismatch();
  return spec_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const auto& f = common(o);
  return FieldElement(Raw{}, f, f.add(value_, o.value_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const auto& f = common(o);
  return FieldElement(Raw{}, f, f.sub(value_, o.value_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const auto& f = common(o);
  return FieldElement(Raw{}, f, f.mul(value_, o.value_));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(Raw{}, spec_, spec_.neg(value_));
}

FieldElement FieldElement::inv() const {
  return FieldElement(Raw{}, spec_, spec_.inv(value_));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value();
}

}  // namespace zfsolve::ff
