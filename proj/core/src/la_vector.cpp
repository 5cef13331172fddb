#include <stdexcept>
#include <string>

#include "zfsolve/la/vector.hpp"

namespace zfsolve::la {

namespace {

void check_canonical(const FieldSpec& spec, Residue v) {
  if (!spec.contains(v)) {
    throw std::invalid_argument("value " + std::to_string(v) + " is not a canonical residue of " +
                                spec.to_string());
  }
}

void check_compatible(const Vector& a, const Vector& b) {
  if (!(a.spec() == b.spec())) throw ff::FieldMismatch();
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
}

}  // namespace

Vector::Vector(FieldSpec spec, std::vector<Residue> values)
    : spec_(spec), values_(std::move(values)) {
  for (Residue v : values_) check_canonical(spec_, v);
}

Vector Vector::unit(FieldSpec spec, std::size_t n, Index i) {
  Vector v(spec, n);
  v.values_.at(i) = 1;
  return v;
}

void Vector::set(Index i, Residue value) {
  check_canonical(spec_, value);
  values_.at(i) = value;
}

bool Vector::is_zero() const {
  for (Residue v : values_) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<Index> Vector::support() const {
  std::vector<Index> s;
  for (Index i = 0; i < values_.size(); ++i) {
    if (values_[i] != 0) s.push_back(i);
  }
  return s;
}

Vector Vector::gather(std::span<const Index> indices) const {
  Vector out(spec_, indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) out.values_[i] = values_.at(indices[i]);
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  check_compatible(a, b);
  std::vector<Residue> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.spec().add(a[i], b[i]);
  return Vector(a.spec(), std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) {
  check_compatible(a, b);
  std::vector<Residue> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.spec().sub(a[i], b[i]);
  return Vector(a.spec(), std::move(out));
}

Vector scale(Residue alpha, const Vector& a) {
  check_canonical(a.spec(), alpha);
  std::vector<Residue> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.spec().mul(alpha, a[i]);
  return Vector(a.spec(), std::move(out));
}

}  // namespace zfsolve::la
