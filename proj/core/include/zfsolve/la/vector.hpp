#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zfsolve/ff.hpp"

namespace zfsolve::la {

using ff::FieldSpec;
using ff::Residue;

/// Dense vector over a finite field. Length is fixed at construction.
class Vector {
 public:
  Vector() = default;
  /// Zero vector of length n.
  Vector(FieldSpec spec, std::size_t n) : spec_(spec), values_(n, 0) {}
  /// Throws std::invalid_argument if any value is not a canonical residue.
  Vector(FieldSpec spec, std::vector<Residue> values);

  static Vector unit(FieldSpec spec, std::size_t n, Index i);

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return values_.size(); }

  Residue operator[](Index i) const { return values_[i]; }
  ff::FieldElement at(Index i) const { return {spec_, values_.at(i)}; }
  /// Throws std::invalid_argument on a non-canonical value.
  void set(Index i, Residue value);

  std::span<const Residue> values() const { return values_; }

  bool is_zero() const;
  /// Indices of nonzero entries, ascending.
  std::vector<Index> support() const;
  /// Entries at the given indices, in the given order.
  Vector gather(std::span<const Index> indices) const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  FieldSpec spec_;
  std::vector<Residue> values_;
};

/// Elementwise operations; operands must share field and length
/// (ff::FieldMismatch / std::invalid_argument otherwise).
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scale(Residue alpha, const Vector& a);

}  // namespace zfsolve::la
