#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace zfsolve {

/// Vertex / row / column index. Zero-based everywhere in the C++ API; text
/// formats are one-based and convert at the I/O boundary.
using Index = std::size_t;

namespace ff {

/// Canonical residue in [0, modulus).
using Residue = std::uint32_t;

enum class FieldKind { gf2, prime };

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in finite field") {}
};

class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch() : std::invalid_argument("operands belong to different fields") {}
};

bool is_prime(std::uint32_t p);

/// GF(2) or GF(p) for an odd prime p < 2^31. All scalar arithmetic of the
/// library is routed through these members; they operate on raw residues so
/// that vectors and matrices can store plain integers.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 31;

  /// GF(2).
  FieldSpec() = default;

  static FieldSpec gf2() { return FieldSpec(); }
  /// Throws std::invalid_argument unless p is an odd prime below 2^31.
  static FieldSpec prime(std::uint32_t p);

  FieldKind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_gf2() const { return kind_ == FieldKind::gf2; }

  bool contains(std::uint64_t value) const { return value < modulus_; }
  Residue reduce(std::uint64_t value) const {
    return static_cast<Residue>(value % modulus_);
  }

  Residue add(Residue a, Residue b) const {
    if (is_gf2()) return a ^ b;
    const Residue s = a + b;  // < 2^32 because modulus < 2^31
    return s >= modulus_ ? s - modulus_ : s;
  }
  Residue sub(Residue a, Residue b) const {
    if (is_gf2()) return a ^ b;
    return a >= b ? a - b : a + (modulus_ - b);
  }
  Residue neg(Residue a) const {
    if (is_gf2() || a == 0) return a;
    return modulus_ - a;
  }
  Residue mul(Residue a, Residue b) const {
    if (is_gf2()) return a & b;
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % modulus_);
  }
  /// Throws DivisionByZero for a == 0.
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  /// "gf2" or "gfp <p>", the token sequence used in file headers.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_ = FieldKind::gf2;
  std::uint32_t modulus_ = 2;
};

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec);

/// A scalar tagged with its field. Mixed-field arithmetic throws FieldMismatch.
class FieldElement {
 public:
  /// Throws std::invalid_argument if value is not a canonical residue.
  FieldElement(FieldSpec spec, std::uint64_t value);

  static FieldElement zero(FieldSpec spec) { return FieldElement(spec, 0); }
  static FieldElement one(FieldSpec spec) { return FieldElement(spec, 1); }

  const FieldSpec& spec() const { return spec_; }
  Residue value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  /// Throws DivisionByZero on zero.
  FieldElement inv() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  struct Raw {};
  FieldElement(Raw, FieldSpec spec, Residue value) : spec_(spec), value_(value) {}
  const FieldSpec& common(const FieldElement& o) const;

  FieldSpec spec_;
  Residue value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace ff
}  // namespace zfsolve
