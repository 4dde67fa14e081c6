#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "enriques/errors.hpp"

namespace enriques {

inline constexpr std::size_t kRank = 10;

/// A vector of the rank-10 lattice U + E8(-1), in the fixed basis
/// (f, f', alpha_1, ..., alpha_8): f, f' span the hyperbolic plane and the
/// alpha_i are the E8 simple roots in Bourbaki order.
class Class {
 public:
  using Coords = std::array<std::int64_t, kRank>;

  constexpr Class() = default;
  explicit constexpr Class(const Coords& coords) : coords_(coords) {}

  static Class basis(std::size_t index);

  const Coords& coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;

  Class& operator+=(const Class& other);
  Class& operator-=(const Class& other);
  Class operator-() const;

  friend Class operator+(Class a, const Class& b) { return a += b; }
  friend Class operator-(Class a, const Class& b) { return a -= b; }
  friend Class operator*(std::int64_t k, const Class& v);

  /// Exact division of every coordinate; throws InvalidArgument if k does not divide v.
  Class divided_by(std::int64_t k) const;

  auto operator<=>(const Class&) const = default;

  std::string to_string() const;

 private:
  Coords coords_{};
};

/// The bilinear form of U + E8(-1). Constructed once and validated
/// (symmetric, even, determinant -1, signature (1,9)).
class GramLattice {
 public:
  using Matrix = std::array<std::array<std::int64_t, kRank>, kRank>;

  static const GramLattice& standard();

  const Matrix& gram() const { return gram_; }
  std::int64_t pair(const Class& u, const Class& v) const;

  /// Exact determinant (fraction-free elimination).
  std::int64_t determinant() const;
  /// Number of positive and negative eigenvalues, by exact congruence diagonalization.
  std::pair<int, int> signature() const;

 private:
  explicit GramLattice(const Matrix& gram);
  Matrix gram_;
};

/// Positive-square class used to decide effectivity of classes of nonnegative square.
struct AmpleReference {
  Class A;

  explicit AmpleReference(const Class& a);
};

std::int64_t pair(const Class& u, const Class& v);
std::int64_t square(const Class& v);

/// gcd of the coordinates; 0 for the zero vector. The lattice is unimodular,
/// so this is the divisibility of v in the lattice.
std::int64_t divisibility(const Class& v);
inline bool is_primitive(const Class& v) { return divisibility(v) == 1; }
inline bool is_two_divisible(const Class& v) { return divisibility(v) % 2 == 0; }
inline bool is_isotropic(const Class& v) { return !v.is_zero() && square(v) == 0; }

/// For v != 0 with square(v) >= 0: true iff v pairs positively with the ample reference.
bool is_effective(const Class& v, const AmpleReference& ample);

/// Reflection in a (-2)-root: v + (v.r) r.
Class reflect(const Class& v, const Class& root);

/// Deterministic pseudo-random word of (-2)-roots drawn from a fixed pool.
std::vector<Class> random_isometry_word(std::uint64_t seed, std::size_t length);

/// Applies the reflections of a word in order.
Class apply_word(const Class& v, const std::vector<Class>& word);

/// The fixed pool random words draw from.
const std::vector<Class>& root_pool();

}  // namespace enriques
