#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

/// An isotropic 10-sequence E_1..E_10 (pairwise pairing 1), the class D with
/// 3D = E_1 + ... + E_10, and the ample reference used for effectivity.
struct Frame {
  std::array<Class, 10> E;
  Class D;
  AmpleReference A;
};

/// The fixed reference frame. Coordinates are listed in the README; A = D.
Frame build_reference_frame();

/// Shared instance of build_reference_frame().
const Frame& reference_frame();

/// Throws InternalError unless E is an isotropic 10-sequence, 3D = sum(E),
/// square(D) = 10 and every E_i pairs positively with A.
void validate_frame(const Frame& f);

/// E_{i,j} = D - E_i - E_j, indices 1-based.
Class eij(const Frame& f, int i, int j);

/// A 10-sequence together with one E_{i,j} = (sum of ten)/3 - E_i - E_j.
struct MaximalSimpleSet {
  std::array<Class, 10> ten;
  Class extra;
  std::pair<int, int> pair_indices;  // 1-based, i < j
};

/// Throws InternalError if the invariants of a maximal simple isotropic set fail.
void validate_maximal(const MaximalSimpleSet& m);

/// Pairing pattern of a simple isotropic set.
enum class SetPattern {
  AllOne,       // every pair meets with 1
  OneDouble,    // exactly one pair meets with 2
  DoubleStar,   // one member meets two others with 2
};

/// Classifies a candidate simple isotropic set; throws InvalidArgument if the
/// members are not primitive effective isotropic classes or the pairings fit no pattern.
SetPattern classify_simple_set(const std::vector<Class>& set, const AmpleReference& ample);

/// Extends a simple isotropic set to a maximal one containing every member.
/// `preferred_extra`, when given, must be a member of a pairing-2 pair and is placed
/// in the E_{i,j} slot. Members of the input come first in `ten`, in input order.
MaximalSimpleSet extend_to_maximal(const std::vector<Class>& set,
                                   const std::optional<Class>& preferred_extra = std::nullopt,
                                   const AmpleReference& ample = reference_frame().A);

}  // namespace enriques
