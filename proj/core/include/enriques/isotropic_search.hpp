#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "enriques/decomposition_types.hpp"
#include "enriques/frames.hpp"

namespace enriques {

/// All primitive, isotropic, effective E with pair(E, h) = c, sorted by coordinates.
/// Complete: the search is an exact lattice-point enumeration, see isotropic_enum.cpp.
std::vector<Class> isotropic_with_pairing(const Class& h, std::int64_t c, const AmpleReference& ample);
std::vector<Class> isotropic_with_pairing(const Class& h, std::int64_t c);

/// Smallest pairing of h with an effective isotropic class.
std::int64_t phi_bruteforce(const Class& h, const AmpleReference& ample);
std::int64_t phi_bruteforce(const Class& h);

/// h = sum of coeff * cls over the terms, kept sorted by (coeff, cls).
struct SimpleDecomposition {
  std::vector<std::pair<std::int64_t, Class>> terms;

  int length() const { return static_cast<int>(terms.size()); }
  Class sum() const;

  auto operator<=>(const SimpleDecomposition&) const = default;
};

/// Throws InvalidArgument unless the terms form a simple isotropic decomposition.
void validate_decomposition(const SimpleDecomposition& d, const AmpleReference& ample);

/// Decompositions of h with the coefficients and pairing pattern of `form`.
/// The callback may return false to stop the search early.
void for_each_realization(const Class& h, const CanonicalForm& form,
                          const std::function<bool(const SimpleDecomposition&)>& visit,
                          const AmpleReference& ample);

/// True iff h has a simple decomposition of the type of `form`.
bool realizes(const Class& h, const CanonicalForm& form, const AmpleReference& ample);

/// Every simple isotropic decomposition of h, without repetition.
std::vector<SimpleDecomposition> decompositions_of(const Class& h, const AmpleReference& ample);
std::vector<SimpleDecomposition> decompositions_of(const Class& h);

/// All canonical forms of h, ascending.
std::vector<CanonicalForm> canonical_forms_of(const Class& h, const AmpleReference& ample);
std::vector<CanonicalForm> canonical_forms_of(const Class& h);

/// Lexicographically smallest canonical form of h.
CanonicalForm signature_of(const Class& h, const AmpleReference& ample);
CanonicalForm signature_of(const Class& h);

bool are_equivalent(const Class& h1, const Class& h2, const AmpleReference& ample);
bool are_equivalent(const Class& h1, const Class& h2);

/// Number of effective isotropic classes meeting h in exactly c (cheap orbit invariant).
std::size_t isotropic_count(const Class& h, std::int64_t c);

}  // namespace enriques
