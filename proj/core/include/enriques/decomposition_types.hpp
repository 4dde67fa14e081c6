#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enriques/frames.hpp"

namespace enriques {

/// Coefficients of H = a0 E_{1,2} + a_1 E_1 + ... + a_10 E_10 over a frame.
/// Ordered lexicographically by (a0, a_1, ..., a_10).
struct CanonicalForm {
  std::int64_t a0 = 0;
  std::array<std::int64_t, 10> a{};

  /// True iff every coefficient is even, i.e. the torsion twist gives a second linear type.
  bool eps_available() const;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Name of the first violated constraint, or nullopt for a valid form.
/// Names: "nonnegative", "nonzero", "ordering", "frame_support".
std::optional<std::string> violated_constraint(const CanonicalForm& form);
bool validate(const CanonicalForm& form);

/// Slot 0 is E_{1,2}, slot k (1..10) is E_k.
std::int64_t coefficient(const CanonicalForm& form, int slot);
/// Pairing between the frame classes in two distinct slots.
std::int64_t slot_pairing(int s, int t);
/// Slots with a positive coefficient, ascending.
std::vector<int> support(const CanonicalForm& form);

Class vector_of(const CanonicalForm& form, const Frame& f = reference_frame());

/// 1 + H^2/2 from the coefficients, cross-checked against the lattice vector.
std::int64_t genus_of(const CanonicalForm& form);
std::int64_t phi_formula(const CanonicalForm& form);
int length_of(const CanonicalForm& form);
int max_symmetry(const CanonicalForm& form);
int linear_component_count(const CanonicalForm& form);

enum class Status { UnknownNumericalOnly = 0, UniruledComponent = 1, UnirationalComponent = 2 };

/// Lower-case name used in serialized output.
std::string to_string(Status s);

/// Status of a single representative.
Status status_of(const CanonicalForm& form);
/// Best status over the representatives of one class. Throws on empty input.
Status status_of(const std::vector<CanonicalForm>& forms);

/// All valid forms of genus g with every coefficient <= bound, in lexicographic order.
std::vector<CanonicalForm> enumerate_forms(std::int64_t g, std::int64_t bound);
inline std::vector<CanonicalForm> enumerate_forms(std::int64_t g) { return enumerate_forms(g, g - 1); }

/// Parses "a0;a1,...,a10". Throws InvalidArgument on malformed text (validity is not checked).
CanonicalForm parse_form(const std::string& text);
std::string format_form(const CanonicalForm& form);

}  // namespace enriques
