#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enriques/decomposition_types.hpp"
#include "enriques/isotropic_search.hpp"

namespace enriques {

inline constexpr const char* kToolVersion = "1.0.0";

/// One component of the numerically polarized moduli space of genus g and given phi.
struct ComponentRecord {
  std::int64_t g = 0;
  std::int64_t phi = 0;
  CanonicalForm signature;
  int length_min = 0;
  int max_symmetry_max = 0;
  bool two_divisible = false;
  int linear_components = 1;
  bool linear_count_certain = false;
  Status status = Status::UnknownNumericalOnly;
  std::vector<CanonicalForm> witnesses;  // every canonical form of the class, ascending

  bool operator==(const ComponentRecord&) const = default;
};

struct CatalogMeta {
  std::string tool_version = kToolVersion;
  std::string frame_fingerprint;
  std::int64_t g_min = 0;
  std::int64_t g_max = 0;
  std::optional<std::int64_t> phi_filter;
};

struct CatalogTable {
  CatalogMeta meta;
  std::vector<ComponentRecord> records;  // sorted by (g, phi, signature)
};

struct EnumerationOptions {
  std::optional<std::int64_t> phi_filter;
  unsigned threads = 1;
  /// Coefficient bound of the form search; defaults to g - 1.
  std::optional<std::int64_t> coefficient_bound;
};

/// One record per orbit of polarizations of genus g, sorted by (phi, signature).
std::vector<ComponentRecord> enumerate_types(std::int64_t g, const EnumerationOptions& options = {});

CatalogTable build_catalog(std::int64_t g_min, std::int64_t g_max, const EnumerationOptions& options = {});

struct ComponentCount {
  std::int64_t numerical = 0;
  std::int64_t linear = 0;
  bool certain = true;
};

ComponentCount count_components(std::int64_t g, std::int64_t phi);
ComponentCount count_components(const std::vector<ComponentRecord>& records, std::int64_t g, std::int64_t phi);

/// Hex digest of the reference frame coordinates.
std::string frame_fingerprint(const Frame& f = reference_frame());

std::string to_json(const CatalogTable& table);
std::string to_csv(const CatalogTable& table);
std::string to_markdown(const CatalogTable& table);

/// Decomposition types of genus g and phi <= 5 known in closed form, one
/// representative form per type (empty for phi > 5).
std::vector<CanonicalForm> reference_types(std::int64_t g, std::int64_t phi);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string summary;
  std::vector<std::string> counterexamples;
};

struct VerificationReport {
  std::int64_t g_min = 0;
  std::int64_t g_max = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::string to_text() const;
};

/// Runs the full verification suite over the genus range (2 <= g_min <= g_max <= 30).
VerificationReport verify_paper(std::int64_t g_min, std::int64_t g_max, unsigned threads = 1);

}  // namespace enriques
