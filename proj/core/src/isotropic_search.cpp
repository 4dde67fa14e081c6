#include "enriques/isotropic_search.hpp"

#include <algorithm>
#include <set>

#include "isotropic_enum.hpp"

namespace enriques {

namespace {

void require_positive_effective(const Class& h, const AmpleReference& ample) {
  if (square(h) <= 0) throw InvalidArgument("class must have positive square: " + h.to_string());
  if (pair(h, ample.A) <= 0) throw InvalidArgument("class must be effective: " + h.to_string());
}

void require_decomposable(const Class& h, const AmpleReference& ample) {
  if (h.is_zero()) throw InvalidArgument("the zero class has no decomposition");
  if (square(h) < 0) throw InvalidArgument("class must have nonnegative square: " + h.to_string());
  if (!is_effective(h, ample)) throw InvalidArgument("class must be effective: " + h.to_string());
}

// Depth-first assignment of classes to the slots of a form. At every level the
// unassigned slot with the smallest required pairing against the remainder is
// filled from an exact enumeration; the last slot is forced by the remainder.
class RealizationSearch {
 public:
  RealizationSearch(const CanonicalForm& form, const AmpleReference& ample,
                    const std::function<bool(const SimpleDecomposition&)>& visit)
      : ample_(ample), visit_(visit) {
    const std::vector<int> slots = support(form);
    n_ = slots.size();
    coeff_.resize(n_);
    m_.assign(n_, std::vector<std::int64_t>(n_, 0));
    for (std::size_t j = 0; j < n_; ++j) {
      coeff_[j] = coefficient(form, slots[j]);
      for (std::size_t k = 0; k < n_; ++k) m_[j][k] = slot_pairing(slots[j], slots[k]);
    }
    // Interchangeable slots: equal coefficients and equal pairings with every other slot.
    twins_.assign(n_, {});
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        if (j == k || coeff_[j] != coeff_[k]) continue;
        bool same = true;
        for (std::size_t l = 0; l < n_ && same; ++l)
          if (l != j && l != k && m_[j][l] != m_[k][l]) same = false;
        if (same) twins_[j].push_back(k);
      }
    chosen_.assign(n_, std::nullopt);
  }

  void run(const Class& h) { step(h, n_); }

 private:
  bool acceptable(std::size_t j, const Class& x) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (!chosen_[k]) continue;
      if (pair(x, *chosen_[k]) != m_[j][k]) return false;
    }
    for (std::size_t k : twins_[j]) {
      if (!chosen_[k]) continue;
      if (k < j ? !(*chosen_[k] < x) : !(x < *chosen_[k])) return false;
    }
    return true;
  }

  void emit() {
    SimpleDecomposition d;
    for (std::size_t j = 0; j < n_; ++j) d.terms.emplace_back(coeff_[j], *chosen_[j]);
    std::sort(d.terms.begin(), d.terms.end());
    if (!visit_(d)) stop_ = true;
  }

  void step(const Class& r, std::size_t remaining) {
    if (stop_) return;
    if (remaining == 0) {
      if (!r.is_zero()) throw InternalError("realization left a nonzero remainder");
      emit();
      return;
    }
    std::size_t slot = n_;
    std::int64_t best = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (chosen_[j]) continue;
      std::int64_t q = 0;
      for (std::size_t k = 0; k < n_; ++k)
        if (k != j && !chosen_[k]) q += coeff_[k] * m_[j][k];
      if (slot == n_ || q < best) {
        slot = j;
        best = q;
      }
    }

    auto try_candidate = [&](const Class& x) {
      if (!acceptable(slot, x)) return;
      chosen_[slot] = x;
      step(r - coeff_[slot] * x, remaining - 1);
      chosen_[slot].reset();
    };

    if (remaining == 1) {
      if (divisibility(r) % coeff_[slot] != 0) return;
      const Class x = r.divided_by(coeff_[slot]);
      if (x.is_zero() || square(x) != 0 || !is_primitive(x) || !is_effective(x, ample_)) return;
      try_candidate(x);
      return;
    }
    if (square(r) <= 0) return;
    std::vector<Class> candidates = detail::isotropic_solutions(r, best);
    std::sort(candidates.begin(), candidates.end());
    for (const Class& x : candidates) {
      if (stop_) return;
      if (!is_primitive(x) || !is_effective(x, ample_)) continue;
      try_candidate(x);
    }
  }

  const AmpleReference& ample_;
  const std::function<bool(const SimpleDecomposition&)>& visit_;
  std::size_t n_ = 0;
  std::vector<std::int64_t> coeff_;
  std::vector<std::vector<std::int64_t>> m_;
  std::vector<std::vector<std::size_t>> twins_;
  std::vector<std::optional<Class>> chosen_;
  bool stop_ = false;
};

struct Profile {
  std::int64_t genus;
  std::int64_t phi;
  bool even;
};

Profile profile_of(const Class& h, const AmpleReference& ample) {
  return {1 + square(h) / 2, phi_bruteforce(h, ample), is_two_divisible(h)};
}

// Valid forms that could describe h: same genus, phi and parity.
std::vector<CanonicalForm> candidate_forms(const Profile& p) {
  std::vector<CanonicalForm> out;
  for (const CanonicalForm& f : enumerate_forms(p.genus))
    if (f.eps_available() == p.even && phi_formula(f) == p.phi) out.push_back(f);
  return out;
}

CanonicalForm isotropic_form(const Class& h) {
  CanonicalForm f;
  f.a[0] = divisibility(h);
  return f;
}

}  // namespace

std::vector<Class> isotropic_with_pairing(const Class& h, std::int64_t c, const AmpleReference& ample) {
  require_positive_effective(h, ample);
  if (c <= 0) throw InvalidArgument("pairing value must be positive");
  std::vector<Class> out;
  for (const Class& x : detail::isotropic_solutions(h, c))
    if (is_primitive(x) && is_effective(x, ample)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Class> isotropic_with_pairing(const Class& h, std::int64_t c) {
  return isotropic_with_pairing(h, c, reference_frame().A);
}

std::int64_t phi_bruteforce(const Class& h, const AmpleReference& ample) {
  require_positive_effective(h, ample);
  const std::int64_t sq = square(h);
  for (std::int64_t c = 1; c * c <= sq; ++c)
    if (!isotropic_with_pairing(h, c, ample).empty()) return c;
  throw InternalError("no isotropic class with pairing at most sqrt(h^2)");
}

std::int64_t phi_bruteforce(const Class& h) { return phi_bruteforce(h, reference_frame().A); }

Class SimpleDecomposition::sum() const {
  Class s;
  for (const auto& [c, e] : terms) s += c * e;
  return s;
}

void validate_decomposition(const SimpleDecomposition& d, const AmpleReference& ample) {
  if (d.terms.empty() || d.terms.size() > 10) throw InvalidArgument("decomposition length must be 1..10");
  std::vector<Class> classes;
  for (const auto& [c, e] : d.terms) {
    if (c <= 0) throw InvalidArgument("decomposition coefficients must be positive");
    if (std::find(classes.begin(), classes.end(), e) != classes.end())
      throw InvalidArgument("decomposition repeats a class");
    classes.push_back(e);
  }
  const SetPattern pattern = classify_simple_set(classes, ample);
  const std::size_t n = classes.size();
  if (pattern == SetPattern::AllOne && n == 9) throw InvalidArgument("nine summands meeting pairwise in 1");
  if (pattern == SetPattern::OneDouble && n == 10) throw InvalidArgument("ten summands with one pairing-2 pair");
}

void for_each_realization(const Class& h, const CanonicalForm& form,
                          const std::function<bool(const SimpleDecomposition&)>& visit,
                          const AmpleReference& ample) {
  require_decomposable(h, ample);
  if (!validate(form)) throw InvalidArgument("invalid form " + format_form(form));
  if (square(h) != square(vector_of(form))) return;
  RealizationSearch(form, ample, visit).run(h);
}

bool realizes(const Class& h, const CanonicalForm& form, const AmpleReference& ample) {
  bool found = false;
  for_each_realization(
      h, form,
      [&](const SimpleDecomposition&) {
        found = true;
        return false;
      },
      ample);
  return found;
}

std::vector<CanonicalForm> canonical_forms_of(const Class& h, const AmpleReference& ample) {
  require_decomposable(h, ample);
  if (square(h) == 0) return {isotropic_form(h)};
  std::vector<CanonicalForm> out;
  for (const CanonicalForm& f : candidate_forms(profile_of(h, ample)))
    if (realizes(h, f, ample)) out.push_back(f);
  if (out.empty()) throw InternalError("no canonical form found for " + h.to_string());
  return out;
}

std::vector<CanonicalForm> canonical_forms_of(const Class& h) { return canonical_forms_of(h, reference_frame().A); }

CanonicalForm signature_of(const Class& h, const AmpleReference& ample) {
  require_decomposable(h, ample);
  if (square(h) == 0) return isotropic_form(h);
  for (const CanonicalForm& f : candidate_forms(profile_of(h, ample)))
    if (realizes(h, f, ample)) return f;
  throw InternalError("no canonical form found for " + h.to_string());
}

CanonicalForm signature_of(const Class& h) { return signature_of(h, reference_frame().A); }

std::vector<SimpleDecomposition> decompositions_of(const Class& h, const AmpleReference& ample) {
  require_decomposable(h, ample);
  if (square(h) == 0) {
    const std::int64_t m = divisibility(h);
    return {SimpleDecomposition{{{m, h.divided_by(m)}}}};
  }
  std::set<SimpleDecomposition> found;
  for (const CanonicalForm& f : candidate_forms(profile_of(h, ample)))
    for_each_realization(
        h, f,
        [&](const SimpleDecomposition& d) {
          found.insert(d);
          return true;
        },
        ample);
  if (found.empty()) throw InternalError("no simple decomposition found for " + h.to_string());
  return {found.begin(), found.end()};
}

std::vector<SimpleDecomposition> decompositions_of(const Class& h) { return decompositions_of(h, reference_frame().A); }

bool are_equivalent(const Class& h1, const Class& h2, const AmpleReference& ample) {
  require_positive_effective(h1, ample);
  require_positive_effective(h2, ample);
  if (square(h1) != square(h2) || is_two_divisible(h1) != is_two_divisible(h2)) return false;
  if (phi_bruteforce(h1, ample) != phi_bruteforce(h2, ample)) return false;
  return realizes(h2, signature_of(h1, ample), ample);
}

bool are_equivalent(const Class& h1, const Class& h2) { return are_equivalent(h1, h2, reference_frame().A); }

std::size_t isotropic_count(const Class& h, std::int64_t c) { return isotropic_with_pairing(h, c).size(); }

}  // namespace enriques
