#include "enriques/decomposition_types.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace enriques {

bool CanonicalForm::eps_available() const {
  if (a0 % 2 != 0) return false;
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x % 2 == 0; });
}

std::optional<std::string> violated_constraint(const CanonicalForm& form) {
  const auto& a = form.a;
  if (form.a0 < 0 || std::any_of(a.begin(), a.end(), [](std::int64_t x) { return x < 0; })) return "nonnegative";
  if (form.a0 == 0 && std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; })) return "nonzero";
  bool ordered = a[0] > 0 && a[0] >= a[1] && (form.a0 > 0 || a[1] >= a[2]);
  for (std::size_t k = 2; k + 1 < a.size(); ++k) ordered = ordered && a[k] >= a[k + 1];
  if (!ordered) return "ordering";
  const auto positive = std::count_if(a.begin(), a.end(), [](std::int64_t x) { return x > 0; });
  if (form.a0 == 0 ? positive == 9 : a[9] != 0) return "frame_support";
  return std::nullopt;
}

bool validate(const CanonicalForm& form) { return !violated_constraint(form).has_value(); }

namespace {

void require_valid(const CanonicalForm& form) {
  if (auto v = violated_constraint(form)) throw InvalidArgument("invalid form " + format_form(form) + ": " + *v);
}

}  // namespace

std::int64_t coefficient(const CanonicalForm& form, int slot) { return slot == 0 ? form.a0 : form.a[slot - 1]; }

std::int64_t slot_pairing(int s, int t) {
  if (s == t) return 0;
  if (s > t) std::swap(s, t);
  return (s == 0 && (t == 1 || t == 2)) ? 2 : 1;
}

std::vector<int> support(const CanonicalForm& form) {
  std::vector<int> out;
  for (int s = 0; s <= 10; ++s)
    if (coefficient(form, s) > 0) out.push_back(s);
  return out;
}

Class vector_of(const CanonicalForm& form, const Frame& f) {
  require_valid(form);
  Class h = form.a0 * eij(f, 1, 2);
  for (std::size_t i = 0; i < 10; ++i) h += form.a[i] * f.E[i];
  return h;
}

std::int64_t genus_of(const CanonicalForm& form) {
  require_valid(form);
  const auto& a = form.a;
  std::int64_t g = 1;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j) g = checked::add(g, checked::mul(a[i], a[j]));
  std::int64_t weight = checked::mul(2, checked::add(a[0], a[1]));
  for (std::size_t k = 2; k < 10; ++k) weight = checked::add(weight, a[k]);
  g = checked::add(g, checked::mul(form.a0, weight));

  const std::int64_t sq = square(vector_of(form));
  if (sq % 2 != 0 || 1 + sq / 2 != g) throw InternalError("genus formula disagrees with the lattice vector");
  return g;
}

std::int64_t phi_formula(const CanonicalForm& form) {
  require_valid(form);
  if (genus_of(form) < 2) throw InvalidArgument("phi is defined for genus >= 2 only");
  const auto& a = form.a;
  std::int64_t total = form.a0;
  for (std::int64_t x : a) total = checked::add(total, x);
  std::int64_t m = std::max(a[0] - form.a0, a[1] - form.a0);
  for (std::size_t k = 2; k < 10; ++k) m = std::max(m, a[k]);
  m = std::max(m, form.a0 - a[0] - a[1]);
  return total - m;
}

int length_of(const CanonicalForm& form) {
  require_valid(form);
  return static_cast<int>(support(form).size());
}

int max_symmetry(const CanonicalForm& form) {
  require_valid(form);
  const std::vector<int> slots = support(form);
  std::map<std::int64_t, int> counts;
  for (int s : slots) {
    const bool all_one =
        std::all_of(slots.begin(), slots.end(), [&](int t) { return t == s || slot_pairing(s, t) == 1; });
    if (all_one) ++counts[coefficient(form, s)];
  }
  int best = 0;
  for (const auto& [value, count] : counts) best = std::max(best, count);
  return best;
}

int linear_component_count(const CanonicalForm& form) {
  require_valid(form);
  return form.eps_available() ? 2 : 1;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::UnirationalComponent: return "unirational";
    case Status::UniruledComponent: return "uniruled";
    case Status::UnknownNumericalOnly: return "unknown";
  }
  return "unknown";
}

Status status_of(const CanonicalForm& form) {
  const int len = length_of(form);
  const int sym = max_symmetry(form);
  const std::vector<int> slots = support(form);
  bool all_one = true;
  for (int s : slots)
    for (int t : slots)
      if (s < t && slot_pairing(s, t) != 1) all_one = false;
  if (len <= 4 || (len == 5 && all_one) || sym >= 7) return Status::UnirationalComponent;
  if (len == 5 || sym >= 6) return Status::UniruledComponent;
  return Status::UnknownNumericalOnly;
}

Status status_of(const std::vector<CanonicalForm>& forms) {
  if (forms.empty()) throw InvalidArgument("status_of needs at least one form");
  Status best = Status::UnknownNumericalOnly;
  for (const CanonicalForm& f : forms) best = std::max(best, status_of(f));
  return best;
}

namespace {

// Recursive generation in slot order a0, a1, ..., a10. Every genus term is a
// nonnegative product, so the running total only grows and prunes the search.
class FormGenerator {
 public:
  FormGenerator(std::int64_t target, std::int64_t bound) : target_(target), bound_(bound) {}

  std::vector<CanonicalForm> run() {
    for (std::int64_t a0 = 0; a0 <= bound_; ++a0) {
      form_.a0 = a0;
      place(1, 0, 0);
    }
    form_ = {};
    return std::move(out_);
  }

 private:
  void place(int slot, std::int64_t partial, std::int64_t sum_a) {
    if (slot == 11) {
      if (partial == target_ && validate(form_)) out_.push_back(form_);
      return;
    }
    std::int64_t hi = bound_;
    if (slot == 2) hi = std::min(hi, form_.a[0]);
    if (slot >= 4) hi = std::min(hi, form_.a[slot - 2]);
    if (slot == 3 && form_.a0 == 0) hi = std::min(hi, form_.a[1]);
    std::int64_t lo = (slot == 1) ? 1 : 0;
    const std::int64_t weight = sum_a + form_.a0 * (slot <= 2 ? 2 : 1);
    for (std::int64_t x = lo; x <= hi; ++x) {
      const std::int64_t next = partial + x * weight;
      if (next > target_) break;
      form_.a[slot - 1] = x;
      place(slot + 1, next, sum_a + x);
    }
    form_.a[slot - 1] = 0;
  }

  std::int64_t target_;
  std::int64_t bound_;
  CanonicalForm form_{};
  std::vector<CanonicalForm> out_;
};

}  // namespace

std::vector<CanonicalForm> enumerate_forms(std::int64_t g, std::int64_t bound) {
  if (g < 1) throw InvalidArgument("genus must be positive");
  if (bound < 0) throw InvalidArgument("coefficient bound must be nonnegative");
  std::vector<CanonicalForm> out = FormGenerator(g - 1, bound).run();
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalForm parse_form(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw InvalidArgument("expected \"a0;a1,...,a10\"");
  auto parse_int = [](const std::string& tok) {
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (tok.empty() || ec != std::errc() || p != last) throw InvalidArgument("not an integer: \"" + tok + "\"");
    return v;
  };
  CanonicalForm f;
  f.a0 = parse_int(text.substr(0, semi));
  std::stringstream rest(text.substr(semi + 1));
  std::string tok;
  std::size_t n = 0;
  while (std::getline(rest, tok, ',')) {
    if (n == 10) throw InvalidArgument("expected exactly 10 coefficients after ';'");
    f.a[n++] = parse_int(tok);
  }
  if (n != 10 || (!text.empty() && text.back() == ',')) throw InvalidArgument("expected exactly 10 coefficients after ';'");
  return f;
}

std::string format_form(const CanonicalForm& form) {
  std::ostringstream os;
  os << form.a0 << ';';
  for (std::size_t i = 0; i < 10; ++i) os << (i ? "," : "") << form.a[i];
  return os.str();
}

}  // namespace enriques
