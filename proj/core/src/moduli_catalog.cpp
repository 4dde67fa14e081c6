#include "enriques/moduli_catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace enriques {

namespace {

using json = nlohmann::ordered_json;

// Applies fn to every index in [0, n) on up to `threads` workers; the first
// exception thrown by any worker is rethrown on the caller's thread.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string form_key(const CanonicalForm& f) { return "(" + format_form(f) + ")"; }

ComponentRecord make_record(std::int64_t g, const CanonicalForm& signature, std::vector<CanonicalForm> witnesses) {
  std::sort(witnesses.begin(), witnesses.end());
  if (witnesses.front() != signature) throw InternalError("signature is not the smallest form of its class");
  ComponentRecord r;
  r.g = g;
  r.phi = phi_formula(signature);
  r.signature = signature;
  r.length_min = length_of(signature);
  r.max_symmetry_max = 0;
  for (const CanonicalForm& w : witnesses) {
    if (phi_formula(w) != r.phi || genus_of(w) != g) throw InternalError("witness with different invariants");
    r.length_min = std::min(r.length_min, length_of(w));
    r.max_symmetry_max = std::max(r.max_symmetry_max, max_symmetry(w));
  }
  r.two_divisible = is_two_divisible(vector_of(signature));
  r.linear_components = linear_component_count(signature);
  r.status = status_of(witnesses);
  r.linear_count_certain = r.status != Status::UnknownNumericalOnly;
  r.witnesses = std::move(witnesses);
  return r;
}

json form_json(const CanonicalForm& f) {
  return json{{"a0", f.a0}, {"a", f.a}};
}

}  // namespace

std::vector<ComponentRecord> enumerate_types(std::int64_t g, const EnumerationOptions& options) {
  if (g < 2) throw InvalidArgument("genus must be at least 2");
  // Two summands a_i E_i, a_j E_j with a_i, a_j > 0 contribute a_i a_j (E_i.E_j) >= a_i to
  // H^2 / 2 = g - 1, and every form of genus >= 2 has at least two summands.
  const std::int64_t bound = options.coefficient_bound.value_or(g - 1);
  std::vector<CanonicalForm> forms;
  for (const CanonicalForm& f : enumerate_forms(g, bound))
    if (!options.phi_filter || phi_formula(f) == *options.phi_filter) forms.push_back(f);

  std::vector<CanonicalForm> signatures(forms.size());
  parallel_for(forms.size(), options.threads, [&](std::size_t i) { signatures[i] = signature_of(vector_of(forms[i])); });

  std::map<std::pair<std::int64_t, CanonicalForm>, std::vector<CanonicalForm>> groups;
  for (std::size_t i = 0; i < forms.size(); ++i) groups[{phi_formula(forms[i]), signatures[i]}].push_back(forms[i]);

  std::vector<ComponentRecord> records;
  for (auto& [key, members] : groups) records.push_back(make_record(g, key.second, std::move(members)));
  return records;
}

CatalogTable build_catalog(std::int64_t g_min, std::int64_t g_max, const EnumerationOptions& options) {
  if (g_min < 2 || g_min > g_max) throw InvalidArgument("genus range must satisfy 2 <= g_min <= g_max");
  CatalogTable table;
  table.meta.frame_fingerprint = frame_fingerprint();
  table.meta.g_min = g_min;
  table.meta.g_max = g_max;
  table.meta.phi_filter = options.phi_filter;
  for (std::int64_t g = g_min; g <= g_max; ++g) {
    auto recs = enumerate_types(g, options);
    table.records.insert(table.records.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  return table;
}

ComponentCount count_components(const std::vector<ComponentRecord>& records, std::int64_t g, std::int64_t phi) {
  ComponentCount c;
  for (const ComponentRecord& r : records) {
    if (r.g != g || r.phi != phi) continue;
    ++c.numerical;
    c.linear += r.linear_components;
    c.certain = c.certain && r.linear_count_certain;
  }
  return c;
}

ComponentCount count_components(std::int64_t g, std::int64_t phi) {
  if (phi < 1) throw InvalidArgument("phi must be positive");
  EnumerationOptions opt;
  opt.phi_filter = phi;
  return count_components(enumerate_types(g, opt), g, phi);
}

std::string frame_fingerprint(const Frame& f) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&](const Class& c) {
    for (std::int64_t x : c.coords()) {
      auto u = static_cast<std::uint64_t>(x);
      for (int b = 0; b < 8; ++b) {
        h ^= (u >> (8 * b)) & 0xffu;
        h *= 1099511628211ull;
      }
    }
  };
  for (const Class& e : f.E) mix(e);
  mix(f.D);
  mix(f.A.A);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_json(const CatalogTable& table) {
  json meta = {{"tool", "enriques-catalog"},
               {"version", table.meta.tool_version},
               {"frame_fingerprint", table.meta.frame_fingerprint},
               {"g_min", table.meta.g_min},
               {"g_max", table.meta.g_max},
               {"phi", table.meta.phi_filter ? json(*table.meta.phi_filter) : json(nullptr)}};
  json records = json::array();
  for (const ComponentRecord& r : table.records) {
    records.push_back({{"g", r.g},
                       {"phi", r.phi},
                       {"signature", form_json(r.signature)},
                       {"length", r.length_min},
                       {"max_symmetry", r.max_symmetry_max},
                       {"two_divisible", r.two_divisible},
                       {"linear_components", r.linear_components},
                       {"certain", r.linear_count_certain},
                       {"status", to_string(r.status)}});
  }
  return json{{"meta", meta}, {"records", records}}.dump(2) + "\n";
}

std::string to_csv(const CatalogTable& table) {
  std::ostringstream os;
  os << "g,phi,a0";
  for (int i = 1; i <= 10; ++i) os << ",a" << i;
  os << ",length,max_symmetry,two_divisible,linear_components,certain,status\n";
  for (const ComponentRecord& r : table.records) {
    os << r.g << ',' << r.phi << ',' << r.signature.a0;
    for (std::int64_t x : r.signature.a) os << ',' << x;
    os << ',' << r.length_min << ',' << r.max_symmetry_max << ',' << (r.two_divisible ? "true" : "false") << ','
       << r.linear_components << ',' << (r.linear_count_certain ? "true" : "false") << ',' << to_string(r.status)
       << '\n';
  }
  return os.str();
}

std::string to_markdown(const CatalogTable& table) {
  std::ostringstream os;
  os << "# Components of numerically polarized Enriques surfaces\n\n";
  os << "Genus " << table.meta.g_min << ".." << table.meta.g_max;
  if (table.meta.phi_filter) os << ", phi = " << *table.meta.phi_filter;
  os << "; frame " << table.meta.frame_fingerprint << ", version " << table.meta.tool_version << ".\n";
  os << "Signature `a0;a1,...,a10` is H = a0 E_{1,2} + a1 E_1 + ... + a10 E_10.\n";

  std::int64_t current_g = -1;
  std::int64_t current_phi = -1;
  for (const ComponentRecord& r : table.records) {
    if (r.g != current_g || r.phi != current_phi) {
      current_g = r.g;
      current_phi = r.phi;
      const ComponentCount c = count_components(table.records, r.g, r.phi);
      os << "\n## g = " << r.g << ", phi = " << r.phi << " (" << c.numerical << " numerical, " << c.linear
         << " linear" << (c.certain ? "" : ", linear count conjectural") << ")\n\n";
      os << "| signature | length | max symmetry | 2-divisible | linear | certain | status |\n";
      os << "|---|---|---|---|---|---|---|\n";
    }
    os << "| `" << format_form(r.signature) << "` | " << r.length_min << " | " << r.max_symmetry_max << " | "
       << (r.two_divisible ? "yes" : "no") << " | " << r.linear_components << " | "
       << (r.linear_count_certain ? "yes" : "no") << " | " << to_string(r.status) << " |\n";
  }
  return os.str();
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "verification over g = " << g_min << ".." << g_max << "\n";
  for (const CheckResult& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.summary << "\n";
    for (const std::string& ce : c.counterexamples) os << "    " << ce << "\n";
  }
  os << (all_passed() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      result_.passed = false;
      if (result_.counterexamples.size() < 20) result_.counterexamples.push_back(what);
    }
  }

  CheckResult finish(const std::string& summary) {
    result_.summary = summary + " (" + std::to_string(total_) + " assertions)";
    return result_;
  }

 private:
  CheckResult result_;
  std::size_t total_ = 0;
};

std::string gp(std::int64_t g, std::int64_t phi) {
  return "(g=" + std::to_string(g) + ", phi=" + std::to_string(phi) + ")";
}

std::vector<const ComponentRecord*> at(const std::vector<ComponentRecord>& recs, std::int64_t g, std::int64_t phi) {
  std::vector<const ComponentRecord*> out;
  for (const ComponentRecord& r : recs)
    if (r.g == g && r.phi == phi) out.push_back(&r);
  return out;
}

CheckResult check_low_phi(const std::vector<ComponentRecord>& recs, std::int64_t g_min, std::int64_t g_max) {
  Checker c("low_phi_types");
  for (std::int64_t g = g_min; g <= g_max; ++g)
    for (std::int64_t phi = 1; phi <= 5; ++phi) {
      std::multiset<CanonicalForm> expected;
      for (const CanonicalForm& f : reference_types(g, phi)) {
        c.expect(genus_of(f) == g && phi_formula(f) == phi, "reference form " + form_key(f) + " is not at " + gp(g, phi));
        expected.insert(signature_of(vector_of(f)));
      }
      std::multiset<CanonicalForm> got;
      for (const ComponentRecord* r : at(recs, g, phi)) got.insert(r->signature);
      std::string detail;
      for (const CanonicalForm& f : got) detail += " " + form_key(f);
      c.expect(expected == got, gp(g, phi) + ": expected " + std::to_string(expected.size()) + " types, got " +
                                    std::to_string(got.size()) + ":" + detail);
    }
  return c.finish("types with phi <= 5 match the closed-form classification");
}

std::int64_t expected_linear(std::int64_t g, std::int64_t phi) {
  if (phi == 1) return 1;
  if (phi == 2) {
    if (g % 2 == 0 || g == 3) return 1;
    return g % 4 == 3 ? 2 : 3;
  }
  return (g <= 8 || g % 3 == 2) ? 1 : 2;
}

CheckResult check_intro_counts(const std::vector<ComponentRecord>& recs, std::int64_t g_min, std::int64_t g_max) {
  Checker c("component_counts");
  for (std::int64_t g = g_min; g <= g_max; ++g)
    for (std::int64_t phi = 1; phi <= 3; ++phi) {
      if (phi * phi > 2 * (g - 1)) continue;
      const ComponentCount n = count_components(recs, g, phi);
      const std::int64_t want = expected_linear(g, phi);
      c.expect(n.linear == want, gp(g, phi) + ": " + std::to_string(n.linear) + " linear components, expected " +
                                     std::to_string(want));
    }
  return c.finish("linear component counts for phi = 1, 2, 3");
}

CheckResult check_borderline(const std::vector<ComponentRecord>& recs, std::int64_t g_min, std::int64_t g_max) {
  Checker c("borderline_counts");
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>> cases = {
      {{3, 2}, 1}, {{9, 4}, 2}, {{19, 6}, 1}};
  for (std::int64_t phi = 2; phi <= 7; ++phi) cases.push_back({{phi * (phi + 1) / 2, phi}, phi == 6 ? 3 : 1});
  for (const auto& [key, want] : cases) {
    const auto [g, phi] = key;
    if (g < g_min || g > g_max) continue;
    const ComponentCount n = count_components(recs, g, phi);
    c.expect(n.linear == want, gp(g, phi) + ": " + std::to_string(n.linear) + " components, expected " +
                                   std::to_string(want));
    for (const ComponentRecord* r : at(recs, g, phi))
      c.expect(r->status == Status::UnirationalComponent, gp(g, phi) + ": " + form_key(r->signature) + " is " +
                                                             to_string(r->status));
  }
  return c.finish("component counts at the extremal genera");
}

CheckResult check_low_genus_status(const std::vector<ComponentRecord>& recs) {
  Checker c("low_genus_status");
  std::map<std::pair<std::int64_t, std::int64_t>, int> exceptions;
  for (const ComponentRecord& r : recs) {
    if (r.g > 20) continue;
    const bool special = (r.g == 16 || r.g == 17) && r.phi == 5;
    if (special) {
      ++exceptions[{r.g, r.phi}];
      c.expect(r.status == Status::UniruledComponent, gp(r.g, r.phi) + " is " + to_string(r.status));
    } else {
      c.expect(r.status == Status::UnirationalComponent,
               gp(r.g, r.phi) + " " + form_key(r.signature) + " is " + to_string(r.status));
    }
  }
  for (const auto& [key, n] : exceptions) c.expect(n == 1, gp(key.first, key.second) + " has " + std::to_string(n) + " records");
  return c.finish("every component with g <= 20 is unirational except (16,5), (17,5) uniruled");
}

CheckResult check_phi_oracle(const std::vector<ComponentRecord>& recs) {
  Checker c("phi_formula_oracle");
  for (const ComponentRecord& r : recs) {
    const std::int64_t brute = phi_bruteforce(vector_of(r.signature));
    c.expect(brute == r.phi, form_key(r.signature) + ": formula " + std::to_string(r.phi) + ", enumeration " +
                                 std::to_string(brute));
    const std::int64_t h2 = 2 * (r.g - 1);
    c.expect(r.phi * r.phi <= h2, form_key(r.signature) + ": phi^2 > H^2");
    c.expect(!(r.phi * r.phi < h2 && h2 < r.phi * r.phi + r.phi - 2), form_key(r.signature) + ": H^2 falls in the gap");
  }
  return c.finish("phi formula equals exact enumeration on every signature");
}

CheckResult check_frame() {
  Checker c("frame_suite");
  const Frame& f = reference_frame();
  for (int i = 0; i < 10; ++i) {
    c.expect(square(f.E[i]) == 0 && is_primitive(f.E[i]), "E_" + std::to_string(i + 1) + " not primitive isotropic");
    c.expect(pair(f.E[i], f.A.A) > 0, "E_" + std::to_string(i + 1) + " not effective");
    for (int j = 0; j < 10; ++j)
      if (i != j) c.expect(pair(f.E[i], f.E[j]) == 1, "E_i.E_j != 1");
  }
  Class sum;
  for (const Class& e : f.E) sum += e;
  c.expect(sum == 3 * f.D, "3D != E_1 + ... + E_10");
  c.expect(square(f.D) == 10, "D^2 != 10");
  c.expect(phi_bruteforce(f.D) == 3, "phi(D) != 3");

  const auto tens = isotropic_with_pairing(f.D, 3);
  c.expect(tens.size() == 10, "isotropic classes with D.E = 3: " + std::to_string(tens.size()));
  for (const Class& e : tens) c.expect(std::find(f.E.begin(), f.E.end(), e) != f.E.end(), "unexpected " + e.to_string());

  std::vector<Class> all_eij;
  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j) all_eij.push_back(eij(f, i, j));
  const auto fours = isotropic_with_pairing(f.D, 4);
  c.expect(fours.size() == 45, "isotropic classes with D.E = 4: " + std::to_string(fours.size()));
  for (const Class& e : fours)
    c.expect(std::find(all_eij.begin(), all_eij.end(), e) != all_eij.end(), "not an E_{i,j}: " + e.to_string());

  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j) {
      const Class e = eij(f, i, j);
      c.expect(is_isotropic(e) && is_primitive(e) && is_effective(e, f.A), "E_{i,j} not primitive effective isotropic");
      for (int k = 1; k <= 10; ++k)
        c.expect(pair(e, f.E[k - 1]) == ((k == i || k == j) ? 2 : 1), "E_{i,j}.E_k mismatch");
      for (int k = 1; k <= 10; ++k)
        for (int l = k + 1; l <= 10; ++l) {
          if (k == i && l == j) continue;
          const bool disjoint = k != i && k != j && l != i && l != j;
          c.expect(pair(e, eij(f, k, l)) == (disjoint ? 2 : 1), "E_{i,j}.E_{k,l} mismatch");
        }
    }
  return c.finish("reference frame, D and the classes E_{i,j}");
}

CheckResult check_equivalence(const std::vector<ComponentRecord>& recs, std::int64_t g_max) {
  Checker c("equivalence_suite");
  if (g_max >= 30) {
    const CanonicalForm a = parse_form("1;2,0,1,1,1,1,1,0,0,0");
    const CanonicalForm b = parse_form("1;1,0,1,1,1,1,1,1,0,0");
    c.expect(are_equivalent(vector_of(a), vector_of(b)), "the two g=30 forms are not equivalent");
    int holders = 0;
    for (const ComponentRecord* r : at(recs, 30, 7)) {
      const bool has_a = std::find(r->witnesses.begin(), r->witnesses.end(), a) != r->witnesses.end();
      const bool has_b = std::find(r->witnesses.begin(), r->witnesses.end(), b) != r->witnesses.end();
      if (has_a || has_b) {
        ++holders;
        c.expect(has_a && has_b, "the two g=30 forms are split across records");
        c.expect(r->status == Status::UniruledComponent, "the g=30, phi=7 class is " + to_string(r->status));
      }
    }
    c.expect(holders == 1, "the g=30 forms appear in " + std::to_string(holders) + " records");
  }

  // Orbit invariance under random reflection words.
  std::vector<const ComponentRecord*> samples;
  const std::size_t stride = std::max<std::size_t>(1, recs.size() / 20);
  for (std::size_t i = 0; i < recs.size() && samples.size() < 20; i += stride) samples.push_back(&recs[i]);
  std::size_t images = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto word = random_isometry_word(seed, 6);
    for (const ComponentRecord* r : samples) {
      const Class h = vector_of(r->signature);
      const Class w = apply_word(h, word);
      if (!is_effective(w, reference_frame().A)) continue;
      ++images;
      c.expect(signature_of(w) == r->signature, "signature changed under word " + std::to_string(seed) + " for " +
                                                    form_key(r->signature));
    }
  }
  c.expect(samples.size() >= std::min<std::size_t>(20, recs.size()), "too few sample classes");
  return c.finish("equivalent forms share a record; signatures invariant on " + std::to_string(images) +
                  " reflected images of " + std::to_string(samples.size()) + " classes");
}

CheckResult check_two_divisibility(const std::vector<ComponentRecord>& recs) {
  Checker c("two_divisibility");
  for (const ComponentRecord& r : recs) {
    for (const CanonicalForm& w : r.witnesses)
      c.expect(w.eps_available() == is_two_divisible(vector_of(w)), form_key(w) + ": parity of coefficients and vector differ");
    c.expect(r.linear_components == (r.signature.eps_available() ? 2 : 1), form_key(r.signature) + ": linear count");
    c.expect(r.two_divisible == r.signature.eps_available(), form_key(r.signature) + ": two_divisible flag");
  }
  return c.finish("all-even coefficients iff 2-divisible vector; linear counts 2 and 1");
}

CheckResult check_few_small_isotropic(const std::vector<ComponentRecord>& recs) {
  Checker c("small_pairing_isotropic");
  for (const ComponentRecord& r : recs) {
    if (r.phi > 2) continue;
    const Class h = vector_of(r.signature);
    const std::size_t n = isotropic_count(h, 1) + isotropic_count(h, 2);
    c.expect(n <= 3, form_key(r.signature) + ": " + std::to_string(n) + " isotropic classes with E.H <= 2");
  }
  return c.finish("at most three isotropic classes with E.H <= 2 when phi <= 2");
}

CheckResult check_determinism(std::int64_t g_min, std::int64_t g_max, unsigned threads) {
  Checker c("determinism");
  EnumerationOptions serial;
  EnumerationOptions parallel;
  parallel.threads = std::max(2u, threads);
  const std::string first = to_json(build_catalog(g_min, g_max, serial));
  const std::string second = to_json(build_catalog(g_min, g_max, serial));
  const std::string third = to_json(build_catalog(g_min, g_max, parallel));
  c.expect(first == second, "two serial runs differ");
  c.expect(first == third, "serial and " + std::to_string(parallel.threads) + "-thread runs differ");
  return c.finish("catalog JSON byte-identical across runs and thread counts");
}

}  // namespace

VerificationReport verify_paper(std::int64_t g_min, std::int64_t g_max, unsigned threads) {
  if (g_min < 2 || g_max > 30 || g_min > g_max) throw InvalidArgument("verification range must lie within 2..30");
  VerificationReport report;
  report.g_min = g_min;
  report.g_max = g_max;
  EnumerationOptions opt;
  opt.threads = threads;
  const CatalogTable table = build_catalog(g_min, g_max, opt);
  const auto& recs = table.records;

  report.checks.push_back(check_low_phi(recs, g_min, g_max));
  report.checks.push_back(check_intro_counts(recs, g_min, g_max));
  report.checks.push_back(check_borderline(recs, g_min, g_max));
  report.checks.push_back(check_low_genus_status(recs));
  report.checks.push_back(check_phi_oracle(recs));
  report.checks.push_back(check_frame());
  report.checks.push_back(check_equivalence(recs, g_max));
  report.checks.push_back(check_two_divisibility(recs));
  report.checks.push_back(check_few_small_isotropic(recs));
  report.checks.push_back(check_determinism(g_min, g_max, threads));
  return report;
}

}  // namespace enriques
