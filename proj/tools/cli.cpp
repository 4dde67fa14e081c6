#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <optional>

#include "enriques/moduli_catalog.hpp"
#include "json.hpp"

namespace enriques::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormError : std::runtime_error {
  FormError(std::string constraint, const std::string& message)
      : std::runtime_error(message), constraint(std::move(constraint)) {}
  std::string constraint;
};

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) throw UsageError("not an integer: " + s);
  return v;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::int64_t g = parse_int(text);
    return {g, g};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

CanonicalForm read_form(const std::string& text) {
  CanonicalForm f;
  try {
    f = parse_form(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("malformed form: ") + e.what());
  }
  if (auto v = violated_constraint(f)) throw FormError(*v, "form " + text + " violates " + *v);
  if (genus_of(f) < 2) throw FormError("genus", "form " + text + " has genus 1; genus must be at least 2");
  return f;
}

json form_json(const CanonicalForm& f) { return json{{"a0", f.a0}, {"a", f.a}, {"text", format_form(f)}}; }

json coords_json(const Class& c) { return json(c.coords()); }

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + path);
  file << text;
  if (!file) throw UsageError("failed writing output file: " + path);
}

int cmd_catalog(const std::string& g_text, std::optional<std::int64_t> phi, const std::string& format,
                const std::string& out_path, unsigned threads, std::ostream& out) {
  const auto [g_min, g_max] = parse_range(g_text);
  if (g_min < 2) throw UsageError("genus range must start at 2 or above");
  if (g_min > g_max) throw UsageError("genus range is empty");
  if (phi && *phi < 1) throw UsageError("--phi must be positive");
  EnumerationOptions opt;
  opt.phi_filter = phi;
  opt.threads = threads;
  const CatalogTable table = build_catalog(g_min, g_max, opt);
  std::string text;
  if (format == "json") text = to_json(table);
  else if (format == "csv") text = to_csv(table);
  else text = to_markdown(table);
  write_output(text, out_path, out);
  return kOk;
}

int cmd_classify(const std::string& form_text, std::optional<int> eps, std::ostream& out) {
  const CanonicalForm f = read_form(form_text);
  if (eps && *eps == 1 && !f.eps_available())
    throw FormError("eps", "eps = 1 needs all coefficients even; otherwise it normalizes to 0");
  const Class h = vector_of(f);
  const std::vector<CanonicalForm> forms = canonical_forms_of(h);
  const Status st = status_of(forms);
  json forms_json = json::array();
  for (const CanonicalForm& c : forms) forms_json.push_back(format_form(c));
  json j = {{"form", format_form(f)},
            {"g", genus_of(f)},
            {"phi", phi_formula(f)},
            {"length", length_of(f)},
            {"max_symmetry", max_symmetry(f)},
            {"two_divisible", is_two_divisible(h)},
            {"eps_available", f.eps_available()},
            {"eps", eps.value_or(0)},
            {"linear_components", linear_component_count(f)},
            {"vector", coords_json(h)},
            {"signature", form_json(forms.front())},
            {"canonical_forms", forms_json},
            {"status", to_string(st)},
            {"certain", st != Status::UnknownNumericalOnly}};
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_equiv(const std::string& a_text, const std::string& b_text, std::ostream& out) {
  const CanonicalForm a = read_form(a_text);
  const CanonicalForm b = read_form(b_text);
  const Class ha = vector_of(a);
  const Class hb = vector_of(b);
  const CanonicalForm sa = signature_of(ha);
  const CanonicalForm sb = signature_of(hb);
  json j = {{"equivalent", sa == sb}, {"signature_a", form_json(sa)}, {"signature_b", form_json(sb)}};
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_frame_dump(std::ostream& out) {
  const Frame& f = reference_frame();
  const auto& lattice = GramLattice::standard();
  json gram = json::array();
  for (const auto& row : lattice.gram()) gram.push_back(json(row));
  json members = json::array();
  for (const Class& e : f.E) members.push_back(coords_json(e));
  json table = json::array();
  for (const Class& e : f.E) {
    json row = json::array();
    for (const Class& o : f.E) row.push_back(pair(e, o));
    table.push_back(row);
  }
  json extras = json::array();
  for (int i = 1; i <= 10; ++i)
    for (int j = i + 1; j <= 10; ++j) {
      const Class e = eij(f, i, j);
      json against = json::array();
      for (const Class& o : f.E) against.push_back(pair(e, o));
      extras.push_back({{"i", i}, {"j", j}, {"coords", coords_json(e)}, {"pairings_with_E", against}});
    }
  json j = {{"basis", {"f", "f'", "alpha_1", "alpha_2", "alpha_3", "alpha_4", "alpha_5", "alpha_6", "alpha_7", "alpha_8"}},
            {"gram", gram},
            {"determinant", lattice.determinant()},
            {"signature", {lattice.signature().first, lattice.signature().second}},
            {"fingerprint", frame_fingerprint(f)},
            {"E", members},
            {"D", coords_json(f.D)},
            {"A", coords_json(f.A.A)},
            {"D_square", square(f.D)},
            {"pairings", table},
            {"eij", extras}};
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const std::string& g_text, unsigned threads, std::ostream& out) {
  const auto [g_min, g_max] = parse_range(g_text);
  if (g_min < 2 || g_max > 30 || g_min > g_max) throw UsageError("verification range must lie within 2..30");
  const VerificationReport report = verify_paper(g_min, g_max, threads);
  out << report.to_text();
  return report.all_passed() ? kOk : kVerifyFailed;
}

int fail(std::ostream& err, int code, const std::string& kind, const std::string& message,
         const std::optional<std::string>& constraint = std::nullopt) {
  json j = {{"error", kind}, {"exit_code", code}, {"message", message}};
  if (constraint) j["constraint"] = *constraint;
  err << j.dump() << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decomposition types and moduli components of polarized Enriques surfaces"};
  app.require_subcommand(1);

  std::string g_text;
  std::optional<std::int64_t> phi;
  std::string format = "json";
  std::string out_path;
  unsigned threads = 1;
  auto* catalog = app.add_subcommand("catalog", "Enumerate component records for a genus range");
  catalog->add_option("--g", g_text, "Genus N or range A..B")->required();
  catalog->add_option("--phi", phi, "Restrict to one value of phi");
  catalog->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
  catalog->add_option("--out", out_path, "Write to a file instead of stdout");
  catalog->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string form_a;
  std::string form_b;
  std::optional<int> eps;
  auto* classify = app.add_subcommand("classify", "Classify one canonical form a0;a1,...,a10");
  classify->add_option("form", form_a, "Coefficients a0;a1,...,a10")->required();
  classify->add_option("--eps", eps, "Torsion twist 0 or 1")->check(CLI::IsMember({0, 1}));

  auto* equiv = app.add_subcommand("equiv", "Decide whether two forms have the same decomposition type");
  equiv->add_option("form_a", form_a, "First form")->required();
  equiv->add_option("form_b", form_b, "Second form")->required();

  auto* frame_dump = app.add_subcommand("frame-dump", "Print the reference frame and its pairing tables");

  std::string verify_range = "2..30";
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--g", verify_range, "Genus range within 2..30");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, kBadFlags, "bad_flags", e.what());
  }

  try {
    if (*catalog) return cmd_catalog(g_text, phi, format, out_path, threads, out);
    if (*classify) return cmd_classify(form_a, eps, out);
    if (*equiv) return cmd_equiv(form_a, form_b, out);
    if (*frame_dump) return cmd_frame_dump(out);
    if (*verify) return cmd_verify(verify_range, threads, out);
  } catch (const UsageError& e) {
    return fail(err, kBadFlags, "bad_flags", e.what());
  } catch (const FormError& e) {
    return fail(err, kInvalidForm, "invalid_form", e.what(), e.constraint);
  } catch (const OverflowError& e) {
    return fail(err, kInternal, "overflow", e.what());
  } catch (const InternalError& e) {
    return fail(err, kInternal, "internal", e.what());
  } catch (const InvalidArgument& e) {
    return fail(err, kBadFlags, "bad_arguments", e.what());
  }
  return fail(err, kBadFlags, "bad_flags", "no subcommand given");
}

}  // namespace enriques::cli
