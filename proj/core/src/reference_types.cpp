#include <algorithm>
#include <functional>
#include <initializer_list>

#include "enriques/moduli_catalog.hpp"

namespace enriques {

namespace {

// Form with every summand meeting every other in 1.
CanonicalForm plain(std::initializer_list<std::int64_t> coeffs) {
  std::vector<std::int64_t> c(coeffs);
  std::sort(c.rbegin(), c.rend());
  CanonicalForm f;
  std::copy(c.begin(), c.end(), f.a.begin());
  return f;
}

// Form with an E_{i,j}-type summand of coefficient a0 meeting `doubles` in 2 and `rest` in 1.
CanonicalForm with_double(std::int64_t a0, std::initializer_list<std::int64_t> doubles,
                          std::initializer_list<std::int64_t> rest) {
  std::vector<std::int64_t> d(doubles);
  std::vector<std::int64_t> r(rest);
  std::sort(d.rbegin(), d.rend());
  std::sort(r.rbegin(), r.rend());
  CanonicalForm f;
  f.a0 = a0;
  for (std::size_t i = 0; i < d.size(); ++i) f.a[i] = d[i];
  for (std::size_t i = 0; i < r.size(); ++i) f.a[2 + i] = r[i];
  return f;
}

struct Entry {
  std::int64_t phi;
  std::int64_t offset;  // k = (g - offset) / phi
  std::int64_t min_g;
  std::function<CanonicalForm(std::int64_t)> build;
};

const std::vector<Entry>& entries() {
  using K = std::int64_t;
  static const std::vector<Entry> table = {
      {1, 1, 2, [](K k) { return plain({k, 1}); }},

      {2, 2, 2, [](K k) { return plain({k, 1, 1}); }},
      {2, 1, 2, [](K k) { return with_double(1, {k}, {}); }},
      {2, 1, 5, [](K k) { return plain({k, 2}); }},

      {3, 3, 2, [](K k) { return with_double(1, {k, 1}, {}); }},
      {3, 3, 9, [](K k) { return plain({k, 2, 1}); }},
      {3, 4, 2, [](K k) { return plain({k, 1, 1, 1}); }},
      {3, 1, 10, [](K k) { return plain({k, 3}); }},
      {3, 2, 2, [](K k) { return with_double(1, {k}, {1}); }},

      {4, 4, 16, [](K k) { return plain({k, 3, 1}); }},
      {4, 4, 12, [](K k) { return with_double(1, {k}, {1, 1}); }},
      {4, 1, 17, [](K k) { return plain({k, 4}); }},
      {4, 1, 9, [](K k) { return with_double(2, {k}, {}); }},
      {4, 5, 13, [](K k) { return plain({k, 2, 2}); }},
      {4, 5, 13, [](K k) { return with_double(1, {k, 2}, {}); }},
      {4, 6, 14, [](K k) { return plain({k, 2, 1, 1}); }},
      {4, 2, 10, [](K k) { return with_double(k, {1, 1}, {}); }},
      {4, 3, 15, [](K k) { return with_double(1, {k}, {2}); }},
      {4, 7, 11, [](K k) { return plain({k, 1, 1, 1, 1}); }},

      {5, 5, 15, [](K k) { return with_double(2, {k, 1}, {}); }},
      {5, 10, 20, [](K k) { return plain({k, 2, 1, 1, 1}); }},
      {5, 5, 25, [](K k) { return plain({k, 4, 1}); }},
      {5, 11, 16, [](K k) { return plain({k, 1, 1, 1, 1, 1}); }},
      {5, 6, 21, [](K k) { return with_double(1, {k}, {2, 1}); }},
      {5, 1, 26, [](K k) { return plain({k, 5}); }},
      {5, 7, 17, [](K k) { return with_double(1, {k}, {1, 1, 1}); }},
      {5, 7, 22, [](K k) { return with_double(1, {k, 3}, {}); }},
      {5, 7, 22, [](K k) { return plain({k, 3, 2}); }},
      {5, 3, 18, [](K k) { return with_double(2, {k}, {1}); }},
      {5, 8, 18, [](K k) { return with_double(1, {k, 2}, {1}); }},
      {5, 8, 23, [](K k) { return plain({k, 3, 1, 1}); }},
      {5, 9, 19, [](K k) { return plain({k, 2, 2, 1}); }},
      {5, 4, 19, [](K k) { return with_double(k, {1, 1}, {1}); }},
      {5, 4, 24, [](K k) { return with_double(1, {k}, {3}); }},
  };
  return table;
}

}  // namespace

std::vector<CanonicalForm> reference_types(std::int64_t g, std::int64_t phi) {
  std::vector<CanonicalForm> out;
  for (const Entry& e : entries()) {
    if (e.phi != phi || g < e.min_g || phi * phi > 2 * (g - 1)) continue;
    const std::int64_t num = g - e.offset;
    if (num <= 0 || num % phi != 0) continue;
    out.push_back(e.build(num / phi));
  }
  return out;
}

}  // namespace enriques
