#include "enriques/frames.hpp"

#include <algorithm>
#include <functional>

#include "enriques/isotropic_search.hpp"

namespace enriques {

namespace {

// E_1 = f, E_10 = f', and E_{k+1} = f + f' + r_k for E8 roots r_1..r_8 meeting pairwise in 1.
constexpr std::array<Class::Coords, 10> kFrameCoords = {{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 1, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 1, 0, 1, 0, 0, 0, 0},
    {1, 1, 0, 1, 0, 1, 1, 0, 0, 0},
    {1, 1, 0, 1, 0, 1, 1, 1, 0, 0},
    {1, 1, 0, 1, 0, 1, 1, 1, 1, 0},
    {1, 1, 0, 1, 0, 1, 1, 1, 1, 1},
    {1, 1, 2, 3, 3, 5, 4, 3, 2, 1},
    {1, 1, 1, 3, 3, 5, 4, 3, 2, 1},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
}};

Class sum_of(const std::vector<Class>& v) {
  Class s;
  for (const Class& c : v) s += c;
  return s;
}

bool contains(const std::vector<Class>& v, const Class& c) { return std::find(v.begin(), v.end(), c) != v.end(); }

// Builds the maximal set attached to a class D' of square 10 with phi 3: the ten
// isotropic classes meeting D' in 3, listed with the input members first.
MaximalSimpleSet assemble(const Class& d_prime, const Class& extra, const std::vector<Class>& members,
                          const AmpleReference& ample) {
  std::vector<Class> found = isotropic_with_pairing(d_prime, 3, ample);
  if (found.size() != 10) throw InternalError("extension did not produce an isotropic 10-sequence");

  std::vector<Class> ordered;
  for (const Class& m : members)
    if (m != extra && contains(found, m) && !contains(ordered, m)) ordered.push_back(m);
  for (const Class& c : found)
    if (!contains(ordered, c)) ordered.push_back(c);

  MaximalSimpleSet out;
  std::copy(ordered.begin(), ordered.end(), out.ten.begin());
  out.extra = extra;
  const Class target = d_prime - extra;
  bool located = false;
  for (int i = 0; i < 10 && !located; ++i)
    for (int j = i + 1; j < 10 && !located; ++j)
      if (out.ten[i] + out.ten[j] == target) {
        out.pair_indices = {i + 1, j + 1};
        located = true;
      }
  if (!located) throw InternalError("extra class is not of the form D - E_i - E_j");
  validate_maximal(out);
  for (const Class& m : members)
    if (m != extra && !contains(ordered, m)) throw InternalError("extension lost an input member");
  return out;
}

// x meets y in 2, pairs 1 with every class in `others`; completes x, y to a maximal set with x as E_{i,j}.
MaximalSimpleSet complete_double(const Class& x, const Class& y, const std::vector<Class>& others,
                                 const std::vector<Class>& members, const AmpleReference& ample) {
  for (const Class& z : isotropic_with_pairing(x + y, 3, ample)) {
    if (pair(z, x) != 2 || pair(z, y) != 1) continue;
    if (std::all_of(others.begin(), others.end(), [&](const Class& g) { return pair(z, g) == 1; }))
      return assemble(x + y + z, x, members, ample);
  }
  throw InternalError("no completion found for a pairing-2 pair");
}

std::optional<std::vector<Class>> extend_sequence(std::vector<Class> seq, const AmpleReference& ample) {
  if (seq.size() == 1) {
    // A partner meeting the single member in 1, taken from the smallest level of the ample class.
    std::optional<Class> partner;
    for (std::int64_t c = 1; !partner; ++c) {
      if (c * c > 64 * square(ample.A)) throw InternalError("no isotropic partner found");
      for (const Class& y : isotropic_with_pairing(ample.A, c, ample))
        if (pair(y, seq[0]) == 1) {
          partner = y;
          break;
        }
    }
    seq.push_back(*partner);
  }
  std::vector<Class> pool;
  for (const Class& y : isotropic_with_pairing(seq[0] + seq[1], 2, ample))
    if (std::all_of(seq.begin(), seq.end(), [&](const Class& s) { return pair(y, s) == 1; })) pool.push_back(y);

  std::function<bool(std::size_t)> grow = [&](std::size_t start) -> bool {
    if (seq.size() == 10) return true;
    for (std::size_t p = start; p < pool.size(); ++p) {
      const Class& y = pool[p];
      if (!std::all_of(seq.begin(), seq.end(), [&](const Class& s) { return pair(y, s) == 1; })) continue;
      seq.push_back(y);
      if (grow(p + 1)) return true;
      seq.pop_back();
    }
    return false;
  };
  if (grow(0)) return seq;
  return std::nullopt;
}

}  // namespace

Frame build_reference_frame() {
  Frame f{{}, Class{}, AmpleReference(Class({3, 3, 1, 4, 2, 5, 4, 3, 2, 1}))};
  for (std::size_t i = 0; i < 10; ++i) f.E[i] = Class(kFrameCoords[i]);
  f.D = f.A.A;
  validate_frame(f);
  return f;
}

const Frame& reference_frame() {
  static const Frame frame = build_reference_frame();
  return frame;
}

void validate_frame(const Frame& f) {
  Class sum;
  for (std::size_t i = 0; i < 10; ++i) {
    if (square(f.E[i]) != 0 || !is_primitive(f.E[i])) throw InternalError("frame member is not primitive isotropic");
    if (pair(f.E[i], f.A.A) <= 0) throw InternalError("frame member is not effective");
    for (std::size_t j = i + 1; j < 10; ++j)
      if (pair(f.E[i], f.E[j]) != 1) throw InternalError("frame members do not meet in 1");
    sum += f.E[i];
  }
  if (sum != 3 * f.D) throw InternalError("3D differs from the sum of the frame");
  if (square(f.D) != 10) throw InternalError("D does not have square 10");
}

Class eij(const Frame& f, int i, int j) {
  if (i < 1 || i > 10 || j < 1 || j > 10) throw InvalidArgument("eij index out of range 1..10");
  if (i == j) throw InvalidArgument("eij needs distinct indices");
  return f.D - f.E[i - 1] - f.E[j - 1];
}

void validate_maximal(const MaximalSimpleSet& m) {
  Class sum;
  for (std::size_t i = 0; i < 10; ++i) {
    if (square(m.ten[i]) != 0) throw InternalError("maximal set member is not isotropic");
    for (std::size_t j = i + 1; j < 10; ++j)
      if (pair(m.ten[i], m.ten[j]) != 1) throw InternalError("maximal set sequence members do not meet in 1");
    sum += m.ten[i];
  }
  const Class d = sum.divided_by(3);
  const auto [i, j] = m.pair_indices;
  if (i < 1 || j > 10 || i >= j) throw InternalError("bad pair indices in maximal set");
  if (m.extra != d - m.ten[i - 1] - m.ten[j - 1]) throw InternalError("extra class is not D - E_i - E_j");
  for (int k = 1; k <= 10; ++k) {
    const std::int64_t expected = (k == i || k == j) ? 2 : 1;
    if (pair(m.extra, m.ten[k - 1]) != expected) throw InternalError("extra class has the wrong pairings");
  }
}

SetPattern classify_simple_set(const std::vector<Class>& set, const AmpleReference& ample) {
  if (set.empty()) throw InvalidArgument("simple isotropic set is empty");
  for (const Class& c : set) {
    if (!is_isotropic(c) || !is_primitive(c)) throw InvalidArgument("member is not primitive isotropic: " + c.to_string());
    if (!is_effective(c, ample)) throw InvalidArgument("member is not effective: " + c.to_string());
  }
  std::vector<std::pair<std::size_t, std::size_t>> doubles;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const std::int64_t p = pair(set[i], set[j]);
      if (p == 2) doubles.emplace_back(i, j);
      else if (p != 1) throw InvalidArgument("members meet in " + std::to_string(p) + ", expected 1 or 2");
    }
  const std::size_t n = set.size();
  if (doubles.empty()) {
    if (n > 10) throw InvalidArgument("too many members meeting pairwise in 1");
    return SetPattern::AllOne;
  }
  if (doubles.size() == 1) {
    if (n > 10) throw InvalidArgument("too many members for a single pairing-2 pair");
    return SetPattern::OneDouble;
  }
  if (doubles.size() == 2) {
    const auto [a, b] = doubles[0];
    const auto [c, d] = doubles[1];
    if ((a == c || a == d || b == c || b == d) && n <= 11) return SetPattern::DoubleStar;
  }
  throw InvalidArgument("pairing-2 pairs do not form an admissible pattern");
}

MaximalSimpleSet extend_to_maximal(const std::vector<Class>& set, const std::optional<Class>& preferred_extra,
                                   const AmpleReference& ample) {
  const SetPattern pattern = classify_simple_set(set, ample);
  if (preferred_extra && !contains(set, *preferred_extra))
    throw InvalidArgument("preferred extra class is not a member of the set");

  auto others_excluding = [&](const std::vector<Class>& drop) {
    std::vector<Class> out;
    for (const Class& c : set)
      if (!contains(drop, c)) out.push_back(c);
    return out;
  };

  switch (pattern) {
    case SetPattern::DoubleStar: {
      std::size_t center = 0;
      std::vector<Class> partners;
      for (std::size_t i = 0; i < set.size(); ++i) {
        std::vector<Class> p;
        for (std::size_t j = 0; j < set.size(); ++j)
          if (j != i && pair(set[i], set[j]) == 2) p.push_back(set[j]);
        if (p.size() == 2) {
          center = i;
          partners = p;
        }
      }
      if (preferred_extra && *preferred_extra != set[center])
        throw InvalidArgument("only the member meeting two others in 2 can be the extra class");
      return assemble(set[center] + partners[0] + partners[1], set[center], set, ample);
    }
    case SetPattern::OneDouble: {
      std::size_t a = 0, b = 0;
      for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
          if (pair(set[i], set[j]) == 2) {
            a = i;
            b = j;
          }
      Class x = set[a];
      Class y = set[b];
      if (preferred_extra) {
        if (*preferred_extra == y) std::swap(x, y);
        else if (*preferred_extra != x) throw InvalidArgument("preferred extra class is not in the pairing-2 pair");
      }
      return complete_double(x, y, others_excluding({x, y}), set, ample);
    }
    case SetPattern::AllOne: {
      if (preferred_extra) throw InvalidArgument("a set meeting pairwise in 1 has no pairing-2 pair");
      if (set.size() == 10) {
        const Class d = sum_of(set).divided_by(3);
        return assemble(d, d - set[0] - set[1], set, ample);
      }
      if (auto seq = extend_sequence(set, ample)) {
        const Class d = sum_of(*seq).divided_by(3);
        return assemble(d, d - (*seq)[0] - (*seq)[1], set, ample);
      }
      // Not contained in a 10-sequence: some member must play the E_{i,j} role.
      for (const Class& x : set) {
        const std::vector<Class> rest = others_excluding({x});
        for (const Class& y : isotropic_with_pairing(x + rest.front(), 3, ample)) {
          if (pair(y, x) != 2) continue;
          if (!std::all_of(rest.begin(), rest.end(), [&](const Class& g) { return pair(y, g) == 1; })) continue;
          try {
            return complete_double(x, y, rest, set, ample);
          } catch (const InternalError&) {
            continue;
          }
        }
      }
      throw InternalError("no maximal simple isotropic set contains the input");
    }
  }
  throw InternalError("unreachable pattern");
}

}  // namespace enriques
