#include "enriques/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

namespace enriques {

namespace {

// Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4.
constexpr std::array<std::array<std::int64_t, 8>, 8> kE8Cartan = {{
    {2, 0, -1, 0, 0, 0, 0, 0},
    {0, 2, 0, -1, 0, 0, 0, 0},
    {-1, 0, 2, -1, 0, 0, 0, 0},
    {0, -1, -1, 2, -1, 0, 0, 0},
    {0, 0, 0, -1, 2, -1, 0, 0},
    {0, 0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, 0, 0, -1, 2},
}};

GramLattice::Matrix make_standard_gram() {
  GramLattice::Matrix g{};
  g[0][1] = g[1][0] = 1;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) g[2 + i][2 + j] = -kE8Cartan[i][j];
  return g;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Minimal exact rational, only used for the one-off signature computation.
struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return make(a.num * b.den, a.den * b.num);
  }
  bool is_zero() const { return num == 0; }
};

}  // namespace

Class Class::basis(std::size_t index) {
  if (index >= kRank) throw InvalidArgument("basis index out of range");
  Coords c{};
  c[index] = 1;
  return Class(c);
}

bool Class::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

Class& Class::operator+=(const Class& other) {
  for (std::size_t i = 0; i < kRank; ++i) coords_[i] = checked::add(coords_[i], other.coords_[i]);
  return *this;
}

Class& Class::operator-=(const Class& other) {
  for (std::size_t i = 0; i < kRank; ++i) coords_[i] = checked::sub(coords_[i], other.coords_[i]);
  return *this;
}

Class Class::operator-() const {
  Class r;
  for (std::size_t i = 0; i < kRank; ++i) r.coords_[i] = checked::sub(0, coords_[i]);
  return r;
}

Class operator*(std::int64_t k, const Class& v) {
  Class r;
  for (std::size_t i = 0; i < kRank; ++i) r.coords_[i] = checked::mul(k, v.coords_[i]);
  return r;
}

Class Class::divided_by(std::int64_t k) const {
  if (k == 0) throw InvalidArgument("division of a class by zero");
  Class r;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (coords_[i] % k != 0) throw InvalidArgument("class is not divisible by " + std::to_string(k));
    r.coords_[i] = coords_[i] / k;
  }
  return r;
}

std::string Class::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < kRank; ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ']';
  return os.str();
}

GramLattice::GramLattice(const Matrix& gram) : gram_(gram) {
  for (std::size_t i = 0; i < kRank; ++i) {
    if (gram_[i][i] % 2 != 0) throw InternalError("Gram matrix is not even");
    for (std::size_t j = 0; j < kRank; ++j)
      if (gram_[i][j] != gram_[j][i]) throw InternalError("Gram matrix is not symmetric");
  }
  if (determinant() != -1) throw InternalError("Gram matrix does not have determinant -1");
  if (signature() != std::pair<int, int>{1, 9}) throw InternalError("Gram matrix does not have signature (1,9)");
}

const GramLattice& GramLattice::standard() {
  static const GramLattice lattice(make_standard_gram());
  return lattice;
}

std::int64_t GramLattice::pair(const Class& u, const Class& v) const {
  __int128 acc = 0;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (u[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < kRank; ++j) row += static_cast<__int128>(gram_[i][j]) * v[j];
    acc += static_cast<__int128>(u[i]) * row;
  }
  return checked::narrow(acc);
}

std::int64_t GramLattice::determinant() const {
  // Bareiss elimination; every intermediate value is a minor of the matrix.
  std::array<std::array<__int128, kRank>, kRank> m{};
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) m[i][j] = gram_[i][j];
  __int128 sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k < kRank; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < kRank && m[p][k] == 0) ++p;
      if (p == kRank) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < kRank; ++i) {
      for (std::size_t j = k + 1; j < kRank; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return checked::narrow(sign * m[kRank - 1][kRank - 1]);
}

std::pair<int, int> GramLattice::signature() const {
  std::array<std::array<Rational, kRank>, kRank> m{};
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) m[i][j] = Rational::make(gram_[i][j], 1);

  int positive = 0;
  int negative = 0;
  for (std::size_t k = 0; k < kRank; ++k) {
    if (m[k][k].is_zero()) {
      // Bring a nonzero diagonal entry to position k, or create one by adding a row/column.
      std::size_t p = k + 1;
      while (p < kRank && m[p][p].is_zero()) ++p;
      if (p < kRank) {
        std::swap(m[k], m[p]);
        for (auto& row : m) std::swap(row[k], row[p]);
      } else {
        p = k + 1;
        while (p < kRank && m[k][p].is_zero()) ++p;
        if (p == kRank) continue;  // zero row: degenerate direction
        for (std::size_t j = 0; j < kRank; ++j) m[k][j] = m[k][j] + m[p][j];
        for (std::size_t i = 0; i < kRank; ++i) m[i][k] = m[i][k] + m[i][p];
      }
    }
    const Rational pivot = m[k][k];
    if (pivot.num > 0) ++positive;
    else ++negative;
    std::array<Rational, kRank> factor{};
    for (std::size_t i = k + 1; i < kRank; ++i) factor[i] = m[i][k] / pivot;
    for (std::size_t i = k + 1; i < kRank; ++i)
      for (std::size_t j = 0; j < kRank; ++j) m[i][j] = m[i][j] - factor[i] * m[k][j];
    for (std::size_t j = k + 1; j < kRank; ++j)
      for (std::size_t i = 0; i < kRank; ++i) m[i][j] = m[i][j] - factor[j] * m[i][k];
  }
  return {positive, negative};
}

AmpleReference::AmpleReference(const Class& a) : A(a) {
  if (square(a) <= 0) throw InvalidArgument("ample reference must have positive square");
}

std::int64_t pair(const Class& u, const Class& v) { return GramLattice::standard().pair(u, v); }

std::int64_t square(const Class& v) { return pair(v, v); }

std::int64_t divisibility(const Class& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v.coords()) g = std::gcd(g, x);
  return g;
}

bool is_effective(const Class& v, const AmpleReference& ample) {
  if (v.is_zero()) throw InvalidArgument("effectivity is undefined for the zero class");
  if (square(v) < 0) throw InvalidArgument("effectivity convention needs square >= 0");
  return pair(v, ample.A) > 0;
}

Class reflect(const Class& v, const Class& root) {
  if (square(root) != -2) throw InvalidArgument("reflection root must have square -2");
  return v + pair(v, root) * root;
}

const std::vector<Class>& root_pool() {
  static const std::vector<Class> pool = [] {
    std::vector<Class> roots;
    const Class f = Class::basis(0);
    const Class fp = Class::basis(1);
    roots.push_back(f - fp);
    for (std::size_t i = 0; i < 8; ++i) {
      const Class alpha = Class::basis(2 + i);
      roots.push_back(alpha);
      roots.push_back(f + alpha);
      roots.push_back(fp + alpha);
    }
    // Sums over Dynkin edges are roots as well.
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j)
        if (kE8Cartan[i][j] == -1) roots.push_back(Class::basis(2 + i) + Class::basis(2 + j));
    for (const Class& r : roots)
      if (square(r) != -2) throw InternalError("root pool entry without square -2");
    return roots;
  }();
  return pool;
}

std::vector<Class> random_isometry_word(std::uint64_t seed, std::size_t length) {
  const auto& pool = root_pool();
  std::mt19937_64 gen(seed);
  std::vector<Class> word;
  word.reserve(length);
  // Raw engine output keeps the word identical across standard library implementations.
  for (std::size_t i = 0; i < length; ++i) word.push_back(pool[gen() % pool.size()]);
  return word;
}

Class apply_word(const Class& v, const std::vector<Class>& word) {
  Class out = v;
  for (const Class& r : word) out = reflect(out, r);
  return out;
}

}  // namespace enriques
