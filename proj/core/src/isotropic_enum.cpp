// Isotropic vectors x with x.r = q for a class r of positive square.
//
// Write x = t_1 b_1 + ... + t_9 b_9 + t_10 b_10 in a unimodular basis where
// b_1..b_9 span the kernel of x -> x.r and b_10.r = d = gcd of the linear form.
// The kernel is negative definite, so Q = -pair is positive definite on it and
// has determinant -1 on the whole lattice. With integral Gram-Schmidt data
// (d_i, lambda_ij) of Q one has
//
//   Q(x) = sum_i s_i^2 / (d_i d_{i-1}),   s_i = d_i t_i + sum_{j>i} lambda_ji t_j,
//
// where the last term (i = 10, d_10 = -1) is the only negative one. Isotropy is
// Q(x) = 0, so every partial sum from the top must stay <= 0; that bounds each
// t_i in turn. The scaled partial sums W_i = d_{i-1} * (sum_{k>=i} ...) are
// Gram determinants, hence integers, so the whole search is exact.

#include "isotropic_enum.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <utility>

namespace enriques::detail {

namespace {

using i128 = __int128;
constexpr std::size_t kN = kRank;

std::int64_t qform(const Class& u, const Class& v) { return -pair(u, v); }

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

// Nearest integer to a / b for b > 0.
i128 round_div(i128 a, i128 b) { return floor_div(2 * a + b, 2 * b); }

i128 isqrt(i128 n) {
  if (n <= 0) return 0;
  i128 x = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

i128 exact_div(i128 a, i128 b) {
  if (b == 0 || a % b != 0) throw InternalError("inexact division in integral Gram-Schmidt data");
  return a / b;
}

using Basis = std::array<Class, kN>;

// Columns of a unimodular matrix: the first nine span ker(u), the last maps to gcd(u).
Basis kernel_basis(const Class::Coords& u, std::int64_t& gcd_out) {
  Basis cols;
  for (std::size_t i = 0; i < kN; ++i) cols[i] = Class::basis(i);
  std::array<std::int64_t, kN> val = u;
  // Fold every entry into the last column with extended-gcd column operations.
  for (std::size_t i = 0; i + 1 < kN; ++i) {
    std::size_t last = kN - 1;
    while (val[i] != 0) {
      std::int64_t q = val[last] / val[i];
      val[last] -= q * val[i];
      cols[last] -= q * cols[i];
      std::swap(val[last], val[i]);
      std::swap(cols[last], cols[i]);
    }
  }
  if (val[kN - 1] < 0) {
    val[kN - 1] = -val[kN - 1];
    cols[kN - 1] = -cols[kN - 1];
  }
  gcd_out = val[kN - 1];
  return cols;
}

struct GramSchmidt {
  std::array<i128, kN + 1> d{};                     // d[0] = 1
  std::array<std::array<i128, kN + 1>, kN + 1> lam{};  // lam[k][j], j < k, 1-based
};

void integral_lll(Basis& b, std::size_t n) {
  GramSchmidt gs;
  auto& d = gs.d;
  auto& lam = gs.lam;
  auto vec = [&](std::size_t k) -> Class& { return b[k - 1]; };

  auto redi = [&](std::size_t k, std::size_t l) {
    if (2 * (lam[k][l] < 0 ? -lam[k][l] : lam[k][l]) > d[l]) {
      i128 q = round_div(lam[k][l], d[l]);
      vec(k) -= checked::narrow(q) * vec(l);
      lam[k][l] -= q * d[l];
      for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };
  auto swapi = [&](std::size_t k, std::size_t kmax) {
    std::swap(vec(k), vec(k - 1));
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const i128 l = lam[k][k - 1];
    const i128 B = exact_div(d[k - 2] * d[k] + l * l, d[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const i128 t = lam[i][k];
      lam[i][k] = exact_div(d[k] * lam[i][k - 1] - l * t, d[k - 1]);
      lam[i][k - 1] = exact_div(B * t + l * lam[i][k], d[k]);
    }
    d[k - 1] = B;
  };

  d[0] = 1;
  d[1] = qform(vec(1), vec(1));
  std::size_t k = 2;
  std::size_t kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        i128 u = qform(vec(k), vec(j));
        for (std::size_t i = 1; i < j; ++i) u = exact_div(d[i] * u - lam[k][i] * lam[j][i], d[i - 1]);
        if (j < k) lam[k][j] = u;
        else d[k] = u;
      }
      if (d[k] <= 0) throw InternalError("kernel form is not positive definite");
    }
    redi(k, k - 1);
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      swapi(k, kmax);
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) redi(k, l);
      ++k;
    }
  }
}

GramSchmidt gram_schmidt(const Basis& b) {
  GramSchmidt gs;
  gs.d[0] = 1;
  for (std::size_t k = 1; k <= kN; ++k) {
    for (std::size_t j = 1; j <= k; ++j) {
      i128 u = qform(b[k - 1], b[j - 1]);
      for (std::size_t i = 1; i < j; ++i) u = exact_div(gs.d[i] * u - gs.lam[k][i] * gs.lam[j][i], gs.d[i - 1]);
      if (j < k) gs.lam[k][j] = u;
      else gs.d[k] = u;
    }
  }
  return gs;
}

class Enumerator {
 public:
  Enumerator(const Basis& b, const GramSchmidt& gs, std::int64_t t_last) : b_(b), gs_(gs) {
    t_[kN] = t_last;
  }

  std::vector<Class> run() {
    const i128 w_top = -static_cast<i128>(t_[kN]) * t_[kN];
    descend(kN - 1, w_top);
    return std::move(out_);
  }

 private:
  void descend(std::size_t i, i128 w_above) {
    const auto& d = gs_.d;
    i128 c = 0;
    for (std::size_t j = i + 1; j <= kN; ++j) c += gs_.lam[j][i] * t_[j];
    const i128 bound = -d[i - 1] * w_above;
    if (bound < 0) return;
    const i128 s = isqrt(bound);
    const i128 lo = ceil_div(-s - c, d[i]);
    const i128 hi = floor_div(s - c, d[i]);
    for (i128 t = lo; t <= hi; ++t) {
      const i128 si = d[i] * t + c;
      const i128 w = exact_div(d[i - 1] * w_above + si * si, d[i]);
      t_[i] = checked::narrow(t);
      if (i == 1) {
        if (w == 0) emit();
      } else {
        descend(i - 1, w);
      }
    }
  }

  void emit() {
    Class x;
    for (std::size_t i = 1; i <= kN; ++i)
      if (t_[i] != 0) x += t_[i] * b_[i - 1];
    out_.push_back(x);
  }

  const Basis& b_;
  const GramSchmidt& gs_;
  std::array<std::int64_t, kN + 1> t_{};
  std::vector<Class> out_;
};

}  // namespace

std::vector<Class> isotropic_solutions(const Class& r, std::int64_t q) {
  if (square(r) <= 0) throw InvalidArgument("isotropic enumeration needs a class of positive square");

  Class::Coords u{};
  const auto& g = GramLattice::standard().gram();
  for (std::size_t i = 0; i < kN; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < kN; ++j) acc = checked::add(acc, checked::mul(g[i][j], r[j]));
    u[i] = acc;
  }
  std::int64_t d = 0;
  Basis b = kernel_basis(u, d);
  if (q % d != 0) return {};

  integral_lll(b, kN - 1);

  // Size-reduce the transversal vector against the reduced kernel.
  GramSchmidt gs = gram_schmidt(b);
  for (std::size_t j = kN - 1; j >= 1; --j) {
    const i128 m = round_div(gs.lam[kN][j], gs.d[j]);
    if (m != 0) {
      b[kN - 1] -= checked::narrow(m) * b[j - 1];
      for (std::size_t i = 1; i < j; ++i) gs.lam[kN][i] -= m * gs.lam[j][i];
      gs.lam[kN][j] -= m * gs.d[j];
    }
  }
  gs = gram_schmidt(b);
  if (gs.d[kN] != -1) throw InternalError("unexpected determinant in isotropic enumeration");

  return Enumerator(b, gs, q / d).run();
}

}  // namespace enriques::detail
