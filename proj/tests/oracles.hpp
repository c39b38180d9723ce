#pragma once

// Reference implementations for tests. Nothing here calls the engine's
// evaluation routines; only the value types are shared.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "permfunc/gaussian_rational.hpp"
#include "permfunc/groups.hpp"
#include "permfunc/matrix.hpp"
#include "permfunc/permutation.hpp"

namespace oracle {

using permfunc::GaussianRational;
using permfunc::Matrix;
using permfunc::Permutation;
using permfunc::Rational;

// 0-based image vectors of S_n in lexicographic order.
inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int inversion_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      inv += p[i] > p[j] ? 1 : 0;
    }
  }
  return inv % 2 == 0 ? 1 : -1;
}

inline Permutation to_perm(const std::vector<int>& p) {
  std::vector<int> one_based(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    one_based[i] = p[i] + 1;
  }
  return Permutation::from_images(one_based);
}

// sum over sigma with weight(sigma) of prod_i A[i][sigma(i)].
inline GaussianRational weighted_sum(const Matrix& a,
                                     const std::function<GaussianRational(const std::vector<int>&)>& weight) {
  const int n = static_cast<int>(a.rows());
  GaussianRational total;
  for (const auto& p : all_perms(n)) {
    GaussianRational term = weight(p);
    for (int i = 0; i < n && !term.is_zero(); ++i) {
      term *= a(static_cast<std::size_t>(i), static_cast<std::size_t>(p[static_cast<std::size_t>(i)]));
    }
    total += term;
  }
  return total;
}

inline GaussianRational leibniz_det(const Matrix& a) {
  return weighted_sum(a, [](const std::vector<int>& p) { return GaussianRational(inversion_sign(p)); });
}

inline GaussianRational leibniz_per(const Matrix& a) {
  return weighted_sum(a, [](const std::vector<int>&) { return GaussianRational(1); });
}

inline GaussianRational laplace_det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) {
    return 1;
  }
  if (n == 1) {
    return a(0, 0);
  }
  GaussianRational total;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c).is_zero()) {
      continue;
    }
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0, col = 0; k < n; ++k) {
        if (k != c) {
          minor(r - 1, col++) = a(r, k);
        }
      }
    }
    const GaussianRational term = a(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// Dense matrices built entry by entry from the definition.
inline Matrix dense_perm_matrix(const Permutation& p) {
  const int n = p.degree();
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    m(static_cast<std::size_t>(p(j) - 1), static_cast<std::size_t>(j - 1)) = 1;
  }
  return m;
}

inline Matrix dense_linear_sum(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                               const Permutation& tau) {
  const auto n = static_cast<std::size_t>(theta.degree());
  Matrix m(n, n);
  const Matrix p = dense_perm_matrix(theta);
  const Matrix q = dense_perm_matrix(tau);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a * p(i, j) + b * q(i, j);
    }
  }
  return m;
}

// Every sigma with sigma(i) in {theta(i), tau(i)}, by scanning S_n.
inline std::vector<Permutation> brute_x_set(const Permutation& theta, const Permutation& tau) {
  std::vector<Permutation> out;
  for (const auto& p : all_perms(theta.degree())) {
    bool ok = true;
    for (int i = 1; i <= theta.degree() && ok; ++i) {
      const int image = p[static_cast<std::size_t>(i - 1)] + 1;
      ok = image == theta(i) || image == tau(i);
    }
    if (ok) {
      out.push_back(to_perm(p));
    }
  }
  return out;
}

// Hermitian with every principal minor real and nonnegative.
inline bool psd_by_minors(const Matrix& a) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(a(i, j) == a(j, i).conj())) {
        return false;
      }
    }
  }
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        idx.push_back(i);
      }
    }
    const GaussianRational minor = leibniz_det(a.submatrix(idx, idx));
    if (!minor.is_real() || sgn(minor.re()) < 0) {
      return false;
    }
  }
  return true;
}

// Character tables of S_3 and S_4 keyed by cycle type, written out by hand.
// Columns for S_3: 1^3, 2 1, 3. Columns for S_4: 1^4, 2 1^2, 2 2, 3 1, 4.
inline std::int64_t known_character(const std::vector<int>& shape, const permfunc::CycleStructure& mu) {
  const int n = mu.degree();
  std::vector<int> type = mu.lengths;
  if (n == 3) {
    int col = type.empty() ? 0 : (type[0] == 2 ? 1 : 2);
    if (shape == std::vector<int>{3}) return 1;
    if (shape == std::vector<int>{2, 1}) return std::vector<std::int64_t>{2, 0, -1}[static_cast<std::size_t>(col)];
    return std::vector<std::int64_t>{1, -1, 1}[static_cast<std::size_t>(col)];
  }
  int col = 0;
  if (type == std::vector<int>{2}) col = 1;
  if (type == std::vector<int>{2, 2}) col = 2;
  if (type == std::vector<int>{3}) col = 3;
  if (type == std::vector<int>{4}) col = 4;
  const std::vector<std::pair<std::vector<int>, std::vector<std::int64_t>>> table{
      {{4}, {1, 1, 1, 1, 1}},
      {{3, 1}, {3, 1, -1, 0, -1}},
      {{2, 2}, {2, 0, 2, -1, 0}},
      {{2, 1, 1}, {3, -1, -1, 0, 1}},
      {{1, 1, 1, 1}, {1, -1, 1, 1, -1}},
  };
  for (const auto& [s, row] : table) {
    if (s == shape) return row[static_cast<std::size_t>(col)];
  }
  return 0;
}

// Hook length formula for chi^lambda(id).
inline std::int64_t hook_dimension(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  Rational dim = 1;
  for (int k = 2; k <= n; ++k) {
    dim *= k;
  }
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] > c; ++rr) {
        ++below;
      }
      dim /= parts[r] - c - 1 + below + 1;
    }
  }
  return dim.get_num().get_si();
}

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Permutation perm(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng_);
    return Permutation::from_images(p);
  }

  Permutation involution(int n) {
    std::vector<int> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 1);
    std::shuffle(pts.begin(), pts.end(), rng_);
    std::vector<std::vector<int>> cycles;
    const int swaps = uniform(0, n / 2);
    for (int k = 0; k < swaps; ++k) {
      cycles.push_back({pts[static_cast<std::size_t>(2 * k)], pts[static_cast<std::size_t>(2 * k + 1)]});
    }
    return Permutation::from_cycles(n, cycles);
  }

  Rational rational(int range = 3) {
    const int den = uniform(1, 3);
    return Rational(uniform(-range * den, range * den), den);
  }

  GaussianRational scalar() { return coin() ? GaussianRational(rational()) : GaussianRational(rational(), rational()); }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace oracle
