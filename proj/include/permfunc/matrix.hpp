#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "permfunc/gaussian_rational.hpp"
#include "permfunc/permutation.hpp"

namespace permfunc {

/// Dense row-major matrix over Q[i]. Indices are 0-based here; the
/// permutation constructors translate from 1-based points.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix zero(std::size_t n) { return {n, n}; }
  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Rows/cols listed by 0-based indices, in the given order.
  [[nodiscard]] Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  /// {"rows":r,"cols":c,"entries":[[{"re":"p/q","im":"p/q"},...],...]}
  [[nodiscard]] std::string to_json() const;
  static Matrix from_json(std::string_view text);

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> entries_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const GaussianRational& s, const Matrix& a);
Matrix conjugate_transpose(const Matrix& a);
GaussianRational trace(const Matrix& a);
bool is_hermitian(const Matrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The 0x0 determinant is 1.
GaussianRational determinant(const Matrix& a);

/// (P_theta)_{theta(j), j} = 1.
Matrix perm_matrix(const Permutation& theta);
/// a P_theta + b P_tau; rows where theta and tau agree hold a + b.
Matrix linear_sum(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                  const Permutation& tau);
/// (S_theta)_{ij} = 1 iff theta(i) = j or theta^-1(i) = j.
Matrix s_matrix(const Permutation& theta);

/// Block data for M = P + Q, an (mn x mn) matrix of n x n blocks of size m:
/// block (i, theta(i)) of P is a_i P_{inner_thetas[i]}, block (i, tau(i))
/// of Q is b_i P_{inner_taus[i]}.
struct BlockSpec {
  int m = 1;
  int n = 1;
  Permutation theta{1};
  Permutation tau{1};
  std::vector<Permutation> inner_thetas;
  std::vector<Permutation> inner_taus;
  std::vector<GaussianRational> a;
  std::vector<GaussianRational> b;

  /// Throws DomainError when the degrees or lengths are inconsistent.
  void validate() const;

  /// The permutations of [mn] whose matrices carry the support of P and Q:
  /// P has its nonzero in row x at column alpha^-1(x).
  [[nodiscard]] Permutation alpha() const;
  [[nodiscard]] Permutation beta() const;

  /// {"m":4,"n":2,"theta":"id","tau":"(1 2)","inner_thetas":[...],
  ///  "inner_taus":[...],"a":["-1i","2"],"b":["-2","3"]}
  static BlockSpec from_json(std::string_view text);
  [[nodiscard]] std::string to_json() const;
};

Matrix block_matrix(const BlockSpec& spec);

struct PsdClassification {
  enum class Verdict { Psd, NotPsd };
  Verdict verdict = Verdict::NotPsd;
  /// Populated when PSD: input = k I + m P_pi with k >= |m| and pi an involution.
  Rational k{0};
  Rational m{0};
  Permutation pi{1};
  /// 1: c I with c >= 0; 2: theta = id; 3: tau = id; 4: disjoint involutions, a = b;
  /// 5: a + b = 0 and the surviving rows already have the form k I + m P_pi.
  int condition = 0;

  [[nodiscard]] bool is_psd() const { return verdict == Verdict::Psd; }
};

/// Structural PSD test for a P_theta + b P_tau; reports the lowest-numbered
/// matching condition.
PsdClassification psd_classify(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                               const Permutation& tau);

} // namespace permfunc
