#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permfunc/characters.hpp"
#include "permfunc/gaussian_rational.hpp"
#include "permfunc/groups.hpp"
#include "permfunc/matrix.hpp"
#include "permfunc/permutation.hpp"

namespace permfunc {

enum class Method { Naive, Formula, ClosedForm, CauchyBinet, Block, Tensor };

std::string_view to_string(Method m);

struct GmfResult {
  GaussianRational value;
  Method method = Method::Naive;
  /// Summands accumulated: |G| for Naive, |X(theta,tau) ∩ G| for Formula and
  /// Block, 2^r for ClosedForm, sum_k C(n,k)^2 for CauchyBinet.
  std::uint64_t term_count = 0;

  /// {"value":{"re":"p/q","im":"p/q"},"method":"formula","terms":4}
  [[nodiscard]] std::string to_json() const;
  static GmfResult from_json(std::string_view text);
};

struct EngineOptions {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// Worker threads for the naive sum; 1 runs inline.
  unsigned threads = 1;
};

/// d_chi^G(A) straight from the definition: sum over G of chi(sigma) prod_i A_{i, sigma(i)}.
GmfResult gmf_naive(const Matrix& a, const GroupSpec& group, const CharacterSpec& chi, const EngineOptions& options = {});

/// d_chi^G(a P_theta + b P_tau) summed over X(theta, tau) ∩ G only:
/// (a+b)^F sum conj(chi)(sigma) a^(n - t_sigma - F) b^(t_sigma), with 0^0 = 1.
GmfResult gmf_linear_sum(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                         const Permutation& tau, const GroupSpec& group, const CharacterSpec& chi);

/// Determinant and permanent of a P_theta + b P_tau from the cycle structure
/// of theta^-1 tau alone.
GmfResult det_linear_sum(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                         const Permutation& tau);
GmfResult per_linear_sum(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                         const Permutation& tau);

/// det(A + B) as the signed sum of complementary minors over all index
/// tuple pairs.
GmfResult det_cauchy_binet_sum(const Matrix& a, const Matrix& b);

/// Strictly increasing 1-based index tuple.
struct IndexTuple {
  std::vector<int> indices;
  [[nodiscard]] int rank_sum() const;
};
/// All k-subsets of [n] in lexicographic order.
std::vector<IndexTuple> index_tuples(int k, int n);

/// Per-cycle block counts for the block formula.
struct BlockCycleCounts {
  /// row_counts[i][j]: points y of cycle i of alpha^-1 beta whose row alpha(y) lies in block j.
  std::vector<std::vector<int>> row_counts;
  /// fixed_counts[j]: fixed points y of alpha^-1 beta whose row alpha(y) lies in block j.
  std::vector<int> fixed_counts;
};
BlockCycleCounts block_cycle_counts(const BlockSpec& spec);

/// d_chi^G(M) for the block matrix M = P + Q over X(alpha, beta) ∩ G.
GmfResult gmf_block(const BlockSpec& spec, const GroupSpec& group, const CharacterSpec& chi);

/// d_chi^G(S_theta) = d_chi^G(P_theta + P_theta^-1) / 2^(F + 2t).
GmfResult gmf_s_matrix(const Permutation& theta, const GroupSpec& group, const CharacterSpec& chi);
/// det(S_theta) = (-1)^(s+t) 2^(r+2s), or 0 when theta has a cycle of length divisible by 4.
GaussianRational det_s_closed(const Permutation& theta);
/// det(P_theta + P_theta^-1) = (-1)^(s+t) 2^(F+r+2(s+t)), or 0 as above.
GaussianRational det_p_plus_inverse_closed(const Permutation& theta);

/// S_{theta tau}, after checking it equals S_theta S_tau. Throws DomainError
/// when some cycle of theta meets some cycle of tau.
Matrix s_product(const Permutation& theta, const Permutation& tau);

struct SingularSpectrum {
  /// Descending.
  std::vector<double> values;
};
/// Singular values of a P_theta + b P_tau from the cycle type of theta^-1 tau.
SingularSpectrum singular_values(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                                 const Permutation& tau);

struct BoundReport {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};
inline constexpr double kBoundTolerance = 1e-9;
/// |d_chi^G(a P_theta + b P_tau)|^2 <= (1/n) sum_j sigma_j^(2n) for linear chi.
/// Throws DomainError for a non-linear character.
BoundReport check_singular_bound(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                                 const Permutation& tau, const GroupSpec& group, const CharacterSpec& chi);

struct ExactComparison {
  GaussianRational lhs;
  GaussianRational rhs;
  bool holds = false;
};
/// (1/chi(id)) d_chi^{S_n}(k I + m P_pi) <= per(k I + m P_pi).
/// Requires k >= |m| and pi an involution of degree n.
ExactComparison check_dominance(const Rational& k, const Rational& m, const Permutation& pi, const CharacterSpec& chi);

/// Compares d(A + B) (lhs) with d(A) + d(B) (rhs) over S_n for
/// A = k1 I + m1 P_pi1, B = k2 I + m2 P_pi2 and irreducible chi.
ExactComparison check_superadditivity(const Rational& k1, const Rational& m1, const Permutation& pi1,
                                      const Rational& k2, const Rational& m2, const Permutation& pi2,
                                      const CharacterSpec& chi);

inline constexpr int kMaxTensorDegree = 4;
/// <x_1 * ... * x_n, y_1 * ... * y_n> / |G| on the n^n-dimensional tensor
/// space, with x_i = e_i and y_j = column j of a P_theta + b P_tau, so the
/// Gram matrix is a P_theta + b P_tau. Real a, b and n <= 4 only.
GaussianRational tensor_oracle(const Rational& a, const Rational& b, const Permutation& theta, const Permutation& tau,
                               const GroupSpec& group, const CharacterSpec& chi);

struct TermCounts {
  std::uint64_t naive = 0;
  std::uint64_t formula = 0;
  std::uint64_t cauchy_binet = 0;
};
TermCounts term_counts(const Permutation& theta, const Permutation& tau, const GroupSpec& group);

} // namespace permfunc
