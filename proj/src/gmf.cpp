#include "permfunc/gmf.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "permfunc/errors.hpp"
#include "permfunc/json_io.hpp"

namespace permfunc {

namespace {

void require_same_degree(const Permutation& theta, const Permutation& tau, const char* what) {
  if (theta.degree() != tau.degree()) {
    throw DomainError(std::string(what) + ": degree mismatch (" + std::to_string(theta.degree()) + " vs " +
                      std::to_string(tau.degree()) + ")");
  }
}

void require_group_degree(const GroupSpec& group, int n, const char* what) {
  if (group.degree() != n) {
    throw DomainError(std::string(what) + ": group acts on " + std::to_string(group.degree()) +
                      " points, matrix has order " + std::to_string(n));
  }
}

// Powers z^0 .. z^max, with 0^0 = 1.
std::vector<GaussianRational> power_table(const GaussianRational& z, int max) {
  std::vector<GaussianRational> out(static_cast<std::size_t>(max) + 1);
  out[0] = 1;
  for (int e = 1; e <= max; ++e) {
    out[static_cast<std::size_t>(e)] = out[static_cast<std::size_t>(e) - 1] * z;
  }
  return out;
}

GaussianRational diagonal_product(const Matrix& a, const Permutation& sigma) {
  GaussianRational product(1);
  for (Point i = 1; i <= sigma.degree(); ++i) {
    const auto& entry = a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(sigma(i) - 1));
    if (entry.is_zero()) {
      return 0;
    }
    product *= entry;
  }
  return product;
}

GaussianRational naive_range(const Matrix& a, const CharacterSpec& chi, const std::vector<Permutation>& elements,
                             std::size_t begin, std::size_t end) {
  GaussianRational sum;
  for (std::size_t k = begin; k < end; ++k) {
    const auto product = diagonal_product(a, elements[k]);
    if (!product.is_zero()) {
      sum += evaluate(chi, elements[k]) * product;
    }
  }
  return sum;
}

struct CycleCounts {
  std::vector<int> lengths;
  int fixed = 0;
  int two_cycles = 0;
  int odd_cycles = 0;        // odd length >= 3
  int twice_odd_cycles = 0;  // length = 2 mod 4, length > 2
  bool has_multiple_of_four = false;
};

CycleCounts classify_cycles(const Permutation& theta) {
  CycleCounts c;
  const auto cs = cycle_structure(theta);
  c.lengths = cs.lengths;
  c.fixed = cs.fixed_count;
  for (int l : cs.lengths) {
    if (l == 2) {
      ++c.two_cycles;
    } else if (l % 2 == 1) {
      ++c.odd_cycles;
    } else if (l % 4 == 2) {
      ++c.twice_odd_cycles;
    } else {
      c.has_multiple_of_four = true;
    }
  }
  return c;
}

GaussianRational signed_power_of_two(int negate_parity, int exponent) {
  GaussianRational v = GaussianRational(2).pow(exponent);
  return negate_parity % 2 == 0 ? v : -v;
}

// Sum over subsets I of the cycles of theta^-1 tau of
// weight(I) * a^(n - sum l - F) * b^(sum l) * (a+b)^F.
GmfResult closed_form(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                      const Permutation& tau, bool determinant) {
  require_same_degree(theta, tau, determinant ? "det_linear_sum" : "per_linear_sum");
  const int n = theta.degree();
  const auto cs = cycle_structure(theta.inverse() * tau);
  const int r = static_cast<int>(cs.lengths.size());
  const int f = cs.fixed_count;
  if (r > kMaxXSetCycles) {
    throw DomainError("closed form: too many cycles");
  }
  GmfResult result{0, Method::ClosedForm, std::uint64_t{1} << r};
  const GaussianRational overlap = (a + b).pow(f);
  if (overlap.is_zero()) {
    return result;
  }
  const auto a_pow = power_table(a, n);
  const auto b_pow = power_table(b, n);
  GaussianRational sum;
  for (std::uint64_t mask = 0; mask < result.term_count; ++mask) {
    int moved = 0;
    int chosen = 0;
    for (int k = 0; k < r; ++k) {
      if (mask >> k & 1U) {
        moved += cs.lengths[static_cast<std::size_t>(k)];
        ++chosen;
      }
    }
    GaussianRational term = a_pow[static_cast<std::size_t>(n - moved - f)] * b_pow[static_cast<std::size_t>(moved)];
    if (determinant && (chosen + moved) % 2 == 1) {
      term = -term;
    }
    sum += term;
  }
  result.value = sum * overlap;
  if (determinant && theta.sign() < 0) {
    result.value = -result.value;
  }
  return result;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return c;
}

std::vector<std::size_t> complement_zero_based(const std::vector<int>& indices, int n) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (int i = 1; i <= n; ++i) {
    if (k < indices.size() && indices[k] == i) {
      ++k;
    } else {
      out.push_back(static_cast<std::size_t>(i - 1));
    }
  }
  return out;
}

std::vector<std::size_t> zero_based(const std::vector<int>& indices) {
  std::vector<std::size_t> out;
  for (int i : indices) {
    out.push_back(static_cast<std::size_t>(i - 1));
  }
  return out;
}

} // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Naive: return "naive";
    case Method::Formula: return "formula";
    case Method::ClosedForm: return "closed";
    case Method::CauchyBinet: return "cauchy-binet";
    case Method::Block: return "block";
    case Method::Tensor: return "tensor";
  }
  return "unknown";
}

std::string GmfResult::to_json() const {
  return nlohmann::json{{"value", scalar_to_json(value)}, {"method", std::string(permfunc::to_string(method))},
                        {"terms", term_count}}
      .dump();
}

GmfResult GmfResult::from_json(std::string_view text) {
  const auto doc = parse_json_document(text, "result");
  GmfResult out;
  try {
    out.value = scalar_from_json(doc.at("value"));
    const auto method = doc.at("method").get<std::string>();
    bool known = false;
    for (Method m : {Method::Naive, Method::Formula, Method::ClosedForm, Method::CauchyBinet, Method::Block,
                     Method::Tensor}) {
      if (permfunc::to_string(m) == method) {
        out.method = m;
        known = true;
      }
    }
    if (!known) {
      throw ParseError("unknown method '" + method + "'");
    }
    out.term_count = doc.at("terms").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("result JSON: ") + e.what());
  }
  return out;
}

GmfResult gmf_naive(const Matrix& a, const GroupSpec& group, const CharacterSpec& chi, const EngineOptions& options) {
  if (!a.is_square()) {
    throw DomainError("gmf_naive: matrix is not square");
  }
  require_group_degree(group, static_cast<int>(a.rows()), "gmf_naive");
  GmfResult result{0, Method::Naive, 0};
  if (options.threads <= 1) {
    for_each_element(
        group,
        [&](const Permutation& sigma) {
          ++result.term_count;
          const auto product = diagonal_product(a, sigma);
          if (!product.is_zero()) {
            result.value += evaluate(chi, sigma) * product;
          }
        },
        options.enumeration_cap);
    return result;
  }
  const auto elements = enumerate(group, options.enumeration_cap).elements;
  const std::size_t workers = std::min<std::size_t>(options.threads, std::max<std::size_t>(elements.size(), 1));
  std::vector<GaussianRational> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (elements.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::size_t begin = std::min(elements.size(), w * chunk);
          const std::size_t end = std::min(elements.size(), begin + chunk);
          partial[w] = naive_range(a, chi, elements, begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  for (const auto& p : partial) {
    result.value += p;
  }
  result.term_count = elements.size();
  return result;
}

GmfResult gmf_linear_sum(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                         const Permutation& tau, const GroupSpec& group, const CharacterSpec& chi) {
  require_same_degree(theta, tau, "gmf_linear_sum");
  require_group_degree(group, theta.degree(), "gmf_linear_sum");
  const int n = theta.degree();
  const int f = (theta.inverse() * tau).fixed_count();
  GmfResult result{0, Method::Formula, 0};
  const GaussianRational overlap = (a + b).pow(f);
  if (overlap.is_zero()) {
    return result;
  }
  const auto a_pow = power_table(a, n);
  const auto b_pow = power_table(b, n);
  GaussianRational sum;
  for_each_x_set(theta, tau, [&](const XSetElement& e) {
    if (!group.contains(e.sigma)) {
      return;
    }
    ++result.term_count;
    sum += conjugate_evaluate(chi, e.sigma) * a_pow[static_cast<std::size_t>(n - e.t_sigma - f)] *
           b_pow[static_cast<std::size_t>(e.t_sigma)];
  });
  result.value = overlap * sum;
  return result;
}

GmfResult det_linear_sum(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                         const Permutation& tau) {
  return closed_form(a, b, theta, tau, true);
}

GmfResult per_linear_sum(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                         const Permutation& tau) {
  return closed_form(a, b, theta, tau, false);
}

int IndexTuple::rank_sum() const {
  int s = 0;
  for (int i : indices) {
    s += i;
  }
  return s;
}

std::vector<IndexTuple> index_tuples(int k, int n) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > n) {
    return out;
  }
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    current[static_cast<std::size_t>(i)] = i + 1;
  }
  while (true) {
    out.push_back({current});
    int pos = k - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - (k - 1 - pos)) {
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++current[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return out;
}

GmfResult det_cauchy_binet_sum(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DomainError("det_cauchy_binet_sum: dimension mismatch");
  }
  const int n = static_cast<int>(a.rows());
  GmfResult result{0, Method::CauchyBinet, 0};
  for (int k = 0; k <= n; ++k) {
    const auto tuples = index_tuples(k, n);
    for (const auto& rows : tuples) {
      const auto kept_rows = zero_based(rows.indices);
      const auto dropped_rows = complement_zero_based(rows.indices, n);
      for (const auto& cols : tuples) {
        ++result.term_count;
        const auto minor = determinant(a.submatrix(kept_rows, zero_based(cols.indices)));
        if (minor.is_zero()) {
          continue;
        }
        const auto complementary = determinant(b.submatrix(dropped_rows, complement_zero_based(cols.indices, n)));
        const auto term = minor * complementary;
        if ((rows.rank_sum() + cols.rank_sum()) % 2 == 0) {
          result.value += term;
        } else {
          result.value -= term;
        }
      }
    }
  }
  return result;
}

BlockCycleCounts block_cycle_counts(const BlockSpec& spec) {
  const Permutation alpha = spec.alpha();
  const Permutation beta = spec.beta();
  const auto dec = disjoint_cycles(alpha.inverse() * beta);
  const auto blocks = static_cast<std::size_t>(spec.n);
  auto row_block = [&](Point y) { return static_cast<std::size_t>((alpha(y) - 1) / spec.m); };
  BlockCycleCounts counts;
  counts.fixed_counts.assign(blocks, 0);
  for (const auto& cycle : dec.cycles) {
    std::vector<int> per_block(blocks, 0);
    for (Point y : cycle) {
      ++per_block[row_block(y)];
    }
    counts.row_counts.push_back(std::move(per_block));
  }
  for (Point y : dec.fixed_points) {
    ++counts.fixed_counts[row_block(y)];
  }
  return counts;
}

GmfResult gmf_block(const BlockSpec& spec, const GroupSpec& group, const CharacterSpec& chi) {
  spec.validate();
  require_group_degree(group, spec.m * spec.n, "gmf_block");
  const auto counts = block_cycle_counts(spec);
  const auto blocks = static_cast<std::size_t>(spec.n);
  GmfResult result{0, Method::Block, 0};
  GaussianRational overlap(1);
  for (std::size_t j = 0; j < blocks; ++j) {
    overlap *= (spec.a[j] + spec.b[j]).pow(counts.fixed_counts[j]);
  }
  if (overlap.is_zero()) {
    return result;
  }
  // Weight of each cycle when it follows alpha (a) or beta (b).
  std::vector<GaussianRational> via_alpha;
  std::vector<GaussianRational> via_beta;
  for (const auto& per_block : counts.row_counts) {
    GaussianRational wa(1);
    GaussianRational wb(1);
    for (std::size_t j = 0; j < blocks; ++j) {
      wa *= spec.a[j].pow(per_block[j]);
      wb *= spec.b[j].pow(per_block[j]);
    }
    via_alpha.push_back(std::move(wa));
    via_beta.push_back(std::move(wb));
  }
  GaussianRational sum;
  for_each_x_set(spec.alpha(), spec.beta(), [&](const XSetElement& e) {
    if (!group.contains(e.sigma)) {
      return;
    }
    ++result.term_count;
    GaussianRational term = conjugate_evaluate(chi, e.sigma);
    for (std::size_t i = 0; i < via_alpha.size(); ++i) {
      term *= (e.chosen >> i & 1U) ? via_beta[i] : via_alpha[i];
    }
    sum += term;
  });
  result.value = overlap * sum;
  return result;
}

GmfResult gmf_s_matrix(const Permutation& theta, const GroupSpec& group, const CharacterSpec& chi) {
  const auto c = classify_cycles(theta);
  GmfResult result = gmf_linear_sum(1, 1, theta, theta.inverse(), group, chi);
  result.value /= GaussianRational(2).pow(c.fixed + 2 * c.two_cycles);
  return result;
}

GaussianRational det_s_closed(const Permutation& theta) {
  const auto c = classify_cycles(theta);
  if (c.has_multiple_of_four) {
    return 0;
  }
  return signed_power_of_two(c.twice_odd_cycles + c.two_cycles, c.odd_cycles + 2 * c.twice_odd_cycles);
}

GaussianRational det_p_plus_inverse_closed(const Permutation& theta) {
  const auto c = classify_cycles(theta);
  if (c.has_multiple_of_four) {
    return 0;
  }
  return signed_power_of_two(c.twice_odd_cycles + c.two_cycles,
                             c.fixed + c.odd_cycles + 2 * (c.twice_odd_cycles + c.two_cycles));
}

Matrix s_product(const Permutation& theta, const Permutation& tau) {
  require_same_degree(theta, tau, "s_product");
  for (Point i = 1; i <= theta.degree(); ++i) {
    if (!theta.fixes(i) && !tau.fixes(i)) {
      throw DomainError("s_product: cycles of " + theta.to_string() + " and " + tau.to_string() + " share point " +
                        std::to_string(i));
    }
  }
  Matrix expected = s_matrix(theta * tau);
  if (!(mat_mul(s_matrix(theta), s_matrix(tau)) == expected)) {
    throw std::logic_error("s_product: S_theta S_tau differs from S_{theta tau} for disjoint cycles");
  }
  return expected;
}

SingularSpectrum singular_values(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                                 const Permutation& tau) {
  require_same_degree(theta, tau, "singular_values");
  const auto dec = disjoint_cycles(theta.inverse() * tau);
  std::vector<int> lengths(dec.fixed_points.size(), 1);
  for (const auto& c : dec.cycles) {
    lengths.push_back(static_cast<int>(c.size()));
  }
  const double base = Rational(a.norm() + b.norm()).get_d();
  const std::complex<double> cross = (a.conj() * b).to_complex();
  SingularSpectrum out;
  for (int l : lengths) {
    for (int k = 0; k < l; ++k) {
      const auto root = std::polar(1.0, 2.0 * std::numbers::pi * k / l);
      double radicand = base + 2.0 * (cross * root).real();
      if (radicand < 0) {
        if (radicand < -1e-9 * std::max(1.0, base)) {
          throw std::logic_error("singular_values: negative eigenvalue of A*A");
        }
        radicand = 0;
      }
      out.values.push_back(std::sqrt(radicand));
    }
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

BoundReport check_singular_bound(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                                 const Permutation& tau, const GroupSpec& group, const CharacterSpec& chi) {
  require_same_degree(theta, tau, "check_singular_bound");
  const int n = theta.degree();
  if (!is_linear(chi, n)) {
    throw DomainError("check_singular_bound: character " + chi.to_string() + " is not linear");
  }
  BoundReport report;
  try {
    report.lhs = gmf_linear_sum(a, b, theta, tau, group, chi).value.norm().get_d();
  } catch (const DomainError&) {
    // Character values outside Q[i]: same sum in floating point.
    const int f = (theta.inverse() * tau).fixed_count();
    const auto fa = a.to_complex();
    const auto fb = b.to_complex();
    std::complex<double> sum = 0;
    for_each_x_set(theta, tau, [&](const XSetElement& e) {
      if (group.contains(e.sigma)) {
        sum += evaluate_numeric(chi, e.sigma.inverse()) * std::pow(fa, n - e.t_sigma - f) * std::pow(fb, e.t_sigma);
      }
    });
    report.lhs = std::norm(sum * std::pow(fa + fb, f));
  }
  double rhs = 0;
  for (double s : singular_values(a, b, theta, tau).values) {
    rhs += std::pow(s * s, n);
  }
  report.rhs = rhs / n;
  report.holds = report.lhs <= report.rhs + kBoundTolerance * std::max(1.0, report.rhs);
  return report;
}

ExactComparison check_dominance(const Rational& k, const Rational& m, const Permutation& pi, const CharacterSpec& chi) {
  if (k < abs(m) || !pi.is_involution()) {
    throw DomainError("check_dominance: need k >= |m| and pi = pi^-1");
  }
  const int n = pi.degree();
  const GroupSpec sn = GroupSpec::symmetric(n);
  const Permutation id(n);
  ExactComparison out;
  out.lhs = gmf_linear_sum(k, m, id, pi, sn, chi).value / GaussianRational(static_cast<long>(degree(chi, n)));
  out.rhs = gmf_linear_sum(k, m, id, pi, sn, CharacterSpec::trivial()).value;
  out.holds = out.lhs.is_real() && out.rhs.is_real() && out.lhs.re() <= out.rhs.re();
  return out;
}

ExactComparison check_superadditivity(const Rational& k1, const Rational& m1, const Permutation& pi1,
                                      const Rational& k2, const Rational& m2, const Permutation& pi2,
                                      const CharacterSpec& chi) {
  require_same_degree(pi1, pi2, "check_superadditivity");
  if (k1 < abs(m1) || k2 < abs(m2) || !pi1.is_involution() || !pi2.is_involution()) {
    throw DomainError("check_superadditivity: both summands must satisfy k >= |m| with an involution pi");
  }
  if (std::holds_alternative<TableCharacter>(chi.variant()) || std::holds_alternative<LinearOfCyclic>(chi.variant())) {
    throw DomainError("check_superadditivity: character must be an irreducible character of S_n");
  }
  const int n = pi1.degree();
  const GroupSpec sn = GroupSpec::symmetric(n);
  const Permutation id(n);
  const Matrix a = linear_sum(k1, m1, id, pi1);
  const Matrix b = linear_sum(k2, m2, id, pi2);
  ExactComparison out;
  out.lhs = gmf_naive(mat_add(a, b), sn, chi).value;
  out.rhs = gmf_linear_sum(k1, m1, id, pi1, sn, chi).value + gmf_linear_sum(k2, m2, id, pi2, sn, chi).value;
  out.holds = out.lhs.is_real() && out.rhs.is_real() && out.lhs.re() >= out.rhs.re();
  return out;
}

GaussianRational tensor_oracle(const Rational& a, const Rational& b, const Permutation& theta, const Permutation& tau,
                               const GroupSpec& group, const CharacterSpec& chi) {
  require_same_degree(theta, tau, "tensor_oracle");
  const int n = theta.degree();
  if (n > kMaxTensorDegree) {
    throw DomainError("tensor_oracle: degree " + std::to_string(n) + " exceeds " + std::to_string(kMaxTensorDegree));
  }
  require_group_degree(group, n, "tensor_oracle");
  const Matrix gram = linear_sum(a, b, theta, tau);
  const auto elements = enumerate(group).elements;

  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(n);
  }
  // Component (k_1, ..., k_n) of v_1 ⊗ ... ⊗ v_n is prod_p v_p[k_p]; vector(i, k) is the k-th coordinate of v_i.
  auto symmetrize = [&](auto&& coordinate) {
    std::vector<GaussianRational> out(dim);
    for (const auto& sigma : elements) {
      const GaussianRational weight = evaluate(chi, sigma);
      const Permutation inv = sigma.inverse();
      for (std::size_t flat = 0; flat < dim; ++flat) {
        std::size_t rest = flat;
        GaussianRational component = weight;
        // Position p carries x_{sigma^-1(p)}.
        for (int p = n; p >= 1 && !component.is_zero(); --p) {
          const auto digit = rest % static_cast<std::size_t>(n);
          rest /= static_cast<std::size_t>(n);
          component *= coordinate(inv(p), digit);
        }
        out[flat] += component;
      }
    }
    return out;
  };
  const auto tx = symmetrize([](Point i, std::size_t k) {
    return GaussianRational(static_cast<std::size_t>(i - 1) == k ? 1 : 0);
  });
  const auto ty = symmetrize([&](Point j, std::size_t k) { return gram(k, static_cast<std::size_t>(j - 1)); });
  GaussianRational inner;
  for (std::size_t flat = 0; flat < dim; ++flat) {
    inner += tx[flat] * ty[flat].conj();
  }
  return inner / GaussianRational(static_cast<long>(elements.size()));
}

TermCounts term_counts(const Permutation& theta, const Permutation& tau, const GroupSpec& group) {
  require_same_degree(theta, tau, "term_counts");
  require_group_degree(group, theta.degree(), "term_counts");
  TermCounts counts;
  counts.naive = group.order();
  for_each_x_set(theta, tau, [&](const XSetElement& e) {
    if (group.contains(e.sigma)) {
      ++counts.formula;
    }
  });
  const int n = theta.degree();
  for (int k = 0; k <= n; ++k) {
    const auto c = binomial(n, k);
    counts.cauchy_binet += c * c;
  }
  return counts;
}

} // namespace permfunc
