#include "permfunc/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include <nlohmann/json.hpp>

#include "permfunc/errors.hpp"
#include "permfunc/json_io.hpp"

namespace permfunc {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(std::string(what) + ": dimension mismatch");
  }
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = 1;
  }
  return out;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(r, c) = (*this)(rows[r], cols[c]);
    }
  }
  return out;
}

std::string Matrix::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < rows_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < cols_; ++c) {
      row.push_back(scalar_to_json((*this)(r, c)));
    }
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", rows_}, {"cols", cols_}, {"entries", std::move(entries)}}.dump();
}

Matrix Matrix::from_json(std::string_view text) {
  const auto doc = parse_json_document(text, "matrix");
  if (!doc.contains("rows") || !doc.contains("cols") || !doc.contains("entries") || !doc["rows"].is_number_unsigned() ||
      !doc["cols"].is_number_unsigned() || !doc["entries"].is_array()) {
    throw ParseError("matrix JSON needs unsigned \"rows\", \"cols\" and an \"entries\" array");
  }
  const auto rows = doc["rows"].get<std::size_t>();
  const auto cols = doc["cols"].get<std::size_t>();
  const auto& entries = doc["entries"];
  if (rows == 0 || cols == 0 || entries.size() != rows) {
    throw ParseError("matrix JSON dimensions do not match \"entries\"");
  }
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) {
      throw ParseError("matrix JSON row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) = scalar_from_json(entries[r][c]);
    }
  }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_add");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) += b(r, c);
    }
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("mat_mul: dimension mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) {
        continue;
      }
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

Matrix scalar_mul(const GaussianRational& s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) *= s;
    }
  }
  return out;
}

Matrix conjugate_transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(c, r) = a(r, c).conj();
    }
  }
  return out;
}

GaussianRational trace(const Matrix& a) {
  if (!a.is_square()) {
    throw DomainError("trace: matrix is not square");
  }
  GaussianRational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    t += a(i, i);
  }
  return t;
}

bool is_hermitian(const Matrix& a) { return a.is_square() && conjugate_transpose(a) == a; }

GaussianRational determinant(const Matrix& a) {
  if (!a.is_square()) {
    throw DomainError("determinant: matrix is not square");
  }
  const std::size_t n = a.rows();
  if (n == 0) {
    return 1;
  }
  Matrix w = a;
  GaussianRational previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && w(pivot, k).is_zero()) {
      ++pivot;
    }
    if (pivot == n) {
      return 0;
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(w(pivot, c), w(k, c));
      }
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / previous;
      }
      w(i, k) = 0;
    }
    previous = w(k, k);
  }
  GaussianRational det = w(n - 1, n - 1);
  return negate ? -det : det;
}

Matrix perm_matrix(const Permutation& theta) {
  const auto n = static_cast<std::size_t>(theta.degree());
  Matrix out(n, n);
  for (Point j = 1; j <= theta.degree(); ++j) {
    out(static_cast<std::size_t>(theta(j) - 1), static_cast<std::size_t>(j - 1)) = 1;
  }
  return out;
}

Matrix linear_sum(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                  const Permutation& tau) {
  if (theta.degree() != tau.degree()) {
    throw DomainError("linear_sum: degree mismatch");
  }
  return mat_add(scalar_mul(a, perm_matrix(theta)), scalar_mul(b, perm_matrix(tau)));
}

Matrix s_matrix(const Permutation& theta) {
  const auto n = static_cast<std::size_t>(theta.degree());
  const Permutation inv = theta.inverse();
  Matrix out(n, n);
  for (Point i = 1; i <= theta.degree(); ++i) {
    out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(theta(i) - 1)) = 1;
    out(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(inv(i) - 1)) = 1;
  }
  return out;
}

void BlockSpec::validate() const {
  if (m < 1 || n < 1) {
    throw DomainError("block spec: m and n must be positive");
  }
  if (theta.degree() != n || tau.degree() != n) {
    throw DomainError("block spec: outer permutations must have degree n = " + std::to_string(n));
  }
  const auto count = static_cast<std::size_t>(n);
  if (inner_thetas.size() != count || inner_taus.size() != count || a.size() != count || b.size() != count) {
    throw DomainError("block spec: expected " + std::to_string(n) + " inner permutations and coefficients each");
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (inner_thetas[i].degree() != m || inner_taus[i].degree() != m) {
      throw DomainError("block spec: inner permutations must have degree m = " + std::to_string(m));
    }
  }
}

namespace {

// Column block outer(i) of block row i carries P_{inner[i]}: column
// (outer(i)-1)m + j maps to row (i-1)m + inner[i](j).
Permutation assemble(int m, int n, const Permutation& outer, const std::vector<Permutation>& inner) {
  std::vector<PartialMap> maps;
  for (int i = 1; i <= n; ++i) {
    maps.push_back(shift_embed(inner[static_cast<std::size_t>(i - 1)], (outer(i) - 1) * m, (i - 1) * m));
  }
  return disjoint_union(maps, m * n);
}

} // namespace

Permutation BlockSpec::alpha() const {
  validate();
  return assemble(m, n, theta, inner_thetas);
}

Permutation BlockSpec::beta() const {
  validate();
  return assemble(m, n, tau, inner_taus);
}

BlockSpec BlockSpec::from_json(std::string_view text) {
  const auto doc = parse_json_document(text, "block spec");
  BlockSpec spec;
  try {
    spec.m = doc.at("m").get<int>();
    spec.n = doc.at("n").get<int>();
    if (spec.m < 1 || spec.n < 1) {
      throw ParseError("block spec: m and n must be positive");
    }
    spec.theta = Permutation::parse(doc.at("theta").get<std::string>(), spec.n);
    spec.tau = Permutation::parse(doc.at("tau").get<std::string>(), spec.n);
    for (const auto& p : doc.at("inner_thetas")) {
      spec.inner_thetas.push_back(Permutation::parse(p.get<std::string>(), spec.m));
    }
    for (const auto& p : doc.at("inner_taus")) {
      spec.inner_taus.push_back(Permutation::parse(p.get<std::string>(), spec.m));
    }
    for (const auto& s : doc.at("a")) {
      spec.a.push_back(scalar_from_json(s));
    }
    for (const auto& s : doc.at("b")) {
      spec.b.push_back(scalar_from_json(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("block spec JSON: ") + e.what());
  }
  return spec;
}

std::string BlockSpec::to_json() const {
  nlohmann::json doc{{"m", m}, {"n", n}, {"theta", theta.to_string()}, {"tau", tau.to_string()}};
  auto& thetas = doc["inner_thetas"] = nlohmann::json::array();
  auto& taus = doc["inner_taus"] = nlohmann::json::array();
  auto& as = doc["a"] = nlohmann::json::array();
  auto& bs = doc["b"] = nlohmann::json::array();
  for (std::size_t i = 0; i < inner_thetas.size(); ++i) {
    thetas.push_back(inner_thetas[i].to_string());
    taus.push_back(inner_taus[i].to_string());
    as.push_back(scalar_to_json(a[i]));
    bs.push_back(scalar_to_json(b[i]));
  }
  return doc.dump();
}

Matrix block_matrix(const BlockSpec& spec) {
  spec.validate();
  const auto m = static_cast<std::size_t>(spec.m);
  const auto size = m * static_cast<std::size_t>(spec.n);
  Matrix out(size, size);
  auto place = [&](std::size_t block_row, std::size_t block_col, const GaussianRational& coeff,
                   const Permutation& inner) {
    const Matrix block = perm_matrix(inner);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        if (!block(r, c).is_zero()) {
          out(block_row * m + r, block_col * m + c) += coeff;
        }
      }
    }
  };
  for (int i = 1; i <= spec.n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    place(k, static_cast<std::size_t>(spec.theta(i) - 1), spec.a[k], spec.inner_thetas[k]);
    place(k, static_cast<std::size_t>(spec.tau(i) - 1), spec.b[k], spec.inner_taus[k]);
  }
  return out;
}

namespace {

struct ScaledInvolution {
  Rational k;
  Rational m;
  Permutation pi;
};

// Reads a real matrix as k I + m P_pi with k >= |m| and pi an involution.
std::optional<ScaledInvolution> identity_plus_involution(const Matrix& matrix) {
  const std::size_t n = matrix.rows();
  std::vector<Point> images(n);
  std::optional<Rational> m;
  for (std::size_t r = 0; r < n; ++r) {
    images[r] = static_cast<Point>(r + 1);
    for (std::size_t c = 0; c < n; ++c) {
      const auto& entry = matrix(r, c);
      if (!entry.is_real()) {
        return std::nullopt;
      }
      if (r == c || entry.is_zero()) {
        continue;
      }
      if (images[r] != static_cast<Point>(r + 1) || !(matrix(c, r) == entry) || (m && *m != entry.re())) {
        return std::nullopt;
      }
      images[r] = static_cast<Point>(c + 1);
      m = entry.re();
    }
  }
  const auto pi = Permutation::from_images(images);
  const Rational mm = m.value_or(Rational(0));
  std::optional<Rational> k;
  for (std::size_t r = 0; r < n; ++r) {
    const Rational diagonal = matrix(r, r).re() - (pi.fixes(static_cast<Point>(r + 1)) ? mm : Rational(0));
    if (k && *k != diagonal) {
      return std::nullopt;
    }
    k = diagonal;
  }
  if (!k || *k < abs(mm)) {
    return std::nullopt;
  }
  return ScaledInvolution{*k, mm, pi};
}

} // namespace

PsdClassification psd_classify(const GaussianRational& a, const GaussianRational& b, const Permutation& theta,
                               const Permutation& tau) {
  const Matrix matrix = linear_sum(a, b, theta, tau);
  const std::size_t n = matrix.rows();
  PsdClassification out;
  out.pi = Permutation(theta.degree());

  // Condition 1: c I with c >= 0.
  bool scalar = true;
  for (std::size_t r = 0; r < n && scalar; ++r) {
    for (std::size_t c = 0; c < n && scalar; ++c) {
      scalar = r == c ? matrix(r, c) == matrix(0, 0) : matrix(r, c).is_zero();
    }
  }
  if (scalar && matrix(0, 0).is_real() && sgn(matrix(0, 0).re()) >= 0) {
    out.verdict = PsdClassification::Verdict::Psd;
    out.k = matrix(0, 0).re();
    out.condition = 1;
    return out;
  }
  if (!a.is_real() || !b.is_real()) {
    return out;
  }
  const Rational& ra = a.re();
  const Rational& rb = b.re();
  auto accept = [&](Rational k, Rational m, Permutation pi, int condition) {
    out.verdict = PsdClassification::Verdict::Psd;
    out.k = std::move(k);
    out.m = std::move(m);
    out.pi = std::move(pi);
    out.condition = condition;
    return out;
  };
  if (theta.is_identity() && tau.is_involution() && ra >= abs(rb)) {
    return accept(ra, rb, tau, 2);
  }
  if (theta.is_involution() && tau.is_identity() && rb >= abs(ra)) {
    return accept(rb, ra, theta, 3);
  }
  if (theta != tau && !theta.is_identity() && !tau.is_identity() && theta.is_involution() && tau.is_involution() &&
      ra == rb && sgn(ra) >= 0) {
    bool covered = true;
    for (Point i = 1; i <= theta.degree() && covered; ++i) {
      covered = theta.fixes(i) || tau.fixes(i);
    }
    if (covered) {
      return accept(ra, ra, theta * tau, 4);
    }
  }
  // Condition 5: rows cancelled by a + b = 0 leave k I + m P_pi directly.
  if (ra + rb == 0) {
    if (auto form = identity_plus_involution(matrix)) {
      return accept(std::move(form->k), std::move(form->m), std::move(form->pi), 5);
    }
  }
  return out;
}

} // namespace permfunc
