#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permfunc/errors.hpp"
#include "permfunc/matrix.hpp"

using namespace permfunc;

namespace {

Matrix random_matrix(oracle::Gen& gen, std::size_t n, int zero_percent) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = gen.uniform(1, 100) <= zero_percent ? GaussianRational() : gen.scalar();
    }
  }
  return m;
}

Matrix from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

BlockSpec example_block() {
  BlockSpec spec;
  spec.m = 4;
  spec.n = 2;
  spec.theta = Permutation(2);
  spec.tau = Permutation::parse("(1 2)", 2);
  spec.inner_thetas = {Permutation::parse("(1 4 3)", 4), Permutation::parse("(1 4)(2 3)", 4)};
  spec.inner_taus = {Permutation::parse("(1 3 2)", 4), Permutation(4)};
  spec.a = {GaussianRational(0, -1), 2};
  spec.b = {-2, 3};
  return spec;
}

} // namespace

TEST(Matrix, DeterminantMatchesLeibnizAndLaplace) {
  oracle::Gen gen(31);
  for (int k = 0; k < 120; ++k) {
    const auto n = static_cast<std::size_t>(gen.uniform(0, 5));
    const auto m = random_matrix(gen, n, gen.uniform(0, 70));
    const auto d = determinant(m);
    EXPECT_EQ(d, oracle::laplace_det(m));
    if (n > 0) {
      EXPECT_EQ(d, oracle::leibniz_det(m));
    }
  }
}

TEST(Matrix, DeterminantIsMultiplicative) {
  oracle::Gen gen(37);
  for (int k = 0; k < 40; ++k) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 6));
    const auto a = random_matrix(gen, n, 30);
    const auto b = random_matrix(gen, n, 30);
    EXPECT_EQ(determinant(mat_mul(a, b)), determinant(a) * determinant(b));
  }
}

TEST(Matrix, PermutationMatrixConvention) {
  oracle::Gen gen(41);
  for (int k = 0; k < 60; ++k) {
    const int n = gen.uniform(1, 7);
    const auto p = gen.perm(n);
    const auto q = gen.perm(n);
    EXPECT_EQ(perm_matrix(p), oracle::dense_perm_matrix(p));
    EXPECT_EQ(mat_mul(perm_matrix(p), perm_matrix(q)), perm_matrix(p * q));
    EXPECT_EQ(determinant(perm_matrix(p)), GaussianRational(p.sign()));
    EXPECT_EQ(conjugate_transpose(perm_matrix(p)), perm_matrix(p.inverse()));
    const auto a = gen.scalar();
    const auto b = gen.scalar();
    EXPECT_EQ(linear_sum(a, b, p, q), oracle::dense_linear_sum(a, b, p, q));
  }
}

TEST(Matrix, SMatrixDefinition) {
  const auto theta = Permutation::parse("(1 2 3)(4 5)", 6);
  const auto s = s_matrix(theta);
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) {
      const bool one = theta(i) == j || theta.inverse()(i) == j;
      EXPECT_EQ(s(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)), GaussianRational(one ? 1 : 0));
    }
  }
  EXPECT_TRUE(is_hermitian(s));
}

TEST(Matrix, JsonRoundTrip) {
  oracle::Gen gen(43);
  const auto m = random_matrix(gen, 3, 20);
  EXPECT_EQ(Matrix::from_json(m.to_json()), m);
  EXPECT_THROW(Matrix::from_json(R"({"rows":2,"cols":2,"entries":[[1,2]]})"), ParseError);
  EXPECT_THROW(Matrix::from_json("not json"), ParseError);
}

TEST(BlockMatrix, ReproducesReferenceMatrix) {
  const GaussianRational mi(0, -1);
  const auto expected = from_rows({
      {0, 0, mi, 0, 0, -2, 0, 0},
      {0, mi, 0, 0, 0, 0, -2, 0},
      {0, 0, 0, mi, -2, 0, 0, 0},
      {mi, 0, 0, 0, 0, 0, 0, -2},
      {3, 0, 0, 0, 0, 0, 0, 2},
      {0, 3, 0, 0, 0, 0, 2, 0},
      {0, 0, 3, 0, 0, 2, 0, 0},
      {0, 0, 0, 3, 2, 0, 0, 0},
  });
  const auto spec = example_block();
  EXPECT_EQ(block_matrix(spec), expected);
  EXPECT_EQ(spec.alpha().to_string(), "(1 4 3)(5 8)(6 7)");
  EXPECT_EQ(spec.beta().to_string(), "(1 5 3 7 2 6)(4 8)");
  EXPECT_EQ((spec.alpha().inverse() * spec.beta()).to_string(), "(1 8)(2 7)(3 6)(4 5)");
  EXPECT_EQ(BlockSpec::from_json(spec.to_json()).to_json(), spec.to_json());
}

TEST(BlockMatrix, SupportFollowsAlphaAndBeta) {
  oracle::Gen gen(47);
  for (int k = 0; k < 60; ++k) {
    BlockSpec spec;
    spec.m = gen.uniform(1, 3);
    spec.n = gen.uniform(1, 3);
    spec.theta = gen.perm(spec.n);
    spec.tau = gen.perm(spec.n);
    for (int i = 0; i < spec.n; ++i) {
      spec.inner_thetas.push_back(gen.perm(spec.m));
      spec.inner_taus.push_back(gen.perm(spec.m));
      spec.a.emplace_back(1);
      spec.b.emplace_back(0, 1);
    }
    const auto mat = block_matrix(spec);
    const auto p = perm_matrix(spec.alpha());
    const auto q = perm_matrix(spec.beta());
    EXPECT_EQ(mat, mat_add(p, scalar_mul(GaussianRational::i(), q)));
  }
}

TEST(BlockMatrix, UnitBlocksGiveInverseOuterPermutations) {
  oracle::Gen gen(53);
  for (int k = 0; k < 30; ++k) {
    BlockSpec spec;
    spec.m = 1;
    spec.n = gen.uniform(1, 5);
    spec.theta = gen.perm(spec.n);
    spec.tau = gen.perm(spec.n);
    spec.inner_thetas.assign(static_cast<std::size_t>(spec.n), Permutation(1));
    spec.inner_taus.assign(static_cast<std::size_t>(spec.n), Permutation(1));
    spec.a.assign(static_cast<std::size_t>(spec.n), GaussianRational(2));
    spec.b.assign(static_cast<std::size_t>(spec.n), GaussianRational(-1));
    EXPECT_EQ(block_matrix(spec), linear_sum(2, -1, spec.theta.inverse(), spec.tau.inverse()));
  }
}

TEST(BlockMatrix, ValidationErrors) {
  auto spec = example_block();
  spec.a.pop_back();
  EXPECT_THROW(spec.validate(), DomainError);
  spec = example_block();
  spec.inner_taus[0] = Permutation(3);
  EXPECT_THROW(spec.validate(), DomainError);
}

TEST(Psd, ConditionsAndParameters) {
  const auto id = Permutation(4);
  const auto t = Permutation::parse("(1 2)", 4);
  const auto u = Permutation::parse("(3 4)", 4);

  auto c = psd_classify(2, 0, t, u);
  EXPECT_FALSE(c.is_psd());

  c = psd_classify(1, 2, id, id);
  EXPECT_TRUE(c.is_psd());
  EXPECT_EQ(c.condition, 1);

  c = psd_classify(3, -2, id, t);
  ASSERT_TRUE(c.is_psd());
  EXPECT_EQ(c.condition, 2);
  EXPECT_EQ(c.k, 3);
  EXPECT_EQ(c.m, -2);
  EXPECT_EQ(c.pi, t);

  c = psd_classify(1, 2, t, id);
  ASSERT_TRUE(c.is_psd());
  EXPECT_EQ(c.condition, 3);
  EXPECT_EQ(c.k, 2);
  EXPECT_EQ(c.m, 1);

  c = psd_classify(1, 1, t, u);
  ASSERT_TRUE(c.is_psd());
  EXPECT_EQ(c.condition, 4);
  EXPECT_EQ(c.pi, t * u);

  // a + b = 0 zeroes rows 3 and 4, leaving I - P_(1 2).
  c = psd_classify(1, -1, u, t * u);
  ASSERT_TRUE(c.is_psd());
  EXPECT_EQ(c.condition, 5);
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.m, -1);
  EXPECT_EQ(c.pi, t);
  EXPECT_TRUE(oracle::psd_by_minors(linear_sum(1, -1, u, t * u)));
  EXPECT_FALSE(psd_classify(-1, 1, u, t * u).is_psd());

  EXPECT_FALSE(psd_classify(1, 2, id, t).is_psd());
  EXPECT_FALSE(psd_classify(GaussianRational(1, 1), 0, id, t).is_psd());
  EXPECT_FALSE(psd_classify(1, 1, Permutation::parse("(1 2 3)", 4), id).is_psd());
}

TEST(Psd, AgreesWithPrincipalMinorsOnRandomS3) {
  oracle::Gen gen(59);
  for (int k = 0; k < 300; ++k) {
    const auto theta = gen.perm(3);
    const auto tau = gen.perm(3);
    const GaussianRational a(gen.uniform(-2, 2));
    const GaussianRational b(gen.uniform(-2, 2));
    const auto c = psd_classify(a, b, theta, tau);
    const auto mat = linear_sum(a, b, theta, tau);
    EXPECT_EQ(c.is_psd(), oracle::psd_by_minors(mat)) << a << " " << b << " " << theta << " " << tau;
    if (c.is_psd()) {
      EXPECT_EQ(mat, linear_sum(c.k, c.m, Permutation(3), c.pi));
      EXPECT_GE(c.k, abs(c.m));
      EXPECT_TRUE(c.pi.is_involution());
    }
  }
}
