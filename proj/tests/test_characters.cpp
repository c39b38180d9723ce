#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permfunc/characters.hpp"
#include "permfunc/errors.hpp"

using namespace permfunc;

TEST(Partitions, CountsAndOrder) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(partitions(n).size(), counts[static_cast<std::size_t>(n)]);
  }
  const auto p4 = partitions(4);
  EXPECT_EQ(p4.front().to_string(), "[4]");
  EXPECT_EQ(p4.back().to_string(), "[1,1,1,1]");
  EXPECT_EQ(Partition::parse("[3,1]"), Partition({3, 1}));
  EXPECT_THROW(Partition({1, 3}), DomainError);
  EXPECT_THROW(Partition::parse("[2,0]"), ParseError);
}

TEST(Characters, MatchHandTables) {
  for (int n : {3, 4}) {
    for (const auto& lambda : partitions(n)) {
      for (const auto& p : oracle::all_perms(n)) {
        const auto sigma = oracle::to_perm(p);
        const auto mu = cycle_structure(sigma);
        EXPECT_EQ(mn_value(lambda, mu), oracle::known_character(lambda.parts(), mu))
            << lambda.to_string() << " at " << sigma;
      }
    }
  }
}

TEST(Characters, DimensionsMatchHookFormula) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions(n)) {
      EXPECT_EQ(degree(CharacterSpec::irreducible(lambda), n), oracle::hook_dimension(lambda.parts()))
          << lambda.to_string();
    }
  }
}

TEST(Characters, RowOrthogonality) {
  for (int n = 2; n <= 6; ++n) {
    const auto all = oracle::all_perms(n);
    const auto parts = partitions(n);
    for (const auto& l : parts) {
      for (const auto& m : parts) {
        std::int64_t inner = 0;
        for (const auto& p : all) {
          const auto mu = cycle_structure(oracle::to_perm(p));
          inner += mn_value(l, mu) * mn_value(m, mu);
        }
        EXPECT_EQ(inner, l == m ? static_cast<std::int64_t>(all.size()) : 0)
            << l.to_string() << " " << m.to_string();
      }
    }
  }
}

TEST(Characters, ExtremeShapesAreTrivialAndSign) {
  oracle::Gen gen(23);
  for (int k = 0; k < 100; ++k) {
    const int n = gen.uniform(1, 8);
    const auto sigma = gen.perm(n);
    EXPECT_EQ(evaluate(CharacterSpec::irreducible(Partition({n})), sigma), evaluate(CharacterSpec::trivial(), sigma));
    EXPECT_EQ(evaluate(CharacterSpec::irreducible(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))), sigma),
              evaluate(CharacterSpec::sign(), sigma));
  }
}

TEST(Characters, LinearOfCyclicQuarterTurns) {
  const auto g = Permutation::parse("(1 2 3 4)", 4);
  const auto chi = CharacterSpec::linear_of_cyclic(g, 1);
  EXPECT_EQ(evaluate(chi, Permutation(4)), GaussianRational(1));
  EXPECT_EQ(evaluate(chi, g), GaussianRational::i());
  EXPECT_EQ(evaluate(chi, g.pow(2)), GaussianRational(-1));
  EXPECT_EQ(conjugate_evaluate(chi, g), -GaussianRational::i());
  EXPECT_THROW(evaluate(chi, Permutation::parse("(1 2)", 4)), DomainError);
  const auto chi3 = CharacterSpec::linear_of_cyclic(Permutation::parse("(1 2 3)", 3), 1);
  EXPECT_THROW(evaluate(chi3, Permutation::parse("(1 2 3)", 3)), DomainError);
  EXPECT_NEAR(evaluate_numeric(chi3, Permutation::parse("(1 2 3)", 3)).real(), -0.5, 1e-12);
  EXPECT_TRUE(is_linear(chi, 4));
  EXPECT_FALSE(is_linear(CharacterSpec::irreducible(Partition({2, 1})), 3));
}

TEST(Characters, TableValidation) {
  const auto good = R"js({"id": "1", "(2 6)": "-1", "(4 6)": "-1", "(2 4)": "-1", "(2 4 6)": "1", "(2 6 4)": "1"})js";
  const auto chi = CharacterSpec::table_from_json(good, 6);
  EXPECT_EQ(evaluate(chi, Permutation::parse("(2 6)", 6)), GaussianRational(-1));
  EXPECT_THROW(evaluate(chi, Permutation::parse("(1 2)", 6)), DomainError);

  const auto not_class_function = R"js({"id": "1", "(1 2)": "1", "(1 3)": "-1", "(2 3)": "1", "(1 2 3)": "1", "(1 3 2)": "1"})js";
  EXPECT_THROW(CharacterSpec::table_from_json(not_class_function, 3), DomainError);
  EXPECT_NO_THROW(CharacterSpec::table_from_json(not_class_function, 3, false));

  const auto not_closed = R"js({"id": "1", "(1 2 3)": "1"})js";
  EXPECT_THROW(CharacterSpec::table_from_json(not_closed, 3), DomainError);

  const auto too_big = R"js({"id": "1", "(1 2)": "2"})js";
  EXPECT_THROW(CharacterSpec::table_from_json(too_big, 2), DomainError);
  EXPECT_THROW(CharacterSpec::table_from_json("[1]", 2), ParseError);
}

TEST(Characters, ParseForms) {
  EXPECT_EQ(CharacterSpec::parse("trivial").to_string(), "trivial");
  EXPECT_EQ(CharacterSpec::parse("sign").to_string(), "sign");
  EXPECT_EQ(CharacterSpec::parse("irr:[2,1]").to_string(), "irr:[2,1]");
  EXPECT_THROW(CharacterSpec::parse("irr:[1,2]"), ParseError);
  EXPECT_THROW(CharacterSpec::parse("bogus"), ParseError);
  EXPECT_THROW(evaluate(CharacterSpec::irreducible(Partition({2, 1})), Permutation(4)), DomainError);
}
