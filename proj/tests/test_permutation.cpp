#include "permsep/permutation.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "permsep/matrix.hpp"
#include "permsep/verification.hpp"
#include "test_util.hpp"

using namespace permsep;

namespace {

Permutation word(std::vector<int> w) { return Permutation(std::move(w)); }

Permutation transposition(int a, int b, int parties) {
  const std::pair<int, int> p{a, b};
  return Permutation::from_transpositions(std::span(&p, 1), parties);
}

Permutation random_permutation(int parties, std::mt19937_64 &rng) {
  std::vector<int> w(2 * parties);
  for (int k = 0; k < 2 * parties; ++k) w[k] = k + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(std::move(w));
}

}  // namespace

TEST(permutation, identity) {
  EXPECT_EQ(Permutation::identity(2).images(), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(Permutation::identity(1).images(), (std::vector<int>{1, 2}));
  EXPECT_EQ(Permutation::identity(3).images(), (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_THROW(Permutation::identity(0), std::invalid_argument);
}

TEST(permutation, global_transpose) {
  EXPECT_EQ(Permutation::global_transpose(2).images(), (std::vector<int>{2, 1, 4, 3}));
  EXPECT_EQ(Permutation::global_transpose(1).images(), (std::vector<int>{2, 1}));
  EXPECT_EQ(Permutation::global_transpose(3).images(), (std::vector<int>{2, 1, 4, 3, 6, 5}));
  EXPECT_THROW(Permutation::global_transpose(-1), std::invalid_argument);
}

TEST(permutation, rejects_non_bijections) {
  EXPECT_THROW(word({1, 1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(word({1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(word({0, 1}), std::invalid_argument);
  EXPECT_THROW(word({1, 5, 2, 3}), std::invalid_argument);
  EXPECT_THROW(word({}), std::invalid_argument);
}

TEST(permutation, compose_basics) {
  const auto tau = Permutation::global_transpose(2);
  const auto sigma = word({3, 1, 4, 2});
  EXPECT_EQ(compose(sigma, Permutation::identity(2)), sigma);
  EXPECT_EQ(compose(Permutation::identity(2), sigma), sigma);
  EXPECT_EQ(compose(tau, tau), Permutation::identity(2));
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
  // result(k) = second(first(k)): 2 -> 2 -> 3, 3 -> 4 -> 4, 4 -> 3 -> 2
  EXPECT_EQ(compose(transposition(3, 4, 2), transposition(2, 3, 2)), word({1, 3, 4, 2}));
  EXPECT_EQ(compose(transposition(2, 3, 2), transposition(3, 4, 2)), word({1, 4, 2, 3}));
}

TEST(permutation, inverse) {
  EXPECT_EQ(Permutation::identity(3).inverse(), Permutation::identity(3));
  EXPECT_EQ(Permutation::global_transpose(3).inverse(), Permutation::global_transpose(3));
  EXPECT_EQ(word({2, 3, 1, 4}).inverse(), word({3, 1, 2, 4}));
}

TEST(permutation, transpositions_and_cycles) {
  EXPECT_EQ(transposition(3, 4, 2), word({1, 2, 4, 3}));
  EXPECT_EQ(transposition(2, 3, 2), word({1, 3, 2, 4}));
  EXPECT_EQ(Permutation::global_transpose(2).cycles(), (std::vector<std::vector<int>>{{1, 2}, {3, 4}}));
  EXPECT_EQ(word({2, 3, 1, 4}).cycle_string(), "(1,2,3)");
  EXPECT_EQ(Permutation::identity(2).cycle_string(), "()");
  EXPECT_EQ(word({1, 3, 2, 4}).word_string(), "[1 3 2 4]");

  const std::vector<std::pair<int, int>> overlapping{{1, 2}, {2, 3}};
  EXPECT_THROW(Permutation::from_transpositions(overlapping, 2), std::invalid_argument);
  const std::vector<std::pair<int, int>> out_of_range{{1, 5}};
  EXPECT_THROW(Permutation::from_transpositions(out_of_range, 2), std::invalid_argument);
  const std::vector<std::pair<int, int>> degenerate{{2, 2}};
  EXPECT_THROW(Permutation::from_transpositions(degenerate, 2), std::invalid_argument);
}

TEST(permutation, group_laws_exhaustive_r1) {
  const std::vector<Permutation> all{word({1, 2}), word({2, 1})};
  for (const auto &a : all) {
    EXPECT_EQ(compose(a, a.inverse()), Permutation::identity(1));
    EXPECT_EQ(compose(a.inverse(), a), Permutation::identity(1));
    for (const auto &b : all) {
      for (const auto &c : all) EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    }
  }
}

TEST(permutation, group_laws_randomized) {
  std::mt19937_64 rng(7);
  for (int r = 1; r <= 8; ++r) {
    const auto id = Permutation::identity(r);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_permutation(r, rng), b = random_permutation(r, rng), c = random_permutation(r, rng);
      ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
      ASSERT_EQ(compose(a, id), a);
      ASSERT_EQ(compose(id, a), a);
      ASSERT_EQ(compose(a, a.inverse()), id);
      ASSERT_EQ(compose(a.inverse(), a), id);
    }
  }
}

TEST(permutation, composition_law_matches_matrix_maps) {
  // Exhaustive at r = 1, 2; every pair at r = 3 against one random matrix
  // plus fresh matrices for a random subset.
  std::mt19937_64 rng(11);
  for (int r = 1; r <= 3; ++r) {
    const auto a = test::random_complex_matrix(1 << r, rng);
    std::vector<Permutation> perms;
    std::vector<int> w(2 * r);
    for (int k = 0; k < 2 * r; ++k) w[k] = k + 1;
    do perms.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    std::vector<ComplexMatrix> once;
    for (const auto &s : perms) once.push_back(apply_criterion(a, 2, s));
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (const auto &mu : perms) {
        ASSERT_EQ(apply_criterion(once[i], 2, mu), apply_criterion(a, 2, compose(perms[i], mu)))
            << perms[i].word_string() << " then " << mu.word_string();
      }
    }
  }
}

TEST(permutation, norm_preserving_examples) {
  EXPECT_TRUE(is_norm_preserving(Permutation::global_transpose(2)));
  EXPECT_TRUE(is_norm_preserving(Permutation::global_transpose(5)));
  EXPECT_FALSE(is_norm_preserving(word({1, 3, 2, 4})));
  EXPECT_TRUE(is_norm_preserving(word({3, 2, 1, 4})));
  EXPECT_FALSE(is_norm_preserving(word({1, 2, 4, 3})));
}

TEST(permutation, norm_preserving_matches_generator_closure) {
  for (int r = 1; r <= 3; ++r) {
    const auto closure = norm_preserving_closure(r);
    const std::set<Permutation> closed(closure.begin(), closure.end());
    std::size_t factorial = 1;
    for (int k = 2; k <= r; ++k) factorial *= k;
    EXPECT_EQ(closure.size(), 2 * factorial * factorial) << "r=" << r;
    for (const auto &sigma : all_permutations(r)) {
      EXPECT_EQ(is_norm_preserving(sigma), closed.contains(sigma)) << sigma.word_string();
    }
  }
}

TEST(permutation, norm_preserving_group_keeps_operator_norms) {
  std::mt19937_64 rng(3);
  for (int r = 1; r <= 3; ++r) {
    for (const auto &nu : norm_preserving_closure(r)) {
      const auto a = test::random_complex_matrix(1 << r, rng);
      ASSERT_NEAR(trace_norm(apply_criterion(a, 2, nu)), trace_norm(a), 1e-10 * trace_norm(a));
    }
  }
}

TEST(permutation, dependent_examples) {
  EXPECT_TRUE(dependent(transposition(1, 4, 2), transposition(2, 3, 2)));
  EXPECT_FALSE(dependent(transposition(3, 4, 2), transposition(2, 3, 2)));
  const auto sigma = word({2, 4, 1, 3});
  EXPECT_TRUE(dependent(sigma, sigma));
  EXPECT_THROW(dependent(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST(permutation, dependent_is_an_equivalence) {
  for (int r = 1; r <= 2; ++r) {
    const auto perms = all_permutations(r);
    for (const auto &a : perms) {
      ASSERT_TRUE(dependent(a, a));
      for (const auto &b : perms) {
        const bool ab = dependent(a, b);
        ASSERT_EQ(ab, dependent(b, a));
        if (!ab) continue;
        for (const auto &c : perms) {
          if (dependent(b, c)) ASSERT_TRUE(dependent(a, c));
        }
      }
    }
  }
  std::mt19937_64 rng(5);
  for (int r = 3; r <= 6; ++r) {
    const auto tau = Permutation::global_transpose(r);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_permutation(r, rng);
      // Build b, c inside a's class so transitivity is exercised, not vacuous.
      const auto b = compose(rng() % 2 ? compose(tau, a) : a, random_norm_preserving(r, rng));
      const auto c = compose(rng() % 2 ? compose(tau, b) : b, random_norm_preserving(r, rng));
      ASSERT_TRUE(dependent(a, b));
      ASSERT_TRUE(dependent(b, a));
      ASSERT_TRUE(dependent(b, c));
      ASSERT_TRUE(dependent(a, c));
      const auto d = random_permutation(r, rng);
      ASSERT_EQ(dependent(a, d), dependent(d, a));
    }
  }
}

TEST(permutation, dependent_on_transposed_composites) {
  std::mt19937_64 rng(9);
  for (int r = 1; r <= 8; ++r) {
    const auto tau = Permutation::global_transpose(r);
    for (int trial = 0; trial < 40; ++trial) {
      const auto sigma = random_permutation(r, rng);
      EXPECT_TRUE(dependent(sigma, compose(sigma, tau)));  // transpose afterwards
      EXPECT_TRUE(dependent(sigma, compose(tau, sigma)));  // transpose first
    }
  }
}

TEST(permutation, t_dependence_preserves_norms_of_arbitrary_operators) {
  // The norm-preserving branch of `dependent` must give equal norms on every
  // operator, not only on states.
  std::mt19937_64 rng(13);
  const auto perms = all_permutations(2);
  const auto a = test::random_complex_matrix(4, rng);
  for (const auto &sigma : perms) {
    for (const auto &mu : perms) {
      if (!is_norm_preserving(compose(sigma.inverse(), mu))) continue;
      EXPECT_NEAR(trace_norm(apply_criterion(a, 2, sigma)), trace_norm(apply_criterion(a, 2, mu)), 1e-10)
          << sigma.word_string() << " vs " << mu.word_string();
    }
  }
}
