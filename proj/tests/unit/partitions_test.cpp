#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lclab/partitions.hpp"
#include "lclab/series.hpp"
#include "lclab/triangle.hpp"
#include "oracles.hpp"

using lclab::Partition;
using lclab::Poly;
using lclab::Rational;

namespace {

// Hooks straight from the diagram: arm + leg + 1 for each cell.
lclab::HookMultiset diagram_hooks(const Partition& parts) {
  const Partition conj = lclab::conjugate(parts);
  lclab::HookMultiset hooks;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (unsigned j = 0; j < parts[i]; ++j) hooks.push_back(parts[i] - j - 1 + conj[j] - i - 1 + 1);
  }
  std::sort(hooks.rbegin(), hooks.rend());
  return hooks;
}

}  // namespace

TEST(Partitions, Counts) {
  EXPECT_EQ(lclab::partitions_of(5).size(), 7u);
  const auto empty = lclab::partitions_of(0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());

  const std::vector<Rational> exps(30, Rational(-1));
  const auto euler = lclab::euler_product(exps, 30);
  std::size_t count = 0;
  lclab::for_each_partition(30, [&](std::span<const unsigned>) { ++count; });
  EXPECT_EQ(Rational(static_cast<long>(count)), euler[30]);
  EXPECT_EQ(count, 5604u);
}

TEST(Partitions, StreamIsDescendingLexAndDistinct) {
  for (unsigned n = 1; n <= 18; ++n) {
    std::set<Partition> seen;
    Partition prev;
    lclab::for_each_partition(n, [&](std::span<const unsigned> parts) {
      Partition p(parts.begin(), parts.end());
      ASSERT_TRUE(std::is_sorted(p.rbegin(), p.rend()));
      unsigned total = 0;
      for (unsigned v : p) total += v;
      ASSERT_EQ(total, n);
      if (!prev.empty()) ASSERT_TRUE(p < prev);
      ASSERT_TRUE(seen.insert(p).second);
      prev = p;
    });
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(lclab::oracle::partition_counts(n)[n].get_ui()));
  }
}

TEST(Partitions, HookLengths) {
  EXPECT_EQ(lclab::hook_lengths(Partition{1}), (lclab::HookMultiset{1}));
  EXPECT_EQ(lclab::hook_lengths(Partition{2, 1}), (lclab::HookMultiset{3, 1, 1}));
  EXPECT_EQ(lclab::hook_lengths(Partition{2}), (lclab::HookMultiset{2, 1}));
  for (unsigned n = 1; n <= 14; ++n) {
    for (const Partition& p : lclab::partitions_of(n)) {
      const auto hooks = lclab::hook_lengths(p);
      ASSERT_EQ(hooks, diagram_hooks(p));
      ASSERT_EQ(hooks, lclab::hook_lengths(lclab::conjugate(p)));
      ASSERT_EQ(hooks.size(), n);
      ASSERT_TRUE(std::all_of(hooks.begin(), hooks.end(), [](unsigned h) { return h >= 1; }));
      ASSERT_EQ(lclab::conjugate(lclab::conjugate(p)), p);
    }
  }
}

TEST(NekrasovOkounkov, SmallPolynomials) {
  EXPECT_EQ(lclab::nekrasov_okounkov_poly(0), Poly::constant(1));
  EXPECT_EQ(lclab::nekrasov_okounkov_poly(1), Poly({Rational(1), Rational(1)}));
  const Poly q2({Rational(2), lclab::make_rational(5, 2), lclab::make_rational(1, 2)});
  EXPECT_EQ(lclab::nekrasov_okounkov_poly(2), q2);

  const auto darcais = lclab::build_triangle(lclab::ArithFn::sigma(), lclab::HKind::kId, 2);
  EXPECT_EQ(lclab::taylor_shift(lclab::row_poly(darcais, 2), Rational(1)), q2);
}

TEST(NekrasovOkounkov, ValueAtZeroAndPositivity) {
  const auto p = lclab::oracle::partition_counts(16);
  for (unsigned n = 0; n <= 16; ++n) {
    const Poly q = lclab::nekrasov_okounkov_poly(n);
    EXPECT_EQ(lclab::evaluate(q, Rational(0)), Rational(p[n]));
    EXPECT_EQ(q.degree(), static_cast<long>(n));
    EXPECT_EQ(q[n], Rational(1) / Rational(lclab::factorial(n)));
    for (const Rational& c : q.coefficients()) EXPECT_GT(c, 0);
  }
}

TEST(NekrasovOkounkov, IdentityHolds) {
  EXPECT_TRUE(lclab::check_no_identity(10).pass);
  EXPECT_TRUE(lclab::check_no_identity(16, 2).pass);
  EXPECT_EQ(lclab::nekrasov_okounkov_poly(12, 1), lclab::nekrasov_okounkov_poly(12, 3));
}
