#include "circdist/distinguishing.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"

namespace circdist {
namespace {

std::vector<std::size_t> sequence(std::initializer_list<std::size_t> values) { return values; }

// First labeling in restricted-growth-string order (labels <= r) that the
// brute-force oracle accepts, or empty.
std::vector<std::size_t> least_rgs_witness(const Graph& g, std::size_t r) {
  const auto group = oracle::all_automorphisms(g);
  const std::size_t n = g.order();
  std::vector<std::size_t> labels(n, 1);
  while (true) {
    bool rgs = true;
    std::size_t top = 0;
    for (std::size_t label : labels) {
      if (label > top + 1) rgs = false;
      top = std::max(top, label);
    }
    if (rgs && !oracle::preserved_by_some_nontrivial(group, labels)) return labels;
    // increment as a base-r number with the most significant digit first
    std::size_t pos = n;
    while (pos > 0 && labels[pos - 1] == r) labels[--pos] = 1;
    if (pos == 0) return {};
    ++labels[pos - 1];
  }
}

TEST(IsDistinguishingTest, Examples) {
  const Graph k3 = complete_graph(3);
  EXPECT_TRUE(is_distinguishing(k3, Labeling(3, {1, 2, 3})).distinguishing);

  const auto report = is_distinguishing(k3, Labeling(2, {1, 1, 2}));
  EXPECT_FALSE(report.distinguishing);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(*report.witness, Permutation::transposition(3, 0, 1));

  EXPECT_TRUE(is_distinguishing(build_cmp({2, 5}), explicit_labeling({2, 5})).distinguishing);
  EXPECT_THROW(is_distinguishing(k3, Labeling(1, {1, 1})), ValidationError);
}

TEST(ExactTest, Examples) {
  EXPECT_EQ(exact_distinguishing_number(complete_graph(4), 10).value, 4u);
  EXPECT_EQ(exact_distinguishing_number(path_graph(4), 10).value, 2u);
  EXPECT_EQ(exact_distinguishing_number(build_cmp({2, 3}), 10).value, 3u);
  EXPECT_EQ(exact_distinguishing_number(cycle_graph(4), 10).value, 3u);
  EXPECT_EQ(exact_distinguishing_number(Graph(1), 1).value, 1u);
}

TEST(ExactTest, BoundExceeded) {
  EXPECT_THROW(exact_distinguishing_number(complete_graph(5), 4), BoundExceeded);
  EXPECT_THROW(exact_distinguishing_number(complete_graph(5), 0), ValidationError);
}

TEST(ExactTest, AgreesWithBruteForceOnSmallGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::bernoulli_distribution coin(0.15 + 0.1 * (trial % 8));
    const Graph g = Graph::from_predicate(n, [&](Vertex, Vertex) { return coin(rng); });
    const ExactResult result = exact_distinguishing_number(g, n);
    EXPECT_EQ(result.value, oracle::distinguishing_number(g)) << "trial " << trial;
    EXPECT_EQ(result.witness.labels(), least_rgs_witness(g, result.value)) << "trial " << trial;
  }
}

TEST(ExactTest, WitnessIsCanonical) {
  const ExactResult k4 = exact_distinguishing_number(complete_graph(4), 4);
  EXPECT_EQ(k4.witness.labels(), sequence({1, 2, 3, 4}));
  const ExactResult p4 = exact_distinguishing_number(path_graph(4), 4);
  EXPECT_EQ(p4.witness.labels(), sequence({1, 1, 1, 2}));
}

TEST(ExactTest, ParallelMatchesSequential) {
  for (const CmpSpec spec : {CmpSpec{2, 5}, CmpSpec{1, 8}, CmpSpec{3, 3}, CmpSpec{2, 4}}) {
    const Graph g = build_cmp(spec);
    const ExactResult sequential = exact_distinguishing_number(g, g.order(), 1);
    const ExactResult parallel = exact_distinguishing_number(g, g.order(), 4);
    EXPECT_EQ(sequential.value, parallel.value);
    EXPECT_EQ(sequential.witness, parallel.witness);
  }
}

TEST(ExactTest, BlockRestrictionIsInjective) {
  for (std::size_t m = 2; m <= 5; ++m) {
    for (std::size_t p = 2; m * p <= 10; ++p) {
      const CmpSpec spec{m, p};
      const ExactResult result = exact_distinguishing_number(build_cmp(spec), spec.order());
      EXPECT_GE(result.value, m);
      for (const auto& block : module_partition(spec).blocks) {
        std::vector<std::size_t> seen;
        for (Vertex v : block) seen.push_back(result.witness[v]);
        std::sort(seen.begin(), seen.end());
        EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
      }
    }
  }
}

TEST(ExactTest, ComplementInvariance) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const Graph g = build_cmp({m, n / m});
      EXPECT_EQ(exact_distinguishing_number(g, n).value, exact_distinguishing_number(complement(g), n).value);
    }
  }
  for (const Graph& g : {path_graph(5), disjoint_union(complete_graph(3), path_graph(2))}) {
    EXPECT_EQ(exact_distinguishing_number(g, g.order()).value,
              exact_distinguishing_number(complement(g), g.order()).value);
  }
}

TEST(CmpFormulaTest, Values) {
  EXPECT_EQ(cmp_distinguishing_formula({4, 1}), 4u);
  EXPECT_EQ(cmp_distinguishing_formula({1, 6}), 2u);
  EXPECT_EQ(cmp_distinguishing_formula({2, 4}), 5u);
  EXPECT_EQ(cmp_distinguishing_formula({3, 7}), 4u);
  EXPECT_EQ(cmp_distinguishing_formula({1, 5}), 3u);
  EXPECT_EQ(cmp_distinguishing_formula({2, 2}), 3u);
  EXPECT_THROW(cmp_distinguishing_formula({2, 1}), ValidationError);
  EXPECT_THROW(cmp_distinguishing_formula({1, 2}), ValidationError);
}

TEST(CmpFormulaTest, AgreesWithOracleUpToOrderTen) {
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const CmpSpec spec{m, n / m};
      if (!in_cmp_formula_domain(spec)) continue;
      EXPECT_EQ(exact_distinguishing_number(build_cmp(spec), n).value, cmp_distinguishing_formula(spec))
          << "m=" << m << " p=" << spec.p;
    }
  }
}

TEST(MultipartiteFormulaTest, Values) {
  EXPECT_EQ(multipartite_distinguishing_formula(MultipartiteShape({{2, 2}})), 3u);
  EXPECT_EQ(multipartite_distinguishing_formula(MultipartiteShape({{4, 2}})), 5u);
  EXPECT_EQ(multipartite_distinguishing_formula(MultipartiteShape({{1, 6}})), 6u);
  EXPECT_EQ(multipartite_distinguishing_formula(MultipartiteShape::from_part_sizes({3, 2})), 3u);
  EXPECT_THROW(MultipartiteShape({{2, 1}, {3, 1}}), ValidationError);
  EXPECT_THROW(MultipartiteShape({{2, 0}}), ValidationError);
}

TEST(MultipartiteFormulaTest, AgreesWithOracle) {
  const std::vector<std::vector<std::size_t>> shapes = {{2, 2}, {2, 2, 2}, {3, 3}, {1, 1, 1}, {3, 2}, {3, 1, 1}};
  for (const auto& sizes : shapes) {
    const Graph g = complete_multipartite(sizes);
    const std::size_t formula = multipartite_distinguishing_formula(MultipartiteShape::from_part_sizes(sizes));
    EXPECT_EQ(exact_distinguishing_number(g, g.order()).value, formula);
    const Labeling witness = multipartite_witness_labeling(g);
    EXPECT_EQ(witness.distinct_count(), formula);
    EXPECT_TRUE(is_distinguishing(g, witness).distinguishing);
  }
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(4, 4), 1u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::size_t>::max());
}

TEST(ExplicitLabelingTest, PiecewiseValues) {
  EXPECT_EQ(explicit_labeling({2, 5}).labels(), sequence({1, 1, 1, 2, 2, 3, 3, 3, 3, 1}));
  const Labeling c35 = explicit_labeling({3, 5});
  EXPECT_EQ(c35[10], 4u);
  EXPECT_EQ(c35.r(), 4u);
  EXPECT_THROW(explicit_labeling({2, 4}), ValidationError);
  EXPECT_THROW(explicit_labeling({1, 7}), ValidationError);
}

TEST(ExplicitLabelingTest, MultipartiteRegime) {
  // C(2,2): parts {0,2} and {1,3} get the 2-subsets {1,2} and {1,3}
  EXPECT_EQ(explicit_labeling({2, 2}).labels(), sequence({1, 1, 2, 3}));
  // C(2,3): parts {0,3}, {1,4}, {2,5} get {1,2}, {1,3}, {2,3}
  EXPECT_EQ(explicit_labeling({2, 3}).labels(), sequence({1, 1, 2, 2, 3, 3}));
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t p = 2; p <= 3; ++p) {
      const Labeling c = explicit_labeling({m, p});
      EXPECT_EQ(c.distinct_count(), m + 1);
      EXPECT_TRUE(is_distinguishing(build_cmp({m, p}), c).distinguishing);
    }
  }
}

TEST(ExplicitLabelingTest, DistinguishingSweep) {
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t p = 5; p <= 8; ++p) {
      const Labeling c = explicit_labeling({m, p});
      EXPECT_EQ(c.distinct_count(), m + 1);
      EXPECT_TRUE(is_distinguishing(build_cmp({m, p}), c).distinguishing) << "m=" << m << " p=" << p;
    }
  }
}

TEST(SignatureTest, TableOneRows) {
  const Graph g = build_cmp({2, 5});
  const Labeling c = explicit_labeling({2, 5});
  EXPECT_EQ(neighborhood_label_signature(g, c, 0), sequence({1, 1, 2, 3}));
  EXPECT_EQ(neighborhood_label_signature(g, c, 9), sequence({1, 2, 3, 3}));
  EXPECT_TRUE(neighborhood_label_signature(Graph(3), Labeling(1, {1, 1, 1}), 1).empty());
}

TEST(SignatureTest, VertexZeroIsUniquelyAnchored) {
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t p = 5; p <= 8; ++p) {
      const CmpSpec spec{m, p};
      const Graph g = build_cmp(spec);
      const Labeling c = explicit_labeling(spec);
      std::vector<std::size_t> anchor = {1, 1, 2, 3};
      for (std::size_t label = 4; label <= m + 1; ++label) anchor.insert(anchor.end(), 2, label);
      for (Vertex v = 0; v < g.order(); ++v) {
        const bool matches = c[v] == 1 && neighborhood_label_signature(g, c, v) == anchor;
        EXPECT_EQ(matches, v == 0) << "m=" << m << " p=" << p << " v=" << v;
      }
    }
  }
}

TEST(BreakTest, Examples) {
  const CmpSpec c25{2, 5};
  const BreakResult constant = break_m_labeling(c25, Labeling(1, std::vector<std::size_t>(10, 1)));
  EXPECT_EQ(constant.construction, BreakResult::Construction::kTransposition);
  EXPECT_EQ(constant.sigma, Permutation::transposition(10, 0, 5));

  std::vector<std::size_t> rank(10);
  for (Vertex v = 0; v < 10; ++v) rank[v] = v / 5 + 1;
  const BreakResult reflection = break_m_labeling(c25, Labeling(2, rank));
  EXPECT_EQ(reflection.construction, BreakResult::Construction::kConjugatedReflection);
  EXPECT_EQ(reflection.sigma, psi(c25));
}

TEST(BreakTest, FigureTwo) {
  const CmpSpec c44{4, 4};
  const Labeling c(4, {3, 4, 3, 1, 4, 1, 2, 2, 1, 2, 4, 3, 2, 3, 1, 4});
  const BreakResult result = break_m_labeling(c44, c);
  EXPECT_EQ(result.construction, BreakResult::Construction::kConjugatedReflection);
  EXPECT_FALSE(result.sigma.is_identity());
  EXPECT_EQ(result.sigma(0) % 4, 3u);
  EXPECT_EQ(c[result.sigma(0)], c[0]);
}

TEST(BreakTest, Rejections) {
  EXPECT_THROW(break_m_labeling({2, 5}, Labeling(3, {1, 2, 3, 1, 1, 1, 1, 1, 1, 1})), ValidationError);
  EXPECT_THROW(break_m_labeling({1, 7}, Labeling(1, std::vector<std::size_t>(7, 1))), ValidationError);
  EXPECT_THROW(break_m_labeling({2, 5}, Labeling(1, {1, 1})), ValidationError);
}

TEST(BreakTest, RenamesSparseLabels) {
  // labels {3, 7} on rainbow blocks, i.e. two labels used but values exceed m
  std::vector<std::size_t> labels(10);
  for (Vertex v = 0; v < 10; ++v) labels[v] = v / 5 == 0 ? 7 : 3;
  const Labeling c(7, labels);
  const BreakResult result = break_m_labeling({2, 5}, c);
  EXPECT_TRUE(is_automorphism(build_cmp({2, 5}), result.sigma));
  EXPECT_TRUE(preserves_colors(result.sigma, c.labels()));
  EXPECT_FALSE(result.sigma.is_identity());
}

TEST(BreakTest, RandomLabelingsAreBroken) {
  std::mt19937_64 rng(11);
  for (const CmpSpec spec : {CmpSpec{2, 5}, CmpSpec{2, 6}, CmpSpec{3, 5}, CmpSpec{2, 7}, CmpSpec{3, 4}}) {
    const Graph g = build_cmp(spec);
    std::uniform_int_distribution<std::size_t> pick(1, spec.m);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::size_t> labels(spec.order());
      for (auto& label : labels) label = pick(rng);
      const Labeling c(spec.m, labels);
      const BreakResult result = break_m_labeling(spec, c);
      EXPECT_FALSE(result.sigma.is_identity());
      EXPECT_TRUE(is_automorphism(g, result.sigma));
      EXPECT_TRUE(preserves_colors(result.sigma, c.labels()));
    }
  }
}

}  // namespace
}  // namespace circdist
