#include <doctest.h>

#include <cmath>
#include <numeric>

#include "core/graph_rank.hpp"
#include "support/fixtures.hpp"
#include "support/rank_oracle.hpp"

using namespace care;
using care::test::corpus_from_text;
using care::test::random_graph_instance;
using care::test::rank_oracle;

namespace {

double score_sum(const std::vector<double>& scores) {
  return std::accumulate(scores.begin(), scores.end(), 0.0);
}

}  // namespace

TEST_CASE("build_graph: one reader, one article") {
  const Corpus corpus = corpus_from_text("R1\tA1\n");
  const RankGraph graph = build_baseline_graph(corpus);
  CHECK(graph.vertex_count() == 2);
  CHECK(graph.researcher_vertex_count() == 1);
  CHECK(graph.article_vertex_count() == 1);
  CHECK(graph.edge_count() == 1);
}

TEST_CASE("build_graph rejects an empty training corpus") {
  CHECK_THROWS_AS(build_baseline_graph(Corpus{}), EmptyInputError);
}

TEST_CASE("build_graph: edge count is readings plus usable relation pairs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto instance = random_graph_instance(seed);
    // the generator gives every article a reader, so no pair is dropped
    CHECK(instance.graph.edge_count() ==
          instance.corpus.reading_count() + instance.relations.pair_count());
  }
}

TEST_CASE("build_graph: unreadable, unrelated articles stay out") {
  // a2 has no readers and no relations; a3 hangs onto a1 via a relation
  Corpus::Builder builder;
  builder.add_reading("R1", "a1");
  builder.add_article("a2");
  builder.add_article("a3");
  const Corpus with_isolated = builder.build();

  const ArticleRelationSet relations =
      ArticleRelationSet::from_pairs(3, {{0, 2}}, 1);
  const RankGraph graph = build_graph(with_isolated, relations);

  CHECK(graph.article_vertex(0).has_value());
  CHECK(!graph.article_vertex(1).has_value());  // dangling, excluded
  CHECK(graph.article_vertex(2).has_value());   // rescued by the relation
  CHECK(graph.vertex_count() == 3);
}

TEST_CASE("build_graph: relation chains do not pull in unread articles") {
  // a1 read; a1-a2 and a2-a3 related; a3 only touches unread a2
  Corpus::Builder builder;
  builder.add_reading("R1", "a1");
  builder.add_article("a2");
  builder.add_article("a3");
  const Corpus corpus = builder.build();
  const ArticleRelationSet relations =
      ArticleRelationSet::from_pairs(3, {{0, 1}, {1, 2}}, 1);
  const RankGraph graph = build_graph(corpus, relations);
  CHECK(graph.article_vertex(1).has_value());
  CHECK(!graph.article_vertex(2).has_value());
  // a2 keeps only its edge to a1, so its row still normalizes
  CHECK(graph.neighbors(*graph.article_vertex(1)).size() == 1);
}

TEST_CASE("transition_matrix: researcher rows spread evenly over readings") {
  const Corpus corpus = corpus_from_text("R1\ta1\nR1\ta2\nR1\ta3\n");
  const RankGraph graph = build_baseline_graph(corpus);
  const TransitionMatrix matrix = transition_matrix(graph);
  const int rv = *graph.researcher_vertex(0);
  for (std::size_t k = matrix.row_offsets[rv]; k < matrix.row_offsets[rv + 1]; ++k) {
    CHECK(matrix.values[k] == 1.0 / 3.0);
  }
}

TEST_CASE("transition_matrix: article rows share one denominator") {
  // a1 has readers R1, R2 and one related article
  const Corpus corpus = corpus_from_text("R1\ta1\nR2\ta1\nR1\ta2\n");
  const ArticleRelationSet relations =
      ArticleRelationSet::from_pairs(2, {{0, 1}}, 1);
  const RankGraph graph = build_graph(corpus, relations);
  const TransitionMatrix matrix = transition_matrix(graph);
  const int av = *graph.article_vertex(0);
  CHECK(matrix.row_offsets[av + 1] - matrix.row_offsets[av] == 3);
  for (std::size_t k = matrix.row_offsets[av]; k < matrix.row_offsets[av + 1]; ++k) {
    CHECK(matrix.values[k] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
}

TEST_CASE("transition_matrix rows sum to one") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto instance = random_graph_instance(seed);
    for (int v = 0; v < instance.matrix.vertex_count; ++v) {
      CHECK(std::abs(instance.matrix.row_sum(v) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("transition_matrix: researchers never step to researchers") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto instance = random_graph_instance(seed);
    const auto& matrix = instance.matrix;
    for (int v = 0; v < matrix.researcher_vertices; ++v) {
      for (std::size_t k = matrix.row_offsets[v]; k < matrix.row_offsets[v + 1]; ++k) {
        CHECK(matrix.cols[k] >= matrix.researcher_vertices);
      }
    }
  }
}

TEST_CASE("rank: two-vertex chain reaches the closed-form fixed point") {
  const Corpus corpus = corpus_from_text("R1\tA1\n");
  const RankGraph graph = build_baseline_graph(corpus);
  const TransitionMatrix matrix = transition_matrix(graph);

  const ScoreVector iterative = rank(matrix, 0, 0.8, 200);
  CHECK(iterative.scores[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-6));
  CHECK(iterative.scores[1] == doctest::Approx(4.0 / 9.0).epsilon(1e-6));

  const ScoreVector direct = rank_oracle(matrix, 0, 0.8);
  CHECK(direct.scores[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-9));
  CHECK(direct.scores[1] == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
}

TEST_CASE("rank: tiny alpha keeps nearly all mass at the source") {
  const auto instance = random_graph_instance(4);
  const ScoreVector scores = rank(instance.matrix, 0, 0.0001, 200);
  CHECK(scores.scores[0] == doctest::Approx(1.0).epsilon(1e-3));
  for (std::size_t v = 1; v < scores.scores.size(); ++v) {
    CHECK(scores.scores[v] < 1e-3);
  }
}

TEST_CASE("rank: mass is conserved after every step") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto instance = random_graph_instance(seed);
    for (const double alpha : {0.2, 0.5, 0.8}) {
      RestartWalker walker(instance.matrix, 0, alpha);
      for (int step = 0; step < 100; ++step) {
        walker.step();
        CHECK(std::abs(score_sum(walker.scores()) - 1.0) <= 1e-9);
      }
    }
  }
}

TEST_CASE("rank: sparse steps match the dense update loop") {
  // reference: tmp(y) = sum_x alpha * score(x) * T(x, y), then restart mass
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto instance = random_graph_instance(seed);
    const auto& matrix = instance.matrix;
    const auto n = static_cast<std::size_t>(matrix.vertex_count);

    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t k = matrix.row_offsets[x]; k < matrix.row_offsets[x + 1]; ++k) {
        dense[x][static_cast<std::size_t>(matrix.cols[k])] = matrix.values[k];
      }
    }

    const double alpha = 0.8;
    std::vector<double> reference(n, 0.0);
    reference[0] = 1.0;
    RestartWalker walker(matrix, 0, alpha);
    for (int step = 0; step < 30; ++step) {
      std::vector<double> next(n, 0.0);
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
          next[y] += alpha * reference[x] * dense[x][y];
        }
      }
      next[0] += 1.0 - alpha;
      reference.swap(next);

      walker.step();
      for (std::size_t v = 0; v < n; ++v) {
        CHECK(std::abs(walker.scores()[v] - reference[v]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("rank: iterative walk matches the direct solve") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto instance = random_graph_instance(seed);
    for (const double alpha : {0.2, 0.5, 0.8}) {
      const ScoreVector iterative = rank(instance.matrix, 0, alpha, 500);
      const ScoreVector direct = rank_oracle(instance.matrix, 0, alpha);
      for (std::size_t v = 0; v < iterative.scores.size(); ++v) {
        CHECK(std::abs(iterative.scores[v] - direct.scores[v]) <= 1e-8);
      }
    }
  }
}

TEST_CASE("rank: symmetric complete bipartite graph, symmetric scores") {
  // two researchers both reading both articles
  const Corpus corpus = corpus_from_text("R1\ta1\nR1\ta2\nR2\ta1\nR2\ta2\n");
  const RankGraph graph = build_baseline_graph(corpus);
  const TransitionMatrix matrix = transition_matrix(graph);

  const ScoreVector from_first = rank_oracle(matrix, 0, 0.5);
  const ScoreVector from_second = rank_oracle(matrix, 1, 0.5);
  // the articles are interchangeable from either source
  CHECK(from_first.scores[2] == doctest::Approx(from_first.scores[3]).epsilon(1e-12));
  // swapping the source mirrors the researcher scores
  CHECK(from_first.scores[0] == doctest::Approx(from_second.scores[1]).epsilon(1e-12));
  CHECK(from_first.scores[1] == doctest::Approx(from_second.scores[0]).epsilon(1e-12));
}

TEST_CASE("rank: disconnected components stay at exactly zero") {
  const Corpus corpus = corpus_from_text("R1\ta1\nR2\ta2\n");
  const RankGraph graph = build_baseline_graph(corpus);
  const TransitionMatrix matrix = transition_matrix(graph);
  RestartWalker walker(matrix, *graph.researcher_vertex(0), 0.8);
  for (int step = 0; step < 50; ++step) {
    walker.step();
    CHECK(walker.scores()[*graph.researcher_vertex(1)] == 0.0);
    CHECK(walker.scores()[*graph.article_vertex(1)] == 0.0);
  }
}

TEST_CASE("rank validates its inputs") {
  const auto instance = random_graph_instance(1);
  CHECK_THROWS_AS(rank(instance.matrix, 0, 0.0, 10), ConfigError);
  CHECK_THROWS_AS(rank(instance.matrix, 0, 1.0, 10), ConfigError);
  CHECK_THROWS_AS(rank(instance.matrix, 0, 0.5, 0), ConfigError);
  // article vertices cannot seed the walk
  CHECK_THROWS_AS(rank(instance.matrix, instance.matrix.researcher_vertices, 0.5, 10),
                  InvalidArgumentError);
  CHECK_THROWS_AS(rank(instance.matrix, -1, 0.5, 10), InvalidArgumentError);
}

TEST_CASE("top_n: zero scores fall back to index order") {
  const Corpus corpus = corpus_from_text("R1\ta1\nR2\ta2\nR2\ta3\nR2\ta4\nR2\ta5\n");
  const RankGraph graph = build_baseline_graph(corpus);
  ScoreVector scores;
  scores.scores.assign(static_cast<std::size_t>(graph.vertex_count()), 0.0);
  scores.source = *graph.researcher_vertex(0);

  const RecommendationList list = top_n(graph, scores, 0, corpus, 3);
  REQUIRE(list.entries.size() == 3);
  CHECK(corpus.article_token(list.entries[0].article) == "a2");
  CHECK(corpus.article_token(list.entries[1].article) == "a3");
  CHECK(corpus.article_token(list.entries[2].article) == "a4");
}

TEST_CASE("top_n: a researcher who read everything gets nothing") {
  const Corpus corpus = corpus_from_text("R1\ta1\nR1\ta2\n");
  const RankGraph graph = build_baseline_graph(corpus);
  const TransitionMatrix matrix = transition_matrix(graph);
  const ScoreVector scores = rank(matrix, 0, 0.8, 50);
  CHECK(top_n(graph, scores, 0, corpus, 5).entries.empty());
}

TEST_CASE("top_n: read articles are excluded, the rest sort by score") {
  const Corpus corpus = corpus_from_text("r1\ta3\nr2\ta1\nr2\ta2\nr2\ta3\n");
  const RankGraph graph = build_baseline_graph(corpus);
  ScoreVector scores;
  scores.scores.assign(static_cast<std::size_t>(graph.vertex_count()), 0.0);
  scores.scores[static_cast<std::size_t>(*graph.article_vertex(*corpus.find_article("a1")))] = 0.3;
  scores.scores[static_cast<std::size_t>(*graph.article_vertex(*corpus.find_article("a2")))] = 0.5;
  scores.scores[static_cast<std::size_t>(*graph.article_vertex(*corpus.find_article("a3")))] = 0.9;

  const RecommendationList list =
      top_n(graph, scores, *corpus.find_researcher("r1"), corpus, 2);
  REQUIRE(list.entries.size() == 2);
  CHECK(corpus.article_token(list.entries[0].article) == "a2");
  CHECK(corpus.article_token(list.entries[1].article) == "a1");
}

TEST_CASE("top_n lists are sorted, tie-broken by index, and unread") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto instance = random_graph_instance(seed);
    for (Index r = 0; r < instance.corpus.researcher_count(); ++r) {
      const int source = *instance.graph.researcher_vertex(r);
      const ScoreVector scores = rank(instance.matrix, source, 0.8, 100);
      const RecommendationList list =
          top_n(instance.graph, scores, r, instance.corpus, 5);
      for (std::size_t i = 0; i < list.entries.size(); ++i) {
        CHECK(!instance.corpus.has_reading(r, list.entries[i].article));
        if (i == 0) continue;
        const auto& prev = list.entries[i - 1];
        const auto& here = list.entries[i];
        CHECK(prev.score >= here.score);
        if (prev.score == here.score) CHECK(prev.article < here.article);
      }
    }
  }
}

TEST_CASE("top_n rejects lengths below one") {
  const Corpus corpus = corpus_from_text("R1\ta1\n");
  const RankGraph graph = build_baseline_graph(corpus);
  ScoreVector scores;
  scores.scores.assign(2, 0.0);
  CHECK_THROWS_AS(top_n(graph, scores, 0, corpus, 0), ConfigError);
}

TEST_CASE("an article reachable only over a relation edge gains score") {
  Corpus::Builder builder;
  builder.add_reading("R1", "A1");
  builder.add_article("A2");
  const Corpus corpus = builder.build();
  const ArticleRelationSet relations =
      ArticleRelationSet::from_pairs(2, {{0, 1}}, 1);

  const RankGraph care_graph = build_graph(corpus, relations);
  const TransitionMatrix care_matrix = transition_matrix(care_graph);
  RestartWalker walker(care_matrix, *care_graph.researcher_vertex(0), 0.8);
  walker.step();
  walker.step();
  walker.step();
  ScoreVector after_three;
  after_three.scores = walker.scores();
  CHECK(article_scores(care_graph, after_three)[1] > 0.0);

  // the baseline cannot reach it at all
  const RankGraph baseline_graph = build_baseline_graph(corpus);
  const TransitionMatrix baseline_matrix = transition_matrix(baseline_graph);
  const ScoreVector baseline_scores = rank(baseline_matrix, 0, 0.8, 100);
  CHECK(article_scores(baseline_graph, baseline_scores)[1] == 0.0);
}

TEST_CASE("empty relation set makes both pipelines identical") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto instance = random_graph_instance(seed);
    const ArticleRelationSet none =
        ArticleRelationSet::empty(instance.corpus.article_count());
    for (Index r = 0; r < instance.corpus.researcher_count(); ++r) {
      const RecommendationList care_list =
          recommend(instance.corpus, &none, r, 0.8, 100, 5);
      const RecommendationList baseline_list =
          recommend(instance.corpus, nullptr, r, 0.8, 100, 5);
      REQUIRE(care_list.entries.size() == baseline_list.entries.size());
      for (std::size_t i = 0; i < care_list.entries.size(); ++i) {
        CHECK(care_list.entries[i].article == baseline_list.entries[i].article);
        CHECK(care_list.entries[i].score == baseline_list.entries[i].score);
      }
    }
  }
}

TEST_CASE("recommend validates the researcher") {
  const Corpus corpus = corpus_from_text("R1\tA1\n");
  CHECK_THROWS_AS(recommend(corpus, nullptr, 7, 0.8, 100, 5), NotFoundError);
}
