// Shared fixture helpers for the test suites.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/author_relations.hpp"
#include "core/corpus.hpp"
#include "core/graph_rank.hpp"
#include "core/rng.hpp"

namespace care::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(CARE_FIXTURE_DIR) + "/" + name;
}

inline Corpus load_fixture_corpus(const std::string& readings_name,
                                  const std::string& authorships_name = {}) {
  std::ifstream readings(fixture_path(readings_name));
  const auto raw_readings = load_reading_relations(readings, readings_name);
  std::vector<RawAuthorship> raw_authorships;
  if (!authorships_name.empty()) {
    std::ifstream authorships(fixture_path(authorships_name));
    raw_authorships = load_authorships(authorships, authorships_name);
  }
  return make_corpus(raw_readings, raw_authorships);
}

inline Corpus corpus_from_text(const std::string& readings_text,
                               const std::string& authorships_text = {}) {
  std::istringstream readings(readings_text);
  const auto raw_readings = load_reading_relations(readings, "<readings>");
  std::vector<RawAuthorship> raw_authorships;
  if (!authorships_text.empty()) {
    std::istringstream authorships(authorships_text);
    raw_authorships = load_authorships(authorships, "<authorships>");
  }
  return make_corpus(raw_readings, raw_authorships);
}

// Seeded random instance for walker/oracle checks: every researcher reads at
// least one article, every article has at least one reader, and article pairs
// are related with the given density. n + m stays small enough for dense
// reference computations.
struct RandomGraphInstance {
  Corpus corpus;
  ArticleRelationSet relations;
  RankGraph graph;
  TransitionMatrix matrix;
  int researchers = 0;
  int articles = 0;
};

inline RandomGraphInstance random_graph_instance(std::uint64_t seed,
                                                 double edge_density = 0.2) {
  Rng rng(sub_seed(seed, "test-graph"));
  const int n = 2 + static_cast<int>(rng.bounded(9));        // 2..10
  const int m = 2 + static_cast<int>(rng.bounded(
                        static_cast<std::uint64_t>(30 - n - 2 - 1)));  // n+m <= 30

  const auto researcher_token = [](int r) { return "r" + std::to_string(r); };
  const auto article_token = [](int a) { return "a" + std::to_string(a); };

  Corpus::Builder builder;
  for (int r = 0; r < n; ++r) builder.add_researcher(researcher_token(r));
  for (int a = 0; a < m; ++a) builder.add_article(article_token(a));
  for (int r = 0; r < n; ++r) {
    builder.add_reading(researcher_token(r),
                        article_token(static_cast<int>(rng.bounded(m))));
    for (int a = 0; a < m; ++a) {
      if (rng.unit() < edge_density) {
        builder.add_reading(researcher_token(r), article_token(a));
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    builder.add_reading(researcher_token(static_cast<int>(rng.bounded(n))),
                        article_token(a));
  }

  std::vector<std::pair<Index, Index>> pairs;
  for (Index a = 0; a < m; ++a) {
    for (Index b = a + 1; b < m; ++b) {
      if (rng.unit() < edge_density) pairs.emplace_back(a, b);
    }
  }

  RandomGraphInstance instance;
  instance.corpus = builder.build();
  instance.relations = ArticleRelationSet::from_pairs(m, pairs, 1);
  instance.graph = build_graph(instance.corpus, instance.relations);
  instance.matrix = transition_matrix(instance.graph);
  instance.researchers = n;
  instance.articles = m;
  return instance;
}

}  // namespace care::test
