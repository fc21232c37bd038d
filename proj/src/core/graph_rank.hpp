/*
 * Copyright 2026 The CARE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "core/author_relations.hpp"
#include "core/corpus.hpp"

namespace care {

// Heterogeneous ranking graph: researcher vertices first, article vertices
// after them. Researchers enter with their training readings; an article
// enters when it has a reader or a common-author edge to a read article, so
// no vertex is ever dangling.
class RankGraph {
 public:
  RankGraph() = default;

  int researcher_vertex_count() const { return researcher_vertices_; }
  int article_vertex_count() const { return article_vertices_; }
  int vertex_count() const { return researcher_vertices_ + article_vertices_; }

  std::optional<int> researcher_vertex(Index researcher) const;
  std::optional<int> article_vertex(Index article) const;
  Index researcher_of_vertex(int v) const;
  Index article_of_vertex(int v) const;
  bool is_researcher_vertex(int v) const {
    return v >= 0 && v < researcher_vertices_;
  }

  /// Neighbor vertices, sorted. Researcher rows hold read articles; article
  /// rows hold readers plus common-author neighbors.
  const std::vector<int>& neighbors(int v) const;

  std::size_t edge_count() const { return edge_count_; }

  /// Corpus article count of the corpus this graph was built from.
  Index corpus_article_count() const { return corpus_article_count_; }

 private:
  friend RankGraph build_graph(const Corpus&, const ArticleRelationSet&);

  int researcher_vertices_ = 0;
  int article_vertices_ = 0;
  Index corpus_article_count_ = 0;
  std::vector<int> researcher_to_vertex_;  // corpus researcher -> vertex or -1
  std::vector<int> article_to_vertex_;     // corpus article -> vertex or -1
  std::vector<Index> vertex_entity_;       // vertex -> corpus index
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Throws EmptyInputError when train carries no readings.
RankGraph build_graph(const Corpus& train, const ArticleRelationSet& relations);

/// The no-common-author-relations pipeline: readings only.
RankGraph build_baseline_graph(const Corpus& train);

// Row-stochastic transition structure in CSR form. A vertex moves to each of
// its neighbors with equal probability, regardless of the neighbor's type.
struct TransitionMatrix {
  int vertex_count = 0;
  int researcher_vertices = 0;
  std::vector<std::size_t> row_offsets;
  std::vector<int> cols;
  std::vector<double> values;

  double row_sum(int v) const;
};

TransitionMatrix transition_matrix(const RankGraph& graph);

struct ScoreVector {
  std::vector<double> scores;  // one entry per graph vertex
  int source = -1;
  double alpha = 0.0;
  int steps_run = 0;
};

// One restart-walk state: per step the whole score mass diffuses along the
// transition matrix scaled by alpha, and the remaining 1 - alpha returns to
// the source. Total mass stays 1 after every step.
class RestartWalker {
 public:
  RestartWalker(const TransitionMatrix& matrix, int source_vertex, double alpha);

  void step();
  const std::vector<double>& scores() const { return scores_; }
  int steps() const { return steps_; }
  /// Max-norm change of the most recent step.
  double last_delta() const { return last_delta_; }

 private:
  const TransitionMatrix* matrix_;
  std::vector<double> scores_;
  std::vector<double> next_;
  int source_;
  double alpha_;
  int steps_ = 0;
  double last_delta_ = 1.0;
};

/// Runs the walker for max_steps (stopping early once the max-norm step change
/// drops below convergence_tol; pass 0 to disable the early stop).
ScoreVector rank(const TransitionMatrix& matrix, int source_vertex, double alpha,
                 int max_steps, double convergence_tol = 1e-10);

/// Expands graph-vertex article scores into corpus article space; articles
/// outside the graph score 0.
std::vector<double> article_scores(const RankGraph& graph, const ScoreVector& scores);

struct Recommendation {
  Index article = -1;
  double score = 0.0;
};

struct RecommendationList {
  Index researcher = -1;
  std::vector<Recommendation> entries;  // scores non-increasing, ties by index
};

/// Top-N unread articles over the whole corpus article universe.
RecommendationList top_n(const RankGraph& graph, const ScoreVector& scores,
                         Index researcher, const Corpus& train, int n);

// End-to-end convenience: build graph, rank, pick top-N. Pass relations as
// nullptr for the baseline pipeline.
RecommendationList recommend(const Corpus& train, const ArticleRelationSet* relations,
                             Index researcher, double alpha, int max_steps, int n);

}  // namespace care
