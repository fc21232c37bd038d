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

#include "core/graph_rank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace care {

std::optional<int> RankGraph::researcher_vertex(Index researcher) const {
  if (researcher < 0 ||
      static_cast<std::size_t>(researcher) >= researcher_to_vertex_.size()) {
    return std::nullopt;
  }
  const int v = researcher_to_vertex_[static_cast<std::size_t>(researcher)];
  if (v < 0) return std::nullopt;
  return v;
}

std::optional<int> RankGraph::article_vertex(Index article) const {
  if (article < 0 ||
      static_cast<std::size_t>(article) >= article_to_vertex_.size()) {
    return std::nullopt;
  }
  const int v = article_to_vertex_[static_cast<std::size_t>(article)];
  if (v < 0) return std::nullopt;
  return v;
}

Index RankGraph::researcher_of_vertex(int v) const {
  if (!is_researcher_vertex(v)) {
    throw InvalidArgumentError("vertex is not a researcher vertex");
  }
  return vertex_entity_[static_cast<std::size_t>(v)];
}

Index RankGraph::article_of_vertex(int v) const {
  if (v < researcher_vertices_ || v >= vertex_count()) {
    throw InvalidArgumentError("vertex is not an article vertex");
  }
  return vertex_entity_[static_cast<std::size_t>(v)];
}

const std::vector<int>& RankGraph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw InvalidArgumentError("vertex out of range");
  }
  return adjacency_[static_cast<std::size_t>(v)];
}

RankGraph build_graph(const Corpus& train, const ArticleRelationSet& relations) {
  if (train.reading_count() == 0) {
    throw EmptyInputError("training corpus has no readings");
  }

  const Index n = train.researcher_count();
  const Index m = train.article_count();

  std::vector<bool> article_read(static_cast<std::size_t>(m), false);
  for (Index a = 0; a < m; ++a) {
    article_read[static_cast<std::size_t>(a)] = !train.readers(a).empty();
  }
  // An unread article joins only through a common-author edge to a read one;
  // anything else would be a dangling row in the transition matrix.
  std::vector<bool> article_in(article_read);
  for (Index a = 0; a < m; ++a) {
    if (article_in[static_cast<std::size_t>(a)]) continue;
    for (const Index b : relations.neighbors(a)) {
      if (article_read[static_cast<std::size_t>(b)]) {
        article_in[static_cast<std::size_t>(a)] = true;
        break;
      }
    }
  }

  RankGraph g;
  g.corpus_article_count_ = m;
  g.researcher_to_vertex_.assign(static_cast<std::size_t>(n), -1);
  g.article_to_vertex_.assign(static_cast<std::size_t>(m), -1);

  for (Index r = 0; r < n; ++r) {
    if (!train.library(r).empty()) {
      g.researcher_to_vertex_[static_cast<std::size_t>(r)] = g.researcher_vertices_;
      g.vertex_entity_.push_back(r);
      ++g.researcher_vertices_;
    }
  }
  for (Index a = 0; a < m; ++a) {
    if (article_in[static_cast<std::size_t>(a)]) {
      g.article_to_vertex_[static_cast<std::size_t>(a)] =
          g.researcher_vertices_ + g.article_vertices_;
      g.vertex_entity_.push_back(a);
      ++g.article_vertices_;
    }
  }

  g.adjacency_.resize(static_cast<std::size_t>(g.vertex_count()));
  for (Index r = 0; r < n; ++r) {
    const int rv = g.researcher_to_vertex_[static_cast<std::size_t>(r)];
    if (rv < 0) continue;
    for (const Index a : train.library(r)) {
      const int av = g.article_to_vertex_[static_cast<std::size_t>(a)];
      g.adjacency_[static_cast<std::size_t>(rv)].push_back(av);
      g.adjacency_[static_cast<std::size_t>(av)].push_back(rv);
      ++g.edge_count_;
    }
  }
  relations.for_each_pair([&](Index a, Index b) {
    const int av = g.article_to_vertex_[static_cast<std::size_t>(a)];
    const int bv = g.article_to_vertex_[static_cast<std::size_t>(b)];
    if (av < 0 || bv < 0) return;
    g.adjacency_[static_cast<std::size_t>(av)].push_back(bv);
    g.adjacency_[static_cast<std::size_t>(bv)].push_back(av);
    ++g.edge_count_;
  });
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

RankGraph build_baseline_graph(const Corpus& train) {
  return build_graph(train, ArticleRelationSet::empty(train.article_count()));
}

double TransitionMatrix::row_sum(int v) const {
  if (v < 0 || v >= vertex_count) throw InvalidArgumentError("row out of range");
  return std::accumulate(values.begin() + static_cast<std::ptrdiff_t>(row_offsets[v]),
                         values.begin() + static_cast<std::ptrdiff_t>(row_offsets[v + 1]),
                         0.0);
}

TransitionMatrix transition_matrix(const RankGraph& graph) {
  TransitionMatrix t;
  t.vertex_count = graph.vertex_count();
  t.researcher_vertices = graph.researcher_vertex_count();
  t.row_offsets.resize(static_cast<std::size_t>(t.vertex_count) + 1, 0);

  for (int v = 0; v < t.vertex_count; ++v) {
    t.row_offsets[static_cast<std::size_t>(v) + 1] =
        t.row_offsets[static_cast<std::size_t>(v)] + graph.neighbors(v).size();
  }
  t.cols.reserve(t.row_offsets.back());
  t.values.reserve(t.row_offsets.back());
  for (int v = 0; v < t.vertex_count; ++v) {
    const auto& neighbors = graph.neighbors(v);
    if (neighbors.empty()) {
      // build_graph never emits these; a dangling row has no normalization
      throw Error("transition matrix: dangling vertex " + std::to_string(v));
    }
    const double p = 1.0 / static_cast<double>(neighbors.size());
    for (const int w : neighbors) {
      t.cols.push_back(w);
      t.values.push_back(p);
    }
  }
  return t;
}

RestartWalker::RestartWalker(const TransitionMatrix& matrix, int source_vertex,
                             double alpha)
    : matrix_(&matrix), source_(source_vertex), alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must be in (0, 1)");
  }
  if (source_vertex < 0 || source_vertex >= matrix.researcher_vertices) {
    throw InvalidArgumentError("walk source must be a researcher vertex");
  }
  scores_.assign(static_cast<std::size_t>(matrix.vertex_count), 0.0);
  next_.assign(static_cast<std::size_t>(matrix.vertex_count), 0.0);
  scores_[static_cast<std::size_t>(source_)] = 1.0;
}

void RestartWalker::step() {
  std::fill(next_.begin(), next_.end(), 0.0);
  for (int v = 0; v < matrix_->vertex_count; ++v) {
    const double mass = scores_[static_cast<std::size_t>(v)];
    if (mass == 0.0) continue;
    const double outgoing = alpha_ * mass;
    const std::size_t begin = matrix_->row_offsets[static_cast<std::size_t>(v)];
    const std::size_t end = matrix_->row_offsets[static_cast<std::size_t>(v) + 1];
    for (std::size_t k = begin; k < end; ++k) {
      next_[static_cast<std::size_t>(matrix_->cols[k])] += outgoing * matrix_->values[k];
    }
  }
  next_[static_cast<std::size_t>(source_)] += 1.0 - alpha_;

  double delta = 0.0;
  for (std::size_t i = 0; i < scores_.size(); ++i) {
    delta = std::max(delta, std::abs(next_[i] - scores_[i]));
  }
  last_delta_ = delta;
  scores_.swap(next_);
  ++steps_;
}

ScoreVector rank(const TransitionMatrix& matrix, int source_vertex, double alpha,
                 int max_steps, double convergence_tol) {
  if (max_steps < 1) throw ConfigError("max_steps must be >= 1");
  RestartWalker walker(matrix, source_vertex, alpha);
  for (int i = 0; i < max_steps; ++i) {
    walker.step();
    if (convergence_tol > 0.0 && walker.last_delta() < convergence_tol) break;
  }
  ScoreVector out;
  out.scores = walker.scores();
  out.source = source_vertex;
  out.alpha = alpha;
  out.steps_run = walker.steps();
  return out;
}

std::vector<double> article_scores(const RankGraph& graph, const ScoreVector& scores) {
  std::vector<double> out(static_cast<std::size_t>(graph.corpus_article_count()), 0.0);
  const int first = graph.researcher_vertex_count();
  for (int v = first; v < graph.vertex_count(); ++v) {
    out[static_cast<std::size_t>(graph.article_of_vertex(v))] =
        scores.scores[static_cast<std::size_t>(v)];
  }
  return out;
}

RecommendationList top_n(const RankGraph& graph, const ScoreVector& scores,
                         Index researcher, const Corpus& train, int n) {
  if (n < 1) throw ConfigError("recommendation list length must be >= 1");

  const std::vector<double> per_article = article_scores(graph, scores);
  const auto& read = train.library(researcher);

  std::vector<Index> candidates;
  candidates.reserve(per_article.size());
  for (Index a = 0; a < train.article_count(); ++a) {
    if (!std::binary_search(read.begin(), read.end(), a)) candidates.push_back(a);
  }

  const auto by_score_then_index = [&](Index a, Index b) {
    const double sa = per_article[static_cast<std::size_t>(a)];
    const double sb = per_article[static_cast<std::size_t>(b)];
    if (sa != sb) return sa > sb;
    return a < b;
  };
  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(n),
                                                 candidates.size());
  std::partial_sort(candidates.begin(),
                    candidates.begin() + static_cast<std::ptrdiff_t>(take),
                    candidates.end(), by_score_then_index);

  RecommendationList out;
  out.researcher = researcher;
  out.entries.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    out.entries.push_back(Recommendation{
        candidates[i], per_article[static_cast<std::size_t>(candidates[i])]});
  }
  return out;
}

RecommendationList recommend(const Corpus& train, const ArticleRelationSet* relations,
                             Index researcher, double alpha, int max_steps, int n) {
  if (researcher < 0 || researcher >= train.researcher_count()) {
    throw NotFoundError("unknown researcher index");
  }
  const RankGraph graph = relations != nullptr ? build_graph(train, *relations)
                                               : build_baseline_graph(train);
  const auto source = graph.researcher_vertex(researcher);
  if (!source) {
    throw NotFoundError("researcher has no training readings: " +
                        train.researcher_token(researcher));
  }
  const TransitionMatrix matrix = transition_matrix(graph);
  const ScoreVector scores = rank(matrix, *source, alpha, max_steps);
  return top_n(graph, scores, researcher, train, n);
}

}  // namespace care
