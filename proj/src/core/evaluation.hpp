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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/features.hpp"
#include "core/graph_rank.hpp"

namespace care {

struct PerResearcherMetrics {
  Index researcher = -1;
  int n = 0;          // requested list length
  int hits = 0;       // recommended articles found in the researcher's test set
  int test_size = 0;  // researcher's test readings
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// precision = hits / n (the requested length, even when fewer candidates
// exist), recall = hits / test_size, f1 = harmonic mean or 0 when both are 0.
// Only the first n entries of rec count; test_articles must be sorted.
PerResearcherMetrics score_researcher(const RecommendationList& rec,
                                      std::span<const Index> test_articles, int n);

struct AggregateRow {
  int n = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Unweighted means over the metric list; throws EmptyInputError on an empty
/// list. All entries must share one n.
AggregateRow aggregate(std::span<const PerResearcherMetrics> metrics);

struct EvaluationReport {
  std::string method;  // CARE-1, Baseline-1, CARE-2, Baseline-2
  std::vector<AggregateRow> rows;
  std::size_t researcher_count = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::string policy;  // "none" when no filtering was applied
};

/// Relative F1 improvement at one N; absent when the baseline F1 is 0.
std::optional<double> increase_rate(const EvaluationReport& care_report,
                                    const EvaluationReport& baseline_report, int n);

struct ExperimentParams {
  double alpha = 0.8;
  int max_steps = 100;
  std::vector<int> n_values = {2, 4, 6, 8, 10};
  int threads = 1;
};

struct ExperimentResult {
  EvaluationReport care;
  EvaluationReport baseline;
};

// Ranks every cohort researcher with both pipelines over the training graphs
// and aggregates per N. Without a policy the cohort is every researcher with
// test readings (CARE-1/Baseline-1); with a policy it is the feature-selected
// subset, and the baseline is aggregated over the same subset
// (CARE-2/Baseline-2).
ExperimentResult run_experiment(const SplitCorpus& split,
                                const ArticleRelationSet& relations,
                                const std::optional<ThresholdPolicy>& policy,
                                const ExperimentParams& params);

struct CompareResult {
  ExperimentResult all;       // CARE-1 / Baseline-1
  ExperimentResult filtered;  // CARE-2 / Baseline-2
};

/// Runs both experiment groups from a single ranking pass per method.
CompareResult run_compare(const SplitCorpus& split,
                          const ArticleRelationSet& relations,
                          const ThresholdPolicy& policy,
                          const ExperimentParams& params);

// Seeded fixture generator. Every article gets 1-4 authors from the pool;
// every researcher draws a home author and fills its library preferring that
// author's articles with probability `loyalty`, drawing uniformly otherwise.
Corpus generate_synthetic_corpus(int n_researchers, int n_articles, int n_authors,
                                 double loyalty, std::uint64_t seed);

}  // namespace care
