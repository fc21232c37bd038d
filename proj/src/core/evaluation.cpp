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

#include "core/evaluation.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace care {

PerResearcherMetrics score_researcher(const RecommendationList& rec,
                                      std::span<const Index> test_articles, int n) {
  if (n < 1) throw ConfigError("metric list length must be >= 1");
  if (test_articles.empty()) {
    throw InvalidArgumentError("researcher has no test readings");
  }

  PerResearcherMetrics m;
  m.researcher = rec.researcher;
  m.n = n;
  m.test_size = static_cast<int>(test_articles.size());

  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(n),
                                                 rec.entries.size());
  for (std::size_t i = 0; i < take; ++i) {
    if (std::binary_search(test_articles.begin(), test_articles.end(),
                           rec.entries[i].article)) {
      ++m.hits;
    }
  }
  m.precision = static_cast<double>(m.hits) / static_cast<double>(n);
  m.recall = static_cast<double>(m.hits) / static_cast<double>(m.test_size);
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

AggregateRow aggregate(std::span<const PerResearcherMetrics> metrics) {
  if (metrics.empty()) throw EmptyInputError("no evaluable researchers");
  AggregateRow row;
  row.n = metrics.front().n;
  for (const auto& m : metrics) {
    if (m.n != row.n) throw InvalidArgumentError("mixed N in aggregate input");
    row.precision += m.precision;
    row.recall += m.recall;
    row.f1 += m.f1;
  }
  const auto count = static_cast<double>(metrics.size());
  row.precision /= count;
  row.recall /= count;
  row.f1 /= count;
  return row;
}

std::optional<double> increase_rate(const EvaluationReport& care_report,
                                    const EvaluationReport& baseline_report, int n) {
  if (care_report.researcher_count != baseline_report.researcher_count) {
    throw InvalidArgumentError("reports cover different researcher sets");
  }
  const auto find_row = [n](const EvaluationReport& report) -> const AggregateRow& {
    for (const auto& row : report.rows) {
      if (row.n == n) return row;
    }
    throw InvalidArgumentError("report has no row for N=" + std::to_string(n));
  };
  const double f1_care = find_row(care_report).f1;
  const double f1_baseline = find_row(baseline_report).f1;
  if (f1_baseline == 0.0) return std::nullopt;
  return (f1_care - f1_baseline) / f1_baseline;
}

namespace {

// Per-researcher metrics for one cohort under both pipelines;
// metrics[i][k] belongs to cohort[i] at n_values[k].
struct CohortEvaluation {
  std::vector<Index> cohort;
  std::vector<std::vector<PerResearcherMetrics>> care;
  std::vector<std::vector<PerResearcherMetrics>> baseline;
};

std::vector<Index> researchers_with_test_readings(const SplitCorpus& split) {
  std::vector<Index> out;
  Index last = -1;
  for (const auto& relation : split.test) {  // sorted by researcher
    if (relation.researcher != last) {
      out.push_back(relation.researcher);
      last = relation.researcher;
    }
  }
  return out;
}

CohortEvaluation evaluate_cohort(const SplitCorpus& split,
                                 const ArticleRelationSet& relations,
                                 const std::vector<Index>& cohort,
                                 const ExperimentParams& params) {
  const Corpus& train = split.train;
  const RankGraph care_graph = build_graph(train, relations);
  const RankGraph baseline_graph = build_baseline_graph(train);
  const TransitionMatrix care_matrix = transition_matrix(care_graph);
  const TransitionMatrix baseline_matrix = transition_matrix(baseline_graph);

  const int max_n = *std::max_element(params.n_values.begin(), params.n_values.end());

  CohortEvaluation result;
  result.cohort = cohort;
  result.care.resize(cohort.size());
  result.baseline.resize(cohort.size());

  parallel_for(cohort.size(), params.threads, [&](std::size_t i) {
    const Index r = cohort[i];
    const std::vector<Index> test_articles = split.test_articles(r);

    const auto evaluate_pipeline = [&](const RankGraph& graph,
                                       const TransitionMatrix& matrix) {
      const auto source = graph.researcher_vertex(r);
      if (!source) {
        throw NotFoundError("cohort researcher missing from graph: " +
                            train.researcher_token(r));
      }
      const ScoreVector scores = rank(matrix, *source, params.alpha, params.max_steps);
      const RecommendationList rec = top_n(graph, scores, r, train, max_n);
      std::vector<PerResearcherMetrics> per_n;
      per_n.reserve(params.n_values.size());
      for (const int n : params.n_values) {
        per_n.push_back(score_researcher(rec, test_articles, n));
      }
      return per_n;
    };

    result.care[i] = evaluate_pipeline(care_graph, care_matrix);
    result.baseline[i] = evaluate_pipeline(baseline_graph, baseline_matrix);
  });
  return result;
}

EvaluationReport aggregate_report(
    const std::vector<std::vector<PerResearcherMetrics>>& per_researcher,
    const std::vector<std::size_t>& member_positions, const std::string& method,
    const ExperimentParams& params, std::uint64_t seed, const std::string& policy) {
  EvaluationReport report;
  report.method = method;
  report.researcher_count = member_positions.size();
  report.alpha = params.alpha;
  report.seed = seed;
  report.policy = policy;

  for (std::size_t k = 0; k < params.n_values.size(); ++k) {
    std::vector<PerResearcherMetrics> column;
    column.reserve(member_positions.size());
    for (const std::size_t pos : member_positions) {
      column.push_back(per_researcher[pos][k]);
    }
    report.rows.push_back(aggregate(column));
  }
  return report;
}

std::vector<std::size_t> all_positions(std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = i;
  return out;
}

void validate_params(const ExperimentParams& params) {
  if (params.n_values.empty()) throw ConfigError("n_values must not be empty");
  for (const int n : params.n_values) {
    if (n < 1) throw ConfigError("n_values entries must be >= 1");
  }
  if (params.max_steps < 1) throw ConfigError("max_steps must be >= 1");
  if (!(params.alpha > 0.0 && params.alpha < 1.0)) {
    throw ConfigError("alpha must be in (0, 1)");
  }
}

}  // namespace

ExperimentResult run_experiment(const SplitCorpus& split,
                                const ArticleRelationSet& relations,
                                const std::optional<ThresholdPolicy>& policy,
                                const ExperimentParams& params) {
  validate_params(params);

  std::vector<Index> cohort = researchers_with_test_readings(split);
  std::string policy_text = "none";
  if (policy) {
    const auto features = compute_all_features(split.train, relations);
    const std::vector<Index> targets = select_targets(features, *policy);
    std::vector<Index> filtered;
    std::set_intersection(cohort.begin(), cohort.end(), targets.begin(),
                          targets.end(), std::back_inserter(filtered));
    cohort = std::move(filtered);
    policy_text = policy->describe();
    if (cohort.empty()) {
      throw EmptyInputError("no evaluable researchers selected by policy: " +
                            policy_text);
    }
  }
  if (cohort.empty()) throw EmptyInputError("no researchers with test readings");

  const CohortEvaluation evaluation = evaluate_cohort(split, relations, cohort, params);
  const std::vector<std::size_t> positions = all_positions(cohort.size());
  const char* suffix = policy ? "2" : "1";

  ExperimentResult result;
  result.care = aggregate_report(evaluation.care, positions,
                                 std::string("CARE-") + suffix, params, split.seed,
                                 policy_text);
  result.baseline = aggregate_report(evaluation.baseline, positions,
                                     std::string("Baseline-") + suffix, params,
                                     split.seed, policy_text);
  return result;
}

CompareResult run_compare(const SplitCorpus& split,
                          const ArticleRelationSet& relations,
                          const ThresholdPolicy& policy,
                          const ExperimentParams& params) {
  validate_params(params);

  const std::vector<Index> cohort = researchers_with_test_readings(split);
  if (cohort.empty()) throw EmptyInputError("no researchers with test readings");

  const auto features = compute_all_features(split.train, relations);
  const std::vector<Index> targets = select_targets(features, policy);
  std::vector<std::size_t> filtered_positions;
  for (std::size_t i = 0; i < cohort.size(); ++i) {
    if (std::binary_search(targets.begin(), targets.end(), cohort[i])) {
      filtered_positions.push_back(i);
    }
  }
  if (filtered_positions.empty()) {
    throw EmptyInputError("no evaluable researchers selected by policy: " +
                          policy.describe());
  }

  // One ranking pass serves both groups; the filtered reports reuse the
  // per-researcher results of the full cohort.
  const CohortEvaluation evaluation = evaluate_cohort(split, relations, cohort, params);
  const std::vector<std::size_t> every = all_positions(cohort.size());

  CompareResult result;
  result.all.care = aggregate_report(evaluation.care, every, "CARE-1",
                                     params, split.seed, "none");
  result.all.baseline = aggregate_report(evaluation.baseline, every,
                                         "Baseline-1", params, split.seed, "none");
  result.filtered.care =
      aggregate_report(evaluation.care, filtered_positions, "CARE-2",
                       params, split.seed, policy.describe());
  result.filtered.baseline =
      aggregate_report(evaluation.baseline, filtered_positions,
                       "Baseline-2", params, split.seed, policy.describe());
  return result;
}

Corpus generate_synthetic_corpus(int n_researchers, int n_articles, int n_authors,
                                 double loyalty, std::uint64_t seed) {
  if (n_researchers < 1 || n_articles < 1 || n_authors < 1) {
    throw ConfigError("synthetic corpus counts must be >= 1");
  }
  if (!(loyalty >= 0.0 && loyalty <= 1.0)) {
    throw ConfigError("loyalty must be in [0, 1]");
  }

  const auto article_token = [](int a) { return "a" + std::to_string(a); };
  const auto researcher_token = [](int r) { return "r" + std::to_string(r); };
  const auto author_token = [](int u) { return "u" + std::to_string(u); };

  // Authorship pass: every article gets 1-4 distinct authors from the pool;
  // per-author workloads are unconstrained.
  std::vector<std::vector<int>> articles_of_author(static_cast<std::size_t>(n_authors));
  Rng author_rng(sub_seed(seed, "synthetic-authorships"));
  for (int a = 0; a < n_articles; ++a) {
    const int slots = std::min(1 + static_cast<int>(author_rng.bounded(4)), n_authors);
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < slots) {
      const int u = static_cast<int>(
          author_rng.bounded(static_cast<std::uint64_t>(n_authors)));
      if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) {
        chosen.push_back(u);
      }
    }
    for (const int u : chosen) {
      articles_of_author[static_cast<std::size_t>(u)].push_back(a);
    }
  }
  for (auto& own : articles_of_author) std::sort(own.begin(), own.end());

  // Reading pass: independent stream per researcher.
  std::vector<std::vector<int>> libraries(static_cast<std::size_t>(n_researchers));
  for (int r = 0; r < n_researchers; ++r) {
    Rng rng(sub_seed(seed, "synthetic-readings", static_cast<std::uint64_t>(r)));
    const int home = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n_authors)));
    const auto& home_articles = articles_of_author[static_cast<std::size_t>(home)];

    int target = 3 + static_cast<int>(rng.bounded(8));  // 3..10 readings
    target = std::min(target, n_articles);

    std::unordered_set<int> read;
    auto& library = libraries[static_cast<std::size_t>(r)];
    while (static_cast<int>(library.size()) < target) {
      int pick = -1;
      if (rng.unit() < loyalty) {
        std::vector<int> unread_home;
        for (const int a : home_articles) {
          if (!read.count(a)) unread_home.push_back(a);
        }
        if (!unread_home.empty()) {
          pick = unread_home[rng.bounded(unread_home.size())];
        }
      }
      while (pick < 0) {
        const int a = static_cast<int>(
            rng.bounded(static_cast<std::uint64_t>(n_articles)));
        if (!read.count(a)) pick = a;
      }
      read.insert(pick);
      library.push_back(pick);
    }
    std::sort(library.begin(), library.end());
  }

  Corpus::Builder builder;
  for (int r = 0; r < n_researchers; ++r) builder.add_researcher(researcher_token(r));
  for (int a = 0; a < n_articles; ++a) builder.add_article(article_token(a));
  for (int u = 0; u < n_authors; ++u) {
    if (!articles_of_author[static_cast<std::size_t>(u)].empty()) {
      builder.add_author(author_token(u));
    }
  }
  for (int r = 0; r < n_researchers; ++r) {
    for (const int a : libraries[static_cast<std::size_t>(r)]) {
      builder.add_reading(researcher_token(r), article_token(a));
    }
  }
  for (int u = 0; u < n_authors; ++u) {
    for (const int a : articles_of_author[static_cast<std::size_t>(u)]) {
      builder.add_authorship(article_token(a), author_token(u));
    }
  }
  return builder.build();
}

}  // namespace care
