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
#include <string>
#include <vector>

#include "core/author_relations.hpp"
#include "core/corpus.hpp"

namespace care {

// Preference-history features over a researcher's training library:
//   fe1  related pairs within the library / all library pairs
//   fe2  occurrences of the most frequent author / library size
//   fe3  raw count of related pairs within the library
//   fe4  authors appearing in at least two library articles / library size
struct ResearcherFeatures {
  Index researcher = -1;
  int library_size = 0;
  double fe1 = 0.0;
  double fe2 = 0.0;
  std::int64_t fe3 = 0;
  double fe4 = 0.0;
};

/// Researcher must have at least one training reading.
ResearcherFeatures compute_features(Index researcher, const Corpus& train,
                                    const ArticleRelationSet& relations);

/// Features for every researcher with a non-empty library, in index order.
std::vector<ResearcherFeatures> compute_all_features(
    const Corpus& train, const ArticleRelationSet& relations);

// Target selection: a researcher qualifies when its features strictly exceed
// the configured thresholds, combined with `any` or `all`.
struct ThresholdPolicy {
  enum class Combine { any, all };

  std::optional<double> fe1_min;
  std::optional<double> fe2_min;
  std::optional<std::int64_t> fe3_min;
  std::optional<double> fe4_min;
  Combine combine = Combine::all;

  bool empty() const {
    return !fe1_min && !fe2_min && !fe3_min && !fe4_min;
  }
  bool selects(const ResearcherFeatures& f) const;
  std::string describe() const;
};

/// Selected researcher indices, sorted. Throws ConfigError on an empty policy.
std::vector<Index> select_targets(const std::vector<ResearcherFeatures>& features,
                                  const ThresholdPolicy& policy);

}  // namespace care
