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

#include "core/features.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

namespace care {

ResearcherFeatures compute_features(Index researcher, const Corpus& train,
                                    const ArticleRelationSet& relations) {
  if (researcher < 0 || researcher >= train.researcher_count()) {
    throw NotFoundError("unknown researcher index");
  }
  const auto& library = train.library(researcher);  // sorted
  if (library.empty()) {
    throw NotFoundError("researcher has no training readings: " +
                        train.researcher_token(researcher));
  }

  ResearcherFeatures f;
  f.researcher = researcher;
  f.library_size = static_cast<int>(library.size());

  // Related pairs whose both endpoints sit in the library.
  std::int64_t related_pairs = 0;
  for (const Index a : library) {
    for (const Index b : relations.neighbors(a)) {
      if (b > a && std::binary_search(library.begin(), library.end(), b)) {
        ++related_pairs;
      }
    }
  }
  f.fe3 = related_pairs;

  const auto size = static_cast<std::int64_t>(library.size());
  const std::int64_t all_pairs = size * (size - 1) / 2;
  f.fe1 = all_pairs > 0 ? static_cast<double>(related_pairs) /
                              static_cast<double>(all_pairs)
                        : 0.0;

  std::unordered_map<Index, int> occurrences;
  for (const Index a : library) {
    for (const Index u : train.authors_of(a)) ++occurrences[u];
  }
  int max_occurrence = 0;
  std::int64_t repeated_authors = 0;
  for (const auto& [author, count] : occurrences) {
    max_occurrence = std::max(max_occurrence, count);
    if (count >= 2) ++repeated_authors;
  }
  f.fe2 = static_cast<double>(max_occurrence) / static_cast<double>(size);
  f.fe4 = static_cast<double>(repeated_authors) / static_cast<double>(size);
  return f;
}

std::vector<ResearcherFeatures> compute_all_features(
    const Corpus& train, const ArticleRelationSet& relations) {
  std::vector<ResearcherFeatures> out;
  out.reserve(static_cast<std::size_t>(train.researcher_count()));
  for (Index r = 0; r < train.researcher_count(); ++r) {
    if (!train.library(r).empty()) {
      out.push_back(compute_features(r, train, relations));
    }
  }
  return out;
}

bool ThresholdPolicy::selects(const ResearcherFeatures& f) const {
  bool any_hit = false;
  bool all_hit = true;
  const auto check = [&](bool enabled, bool passed) {
    if (!enabled) return;
    any_hit = any_hit || passed;
    all_hit = all_hit && passed;
  };
  check(fe1_min.has_value(), fe1_min && f.fe1 > *fe1_min);
  check(fe2_min.has_value(), fe2_min && f.fe2 > *fe2_min);
  check(fe3_min.has_value(), fe3_min && f.fe3 > *fe3_min);
  check(fe4_min.has_value(), fe4_min && f.fe4 > *fe4_min);
  return combine == Combine::any ? any_hit : all_hit;
}

std::string ThresholdPolicy::describe() const {
  std::string out;
  const char* joiner = combine == Combine::any ? " or " : " and ";
  const auto append = [&](const char* name, const std::string& value) {
    if (!out.empty()) out += joiner;
    out += name;
    out += ">";
    out += value;
  };
  const auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return std::string(buf);
  };
  if (fe1_min) append("fe1", fmt(*fe1_min));
  if (fe2_min) append("fe2", fmt(*fe2_min));
  if (fe3_min) append("fe3", std::to_string(*fe3_min));
  if (fe4_min) append("fe4", fmt(*fe4_min));
  return out.empty() ? "none" : out;
}

std::vector<Index> select_targets(const std::vector<ResearcherFeatures>& features,
                                  const ThresholdPolicy& policy) {
  if (policy.empty()) {
    throw ConfigError("threshold policy has no thresholds set");
  }
  std::vector<Index> out;
  for (const auto& f : features) {
    if (policy.selects(f)) out.push_back(f.researcher);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace care
