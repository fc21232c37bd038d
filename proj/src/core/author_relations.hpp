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
#include <iosfwd>
#include <utility>
#include <vector>

#include "core/corpus.hpp"

namespace care {

// Symmetric article-article common-author relations, stored as an adjacency
// over unordered pairs. No self pairs; relations are unweighted.
class ArticleRelationSet {
 public:
  ArticleRelationSet() = default;

  /// Builds from explicit unordered pairs (self pairs rejected, duplicates and
  /// orientation collapse).
  static ArticleRelationSet from_pairs(Index article_count,
                                       const std::vector<std::pair<Index, Index>>& pairs,
                                       int min_shared);

  static ArticleRelationSet empty(Index article_count) {
    return from_pairs(article_count, {}, 1);
  }

  /// All articles related to `article`, sorted; empty for unknown articles.
  const std::vector<Index>& neighbors(Index article) const;

  bool related(Index a, Index b) const;
  std::size_t pair_count() const { return pair_count_; }
  int min_shared() const { return min_shared_; }
  Index article_count() const { return static_cast<Index>(adjacency_.size()); }

  /// Invokes f(a, b) once per unordered pair with a < b, in index order.
  template <typename F>
  void for_each_pair(F&& f) const {
    for (Index a = 0; a < article_count(); ++a) {
      for (const Index b : adjacency_[static_cast<std::size_t>(a)]) {
        if (b > a) f(a, b);
      }
    }
  }

 private:
  std::vector<std::vector<Index>> adjacency_;
  std::size_t pair_count_ = 0;
  int min_shared_ = 1;
};

// Pair {a, b} is related iff the articles share at least min_shared authors.
// Joins through the author index instead of scanning all article pairs.
ArticleRelationSet derive_relations(const Corpus& corpus, int min_shared);

/// Writes `article_a <TAB> article_b` per pair, each pair and the whole list
/// ordered lexicographically by token.
void write_relations(const ArticleRelationSet& relations, const Corpus& corpus,
                     std::ostream& out);

}  // namespace care
