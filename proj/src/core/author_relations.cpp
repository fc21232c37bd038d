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

#include "core/author_relations.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <unordered_map>

namespace care {

namespace {

const std::vector<Index>& empty_neighbors() {
  static const std::vector<Index> empty;
  return empty;
}

std::uint64_t pair_key(Index a, Index b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

ArticleRelationSet ArticleRelationSet::from_pairs(
    Index article_count, const std::vector<std::pair<Index, Index>>& pairs,
    int min_shared) {
  if (min_shared < 1) throw ConfigError("min_shared must be >= 1");

  ArticleRelationSet out;
  out.min_shared_ = min_shared;
  out.adjacency_.resize(static_cast<std::size_t>(article_count));
  for (const auto& [a, b] : pairs) {
    if (a == b) throw InvalidArgumentError("self pair in relation set");
    if (a < 0 || b < 0 || a >= article_count || b >= article_count) {
      throw InvalidArgumentError("relation pair references unknown article");
    }
    out.adjacency_[static_cast<std::size_t>(a)].push_back(b);
    out.adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : out.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    out.pair_count_ += list.size();
  }
  out.pair_count_ /= 2;
  return out;
}

const std::vector<Index>& ArticleRelationSet::neighbors(Index article) const {
  if (article < 0 || article >= article_count()) return empty_neighbors();
  return adjacency_[static_cast<std::size_t>(article)];
}

bool ArticleRelationSet::related(Index a, Index b) const {
  const auto& adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

ArticleRelationSet derive_relations(const Corpus& corpus, int min_shared) {
  if (min_shared < 1) throw ConfigError("min_shared must be >= 1");

  // shared-author count per unordered pair, keyed (a << 32 | b) with a < b
  std::unordered_map<std::uint64_t, int> shared;
  for (Index u = 0; u < corpus.author_count(); ++u) {
    const auto& articles = corpus.articles_of_author(u);  // sorted
    for (std::size_t i = 0; i < articles.size(); ++i) {
      for (std::size_t j = i + 1; j < articles.size(); ++j) {
        ++shared[pair_key(articles[i], articles[j])];
      }
    }
  }

  std::vector<std::pair<Index, Index>> pairs;
  for (const auto& [key, count] : shared) {
    if (count >= min_shared) {
      pairs.emplace_back(static_cast<Index>(key >> 32),
                         static_cast<Index>(key & 0xffffffffu));
    }
  }
  return ArticleRelationSet::from_pairs(corpus.article_count(), pairs, min_shared);
}

void write_relations(const ArticleRelationSet& relations, const Corpus& corpus,
                     std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> lines;
  lines.reserve(relations.pair_count());
  relations.for_each_pair([&](Index a, Index b) {
    std::string ta = corpus.article_token(a);
    std::string tb = corpus.article_token(b);
    if (tb < ta) std::swap(ta, tb);
    lines.emplace_back(std::move(ta), std::move(tb));
  });
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b] : lines) {
    out << a << '\t' << b << '\n';
  }
}

}  // namespace care
