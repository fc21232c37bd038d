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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/error.hpp"

namespace care {

/// Dense entity index within one corpus.
using Index = std::int32_t;

struct ReadingRelation {
  Index researcher = -1;
  Index article = -1;

  friend bool operator==(const ReadingRelation&, const ReadingRelation&) = default;
  friend auto operator<=>(const ReadingRelation&, const ReadingRelation&) = default;
};

// Bijective token <-> index map. Indices follow first-seen order, so a fixed
// input always produces the same numbering.
class TokenIndex {
 public:
  Index intern(std::string_view token);
  std::optional<Index> find(std::string_view token) const;
  const std::string& token(Index i) const;
  Index size() const { return static_cast<Index>(tokens_.size()); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Index, Hash, std::equal_to<>> index_;
};

struct RawReading {
  std::string researcher;
  std::string article;
};

struct RawAuthorship {
  std::string article;
  std::string author;
};

/// Canonical author token: surrounding whitespace trimmed, ASCII case-folded.
std::string fold_author_token(std::string_view token);

// Parse `researcher <TAB> article` lines. Duplicates collapse, blank lines and
// `#` comments are skipped, CRLF accepted. Throws ParseError with
// "<source_name>:<line>" context on malformed lines.
std::vector<RawReading> load_reading_relations(std::istream& in,
                                               std::string_view source_name);

/// Same format with `article <TAB> author`; author tokens are canonicalized
/// before deduplication.
std::vector<RawAuthorship> load_authorships(std::istream& in,
                                            std::string_view source_name);

// The normalized input universe: researchers, articles, authors, reading
// relations, and authorships. Immutable once built; derived corpora (prune,
// split) are fresh values.
class Corpus {
 public:
  class Builder;

  Corpus() = default;

  Index researcher_count() const { return researchers_.size(); }
  Index article_count() const { return articles_.size(); }
  Index author_count() const { return authors_.size(); }
  std::size_t reading_count() const { return reading_count_; }
  std::size_t authorship_count() const { return authorship_count_; }

  const std::string& researcher_token(Index r) const;
  const std::string& article_token(Index a) const;
  const std::string& author_token(Index u) const;
  std::optional<Index> find_researcher(std::string_view token) const {
    return researchers_.find(token);
  }
  std::optional<Index> find_article(std::string_view token) const {
    return articles_.find(token);
  }

  /// Articles read by a researcher, sorted and unique.
  const std::vector<Index>& library(Index researcher) const;
  /// Researchers that read an article, sorted and unique.
  const std::vector<Index>& readers(Index article) const;
  const std::vector<Index>& authors_of(Index article) const;
  const std::vector<Index>& articles_of_author(Index author) const;
  bool has_reading(Index researcher, Index article) const;

 private:
  friend class Builder;

  TokenIndex researchers_;
  TokenIndex articles_;
  TokenIndex authors_;
  std::vector<std::vector<Index>> libraries_;           // researcher -> articles
  std::vector<std::vector<Index>> readers_;             // article -> researchers
  std::vector<std::vector<Index>> authors_by_article_;  // article -> authors
  std::vector<std::vector<Index>> articles_by_author_;  // author -> articles
  std::size_t reading_count_ = 0;
  std::size_t authorship_count_ = 0;
};

class Corpus::Builder {
 public:
  Index add_researcher(std::string_view token);
  Index add_article(std::string_view token);
  Index add_author(std::string_view token);
  Builder& add_reading(std::string_view researcher, std::string_view article);
  Builder& add_authorship(std::string_view article, std::string_view author);
  Corpus build();

 private:
  Corpus c_;
};

Corpus make_corpus(const std::vector<RawReading>& readings,
                   const std::vector<RawAuthorship>& authorships);

// Remove articles with fewer than min_readers readers, their readings and
// authorships, then researchers left with no readings. Single pass; surviving
// entities keep their relative order.
Corpus prune_articles(const Corpus& corpus, int min_readers);

struct SplitCorpus {
  Corpus train;
  std::vector<ReadingRelation> test;  // sorted by (researcher, article)
  std::uint64_t seed = 0;

  /// Test articles of one researcher, sorted (empty if none).
  std::vector<Index> test_articles(Index researcher) const;
};

// Per researcher with library size L: L == 1 keeps everything in train,
// 2 <= L < small_library_cutoff sends exactly one uniformly random reading to
// test, larger libraries send round-half-up(L * test_ratio) readings (capped
// at L - 1 so every researcher keeps a training reading). The train corpus
// keeps the full article/author universe and index space of its input.
SplitCorpus split_train_test(const Corpus& corpus, double test_ratio,
                             int small_library_cutoff, std::uint64_t seed);

// Normalized exports, one relation per line in index order.
void write_readings(const Corpus& corpus, std::ostream& out);
void write_authorships(const Corpus& corpus, std::ostream& out);

}  // namespace care
