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

#include "core/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <utility>

#include "core/rng.hpp"

namespace care {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

struct ParsedLine {
  std::string_view first;
  std::string_view second;
};

// Splits one data line into its two tab-separated fields; nullopt for blank
// and comment lines.
std::optional<ParsedLine> parse_line(std::string_view line,
                                     std::string_view source_name,
                                     std::size_t line_number) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty() || line[0] == '#') return std::nullopt;
  if (trim(line).empty()) return std::nullopt;

  const auto fail = [&](const char* what) -> ParseError {
    return ParseError(std::string(source_name) + ":" +
                      std::to_string(line_number) + ": " + what);
  };

  const auto tab = line.find('\t');
  if (tab == std::string_view::npos ||
      line.find('\t', tab + 1) != std::string_view::npos) {
    throw fail("expected 2 tab-separated fields");
  }
  const auto first = trim(line.substr(0, tab));
  const auto second = trim(line.substr(tab + 1));
  if (first.empty() || second.empty()) throw fail("empty field");
  return ParsedLine{first, second};
}

}  // namespace

std::string fold_author_token(std::string_view token) {
  std::string folded{trim(token)};
  for (char& c : folded) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return folded;
}

Index TokenIndex::intern(std::string_view token) {
  if (const auto it = index_.find(token); it != index_.end()) return it->second;
  const Index id = static_cast<Index>(tokens_.size());
  tokens_.emplace_back(token);
  index_.emplace(tokens_.back(), id);
  return id;
}

std::optional<Index> TokenIndex::find(std::string_view token) const {
  const auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& TokenIndex::token(Index i) const {
  if (i < 0 || i >= size()) throw InvalidArgumentError("token index out of range");
  return tokens_[static_cast<std::size_t>(i)];
}

std::vector<RawReading> load_reading_relations(std::istream& in,
                                               std::string_view source_name) {
  std::vector<RawReading> out;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto parsed = parse_line(line, source_name, line_number);
    if (!parsed) continue;
    auto key = std::make_pair(std::string(parsed->first), std::string(parsed->second));
    if (!seen.insert(key).second) continue;
    out.push_back(RawReading{std::move(key.first), std::move(key.second)});
  }
  if (in.bad()) throw IoError("failed reading " + std::string(source_name));
  return out;
}

std::vector<RawAuthorship> load_authorships(std::istream& in,
                                            std::string_view source_name) {
  std::vector<RawAuthorship> out;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto parsed = parse_line(line, source_name, line_number);
    if (!parsed) continue;
    auto key = std::make_pair(std::string(parsed->first),
                              fold_author_token(parsed->second));
    if (!seen.insert(key).second) continue;
    out.push_back(RawAuthorship{std::move(key.first), std::move(key.second)});
  }
  if (in.bad()) throw IoError("failed reading " + std::string(source_name));
  return out;
}

Index Corpus::Builder::add_researcher(std::string_view token) {
  const Index r = c_.researchers_.intern(token);
  if (static_cast<std::size_t>(r) >= c_.libraries_.size()) {
    c_.libraries_.emplace_back();
  }
  return r;
}

Index Corpus::Builder::add_article(std::string_view token) {
  const Index a = c_.articles_.intern(token);
  if (static_cast<std::size_t>(a) >= c_.readers_.size()) {
    c_.readers_.emplace_back();
    c_.authors_by_article_.emplace_back();
  }
  return a;
}

Index Corpus::Builder::add_author(std::string_view token) {
  const Index u = c_.authors_.intern(fold_author_token(token));
  if (static_cast<std::size_t>(u) >= c_.articles_by_author_.size()) {
    c_.articles_by_author_.emplace_back();
  }
  return u;
}

Corpus::Builder& Corpus::Builder::add_reading(std::string_view researcher,
                                              std::string_view article) {
  const Index r = add_researcher(researcher);
  const Index a = add_article(article);
  c_.libraries_[static_cast<std::size_t>(r)].push_back(a);
  c_.readers_[static_cast<std::size_t>(a)].push_back(r);
  return *this;
}

Corpus::Builder& Corpus::Builder::add_authorship(std::string_view article,
                                                 std::string_view author) {
  const Index a = add_article(article);
  const Index u = add_author(author);
  c_.authors_by_article_[static_cast<std::size_t>(a)].push_back(u);
  c_.articles_by_author_[static_cast<std::size_t>(u)].push_back(a);
  return *this;
}

Corpus Corpus::Builder::build() {
  const auto sort_unique = [](std::vector<std::vector<Index>>& adjacency) {
    std::size_t total = 0;
    for (auto& list : adjacency) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      total += list.size();
    }
    return total;
  };
  c_.reading_count_ = sort_unique(c_.libraries_);
  sort_unique(c_.readers_);
  c_.authorship_count_ = sort_unique(c_.authors_by_article_);
  sort_unique(c_.articles_by_author_);
  return std::move(c_);
}

const std::string& Corpus::researcher_token(Index r) const {
  return researchers_.token(r);
}

const std::string& Corpus::article_token(Index a) const {
  return articles_.token(a);
}

const std::string& Corpus::author_token(Index u) const {
  return authors_.token(u);
}

const std::vector<Index>& Corpus::library(Index researcher) const {
  if (researcher < 0 || researcher >= researcher_count()) {
    throw InvalidArgumentError("researcher index out of range");
  }
  return libraries_[static_cast<std::size_t>(researcher)];
}

const std::vector<Index>& Corpus::readers(Index article) const {
  if (article < 0 || article >= article_count()) {
    throw InvalidArgumentError("article index out of range");
  }
  return readers_[static_cast<std::size_t>(article)];
}

const std::vector<Index>& Corpus::authors_of(Index article) const {
  if (article < 0 || article >= article_count()) {
    throw InvalidArgumentError("article index out of range");
  }
  return authors_by_article_[static_cast<std::size_t>(article)];
}

const std::vector<Index>& Corpus::articles_of_author(Index author) const {
  if (author < 0 || author >= author_count()) {
    throw InvalidArgumentError("author index out of range");
  }
  return articles_by_author_[static_cast<std::size_t>(author)];
}

bool Corpus::has_reading(Index researcher, Index article) const {
  const auto& lib = library(researcher);
  return std::binary_search(lib.begin(), lib.end(), article);
}

Corpus make_corpus(const std::vector<RawReading>& readings,
                   const std::vector<RawAuthorship>& authorships) {
  Corpus::Builder builder;
  for (const auto& r : readings) builder.add_reading(r.researcher, r.article);
  for (const auto& a : authorships) builder.add_authorship(a.article, a.author);
  return builder.build();
}

Corpus prune_articles(const Corpus& corpus, int min_readers) {
  if (min_readers < 1) throw ConfigError("min_readers must be >= 1");

  const Index m = corpus.article_count();
  const Index n = corpus.researcher_count();
  std::vector<bool> keep_article(static_cast<std::size_t>(m));
  for (Index a = 0; a < m; ++a) {
    keep_article[static_cast<std::size_t>(a)] =
        corpus.readers(a).size() >= static_cast<std::size_t>(min_readers);
  }

  Corpus::Builder builder;
  // Pre-register survivors in original relative order so derived indices are
  // stable across the prune.
  for (Index r = 0; r < n; ++r) {
    const auto& lib = corpus.library(r);
    const bool keeps_any = std::any_of(lib.begin(), lib.end(), [&](Index a) {
      return keep_article[static_cast<std::size_t>(a)];
    });
    if (keeps_any) builder.add_researcher(corpus.researcher_token(r));
  }
  for (Index a = 0; a < m; ++a) {
    if (keep_article[static_cast<std::size_t>(a)]) {
      builder.add_article(corpus.article_token(a));
    }
  }
  for (Index u = 0; u < corpus.author_count(); ++u) {
    const auto& arts = corpus.articles_of_author(u);
    const bool keeps_any = std::any_of(arts.begin(), arts.end(), [&](Index a) {
      return keep_article[static_cast<std::size_t>(a)];
    });
    if (keeps_any) builder.add_author(corpus.author_token(u));
  }

  for (Index r = 0; r < n; ++r) {
    for (const Index a : corpus.library(r)) {
      if (keep_article[static_cast<std::size_t>(a)]) {
        builder.add_reading(corpus.researcher_token(r), corpus.article_token(a));
      }
    }
  }
  for (Index a = 0; a < m; ++a) {
    if (!keep_article[static_cast<std::size_t>(a)]) continue;
    for (const Index u : corpus.authors_of(a)) {
      builder.add_authorship(corpus.article_token(a), corpus.author_token(u));
    }
  }
  return builder.build();
}

std::vector<Index> SplitCorpus::test_articles(Index researcher) const {
  std::vector<Index> out;
  const ReadingRelation probe{researcher, -1};
  auto it = std::lower_bound(test.begin(), test.end(), probe);
  for (; it != test.end() && it->researcher == researcher; ++it) {
    out.push_back(it->article);
  }
  return out;
}

SplitCorpus split_train_test(const Corpus& corpus, double test_ratio,
                             int small_library_cutoff, std::uint64_t seed) {
  if (!(test_ratio > 0.0 && test_ratio < 1.0)) {
    throw ConfigError("test_ratio must be in (0, 1)");
  }
  if (small_library_cutoff < 2) {
    throw ConfigError("small_library_cutoff must be >= 2");
  }

  const Index n = corpus.researcher_count();
  std::vector<ReadingRelation> test;
  std::vector<std::vector<Index>> held_out(static_cast<std::size_t>(n));

  for (Index r = 0; r < n; ++r) {
    const auto& lib = corpus.library(r);
    const auto size = static_cast<std::int64_t>(lib.size());
    if (size <= 1) continue;  // a lone reading stays in train

    std::int64_t take;
    if (size < small_library_cutoff) {
      take = 1;
    } else {
      take = static_cast<std::int64_t>(
          std::floor(static_cast<double>(size) * test_ratio + 0.5));
      take = std::min(take, size - 1);  // keep one training reading
      if (take <= 0) continue;
    }

    // Per-researcher sub-seed: the draw is independent of iteration order.
    Rng rng(sub_seed(seed, "split", static_cast<std::uint64_t>(r)));
    std::vector<Index> pool(lib);
    for (std::int64_t i = 0; i < take; ++i) {
      const auto j = i + static_cast<std::int64_t>(
                             rng.bounded(static_cast<std::uint64_t>(size - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
      test.push_back(ReadingRelation{r, pool[static_cast<std::size_t>(i)]});
      held_out[static_cast<std::size_t>(r)].push_back(pool[static_cast<std::size_t>(i)]);
    }
  }
  std::sort(test.begin(), test.end());
  for (auto& h : held_out) std::sort(h.begin(), h.end());

  // Rebuild train over the unchanged researcher/article/author universe.
  Corpus::Builder builder;
  for (Index r = 0; r < n; ++r) builder.add_researcher(corpus.researcher_token(r));
  for (Index a = 0; a < corpus.article_count(); ++a) {
    builder.add_article(corpus.article_token(a));
  }
  for (Index u = 0; u < corpus.author_count(); ++u) {
    builder.add_author(corpus.author_token(u));
  }
  for (Index r = 0; r < n; ++r) {
    const auto& out = held_out[static_cast<std::size_t>(r)];
    for (const Index a : corpus.library(r)) {
      if (!std::binary_search(out.begin(), out.end(), a)) {
        builder.add_reading(corpus.researcher_token(r), corpus.article_token(a));
      }
    }
  }
  for (Index a = 0; a < corpus.article_count(); ++a) {
    for (const Index u : corpus.authors_of(a)) {
      builder.add_authorship(corpus.article_token(a), corpus.author_token(u));
    }
  }

  SplitCorpus split;
  split.train = builder.build();
  split.test = std::move(test);
  split.seed = seed;
  return split;
}

void write_readings(const Corpus& corpus, std::ostream& out) {
  for (Index r = 0; r < corpus.researcher_count(); ++r) {
    for (const Index a : corpus.library(r)) {
      out << corpus.researcher_token(r) << '\t' << corpus.article_token(a) << '\n';
    }
  }
}

void write_authorships(const Corpus& corpus, std::ostream& out) {
  for (Index a = 0; a < corpus.article_count(); ++a) {
    for (const Index u : corpus.authors_of(a)) {
      out << corpus.article_token(a) << '\t' << corpus.author_token(u) << '\n';
    }
  }
}

}  // namespace care
