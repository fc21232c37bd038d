#include <doctest.h>

#include <set>
#include <sstream>
#include <utility>

#include "core/author_relations.hpp"
#include "core/rng.hpp"
#include "support/fixtures.hpp"

using namespace care;
using care::test::corpus_from_text;
using care::test::load_fixture_corpus;

namespace {

Corpus random_authored_corpus(std::uint64_t seed) {
  Rng rng(sub_seed(seed, "authored"));
  Corpus::Builder builder;
  const int articles = 12;
  const int authors = 6;
  for (int a = 0; a < articles; ++a) {
    builder.add_reading("r0", "a" + std::to_string(a));  // articles must exist
  }
  for (int u = 0; u < authors; ++u) {
    const int count = static_cast<int>(rng.bounded(5));
    for (int i = 0; i < count; ++i) {
      builder.add_authorship("a" + std::to_string(rng.bounded(articles)),
                             "u" + std::to_string(u));
    }
  }
  return builder.build();
}

std::set<std::pair<Index, Index>> pair_set(const ArticleRelationSet& relations) {
  std::set<std::pair<Index, Index>> out;
  relations.for_each_pair([&](Index a, Index b) { out.emplace(a, b); });
  return out;
}

}  // namespace

TEST_CASE("derive_relations reproduces the four-pair example graph") {
  const Corpus corpus =
      load_fixture_corpus("worked_example_readings.tsv", "worked_example_authorships.tsv");
  const ArticleRelationSet relations = derive_relations(corpus, 1);

  CHECK(relations.pair_count() == 4);

  const auto a = [&](const char* token) { return *corpus.find_article(token); };
  const std::set<std::pair<Index, Index>> expected = {
      {std::min(a("A1"), a("A3")), std::max(a("A1"), a("A3"))},
      {std::min(a("A1"), a("A4")), std::max(a("A1"), a("A4"))},
      {std::min(a("A3"), a("A4")), std::max(a("A3"), a("A4"))},
      {std::min(a("A2"), a("A4")), std::max(a("A2"), a("A4"))},
  };
  CHECK(pair_set(relations) == expected);

  // handshake: degrees sum to twice the pair count
  std::size_t degree_sum = 0;
  for (Index art = 0; art < corpus.article_count(); ++art) {
    degree_sum += relations.neighbors(art).size();
  }
  CHECK(degree_sum == 8);
}

TEST_CASE("derive_relations: one shared author is not enough at min_shared=2") {
  const Corpus corpus = corpus_from_text("r1\ta1\nr1\ta2\n", "a1\tu1\na2\tu1\n");
  CHECK(derive_relations(corpus, 2).pair_count() == 0);
  CHECK(derive_relations(corpus, 1).pair_count() == 1);
}

TEST_CASE("derive_relations: no authorships, no relations") {
  const Corpus corpus = corpus_from_text("r1\ta1\nr1\ta2\n");
  CHECK(derive_relations(corpus, 1).pair_count() == 0);
}

TEST_CASE("derive_relations rejects min_shared < 1") {
  CHECK_THROWS_AS(derive_relations(Corpus{}, 0), ConfigError);
}

TEST_CASE("neighbors: symmetry, no self pairs, unknown articles") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Corpus corpus = random_authored_corpus(seed);
    const ArticleRelationSet relations = derive_relations(corpus, 1);

    std::size_t degree_sum = 0;
    for (Index a = 0; a < corpus.article_count(); ++a) {
      for (const Index b : relations.neighbors(a)) {
        CHECK(b != a);
        CHECK(relations.related(b, a));
      }
      degree_sum += relations.neighbors(a).size();
    }
    CHECK(degree_sum == 2 * relations.pair_count());
  }
  CHECK(ArticleRelationSet::empty(3).neighbors(-1).empty());
  CHECK(ArticleRelationSet::empty(3).neighbors(99).empty());
}

TEST_CASE("raising min_shared only removes pairs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Corpus corpus = random_authored_corpus(seed);
    const auto loose = pair_set(derive_relations(corpus, 1));
    const auto strict = pair_set(derive_relations(corpus, 2));
    for (const auto& pair : strict) CHECK(loose.count(pair) == 1);
    CHECK(strict.size() <= loose.size());
  }
}

TEST_CASE("from_pairs rejects self pairs and unknown articles") {
  CHECK_THROWS_AS(ArticleRelationSet::from_pairs(3, {{1, 1}}, 1),
                  InvalidArgumentError);
  CHECK_THROWS_AS(ArticleRelationSet::from_pairs(3, {{0, 3}}, 1),
                  InvalidArgumentError);
}

TEST_CASE("write_relations orders pairs lexicographically by token") {
  const Corpus corpus = corpus_from_text(
      "r1\tzz\nr1\tmm\nr1\taa\n", "zz\tu1\nmm\tu1\naa\tu2\nmm\tu2\n");
  const ArticleRelationSet relations = derive_relations(corpus, 1);
  std::ostringstream out;
  write_relations(relations, corpus, out);
  CHECK(out.str() == "aa\tmm\nmm\tzz\n");
}
