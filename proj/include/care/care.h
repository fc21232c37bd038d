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

/*
 * C API of the CARE article recommender.
 *
 * All functions that can fail return a care_status; CARE_OK means success.
 * On failure, care_last_error() returns a thread-local message describing
 * what went wrong. Objects are opaque handles created through care_*_ calls
 * and released with the matching care_*_free(); passing NULL to a free
 * function is a no-op. Strings returned through handles stay valid until the
 * owning handle is freed.
 *
 * Input files are UTF-8 text with two tab-separated fields per line
 * (reading relations: `researcher <TAB> article`; authorships:
 * `article <TAB> author`). Blank lines and lines starting with `#` are
 * skipped; LF and CRLF both work.
 */

#ifndef CARE_CARE_H
#define CARE_CARE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum care_status {
  CARE_OK = 0,
  CARE_ERROR_INVALID_ARGUMENT = 1,
  CARE_ERROR_IO = 2,
  CARE_ERROR_PARSE = 3,
  CARE_ERROR_CONFIG = 4,
  CARE_ERROR_NOT_FOUND = 5,
  CARE_ERROR_EMPTY = 6,
  CARE_ERROR_INTERNAL = 7
} care_status;

const char* care_version(void);
const char* care_status_name(care_status status);
/* Message of the most recent failing call on this thread ("" if none). */
const char* care_last_error(void);

typedef struct care_corpus care_corpus;
typedef struct care_split care_split;
typedef struct care_relations care_relations;
typedef struct care_features care_features;
typedef struct care_recommendation care_recommendation;
typedef struct care_report care_report;

/* ---- corpus ------------------------------------------------------------ */

/* authorships_path may be NULL when no author data is available. */
care_status care_corpus_load(const char* readings_path,
                             const char* authorships_path, care_corpus** out);
/* Same, from in-memory text (authorships_text may be NULL). */
care_status care_corpus_parse(const char* readings_text,
                              const char* authorships_text, care_corpus** out);
void care_corpus_free(care_corpus* corpus);

size_t care_corpus_researchers(const care_corpus* corpus);
size_t care_corpus_articles(const care_corpus* corpus);
size_t care_corpus_authors(const care_corpus* corpus);
size_t care_corpus_readings(const care_corpus* corpus);
size_t care_corpus_authorships(const care_corpus* corpus);

/* Drop articles with fewer than min_readers readers (plus their readings and
 * authorships), then researchers left without readings. Single pass. */
care_status care_corpus_prune(const care_corpus* corpus, unsigned min_readers,
                              care_corpus** out);

/* Normalized export, suitable for reloading with care_corpus_load. */
care_status care_corpus_write(const care_corpus* corpus,
                              const char* readings_path,
                              const char* authorships_path);

/* Seeded train/test split of the reading relations. Researchers with a
 * single reading stay fully in train; small libraries (< cutoff) contribute
 * exactly one test reading; larger ones contribute round(L * test_ratio). */
care_status care_corpus_split(const care_corpus* corpus, double test_ratio,
                              unsigned small_library_cutoff, uint64_t seed,
                              care_split** out);

/* Borrowed view; valid while the split handle lives. */
const care_corpus* care_split_train(const care_split* split);
size_t care_split_test_count(const care_split* split);
uint64_t care_split_seed(const care_split* split);
void care_split_free(care_split* split);

/* ---- common-author relations ------------------------------------------- */

/* Article pairs sharing at least min_shared authors. */
care_status care_relations_derive(const care_corpus* corpus, unsigned min_shared,
                                  care_relations** out);
size_t care_relations_pairs(const care_relations* relations);
/* Tab-separated `article_a <TAB> article_b` pairs, lexicographic order. */
care_status care_relations_write(const care_relations* relations,
                                 const care_corpus* corpus, const char* path);
void care_relations_free(care_relations* relations);

/* ---- researcher features ------------------------------------------------ */

typedef struct care_feature_row {
  const char* researcher;
  unsigned library_size;
  double fe1; /* related library pairs / all library pairs */
  double fe2; /* most frequent author occurrences / library size */
  int64_t fe3; /* related library pairs */
  double fe4; /* authors in >= 2 library articles / library size */
} care_feature_row;

care_status care_features_compute(const care_corpus* train,
                                  const care_relations* relations,
                                  care_features** out);
size_t care_features_count(const care_features* features);
care_status care_features_row(const care_features* features, size_t index,
                              care_feature_row* out);
void care_features_free(care_features* features);

/* Threshold policy over the features; comparisons are strict (>). A field
 * participates only when its has_ flag is nonzero; at least one must be set. */
typedef struct care_policy {
  int has_fe1_min;
  double fe1_min;
  int has_fe2_min;
  double fe2_min;
  int has_fe3_min;
  int64_t fe3_min;
  int has_fe4_min;
  double fe4_min;
  int combine_all; /* nonzero: all thresholds must pass; zero: any suffices */
} care_policy;

care_status care_policy_selects(const care_policy* policy,
                                const care_feature_row* row, int* out_selected);

/* ---- ranking ------------------------------------------------------------ */

/* Top-N unread articles for one researcher via restart-walk ranking over the
 * researcher-article graph. Pass relations to include common-author edges
 * (the CARE pipeline) or NULL for the baseline pipeline. */
care_status care_recommend(const care_corpus* train,
                           const care_relations* relations,
                           const char* researcher_token, double alpha,
                           unsigned max_steps, unsigned top_n,
                           care_recommendation** out);
size_t care_recommendation_count(const care_recommendation* rec);
const char* care_recommendation_article(const care_recommendation* rec,
                                        size_t index);
double care_recommendation_score(const care_recommendation* rec, size_t index);
void care_recommendation_free(care_recommendation* rec);

/* ---- evaluation ---------------------------------------------------------- */

typedef struct care_experiment_params {
  double alpha;          /* walk probability, in (0, 1) */
  unsigned max_steps;    /* iteration budget per ranking */
  const unsigned* n_values; /* list lengths to evaluate; NULL: 2,4,6,8,10 */
  size_t n_value_count;
  unsigned threads;      /* 0 or 1: sequential */
} care_experiment_params;

typedef struct care_report_row {
  const char* method; /* CARE-1, Baseline-1, CARE-2, Baseline-2 */
  unsigned n;
  double precision;
  double recall;
  double f1;
  size_t researchers;
  int has_increase_rate; /* set on CARE rows when the baseline F1 is > 0 */
  double increase_rate;  /* (F1_care - F1_baseline) / F1_baseline */
} care_report_row;

/* One experiment group: CARE vs Baseline on the same cohort. policy == NULL
 * evaluates every researcher with test readings (CARE-1/Baseline-1); with a
 * policy, only selected targets are evaluated (CARE-2/Baseline-2). */
care_status care_experiment_run(const care_split* split,
                                const care_relations* relations,
                                const care_policy* policy,
                                const care_experiment_params* params,
                                care_report** out);

/* Both groups from a single ranking pass: CARE-1/Baseline-1 plus
 * CARE-2/Baseline-2 for the policy-selected cohort. */
care_status care_compare_run(const care_split* split,
                             const care_relations* relations,
                             const care_policy* policy,
                             const care_experiment_params* params,
                             care_report** out);

size_t care_report_rows(const care_report* report);
care_status care_report_row_at(const care_report* report, size_t index,
                               care_report_row* out);
void care_report_free(care_report* report);

/* ---- synthetic data ------------------------------------------------------ */

/* Seeded fixture corpus: researchers prefer one home author's articles with
 * probability `loyalty` and read uniformly otherwise. */
care_status care_synthesize(unsigned researchers, unsigned articles,
                            unsigned authors, double loyalty, uint64_t seed,
                            care_corpus** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CARE_CARE_H */
