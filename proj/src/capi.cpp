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

#include "care/care.h"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "core/author_relations.hpp"
#include "core/corpus.hpp"
#include "core/evaluation.hpp"
#include "core/features.hpp"
#include "core/graph_rank.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
care_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CARE_OK;
  } catch (const care::IoError& e) {
    g_last_error = e.what();
    return CARE_ERROR_IO;
  } catch (const care::ParseError& e) {
    g_last_error = e.what();
    return CARE_ERROR_PARSE;
  } catch (const care::ConfigError& e) {
    g_last_error = e.what();
    return CARE_ERROR_CONFIG;
  } catch (const care::NotFoundError& e) {
    g_last_error = e.what();
    return CARE_ERROR_NOT_FOUND;
  } catch (const care::EmptyInputError& e) {
    g_last_error = e.what();
    return CARE_ERROR_EMPTY;
  } catch (const care::InvalidArgumentError& e) {
    g_last_error = e.what();
    return CARE_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CARE_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown internal error";
    return CARE_ERROR_INTERNAL;
  }
}

care_status fail_invalid(const char* message) {
  g_last_error = message;
  return CARE_ERROR_INVALID_ARGUMENT;
}

std::ifstream open_input(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw care::IoError(std::string("cannot open ") + path);
  return in;
}

std::ofstream open_output(const char* path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw care::IoError(std::string("cannot open ") + path + " for writing");
  return out;
}

}  // namespace

struct care_corpus {
  std::shared_ptr<const care::Corpus> value;
};

struct care_split {
  std::shared_ptr<const care::SplitCorpus> value;
  care_corpus train_view;
};

struct care_relations {
  care::ArticleRelationSet value;
};

struct care_features {
  struct Row {
    std::string researcher;
    care::ResearcherFeatures features;
  };
  std::vector<Row> rows;
};

struct care_recommendation {
  struct Entry {
    std::string article;
    double score;
  };
  std::vector<Entry> entries;
};

struct care_report {
  struct Row {
    std::string method;
    unsigned n = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t researchers = 0;
    bool has_increase = false;
    double increase = 0.0;
  };
  std::vector<Row> rows;
};

namespace {

care::ThresholdPolicy to_policy(const care_policy& policy) {
  care::ThresholdPolicy out;
  if (policy.has_fe1_min) out.fe1_min = policy.fe1_min;
  if (policy.has_fe2_min) out.fe2_min = policy.fe2_min;
  if (policy.has_fe3_min) out.fe3_min = policy.fe3_min;
  if (policy.has_fe4_min) out.fe4_min = policy.fe4_min;
  out.combine = policy.combine_all ? care::ThresholdPolicy::Combine::all
                                   : care::ThresholdPolicy::Combine::any;
  return out;
}

care::ExperimentParams to_params(const care_experiment_params* params) {
  care::ExperimentParams out;
  if (params == nullptr) return out;
  out.alpha = params->alpha;
  out.max_steps = static_cast<int>(params->max_steps);
  out.threads = params->threads <= 1 ? 1 : static_cast<int>(params->threads);
  if (params->n_values != nullptr && params->n_value_count > 0) {
    out.n_values.assign(params->n_values,
                        params->n_values + params->n_value_count);
  }
  return out;
}

void append_group(care_report& report, const care::ExperimentResult& group,
                  const care::ExperimentParams& params) {
  const auto push = [&](const care::EvaluationReport& source, bool with_increase) {
    for (std::size_t k = 0; k < params.n_values.size(); ++k) {
      care_report::Row row;
      row.method = source.method;
      row.n = static_cast<unsigned>(params.n_values[k]);
      row.precision = source.rows[k].precision;
      row.recall = source.rows[k].recall;
      row.f1 = source.rows[k].f1;
      row.researchers = source.researcher_count;
      if (with_increase) {
        const auto rate =
            care::increase_rate(group.care, group.baseline, params.n_values[k]);
        row.has_increase = rate.has_value();
        row.increase = rate.value_or(0.0);
      }
      report.rows.push_back(std::move(row));
    }
  };
  push(group.care, true);
  push(group.baseline, false);
}

}  // namespace

extern "C" {

const char* care_version(void) { return "0.1.0"; }

const char* care_status_name(care_status status) {
  switch (status) {
    case CARE_OK: return "ok";
    case CARE_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CARE_ERROR_IO: return "io error";
    case CARE_ERROR_PARSE: return "parse error";
    case CARE_ERROR_CONFIG: return "configuration error";
    case CARE_ERROR_NOT_FOUND: return "not found";
    case CARE_ERROR_EMPTY: return "empty input";
    case CARE_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* care_last_error(void) { return g_last_error.c_str(); }

/* ---- corpus ------------------------------------------------------------ */

care_status care_corpus_load(const char* readings_path,
                             const char* authorships_path, care_corpus** out) {
  if (readings_path == nullptr || out == nullptr) {
    return fail_invalid("care_corpus_load: readings_path and out are required");
  }
  return guarded([&] {
    auto readings_in = open_input(readings_path);
    const auto readings = care::load_reading_relations(readings_in, readings_path);
    std::vector<care::RawAuthorship> authorships;
    if (authorships_path != nullptr) {
      auto authorships_in = open_input(authorships_path);
      authorships = care::load_authorships(authorships_in, authorships_path);
    }
    *out = new care_corpus{
        std::make_shared<care::Corpus>(care::make_corpus(readings, authorships))};
  });
}

care_status care_corpus_parse(const char* readings_text,
                              const char* authorships_text, care_corpus** out) {
  if (readings_text == nullptr || out == nullptr) {
    return fail_invalid("care_corpus_parse: readings_text and out are required");
  }
  return guarded([&] {
    std::istringstream readings_in{std::string(readings_text)};
    const auto readings = care::load_reading_relations(readings_in, "<readings>");
    std::vector<care::RawAuthorship> authorships;
    if (authorships_text != nullptr) {
      std::istringstream authorships_in{std::string(authorships_text)};
      authorships = care::load_authorships(authorships_in, "<authorships>");
    }
    *out = new care_corpus{
        std::make_shared<care::Corpus>(care::make_corpus(readings, authorships))};
  });
}

void care_corpus_free(care_corpus* corpus) { delete corpus; }

size_t care_corpus_researchers(const care_corpus* corpus) {
  return corpus ? static_cast<size_t>(corpus->value->researcher_count()) : 0;
}

size_t care_corpus_articles(const care_corpus* corpus) {
  return corpus ? static_cast<size_t>(corpus->value->article_count()) : 0;
}

size_t care_corpus_authors(const care_corpus* corpus) {
  return corpus ? static_cast<size_t>(corpus->value->author_count()) : 0;
}

size_t care_corpus_readings(const care_corpus* corpus) {
  return corpus ? corpus->value->reading_count() : 0;
}

size_t care_corpus_authorships(const care_corpus* corpus) {
  return corpus ? corpus->value->authorship_count() : 0;
}

care_status care_corpus_prune(const care_corpus* corpus, unsigned min_readers,
                              care_corpus** out) {
  if (corpus == nullptr || out == nullptr) {
    return fail_invalid("care_corpus_prune: corpus and out are required");
  }
  return guarded([&] {
    *out = new care_corpus{std::make_shared<care::Corpus>(
        care::prune_articles(*corpus->value, static_cast<int>(min_readers)))};
  });
}

care_status care_corpus_write(const care_corpus* corpus,
                              const char* readings_path,
                              const char* authorships_path) {
  if (corpus == nullptr || readings_path == nullptr || authorships_path == nullptr) {
    return fail_invalid("care_corpus_write: all arguments are required");
  }
  return guarded([&] {
    auto readings_out = open_output(readings_path);
    care::write_readings(*corpus->value, readings_out);
    if (!readings_out.flush()) {
      throw care::IoError(std::string("failed writing ") + readings_path);
    }
    auto authorships_out = open_output(authorships_path);
    care::write_authorships(*corpus->value, authorships_out);
    if (!authorships_out.flush()) {
      throw care::IoError(std::string("failed writing ") + authorships_path);
    }
  });
}

care_status care_corpus_split(const care_corpus* corpus, double test_ratio,
                              unsigned small_library_cutoff, uint64_t seed,
                              care_split** out) {
  if (corpus == nullptr || out == nullptr) {
    return fail_invalid("care_corpus_split: corpus and out are required");
  }
  return guarded([&] {
    auto split = std::make_shared<care::SplitCorpus>(care::split_train_test(
        *corpus->value, test_ratio, static_cast<int>(small_library_cutoff), seed));
    auto* handle = new care_split;
    handle->value = split;
    handle->train_view.value =
        std::shared_ptr<const care::Corpus>(split, &split->train);
    *out = handle;
  });
}

const care_corpus* care_split_train(const care_split* split) {
  return split ? &split->train_view : nullptr;
}

size_t care_split_test_count(const care_split* split) {
  return split ? split->value->test.size() : 0;
}

uint64_t care_split_seed(const care_split* split) {
  return split ? split->value->seed : 0;
}

void care_split_free(care_split* split) { delete split; }

/* ---- common-author relations ------------------------------------------- */

care_status care_relations_derive(const care_corpus* corpus, unsigned min_shared,
                                  care_relations** out) {
  if (corpus == nullptr || out == nullptr) {
    return fail_invalid("care_relations_derive: corpus and out are required");
  }
  return guarded([&] {
    *out = new care_relations{
        care::derive_relations(*corpus->value, static_cast<int>(min_shared))};
  });
}

size_t care_relations_pairs(const care_relations* relations) {
  return relations ? relations->value.pair_count() : 0;
}

care_status care_relations_write(const care_relations* relations,
                                 const care_corpus* corpus, const char* path) {
  if (relations == nullptr || corpus == nullptr || path == nullptr) {
    return fail_invalid("care_relations_write: all arguments are required");
  }
  return guarded([&] {
    auto out = open_output(path);
    care::write_relations(relations->value, *corpus->value, out);
    if (!out.flush()) throw care::IoError(std::string("failed writing ") + path);
  });
}

void care_relations_free(care_relations* relations) { delete relations; }

/* ---- researcher features ------------------------------------------------ */

care_status care_features_compute(const care_corpus* train,
                                  const care_relations* relations,
                                  care_features** out) {
  if (train == nullptr || relations == nullptr || out == nullptr) {
    return fail_invalid("care_features_compute: all arguments are required");
  }
  return guarded([&] {
    const auto all = care::compute_all_features(*train->value, relations->value);
    auto table = std::make_unique<care_features>();
    table->rows.reserve(all.size());
    for (const auto& f : all) {
      table->rows.push_back(
          care_features::Row{train->value->researcher_token(f.researcher), f});
    }
    *out = table.release();
  });
}

size_t care_features_count(const care_features* features) {
  return features ? features->rows.size() : 0;
}

care_status care_features_row(const care_features* features, size_t index,
                              care_feature_row* out) {
  if (features == nullptr || out == nullptr) {
    return fail_invalid("care_features_row: features and out are required");
  }
  if (index >= features->rows.size()) {
    return fail_invalid("care_features_row: index out of range");
  }
  const auto& row = features->rows[index];
  out->researcher = row.researcher.c_str();
  out->library_size = static_cast<unsigned>(row.features.library_size);
  out->fe1 = row.features.fe1;
  out->fe2 = row.features.fe2;
  out->fe3 = row.features.fe3;
  out->fe4 = row.features.fe4;
  g_last_error.clear();
  return CARE_OK;
}

void care_features_free(care_features* features) { delete features; }

care_status care_policy_selects(const care_policy* policy,
                                const care_feature_row* row, int* out_selected) {
  if (policy == nullptr || row == nullptr || out_selected == nullptr) {
    return fail_invalid("care_policy_selects: all arguments are required");
  }
  return guarded([&] {
    const care::ThresholdPolicy converted = to_policy(*policy);
    if (converted.empty()) {
      throw care::ConfigError("threshold policy has no thresholds set");
    }
    care::ResearcherFeatures f;
    f.library_size = static_cast<int>(row->library_size);
    f.fe1 = row->fe1;
    f.fe2 = row->fe2;
    f.fe3 = row->fe3;
    f.fe4 = row->fe4;
    *out_selected = converted.selects(f) ? 1 : 0;
  });
}

/* ---- ranking ------------------------------------------------------------ */

care_status care_recommend(const care_corpus* train,
                           const care_relations* relations,
                           const char* researcher_token, double alpha,
                           unsigned max_steps, unsigned top_n,
                           care_recommendation** out) {
  if (train == nullptr || researcher_token == nullptr || out == nullptr) {
    return fail_invalid("care_recommend: train, researcher_token, out are required");
  }
  return guarded([&] {
    const auto researcher = train->value->find_researcher(researcher_token);
    if (!researcher) {
      throw care::NotFoundError(std::string("unknown researcher: ") +
                                researcher_token);
    }
    const care::RecommendationList list = care::recommend(
        *train->value, relations ? &relations->value : nullptr, *researcher, alpha,
        static_cast<int>(max_steps), static_cast<int>(top_n));
    auto rec = std::make_unique<care_recommendation>();
    rec->entries.reserve(list.entries.size());
    for (const auto& entry : list.entries) {
      rec->entries.push_back(care_recommendation::Entry{
          train->value->article_token(entry.article), entry.score});
    }
    *out = rec.release();
  });
}

size_t care_recommendation_count(const care_recommendation* rec) {
  return rec ? rec->entries.size() : 0;
}

const char* care_recommendation_article(const care_recommendation* rec,
                                        size_t index) {
  if (rec == nullptr || index >= rec->entries.size()) return nullptr;
  return rec->entries[index].article.c_str();
}

double care_recommendation_score(const care_recommendation* rec, size_t index) {
  if (rec == nullptr || index >= rec->entries.size()) return 0.0;
  return rec->entries[index].score;
}

void care_recommendation_free(care_recommendation* rec) { delete rec; }

/* ---- evaluation ---------------------------------------------------------- */

care_status care_experiment_run(const care_split* split,
                                const care_relations* relations,
                                const care_policy* policy,
                                const care_experiment_params* params,
                                care_report** out) {
  if (split == nullptr || relations == nullptr || out == nullptr) {
    return fail_invalid("care_experiment_run: split, relations, out are required");
  }
  return guarded([&] {
    const care::ExperimentParams converted = to_params(params);
    std::optional<care::ThresholdPolicy> converted_policy;
    if (policy != nullptr) converted_policy = to_policy(*policy);
    const care::ExperimentResult result = care::run_experiment(
        *split->value, relations->value, converted_policy, converted);
    auto report = std::make_unique<care_report>();
    append_group(*report, result, converted);
    *out = report.release();
  });
}

care_status care_compare_run(const care_split* split,
                             const care_relations* relations,
                             const care_policy* policy,
                             const care_experiment_params* params,
                             care_report** out) {
  if (split == nullptr || relations == nullptr || policy == nullptr ||
      out == nullptr) {
    return fail_invalid("care_compare_run: all arguments are required");
  }
  return guarded([&] {
    const care::ExperimentParams converted = to_params(params);
    const care::CompareResult result = care::run_compare(
        *split->value, relations->value, to_policy(*policy), converted);
    auto report = std::make_unique<care_report>();
    append_group(*report, result.all, converted);
    append_group(*report, result.filtered, converted);
    *out = report.release();
  });
}

size_t care_report_rows(const care_report* report) {
  return report ? report->rows.size() : 0;
}

care_status care_report_row_at(const care_report* report, size_t index,
                               care_report_row* out) {
  if (report == nullptr || out == nullptr) {
    return fail_invalid("care_report_row_at: report and out are required");
  }
  if (index >= report->rows.size()) {
    return fail_invalid("care_report_row_at: index out of range");
  }
  const auto& row = report->rows[index];
  out->method = row.method.c_str();
  out->n = row.n;
  out->precision = row.precision;
  out->recall = row.recall;
  out->f1 = row.f1;
  out->researchers = row.researchers;
  out->has_increase_rate = row.has_increase ? 1 : 0;
  out->increase_rate = row.increase;
  g_last_error.clear();
  return CARE_OK;
}

void care_report_free(care_report* report) { delete report; }

/* ---- synthetic data ------------------------------------------------------ */

care_status care_synthesize(unsigned researchers, unsigned articles,
                            unsigned authors, double loyalty, uint64_t seed,
                            care_corpus** out) {
  if (out == nullptr) return fail_invalid("care_synthesize: out is required");
  return guarded([&] {
    *out = new care_corpus{std::make_shared<care::Corpus>(
        care::generate_synthetic_corpus(static_cast<int>(researchers),
                                        static_cast<int>(articles),
                                        static_cast<int>(authors), loyalty, seed))};
  });
}

} /* extern "C" */
