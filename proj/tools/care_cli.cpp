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

// Command-line front end for the CARE recommender. Every command is a pure
// function of its input files, configuration, and seed: rerunning with the
// same arguments reproduces the same bytes. Data goes to stdout (or files
// under --out); diagnostics go to stderr.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>

#include "care/care.h"

namespace {

// ---------------------------------------------------------------------------
// error plumbing

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(care_status status, const char* what) {
  if (status != CARE_OK) {
    throw CliError(std::string(what) + ": " + care_last_error() + " (" +
                   care_status_name(status) + ")");
  }
}

template <typename T, void (*Free)(T*)>
using handle = std::unique_ptr<T, std::integral_constant<void (*)(T*), Free>>;

using corpus_handle = handle<care_corpus, care_corpus_free>;
using split_handle = handle<care_split, care_split_free>;
using relations_handle = handle<care_relations, care_relations_free>;
using features_handle = handle<care_features, care_features_free>;
using recommendation_handle = handle<care_recommendation, care_recommendation_free>;
using report_handle = handle<care_report, care_report_free>;

// ---------------------------------------------------------------------------
// run configuration

struct RunConfig {
  std::string readings;
  std::string authorships;
  std::string out_dir;
  unsigned min_readers = 5;
  unsigned min_shared = 2;
  double test_ratio = 0.2;
  unsigned small_library_cutoff = 5;
  std::uint64_t seed = 42;
  double alpha = 0.8;
  unsigned max_steps = 100;
  std::string n_values = "2,4,6,8,10";
  unsigned threads = 1;

  std::optional<double> fe1_min;
  std::optional<double> fe2_min;
  std::optional<std::int64_t> fe3_min;
  std::optional<double> fe4_min;
  std::string combine = "all";

  bool has_policy() const { return fe1_min || fe2_min || fe3_min || fe4_min; }

  care_policy policy() const {
    care_policy p{};
    if (fe1_min) { p.has_fe1_min = 1; p.fe1_min = *fe1_min; }
    if (fe2_min) { p.has_fe2_min = 1; p.fe2_min = *fe2_min; }
    if (fe3_min) { p.has_fe3_min = 1; p.fe3_min = *fe3_min; }
    if (fe4_min) { p.has_fe4_min = 1; p.fe4_min = *fe4_min; }
    p.combine_all = combine == "all" ? 1 : 0;
    return p;
  }
};

// Flat key=value configuration file. Keys match the long flag names without
// the leading dashes; flags given on the command line win.
std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open config file " + path);
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CliError(path + ":" + std::to_string(line_number) +
                     ": expected key=value");
    }
    const auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    values[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
  }
  return values;
}

// One subcommand's bindings between flags, config-file keys, and RunConfig.
class OptionSet {
 public:
  explicit OptionSet(CLI::App* cmd) : cmd_(cmd) {
    cmd->add_option("--config", config_path_,
                    "flat key=value configuration file; flags override it");
  }

  template <typename T>
  void bind(const std::string& flag, T& target, const std::string& help) {
    auto* opt = cmd_->add_option(flag, target, help);
    keyed_.push_back({flag.substr(2), opt, [&target](const std::string& raw) {
                        set_from_string(target, raw);
                      }});
  }

  template <typename T>
  void bind_optional(const std::string& flag, std::optional<T>& target,
                     const std::string& help) {
    auto* opt = cmd_->add_option_function<T>(
        flag, [&target](const T& v) { target = v; }, help);
    keyed_.push_back({flag.substr(2), opt, [&target](const std::string& raw) {
                        T value{};
                        set_from_string(value, raw);
                        target = value;
                      }});
  }

  // Fills every flag the user did not pass from the config file (if any).
  void apply_config_file() {
    if (config_path_.empty()) return;
    const auto values = load_config_file(config_path_);
    for (const auto& binding : keyed_) {
      if (binding.opt->count() > 0) continue;
      const auto it = values.find(binding.key);
      if (it == values.end()) continue;
      try {
        binding.set(it->second);
      } catch (const std::exception&) {
        throw CliError("config file: bad value for " + binding.key + ": " +
                       it->second);
      }
    }
  }

 private:
  template <typename T>
  static void set_from_string(T& target, const std::string& raw) {
    if constexpr (std::is_same_v<T, std::string>) {
      target = raw;
    } else {
      std::istringstream in(raw);
      in >> target;
      if (in.fail() || !in.eof()) throw CliError("bad value: " + raw);
    }
  }

  struct Binding {
    std::string key;
    CLI::Option* opt;
    std::function<void(const std::string&)> set;
  };

  CLI::App* cmd_;
  std::string config_path_;
  std::vector<Binding> keyed_;
};

void bind_inputs(OptionSet& opts, RunConfig& cfg) {
  opts.bind("--readings", cfg.readings,
            "reading-relations file (researcher <TAB> article)");
  opts.bind("--authorships", cfg.authorships,
            "authorships file (article <TAB> author)");
  opts.bind("--out", cfg.out_dir, "output directory (default: stdout)");
}

void bind_corpus(OptionSet& opts, RunConfig& cfg) {
  opts.bind("--min-readers", cfg.min_readers,
            "remove articles with fewer readers than this");
  opts.bind("--min-shared", cfg.min_shared,
            "authors two articles must share to be related");
}

void bind_split(OptionSet& opts, RunConfig& cfg) {
  opts.bind("--test-ratio", cfg.test_ratio, "fraction of readings held out");
  opts.bind("--small-library-cutoff", cfg.small_library_cutoff,
            "libraries below this contribute one test reading");
  opts.bind("--seed", cfg.seed, "seed for all randomized steps");
}

void bind_rank(OptionSet& opts, RunConfig& cfg) {
  opts.bind("--alpha", cfg.alpha, "walk probability (restart with 1-alpha)");
  opts.bind("--max-steps", cfg.max_steps, "iteration budget per ranking");
}

void bind_policy(OptionSet& opts, RunConfig& cfg) {
  opts.bind_optional("--fe1-min", cfg.fe1_min, "FE1 threshold (strict >)");
  opts.bind_optional("--fe2-min", cfg.fe2_min, "FE2 threshold (strict >)");
  opts.bind_optional("--fe3-min", cfg.fe3_min, "FE3 threshold (strict >)");
  opts.bind_optional("--fe4-min", cfg.fe4_min, "FE4 threshold (strict >)");
  opts.bind("--combine", cfg.combine, "combine thresholds with 'any' or 'all'");
}

void bind_evaluation(OptionSet& opts, RunConfig& cfg) {
  opts.bind("--n-values", cfg.n_values, "comma-separated recommendation lengths");
  opts.bind("--threads", cfg.threads, "rank researchers in parallel");
}

std::vector<unsigned> parse_unsigned_list(const std::string& text,
                                          const char* what) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      const unsigned long v = std::stoul(item);
      if (v < 1) throw CliError("");
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw CliError(std::string(what) + ": bad entry '" + item + "'");
    }
  }
  if (out.empty()) throw CliError(std::string(what) + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw CliError(std::string(what) + ": bad entry '" + item + "'");
    }
  }
  if (out.empty()) throw CliError(std::string(what) + ": empty list");
  return out;
}

// ---------------------------------------------------------------------------
// output

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

// Writes to stdout, or to a named file under --out when set.
class Output {
 public:
  Output(const RunConfig& cfg, const std::string& filename) {
    if (!cfg.out_dir.empty()) {
      std::filesystem::create_directories(cfg.out_dir);
      path_ = (std::filesystem::path(cfg.out_dir) / filename).string();
      file_.open(path_, std::ios::binary);
      if (!file_) throw CliError("cannot open " + path_ + " for writing");
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void finish() {
    if (file_.is_open()) {
      file_.flush();
      if (!file_) throw CliError("failed writing " + path_);
      std::cerr << "wrote " << path_ << "\n";
    }
  }

 private:
  std::string path_;
  std::ofstream file_;
};

// The effective configuration is echoed into every report so a result file
// is self-describing. Thread count is execution detail, not configuration,
// and stays out so parallel runs stay byte-identical.
void echo_config(std::ostream& out, const RunConfig& cfg, bool with_alpha) {
  out << "# readings=" << cfg.readings << "\n";
  out << "# authorships=" << cfg.authorships << "\n";
  out << "# min-readers=" << cfg.min_readers << "\n";
  out << "# min-shared=" << cfg.min_shared << "\n";
  out << "# test-ratio=" << fmt(cfg.test_ratio, 6) << "\n";
  out << "# small-library-cutoff=" << cfg.small_library_cutoff << "\n";
  out << "# seed=" << cfg.seed << "\n";
  if (with_alpha) out << "# alpha=" << fmt(cfg.alpha, 6) << "\n";
  out << "# max-steps=" << cfg.max_steps << "\n";
  out << "# n-values=" << cfg.n_values << "\n";
  if (cfg.fe1_min) out << "# fe1-min=" << fmt(*cfg.fe1_min, 6) << "\n";
  if (cfg.fe2_min) out << "# fe2-min=" << fmt(*cfg.fe2_min, 6) << "\n";
  if (cfg.fe3_min) out << "# fe3-min=" << *cfg.fe3_min << "\n";
  if (cfg.fe4_min) out << "# fe4-min=" << fmt(*cfg.fe4_min, 6) << "\n";
  if (cfg.has_policy()) out << "# combine=" << cfg.combine << "\n";
}

// ---------------------------------------------------------------------------
// pipeline pieces shared by the commands

corpus_handle load_pruned(const RunConfig& cfg) {
  if (cfg.readings.empty()) throw CliError("--readings is required");
  care_corpus* raw = nullptr;
  check(care_corpus_load(cfg.readings.c_str(),
                         cfg.authorships.empty() ? nullptr : cfg.authorships.c_str(),
                         &raw),
        "loading corpus");
  corpus_handle loaded(raw);
  care_corpus* pruned = nullptr;
  check(care_corpus_prune(loaded.get(), cfg.min_readers, &pruned), "pruning corpus");
  return corpus_handle(pruned);
}

relations_handle derive(const RunConfig& cfg, const care_corpus* corpus) {
  care_relations* raw = nullptr;
  check(care_relations_derive(corpus, cfg.min_shared, &raw), "deriving relations");
  return relations_handle(raw);
}

split_handle split(const RunConfig& cfg, const care_corpus* corpus) {
  care_split* raw = nullptr;
  check(care_corpus_split(corpus, cfg.test_ratio, cfg.small_library_cutoff,
                          cfg.seed, &raw),
        "splitting corpus");
  return split_handle(raw);
}

struct ExperimentSetup {
  care_experiment_params params{};
  std::vector<unsigned> n_values;
};

ExperimentSetup experiment_params(const RunConfig& cfg) {
  ExperimentSetup setup;
  setup.n_values = parse_unsigned_list(cfg.n_values, "--n-values");
  setup.params.alpha = cfg.alpha;
  setup.params.max_steps = cfg.max_steps;
  setup.params.n_values = setup.n_values.data();
  setup.params.n_value_count = setup.n_values.size();
  setup.params.threads = cfg.threads;
  return setup;
}

void print_report_rows(std::ostream& out, const care_report* report,
                       bool with_increase) {
  out << "# method\tN\tprecision\trecall\tf1\tresearchers";
  if (with_increase) out << "\tincrease_rate";
  out << "\n";
  for (std::size_t i = 0; i < care_report_rows(report); ++i) {
    care_report_row row{};
    check(care_report_row_at(report, i, &row), "reading report row");
    out << row.method << '\t' << row.n << '\t' << fmt(row.precision, 6) << '\t'
        << fmt(row.recall, 6) << '\t' << fmt(row.f1, 6) << '\t' << row.researchers;
    if (with_increase) {
      out << '\t' << (row.has_increase_rate ? fmt(row.increase_rate, 6) : "-");
    }
    out << "\n";
  }
}

// ---------------------------------------------------------------------------
// commands

int cmd_ingest(const RunConfig& cfg) {
  const corpus_handle corpus = load_pruned(cfg);
  const relations_handle relations = derive(cfg, corpus.get());

  const auto researchers = care_corpus_researchers(corpus.get());
  const auto articles = care_corpus_articles(corpus.get());
  const auto readings = care_corpus_readings(corpus.get());
  const auto pairs = care_relations_pairs(relations.get());

  const double possible_readings =
      static_cast<double>(researchers) * static_cast<double>(articles);
  const double possible_pairs =
      static_cast<double>(articles) * (static_cast<double>(articles) - 1.0) / 2.0;
  const double reading_sparsity =
      possible_readings > 0.0
          ? 1.0 - static_cast<double>(readings) / possible_readings
          : 1.0;
  const double relation_sparsity =
      possible_pairs > 0.0 ? 1.0 - static_cast<double>(pairs) / possible_pairs : 1.0;

  Output output(cfg, "corpus_summary.tsv");
  auto& out = output.stream();
  out << "researchers\t" << researchers << "\n";
  out << "articles\t" << articles << "\n";
  out << "reading_relations\t" << readings << "\n";
  out << "reading_sparsity\t" << fmt(reading_sparsity, 6) << "\n";
  out << "common_author_relations\t" << pairs << "\n";
  out << "common_author_sparsity\t" << fmt(relation_sparsity, 6) << "\n";
  output.finish();

  if (!cfg.out_dir.empty()) {
    const auto dir = std::filesystem::path(cfg.out_dir);
    check(care_corpus_write(corpus.get(), (dir / "readings.tsv").string().c_str(),
                            (dir / "authorships.tsv").string().c_str()),
          "writing normalized corpus");
    check(care_relations_write(relations.get(), corpus.get(),
                               (dir / "relations.tsv").string().c_str()),
          "writing relations");
    std::cerr << "wrote " << (dir / "readings.tsv").string() << ", "
              << (dir / "authorships.tsv").string() << ", "
              << (dir / "relations.tsv").string() << "\n";
  }
  return 0;
}

int cmd_features(const RunConfig& cfg, bool select) {
  const corpus_handle corpus = load_pruned(cfg);
  const split_handle parts = split(cfg, corpus.get());
  const care_corpus* train = care_split_train(parts.get());
  const relations_handle relations = derive(cfg, train);

  care_features* raw = nullptr;
  check(care_features_compute(train, relations.get(), &raw), "computing features");
  const features_handle features(raw);

  care_policy policy{};
  if (select) {
    if (!cfg.has_policy()) {
      throw CliError("--select needs at least one threshold (--fe1-min ...)");
    }
    policy = cfg.policy();
  }

  Output output(cfg, "features.tsv");
  auto& out = output.stream();
  out << "# researcher\tlibrary_size\tfe1\tfe2\tfe3\tfe4\n";
  for (std::size_t i = 0; i < care_features_count(features.get()); ++i) {
    care_feature_row row{};
    check(care_features_row(features.get(), i, &row), "reading feature row");
    if (select) {
      int selected = 0;
      check(care_policy_selects(&policy, &row, &selected), "applying policy");
      if (!selected) continue;
    }
    out << row.researcher << '\t' << row.library_size << '\t' << fmt(row.fe1, 6)
        << '\t' << fmt(row.fe2, 6) << '\t' << row.fe3 << '\t' << fmt(row.fe4, 6)
        << "\n";
  }
  output.finish();
  return 0;
}

int cmd_recommend(const RunConfig& cfg, const std::string& researcher, unsigned n,
                  bool baseline) {
  const corpus_handle corpus = load_pruned(cfg);
  relations_handle relations;
  if (!baseline) relations = derive(cfg, corpus.get());

  care_recommendation* raw = nullptr;
  check(care_recommend(corpus.get(), relations.get(), researcher.c_str(), cfg.alpha,
                       cfg.max_steps, n, &raw),
        "ranking articles");
  const recommendation_handle rec(raw);

  Output output(cfg, "recommendations.tsv");
  auto& out = output.stream();
  out << "# researcher\trank\tarticle\tscore\n";
  for (std::size_t i = 0; i < care_recommendation_count(rec.get()); ++i) {
    out << researcher << '\t' << (i + 1) << '\t'
        << care_recommendation_article(rec.get(), i) << '\t'
        << fmt(care_recommendation_score(rec.get(), i), 8) << "\n";
  }
  output.finish();
  return 0;
}

int cmd_evaluate(const RunConfig& cfg) {
  const corpus_handle corpus = load_pruned(cfg);
  const split_handle parts = split(cfg, corpus.get());
  const relations_handle relations = derive(cfg, care_split_train(parts.get()));
  const ExperimentSetup setup = experiment_params(cfg);

  care_policy policy{};
  const bool filtered = cfg.has_policy();
  if (filtered) policy = cfg.policy();

  care_report* raw = nullptr;
  check(care_experiment_run(parts.get(), relations.get(),
                            filtered ? &policy : nullptr, &setup.params, &raw),
        "running experiment");
  const report_handle report(raw);

  Output output(cfg, "evaluate_report.tsv");
  echo_config(output.stream(), cfg, true);
  print_report_rows(output.stream(), report.get(), false);
  output.finish();
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  const corpus_handle corpus = load_pruned(cfg);
  const split_handle parts = split(cfg, corpus.get());
  const relations_handle relations = derive(cfg, care_split_train(parts.get()));
  const ExperimentSetup setup = experiment_params(cfg);
  const care_policy policy = cfg.policy();

  care_report* raw = nullptr;
  check(care_compare_run(parts.get(), relations.get(), &policy, &setup.params, &raw),
        "running comparison");
  const report_handle report(raw);

  Output output(cfg, "compare_report.tsv");
  echo_config(output.stream(), cfg, true);
  print_report_rows(output.stream(), report.get(), true);
  output.finish();
  return 0;
}

int cmd_sweep_alpha(const RunConfig& cfg, const std::string& alphas_text) {
  const corpus_handle corpus = load_pruned(cfg);
  const split_handle parts = split(cfg, corpus.get());
  const relations_handle relations = derive(cfg, care_split_train(parts.get()));
  ExperimentSetup setup = experiment_params(cfg);
  const std::vector<double> alphas = parse_double_list(alphas_text, "--alphas");

  care_policy policy{};
  const bool filtered = cfg.has_policy();
  if (filtered) policy = cfg.policy();

  Output output(cfg, "alpha_sweep.tsv");
  auto& out = output.stream();
  echo_config(out, cfg, false);
  out << "# alphas=" << alphas_text << "\n";
  out << "# alpha\tmethod\tN\tprecision\trecall\tf1\tresearchers\n";
  for (const double alpha : alphas) {
    setup.params.alpha = alpha;
    care_report* raw = nullptr;
    check(care_experiment_run(parts.get(), relations.get(),
                              filtered ? &policy : nullptr, &setup.params, &raw),
          "running experiment");
    const report_handle report(raw);
    for (std::size_t i = 0; i < care_report_rows(report.get()); ++i) {
      care_report_row row{};
      check(care_report_row_at(report.get(), i, &row), "reading report row");
      out << fmt(alpha, 6) << '\t' << row.method << '\t' << row.n << '\t'
          << fmt(row.precision, 6) << '\t' << fmt(row.recall, 6) << '\t'
          << fmt(row.f1, 6) << '\t' << row.researchers << "\n";
    }
  }
  output.finish();
  return 0;
}

int cmd_synth(const RunConfig& cfg, unsigned researchers, unsigned articles,
              unsigned authors, double loyalty) {
  if (cfg.out_dir.empty()) throw CliError("synth requires --out");

  care_corpus* raw = nullptr;
  check(care_synthesize(researchers, articles, authors, loyalty, cfg.seed, &raw),
        "generating corpus");
  const corpus_handle corpus(raw);

  std::filesystem::create_directories(cfg.out_dir);
  const auto dir = std::filesystem::path(cfg.out_dir);
  const auto readings_path = (dir / "readings.tsv").string();
  const auto authorships_path = (dir / "authorships.tsv").string();
  check(care_corpus_write(corpus.get(), readings_path.c_str(),
                          authorships_path.c_str()),
        "writing corpus");

  std::cout << "researchers\t" << care_corpus_researchers(corpus.get()) << "\n";
  std::cout << "articles\t" << care_corpus_articles(corpus.get()) << "\n";
  std::cout << "authors\t" << care_corpus_authors(corpus.get()) << "\n";
  std::cout << "reading_relations\t" << care_corpus_readings(corpus.get()) << "\n";
  std::cout << "authorships\t" << care_corpus_authorships(corpus.get()) << "\n";
  std::cerr << "wrote " << readings_path << ", " << authorships_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CARE: scientific-article recommendations from common-author "
               "relations and reading histories"};
  app.set_version_flag("--version", care_version());
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::unique_ptr<OptionSet>> option_sets;
  const auto options_for = [&](CLI::App* cmd) -> OptionSet& {
    option_sets.push_back(std::make_unique<OptionSet>(cmd));
    return *option_sets.back();
  };

  auto* ingest = app.add_subcommand(
      "ingest", "load, normalize and prune the corpus; print its statistics");
  {
    auto& opts = options_for(ingest);
    bind_inputs(opts, cfg);
    bind_corpus(opts, cfg);
  }

  bool select_only = false;
  auto* features = app.add_subcommand(
      "features", "compute FE1-FE4 per researcher on the training split");
  {
    auto& opts = options_for(features);
    bind_inputs(opts, cfg);
    bind_corpus(opts, cfg);
    bind_split(opts, cfg);
    bind_policy(opts, cfg);
    features->add_flag("--select", select_only,
                       "print only researchers selected by the thresholds");
  }

  std::string researcher_token;
  unsigned top_n = 10;
  bool baseline = false;
  auto* recommend = app.add_subcommand(
      "recommend", "rank unread articles for one researcher");
  {
    auto& opts = options_for(recommend);
    bind_inputs(opts, cfg);
    bind_corpus(opts, cfg);
    bind_rank(opts, cfg);
    recommend->add_option("researcher", researcher_token, "researcher token")
        ->required();
    recommend->add_option("--top-n", top_n, "recommendation list length");
    recommend->add_flag("--baseline", baseline,
                        "ignore common-author relations (baseline pipeline)");
  }

  auto* evaluate = app.add_subcommand(
      "evaluate", "evaluate CARE and Baseline on a seeded train/test split");
  {
    auto& opts = options_for(evaluate);
    bind_inputs(opts, cfg);
    bind_corpus(opts, cfg);
    bind_split(opts, cfg);
    bind_rank(opts, cfg);
    bind_policy(opts, cfg);
    bind_evaluation(opts, cfg);
  }

  auto* compare = app.add_subcommand(
      "compare", "run CARE-1/2 vs Baseline-1/2 and report increase rates");
  {
    auto& opts = options_for(compare);
    bind_inputs(opts, cfg);
    bind_corpus(opts, cfg);
    bind_split(opts, cfg);
    bind_rank(opts, cfg);
    bind_policy(opts, cfg);
    bind_evaluation(opts, cfg);
  }

  std::string alphas = "0.2,0.4,0.6,0.8";
  auto* sweep = app.add_subcommand(
      "sweep-alpha", "evaluate the pipelines across walk probabilities");
  {
    auto& opts = options_for(sweep);
    bind_inputs(opts, cfg);
    bind_corpus(opts, cfg);
    bind_split(opts, cfg);
    bind_policy(opts, cfg);
    bind_evaluation(opts, cfg);
    opts.bind("--max-steps", cfg.max_steps, "iteration budget per ranking");
    opts.bind("--alphas", alphas, "comma-separated walk probabilities");
  }

  unsigned synth_researchers = 200;
  unsigned synth_articles = 400;
  unsigned synth_authors = 80;
  double synth_loyalty = 0.9;
  auto* synth = app.add_subcommand(
      "synth", "generate a seeded synthetic corpus under --out");
  {
    auto& opts = options_for(synth);
    opts.bind("--out", cfg.out_dir, "output directory");
    opts.bind("--seed", cfg.seed, "generator seed");
    opts.bind("--researchers", synth_researchers, "researcher count");
    opts.bind("--articles", synth_articles, "article count");
    opts.bind("--authors", synth_authors, "author count");
    opts.bind("--loyalty", synth_loyalty,
              "probability of reading the home author's articles");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& opts : option_sets) opts->apply_config_file();

    // The canonical comparison filters with FE1 > 0.1 and FE2 > 0.1 unless
    // the caller picks other thresholds.
    if (compare->parsed() && !cfg.has_policy()) {
      cfg.fe1_min = 0.1;
      cfg.fe2_min = 0.1;
      cfg.combine = "all";
    }
    if (cfg.combine != "any" && cfg.combine != "all") {
      throw CliError("--combine must be 'any' or 'all'");
    }

    if (ingest->parsed()) return cmd_ingest(cfg);
    if (features->parsed()) return cmd_features(cfg, select_only);
    if (recommend->parsed())
      return cmd_recommend(cfg, researcher_token, top_n, baseline);
    if (evaluate->parsed()) return cmd_evaluate(cfg);
    if (compare->parsed()) return cmd_compare(cfg);
    if (sweep->parsed()) return cmd_sweep_alpha(cfg, alphas);
    if (synth->parsed())
      return cmd_synth(cfg, synth_researchers, synth_articles, synth_authors,
                       synth_loyalty);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
