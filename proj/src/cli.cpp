/* Copyright 2026 The drelkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "drelkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>
#include <json.hpp>

#include "drelkit/corpus.hpp"
#include "drelkit/dataset.hpp"
#include "drelkit/embeddings.hpp"
#include "drelkit/error.hpp"
#include "drelkit/evaluation.hpp"
#include "drelkit/fileio.hpp"
#include "drelkit/model.hpp"
#include "drelkit/report.hpp"
#include "drelkit/results.hpp"
#include "drelkit/training.hpp"

namespace drelkit::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

// Parse errors re-thrown with "file:line: " in front.
[[noreturn]] void rethrow_located(const fs::path& path, const ParseError& e) {
  std::string where = path.string();
  if (e.line() > 0) where += ":" + std::to_string(e.line());
  throw ParseError(where + ": " + e.detail());
}

std::vector<DiscourseRelation> load_jsonl(const fs::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_jsonl(text);
  } catch (const ParseError& e) {
    rethrow_located(path, e);
  }
}

EmbeddingStore load_embeddings(const fs::path& path, bool l2_normalize) {
  const std::string bytes = read_file(path);
  try {
    auto store = read_embedding_file(bytes);
    return l2_normalize ? store.l2_normalized() : store;
  } catch (const ParseError& e) {
    rethrow_located(path, e);
  }
}

std::size_t jobs_from(std::optional<std::size_t> flag) {
  if (flag) return std::max<std::size_t>(*flag, 1);
  if (const char* env = std::getenv("DRELKIT_JOBS")) {
    std::size_t n = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc{} || ptr != s.data() + s.size() || n == 0) {
      throw UsageError("DRELKIT_JOBS must be a positive integer, got \"" + std::string(s) + "\"");
    }
    return n;
  }
  return 1;
}

std::string sanitize(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                    c == '_' || c == '.';
    out += ok ? c : '_';
  }
  return out;
}

// ---------------------------------------------------------------------------
// ingest

struct IngestArgs {
  std::string format;
  std::string column_map;
  std::string corpus;
  std::string lang;
  std::string doc_id;
  std::string split;
  std::string output;
  bool strict = false;
  std::vector<std::string> inputs;
};

void print_summary(std::span<const DiscourseRelation> rels, std::ostream& out) {
  std::map<RelationType::Kind, std::size_t> kinds;
  for (const auto& r : rels) ++kinds[r.rel_type.kind()];
  const auto hist = sense_histogram(rels);
  out << "relations: " << rels.size() << "\n";
  const std::pair<RelationType::Kind, const char*> rows[] = {
      {RelationType::Kind::Implicit, "Implicit"}, {RelationType::Kind::Explicit, "Explicit"},
      {RelationType::Kind::EntRel, "EntRel"},     {RelationType::Kind::AltLex, "AltLex"},
      {RelationType::Kind::Hypophora, "Hypophora"}, {RelationType::Kind::Other, "Other"}};
  for (const auto& [kind, name] : rows) out << name << ": " << kinds[kind] << "\n";
  for (auto sense : kAllSenses) out << to_string(sense) << ": " << hist[static_cast<std::size_t>(sense)] << "\n";
}

int cmd_ingest(const IngestArgs& a, std::ostream& out) {
  std::optional<PipeColumnMap> columns;
  if (a.format == "pipe") {
    if (a.column_map.empty()) throw UsageError("--format pipe requires --column-map");
    try {
      columns = PipeColumnMap::from_json(read_file(a.column_map));
    } catch (const ParseError& e) {
      rethrow_located(a.column_map, e);
    }
  }

  std::vector<DiscourseRelation> all;
  std::unordered_set<std::string> ids;
  for (const auto& input : a.inputs) {
    const fs::path path(input);
    const std::string text = read_file(path);
    std::vector<DiscourseRelation> rels;
    try {
      if (columns) {
        PipeSource source{a.doc_id.empty() ? path.stem().string() : a.doc_id, a.corpus, a.lang};
        rels = parse_pipe_file(text, *columns, source);
      } else {
        rels = parse_jsonl(text, {a.strict});
      }
    } catch (const ParseError& e) {
      rethrow_located(path, e);
    }
    for (auto& r : rels) {
      if (!ids.insert(r.id).second) throw DataError(path.string() + ": duplicate relation id \"" + r.id + "\"");
      all.push_back(std::move(r));
    }
  }

  if (!a.split.empty()) {
    const auto scheme = SplitScheme::pdtb_standard();
    std::vector<DiscourseRelation> kept;
    for (auto& r : all) {
      if (to_string(assign_split(r, scheme)) == a.split) kept.push_back(std::move(r));
    }
    all = std::move(kept);
  }

  print_summary(all, out);
  write_file(a.output, write_jsonl(all));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// emb

int cmd_emb_import(const std::string& input, const std::string& output, bool l2, std::ostream& out) {
  const std::string text = read_file(input);
  std::vector<EmbeddingStore::Entry> entries;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  std::istringstream lines(text);
  std::string line;
  try {
    while (std::getline(lines, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) throw ParseError("expected <key>\\t<values>", line_no);
      EmbeddingStore::Entry entry;
      entry.key = line.substr(0, tab);
      std::istringstream values(line.substr(tab + 1));
      std::string token;
      while (values >> token) {
        float v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
          throw ParseError("not a number: \"" + token + "\"", line_no);
        }
        entry.vector.push_back(v);
      }
      if (dim == 0) dim = entry.vector.size();
      if (entry.vector.size() != dim || dim == 0) {
        throw ParseError("expected " + std::to_string(dim) + " values, found " + std::to_string(entry.vector.size()),
                         line_no);
      }
      entries.push_back(std::move(entry));
    }
    if (dim == 0) throw ParseError("no vectors in input; the dimension is unknown");
    EmbeddingStore store = [&] {
      try {
        return EmbeddingStore(static_cast<std::uint32_t>(dim), std::move(entries));
      } catch (const DataError& e) {
        throw ParseError(e.what());
      }
    }();
    if (l2) store = store.l2_normalized();
    write_file(output, write_embedding_file(store));
    out << "wrote " << store.size() << " vectors of dim " << store.dim() << " to " << output
        << (l2 ? " (L2-normalized)" : "") << "\n";
  } catch (const ParseError& e) {
    rethrow_located(input, e);
  }
  return kExitOk;
}

int cmd_emb_inspect(const std::string& path, std::size_t show, std::ostream& out) {
  const auto store = load_embeddings(path, false);
  out << "format: EMB1 v" << kEmbeddingFormatVersion << "\n"
      << "dim: " << store.dim() << "\n"
      << "count: " << store.size() << "\n";
  for (std::size_t i = 0; i < std::min(show, store.size()); ++i) out << "key: " << store.key_at(i) << "\n";
  return kExitOk;
}

int cmd_emb_coverage(const std::string& emb, const std::vector<std::string>& corpora, std::ostream& out) {
  const auto store = load_embeddings(emb, false);
  std::vector<std::string> missing;
  for (const auto& path : corpora) {
    const auto rels = load_jsonl(path);
    const auto report = coverage(rels, store);
    out << path << ": required " << report.required << ", missing " << report.missing.size() << "\n";
    for (const auto& key : report.missing) out << "  missing " << key << "\n";
    missing.insert(missing.end(), report.missing.begin(), report.missing.end());
  }
  if (!missing.empty()) throw CoverageError(std::move(missing));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// train

struct NamedPath {
  std::string name;
  fs::path path;
};

struct TrainArgs {
  std::string config;
  std::vector<std::string> train;
  std::string dev;
  std::vector<std::string> tests;
  std::string emb;
  std::vector<std::string> senses;
  std::optional<std::size_t> runs, epochs, batch_size, jobs;
  std::optional<std::uint64_t> seed;
  std::optional<double> lr, dropout;
  std::optional<std::uint32_t> hidden;
  std::string out;
  std::string save_models;
  bool l2_normalize = false;
};

struct ExperimentConfig {
  std::vector<NamedPath> train;
  fs::path dev;
  std::vector<NamedPath> tests;
  fs::path embeddings;
  bool l2_normalize = false;
  std::vector<SenseTop> senses;
  TrainConfig train_config;
  std::size_t runs = 100;
  std::uint64_t master_seed = 0;
  fs::path output_dir;
  std::string save_models = "all";

  ordered_json to_json() const {
    ordered_json j;
    auto named = [](const std::vector<NamedPath>& v) {
      ordered_json arr = ordered_json::array();
      for (const auto& n : v) arr.push_back({{"name", n.name}, {"path", n.path.string()}});
      return arr;
    };
    j["train"] = named(train);
    j["dev"] = dev.string();
    j["tests"] = named(tests);
    j["embeddings"] = embeddings.string();
    j["l2_normalize"] = l2_normalize;
    ordered_json senses_json = ordered_json::array();
    for (auto s : senses) senses_json.push_back(std::string(to_string(s)));
    j["senses"] = senses_json;
    j["runs"] = runs;
    j["master_seed"] = master_seed;
    j["train_config"] = {{"epochs", train_config.epochs},     {"batch_size", train_config.batch_size},
                         {"lr", train_config.lr},             {"dropout", train_config.dropout},
                         {"hidden", train_config.hidden},     {"adagrad_eps", train_config.eps},
                         {"init", "glorot-uniform"},          {"hidden_activation", "relu"},
                         {"decision_threshold", 0.5},         {"selection", "best dev F1 (positive class)"}};
    j["output_dir"] = output_dir.string();
    j["save_models"] = save_models;
    return j;
  }
};

// "name=path" or a bare path named after its stem.
NamedPath parse_named(std::string_view spec, const fs::path& base) {
  const auto eq = spec.find('=');
  NamedPath n;
  if (eq == std::string_view::npos) {
    n.path = base / fs::path(spec);
    n.name = fs::path(spec).stem().string();
  } else {
    n.name = std::string(spec.substr(0, eq));
    n.path = base / fs::path(spec.substr(eq + 1));
  }
  n.path = n.path.lexically_normal();
  return n;
}

std::vector<NamedPath> named_list(const ordered_json& j, const fs::path& base, const char* key) {
  std::vector<NamedPath> out;
  auto add = [&](const std::string& name, const std::string& path) {
    out.push_back({name, (base / path).lexically_normal()});
  };
  if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_string()) {
        out.push_back(parse_named(item.get<std::string>(), base));
      } else {
        add(item.at("name").get<std::string>(), item.at("path").get<std::string>());
      }
    }
  } else if (j.is_object()) {
    for (const auto& [name, path] : j.items()) add(name, path.get<std::string>());
  } else {
    throw UsageError(std::string("config key \"") + key + "\" must be an array or object");
  }
  return out;
}

ExperimentConfig resolve_config(const TrainArgs& a) {
  ExperimentConfig c;
  for (auto s : kAllSenses) c.senses.push_back(s);

  if (!a.config.empty()) {
    const fs::path config_path(a.config);
    const fs::path base = config_path.parent_path();
    ordered_json j;
    try {
      j = ordered_json::parse(read_file(config_path));
    } catch (const ordered_json::parse_error& e) {
      throw DataError(a.config + ": invalid JSON: " + e.what());
    }
    try {
      if (j.contains("train")) c.train = named_list(j["train"], base, "train");
      if (j.contains("dev")) c.dev = (base / j["dev"].get<std::string>()).lexically_normal();
      if (j.contains("tests")) c.tests = named_list(j["tests"], base, "tests");
      if (j.contains("embeddings")) c.embeddings = (base / j["embeddings"].get<std::string>()).lexically_normal();
      c.l2_normalize = j.value("l2_normalize", false);
      if (j.contains("senses")) {
        c.senses.clear();
        for (const auto& s : j["senses"]) c.senses.push_back(parse_sense_top(s.get<std::string>()));
      }
      c.runs = j.value("runs", c.runs);
      c.master_seed = j.value("master_seed", c.master_seed);
      if (j.contains("output_dir")) c.output_dir = (base / j["output_dir"].get<std::string>()).lexically_normal();
      c.save_models = j.value("save_models", c.save_models);
      if (j.contains("train_config")) {
        const auto& t = j["train_config"];
        c.train_config.epochs = t.value("epochs", c.train_config.epochs);
        c.train_config.batch_size = t.value("batch_size", c.train_config.batch_size);
        c.train_config.lr = t.value("lr", c.train_config.lr);
        c.train_config.dropout = t.value("dropout", c.train_config.dropout);
        c.train_config.hidden = t.value("hidden", c.train_config.hidden);
        c.train_config.eps = t.value("adagrad_eps", c.train_config.eps);
      }
    } catch (const ordered_json::exception& e) {
      throw DataError(a.config + ": " + e.what());
    }
  }

  // Flags override the file.
  if (!a.train.empty()) {
    c.train.clear();
    for (const auto& t : a.train) c.train.push_back(parse_named(t, {}));
  }
  if (!a.dev.empty()) c.dev = fs::path(a.dev).lexically_normal();
  if (!a.tests.empty()) {
    c.tests.clear();
    for (const auto& t : a.tests) c.tests.push_back(parse_named(t, {}));
  }
  if (!a.emb.empty()) c.embeddings = fs::path(a.emb).lexically_normal();
  if (a.l2_normalize) c.l2_normalize = true;
  if (!a.senses.empty()) {
    c.senses.clear();
    for (const auto& s : a.senses) c.senses.push_back(parse_sense_top(s));
  }
  if (a.runs) c.runs = *a.runs;
  if (a.seed) c.master_seed = *a.seed;
  if (a.epochs) c.train_config.epochs = *a.epochs;
  if (a.batch_size) c.train_config.batch_size = *a.batch_size;
  if (a.lr) c.train_config.lr = *a.lr;
  if (a.dropout) c.train_config.dropout = *a.dropout;
  if (a.hidden) c.train_config.hidden = *a.hidden;
  if (!a.out.empty()) c.output_dir = fs::path(a.out).lexically_normal();
  if (!a.save_models.empty()) c.save_models = a.save_models;

  if (c.train.empty()) throw UsageError("no training corpora (config \"train\" or --train)");
  if (c.dev.empty()) throw UsageError("no development set (config \"dev\" or --dev)");
  if (c.tests.empty()) throw UsageError("no test targets (config \"tests\" or --test)");
  if (c.embeddings.empty()) throw UsageError("no embedding file (config \"embeddings\" or --emb)");
  if (c.output_dir.empty()) throw UsageError("no output directory (config \"output_dir\" or --out)");
  if (c.runs == 0) throw UsageError("runs must be at least 1");
  if (c.save_models != "all" && c.save_models != "first" && c.save_models != "none") {
    throw UsageError("save_models must be one of all, first, none");
  }
  std::set<std::string> test_names;
  for (const auto& t : c.tests) {
    if (!test_names.insert(t.name).second) throw UsageError("duplicate test target name \"" + t.name + "\"");
  }
  c.train_config.validate();

  std::vector<fs::path> paths = {c.dev, c.embeddings};
  for (const auto& t : c.train) paths.push_back(t.path);
  for (const auto& t : c.tests) paths.push_back(t.path);
  for (const auto& p : paths) {
    if (!fs::exists(p)) throw DataError("config references a missing file: " + p.string());
  }
  return c;
}

int cmd_train(const TrainArgs& a, std::ostream& out) {
  const auto config = resolve_config(a);
  const auto config_json = config.to_json();
  const std::size_t jobs = jobs_from(a.jobs);

  const auto store = load_embeddings(config.embeddings, config.l2_normalize);
  std::vector<NamedCorpus> training;
  for (const auto& t : config.train) training.push_back({t.name, select_implicit(load_jsonl(t.path))});
  const auto dev = select_implicit(load_jsonl(config.dev));
  std::vector<NamedCorpus> tests;
  for (const auto& t : config.tests) tests.push_back({t.name, select_implicit(load_jsonl(t.path))});

  // Preflight: report every missing key at once.
  std::vector<std::string> missing;
  auto check = [&](std::span<const DiscourseRelation> rels) {
    auto report = coverage(rels, store);
    missing.insert(missing.end(), report.missing.begin(), report.missing.end());
  };
  for (const auto& c : training) check(c.relations);
  check(dev);
  for (const auto& c : tests) check(c.relations);
  if (!missing.empty()) throw CoverageError(std::move(missing));

  const fs::path results_dir = config.output_dir / "results";
  const fs::path models_dir = config.output_dir / "models";
  for (auto sense : config.senses) {
    ExperimentSpec spec;
    spec.target = sense;
    spec.training = training;
    spec.dev = dev;
    spec.tests = tests;
    spec.config = config.train_config;
    spec.runs = config.runs;
    spec.master_seed = config.master_seed;
    spec.jobs = jobs;

    RunObserver observer;
    if (config.save_models != "none") {
      observer = [&, sense](std::size_t run, const TrainRunResult& result) {
        if (config.save_models == "first" && run != 0) return;
        char name[32];
        std::snprintf(name, sizeof name, "run_%03zu.drm", run);
        write_file(models_dir / std::string(to_string(sense)) / name, save_model(result.model));
      };
    }
    const auto distributions = run_experiment(spec, store, observer);
    for (const auto& d : distributions) {
      const auto results = make_run_results(std::span<const RunDistribution>(&d, 1), config_json);
      const fs::path file = results_dir / (std::string(to_string(sense)) + "__" + sanitize(d.test_target) + ".json");
      write_file(file, write_run_results(results));
      const auto s = summarize(d.scores);
      out << to_string(sense) << "\t" << d.test_target << "\t"
          << (d.scores.size() > 1 ? format_mean_std(s.mean, s.stddev) : format_mean_std(s.mean, 0.0))
          << "\tbaseline " << std::fixed << std::setprecision(2) << d.baseline << std::defaultfloat
          << "\truns " << d.scores.size() << "\t" << file.string() << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval, compare, report

int cmd_eval(const std::string& model_path, const std::string& emb, const std::string& test,
             const std::string& sense_name, bool l2, std::ostream& out) {
  const auto sense = parse_sense_top(sense_name);
  const std::string bytes = read_file(model_path);
  MlpClassifier model = [&] {
    try {
      return load_model(bytes);
    } catch (const ParseError& e) {
      rethrow_located(model_path, e);
    }
  }();
  const auto store = load_embeddings(emb, l2);
  const auto rels = select_implicit(load_jsonl(test));
  const auto set = make_labeled_set(rels, store, sense);
  const auto counts = evaluate_model(model, set);
  const auto score = f1(counts);
  out << "sense: " << to_string(sense) << "\n"
      << "instances: " << counts.total() << "\n"
      << "tp: " << counts.tp << "\nfp: " << counts.fp << "\nfn: " << counts.fn << "\ntn: " << counts.tn << "\n"
      << std::fixed << std::setprecision(2) << "f1: " << score.percent << (score.degenerate ? " (degenerate)" : "")
      << "\nbaseline: " << always_positive_baseline(set) << "\n";
  return kExitOk;
}

std::vector<LabeledResults> load_results(const std::vector<std::string>& files) {
  std::vector<LabeledResults> out;
  std::map<std::string, int> seen;
  for (const auto& f : files) {
    RunResults r;
    try {
      r = parse_run_results(read_file(f));
    } catch (const DataError& e) {
      throw DataError(f + ": " + e.what());
    }
    std::string label = r.setup();
    if (seen[label]++ > 0) label += " (" + fs::path(f).stem().string() + ")";
    out.push_back({label, std::move(r)});
  }
  return out;
}

int cmd_compare(const std::vector<std::string>& files, std::string target, double alpha, bool two_sided,
                std::ostream& out) {
  auto setups = load_results(files);
  if (target.empty()) {
    std::set<std::string> common;
    for (const auto& t : setups.front().results.targets) common.insert(t.target);
    for (const auto& s : setups) {
      std::set<std::string> mine;
      for (const auto& t : s.results.targets) mine.insert(t.target);
      std::set<std::string> both;
      std::set_intersection(common.begin(), common.end(), mine.begin(), mine.end(),
                            std::inserter(both, both.begin()));
      common = std::move(both);
    }
    if (common.size() != 1) {
      throw DataError(common.empty() ? "run-results files share no test target"
                                     : "run-results files share several test targets; choose one with --target");
    }
    target = *common.begin();
  }
  ReportOptions options{alpha, two_sided ? Sidedness::TwoSided : Sidedness::Greater};
  const auto rows = compare_setups(setups, target, options);
  out << format_comparison(setups, target, rows, options);
  return kExitOk;
}

int cmd_report(const std::vector<std::string>& files, const std::string& out_dir, double alpha,
               std::ostream& out) {
  std::vector<RunResults> results;
  for (auto& l : load_results(files)) results.push_back(std::move(l.results));
  const auto tables = make_report(results, {alpha, Sidedness::Greater});
  write_file(fs::path(out_dir) / "report.md", tables.markdown);
  write_file(fs::path(out_dir) / "report.tsv", tables.tsv);
  out << tables.markdown;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"drelkit: implicit discourse relation classification toolkit", "drelkit"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Parse corpora into canonical JSONL");
  ingest_cmd->add_option("--format", ingest.format, "Input format")
      ->required()
      ->check(CLI::IsMember({"pipe", "jsonl"}));
  ingest_cmd->add_option("--column-map", ingest.column_map, "JSON column map (pipe format)");
  ingest_cmd->add_option("--corpus", ingest.corpus, "Corpus name recorded on pipe relations");
  ingest_cmd->add_option("--lang", ingest.lang, "ISO-639-1 language of pipe relations");
  ingest_cmd->add_option("--doc-id", ingest.doc_id, "Document id (default: input file stem)");
  ingest_cmd->add_option("--split", ingest.split, "Keep one bucket of the PDTB section split")
      ->check(CLI::IsMember({"train", "dev", "test", "excluded"}));
  ingest_cmd->add_flag("--strict", ingest.strict, "Reject unknown JSONL keys");
  ingest_cmd->add_option("-o,--output", ingest.output, "Output JSONL path")->required();
  ingest_cmd->add_option("inputs", ingest.inputs, "Input files")->required();

  auto* emb_cmd = app.add_subcommand("emb", "Embedding file utilities");
  emb_cmd->require_subcommand(1);
  std::string emb_input, emb_output, emb_path;
  bool emb_l2 = false;
  std::size_t emb_show = 5;
  std::vector<std::string> emb_corpora;
  auto* emb_import = emb_cmd->add_subcommand("import", "Convert '<key>\\t<v1> <v2> ...' text to EMB1");
  emb_import->add_option("input", emb_input, "Text vectors")->required();
  emb_import->add_option("-o,--output", emb_output, "EMB1 output path")->required();
  emb_import->add_flag("--l2-normalize", emb_l2, "Scale vectors to unit length");
  auto* emb_inspect = emb_cmd->add_subcommand("inspect", "Print an EMB1 header");
  emb_inspect->add_option("file", emb_path, "EMB1 file")->required();
  emb_inspect->add_option("--keys", emb_show, "Number of keys to list");
  auto* emb_coverage = emb_cmd->add_subcommand("coverage", "List argument keys missing from an EMB1 file");
  emb_coverage->add_option("--emb", emb_path, "EMB1 file")->required();
  emb_coverage->add_option("corpora", emb_corpora, "Canonical JSONL corpora")->required();

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Run repeated one-vs-other training experiments");
  train_cmd->add_option("--config", train.config, "Experiment config (JSON)");
  train_cmd->add_option("--train", train.train, "Training corpora ([name=]path), pooled")->delimiter(',');
  train_cmd->add_option("--dev", train.dev, "Development corpus");
  train_cmd->add_option("--test", train.tests, "Test target ([name=]path), repeatable");
  train_cmd->add_option("--emb", train.emb, "EMB1 embedding file");
  train_cmd->add_option("--sense", train.senses, "Target sense(s), default all four")
      ->check(CLI::IsMember({"Comparison", "Contingency", "Expansion", "Temporal"}));
  train_cmd->add_option("--runs", train.runs, "Independent runs per sense");
  train_cmd->add_option("--seed", train.seed, "Master seed");
  train_cmd->add_option("--epochs", train.epochs, "Epochs per run");
  train_cmd->add_option("--batch-size", train.batch_size, "Minibatch size");
  train_cmd->add_option("--lr", train.lr, "AdaGrad learning rate");
  train_cmd->add_option("--dropout", train.dropout, "Input dropout probability");
  train_cmd->add_option("--hidden", train.hidden, "Hidden units");
  train_cmd->add_option("--jobs", train.jobs, "Concurrent runs (default $DRELKIT_JOBS or 1)");
  train_cmd->add_option("--out", train.out, "Output directory");
  train_cmd->add_option("--save-models", train.save_models, "all, first or none");
  train_cmd->add_flag("--l2-normalize", train.l2_normalize, "L2-normalize vectors at load");

  std::string eval_model, eval_emb, eval_test, eval_sense;
  bool eval_l2 = false;
  auto* eval_cmd = app.add_subcommand("eval", "Score a saved model on a test corpus");
  eval_cmd->add_option("--model", eval_model, "DRM1 model file")->required();
  eval_cmd->add_option("--emb", eval_emb, "EMB1 embedding file")->required();
  eval_cmd->add_option("--test", eval_test, "Canonical JSONL test corpus")->required();
  eval_cmd->add_option("--sense", eval_sense, "Target sense")
      ->required()
      ->check(CLI::IsMember({"Comparison", "Contingency", "Expansion", "Temporal"}));
  eval_cmd->add_flag("--l2-normalize", eval_l2, "L2-normalize vectors at load");

  std::vector<std::string> compare_files;
  std::string compare_target;
  double compare_alpha = 0.001;
  bool compare_two_sided = false;
  auto* compare_cmd = app.add_subcommand("compare", "Pairwise Mann-Whitney U tests between run-results files");
  compare_cmd->add_option("files", compare_files, "Run-results files")->required()->expected(2, -1);
  compare_cmd->add_option("--target", compare_target, "Test target to compare");
  compare_cmd->add_option("--alpha", compare_alpha, "Significance level");
  compare_cmd->add_flag("--two-sided", compare_two_sided, "Two-sided instead of one-sided-greater");

  std::vector<std::string> report_files;
  std::string report_out = ".";
  double report_alpha = 0.001;
  auto* report_cmd = app.add_subcommand("report", "Write report.md and report.tsv from run-results files");
  report_cmd->add_option("files", report_files, "Run-results files")->required();
  report_cmd->add_option("-o,--out", report_out, "Output directory");
  report_cmd->add_option("--alpha", report_alpha, "Significance level");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("drelkit");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest_cmd->parsed()) return cmd_ingest(ingest, out);
    if (emb_import->parsed()) return cmd_emb_import(emb_input, emb_output, emb_l2, out);
    if (emb_inspect->parsed()) return cmd_emb_inspect(emb_path, emb_show, out);
    if (emb_coverage->parsed()) return cmd_emb_coverage(emb_path, emb_corpora, out);
    if (train_cmd->parsed()) return cmd_train(train, out);
    if (eval_cmd->parsed()) return cmd_eval(eval_model, eval_emb, eval_test, eval_sense, eval_l2, out);
    if (compare_cmd->parsed()) return cmd_compare(compare_files, compare_target, compare_alpha, compare_two_sided, out);
    if (report_cmd->parsed()) return cmd_report(report_files, report_out, report_alpha, out);
  } catch (const UsageError& e) {
    err << "drelkit: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CoverageError& e) {
    err << "drelkit: embedding coverage failure, " << e.missing().size() << " missing key(s):\n";
    for (const auto& key : e.missing()) err << "  " << key << "\n";
    return kExitCoverageError;
  } catch (const std::exception& e) {
    err << "drelkit: error: " << e.what() << "\n";
    return kExitDataError;
  }
  err << "drelkit: no command\n";
  return kExitUsage;
}

}  // namespace drelkit::cli
