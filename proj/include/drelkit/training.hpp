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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "drelkit/corpus.hpp"
#include "drelkit/dataset.hpp"
#include "drelkit/embeddings.hpp"
#include "drelkit/model.hpp"
#include "drelkit/rng.hpp"

namespace drelkit {

// One-vs-other task over a list of implicit relations; indices refer to that list.
struct BinaryTask {
  SenseTop target = SenseTop::Comparison;
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
};

// Throws DataError when either class is empty or a relation is not implicit.
BinaryTask build_task(std::span<const DiscourseRelation> relations, SenseTop target);

struct EpochSample {
  std::size_t relation = 0;
  int label = 0;
};

struct BalancedEpoch {
  std::vector<EpochSample> samples;  // shuffled
  bool negatives_with_replacement = false;
};

// All positives plus |positives| negatives drawn uniformly without
// replacement (with replacement when there are fewer negatives than
// positives), shuffled.
BalancedEpoch balanced_epoch(const BinaryTask& task, Rng& rng);

struct TrainConfig {
  std::size_t epochs = 50;
  std::size_t batch_size = 64;
  double lr = 0.01;
  double dropout = 0.3;
  std::uint32_t hidden = 100;
  double eps = 1e-8;
  std::uint64_t seed = 0;

  // Throws DataError on out-of-range fields.
  void validate() const;
};

struct TrainRunResult {
  MlpClassifier model;
  double dev_f1 = 0.0;                 // percent, positive class, threshold 0.5
  std::size_t best_epoch = 0;          // 1-based; 0 when epochs == 0
  std::vector<double> epoch_dev_f1;    // one entry per epoch (or the initial model)
  bool negatives_with_replacement = false;
};

// Trains for cfg.epochs balanced epochs and returns the snapshot with the
// highest dev F1 (earliest epoch on ties). With epochs == 0 the initialized
// model is returned with its dev F1.
TrainRunResult train_run(const BinaryTask& task, std::span<const DiscourseRelation> train_relations,
                         const LabeledSet& dev, const EmbeddingStore& store, const TrainConfig& cfg);

struct NamedCorpus {
  std::string name;
  std::vector<DiscourseRelation> relations;
};

// Concatenation of the implicit relations of every corpus. Throws DataError on
// ids repeated across corpora, since embedding keys are relation-scoped.
std::vector<DiscourseRelation> pool_corpora(std::span<const NamedCorpus> corpora);

struct RunDistribution {
  SenseTop task = SenseTop::Comparison;
  std::vector<std::string> training_corpora;
  std::string test_target;
  std::vector<double> scores;  // F1 percent, one per run
  std::vector<std::uint64_t> seeds;
  double baseline = 0.0;       // always-positive F1 on the same test set
  std::size_t test_size = 0;
};

struct ExperimentSpec {
  SenseTop target = SenseTop::Comparison;
  std::vector<NamedCorpus> training;
  std::vector<DiscourseRelation> dev;
  std::vector<NamedCorpus> tests;
  TrainConfig config;  // config.seed is ignored; run seeds derive from master_seed
  std::size_t runs = 100;
  std::uint64_t master_seed = 0;
  std::size_t jobs = 1;
};

// Seed of run i: splitmix(master_seed, i).
std::vector<std::uint64_t> derive_run_seeds(std::uint64_t master_seed, std::size_t runs);

// Optional hook receiving every finished run (index, result), for saving models.
using RunObserver = std::function<void(std::size_t run, const TrainRunResult& result)>;

// Runs `runs` independent train_run calls on a bounded worker pool and scores
// each selected model on every test target. One distribution per test target,
// ordered like spec.tests. Any failed run aborts the experiment.
std::vector<RunDistribution> run_experiment(const ExperimentSpec& spec, const EmbeddingStore& store,
                                            const RunObserver& observer = {});

// Calls fn(i) for i in [0, count) on at most `jobs` threads; rethrows the
// first exception after all workers stop.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn);

}  // namespace drelkit
