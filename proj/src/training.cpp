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

#include "drelkit/training.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "drelkit/error.hpp"
#include "drelkit/evaluation.hpp"
#include "drelkit/features.hpp"

namespace drelkit {

BinaryTask build_task(std::span<const DiscourseRelation> relations, SenseTop target) {
  BinaryTask task;
  task.target = target;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (!relations[i].rel_type.is_implicit()) {
      throw DataError("relation " + relations[i].id + " is not implicit; filter the corpus first");
    }
    (top_sense(relations[i]) == target ? task.positives : task.negatives).push_back(i);
  }
  if (task.positives.empty()) {
    throw DataError("no " + std::string(to_string(target)) + " relations: task is undefined");
  }
  if (task.negatives.empty()) {
    throw DataError("every relation is " + std::string(to_string(target)) + ": no negatives");
  }
  return task;
}

BalancedEpoch balanced_epoch(const BinaryTask& task, Rng& rng) {
  if (task.positives.empty() || task.negatives.empty()) throw DataError("balanced epoch of an empty task");
  const std::size_t k = task.positives.size();
  BalancedEpoch epoch;
  epoch.samples.reserve(2 * k);
  for (auto idx : task.positives) epoch.samples.push_back({idx, 1});

  if (task.negatives.size() >= k) {
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    std::vector<std::size_t> pool = task.negatives;
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + rng.index(pool.size() - i)]);
      epoch.samples.push_back({pool[i], 0});
    }
  } else {
    epoch.negatives_with_replacement = true;
    for (std::size_t i = 0; i < k; ++i) {
      epoch.samples.push_back({task.negatives[rng.index(task.negatives.size())], 0});
    }
  }
  rng.shuffle(std::span<EpochSample>(epoch.samples));
  return epoch;
}

void TrainConfig::validate() const {
  if (batch_size == 0) throw DataError("batch size must be positive");
  if (hidden == 0) throw DataError("hidden size must be positive");
  if (!(dropout >= 0.0 && dropout < 1.0)) throw DataError("dropout must lie in [0, 1)");
  if (!(lr > 0.0)) throw DataError("learning rate must be positive");
  if (!(eps >= 0.0)) throw DataError("AdaGrad eps must be non-negative");
}

TrainRunResult train_run(const BinaryTask& task, std::span<const DiscourseRelation> train_relations,
                         const LabeledSet& dev, const EmbeddingStore& store, const TrainConfig& cfg) {
  cfg.validate();
  if (dev.empty()) throw DataError("development set is empty");
  if (dev.arg_dim != store.dim()) throw DataError("development set and store dimensions differ");
  require_coverage(train_relations, store);

  struct ArgPair {
    std::span<const float> arg1, arg2;
  };
  std::vector<ArgPair> args(train_relations.size());
  auto resolve = [&](std::size_t idx) {
    if (idx >= train_relations.size()) throw DataError("task refers to a relation outside the corpus");
    const auto& id = train_relations[idx].id;
    args[idx] = {store.lookup(id, ArgSlot::Arg1), store.lookup(id, ArgSlot::Arg2)};
  };
  for (auto idx : task.positives) resolve(idx);
  for (auto idx : task.negatives) resolve(idx);

  Hyperparameters hyper;
  hyper.input_dim = static_cast<std::uint32_t>(RelationFeature::kBlocks * store.dim());
  hyper.hidden = cfg.hidden;
  hyper.lr = cfg.lr;
  hyper.dropout = cfg.dropout;
  hyper.eps = cfg.eps;
  hyper.seed = splitmix(cfg.seed, 0);
  MlpClassifier model(hyper);
  Rng rng(splitmix(cfg.seed, 1));

  auto dev_f1 = [&](const MlpClassifier& m) { return f1(evaluate_model(m, dev)).percent; };

  if (cfg.epochs == 0) {
    const double score = dev_f1(model);
    return {model, score, 0, {score}, false};
  }

  TrainRunResult best{model, -1.0, 0, {}, false};
  std::vector<TrainExample> batch;
  for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
    const auto sampled = balanced_epoch(task, rng);
    best.negatives_with_replacement |= sampled.negatives_with_replacement;
    for (std::size_t start = 0; start < sampled.samples.size(); start += cfg.batch_size) {
      const std::size_t end = std::min(start + cfg.batch_size, sampled.samples.size());
      batch.clear();
      for (std::size_t i = start; i < end; ++i) {
        const auto& s = sampled.samples[i];
        batch.push_back({compose(args[s.relation].arg1, args[s.relation].arg2), s.label});
      }
      model.adagrad_step(model.backward(batch, rng));
    }
    const double score = dev_f1(model);
    best.epoch_dev_f1.push_back(score);
    if (score > best.dev_f1) {
      best.dev_f1 = score;
      best.best_epoch = epoch;
      best.model = model;
    }
  }
  return best;
}

std::vector<DiscourseRelation> pool_corpora(std::span<const NamedCorpus> corpora) {
  std::vector<DiscourseRelation> pooled;
  std::unordered_set<std::string> ids;
  for (const auto& corpus : corpora) {
    for (const auto& rel : corpus.relations) {
      if (!rel.rel_type.is_implicit()) continue;
      if (!ids.insert(rel.id).second) {
        throw DataError("relation id \"" + rel.id + "\" appears in more than one training corpus");
      }
      pooled.push_back(rel);
    }
  }
  return pooled;
}

std::vector<std::uint64_t> derive_run_seeds(std::uint64_t master_seed, std::size_t runs) {
  std::vector<std::uint64_t> seeds(runs);
  for (std::size_t i = 0; i < runs; ++i) seeds[i] = splitmix(master_seed, i);
  return seeds;
}

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(std::max<std::size_t>(jobs, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      while (!failed.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<RunDistribution> run_experiment(const ExperimentSpec& spec, const EmbeddingStore& store,
                                            const RunObserver& observer) {
  if (spec.runs == 0) throw DataError("an experiment needs at least one run");
  if (spec.training.empty()) throw DataError("no training corpora");
  if (spec.tests.empty()) throw DataError("no test targets");
  spec.config.validate();

  const auto pooled = pool_corpora(spec.training);
  const auto task = build_task(pooled, spec.target);
  const auto dev = make_labeled_set(spec.dev, store, spec.target);
  std::vector<LabeledSet> tests;
  for (const auto& t : spec.tests) tests.push_back(make_labeled_set(t.relations, store, spec.target));

  const auto seeds = derive_run_seeds(spec.master_seed, spec.runs);
  std::vector<std::vector<double>> scores(tests.size(), std::vector<double>(spec.runs, 0.0));

  parallel_for(spec.runs, spec.jobs, [&](std::size_t run) {
    TrainConfig cfg = spec.config;
    cfg.seed = seeds[run];
    const auto result = train_run(task, pooled, dev, store, cfg);
    for (std::size_t t = 0; t < tests.size(); ++t) {
      scores[t][run] = f1(evaluate_model(result.model, tests[t])).percent;
    }
    if (observer) observer(run, result);
  });

  std::vector<std::string> names;
  for (const auto& c : spec.training) names.push_back(c.name);

  std::vector<RunDistribution> out;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    RunDistribution d;
    d.task = spec.target;
    d.training_corpora = names;
    d.test_target = spec.tests[t].name;
    d.scores = std::move(scores[t]);
    d.seeds = seeds;
    d.baseline = always_positive_baseline(tests[t]);
    d.test_size = tests[t].size();
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace drelkit
