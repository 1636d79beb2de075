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

#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drelkit/cli.hpp"
#include "drelkit/corpus.hpp"
#include "drelkit/dataset.hpp"
#include "drelkit/embeddings.hpp"
#include "drelkit/error.hpp"
#include "drelkit/evaluation.hpp"
#include "drelkit/features.hpp"
#include "drelkit/model.hpp"
#include "drelkit/training.hpp"

namespace py = pybind11;
using namespace drelkit;

namespace {

std::vector<double> compose_list(const std::vector<double>& a, const std::vector<double>& b) {
  const auto f = compose(std::span<const double>(a), std::span<const double>(b));
  return {f.values().begin(), f.values().end()};
}

py::dict significance_dict(const SignificanceResult& r) {
  py::dict d;
  d["u_statistic"] = r.u_statistic;
  d["p_value"] = r.p_value;
  d["sidedness"] = std::string(to_string(r.sidedness));
  d["method"] = std::string(to_string(r.method));
  return d;
}

py::list run_experiment_py(const std::string& target, const std::vector<std::pair<std::string, std::vector<DiscourseRelation>>>& training,
                           const std::vector<DiscourseRelation>& dev,
                           const std::vector<std::pair<std::string, std::vector<DiscourseRelation>>>& tests,
                           const EmbeddingStore& store, std::size_t runs, std::uint64_t master_seed,
                           std::size_t epochs, std::size_t batch_size, double lr, double dropout,
                           std::uint32_t hidden, std::size_t jobs) {
  ExperimentSpec spec;
  spec.target = parse_sense_top(target);
  for (const auto& [name, rels] : training) spec.training.push_back({name, select_implicit(rels)});
  spec.dev = select_implicit(dev);
  for (const auto& [name, rels] : tests) spec.tests.push_back({name, select_implicit(rels)});
  spec.config.epochs = epochs;
  spec.config.batch_size = batch_size;
  spec.config.lr = lr;
  spec.config.dropout = dropout;
  spec.config.hidden = hidden;
  spec.runs = runs;
  spec.master_seed = master_seed;
  spec.jobs = jobs;

  std::vector<RunDistribution> dists;
  {
    py::gil_scoped_release release;
    dists = run_experiment(spec, store);
  }
  py::list out;
  for (const auto& d : dists) {
    py::dict item;
    item["task"] = std::string(to_string(d.task));
    item["training_corpora"] = d.training_corpora;
    item["test_target"] = d.test_target;
    item["scores"] = d.scores;
    item["seeds"] = d.seeds;
    item["baseline"] = d.baseline;
    item["test_size"] = d.test_size;
    const auto s = summarize(d.scores);
    item["mean"] = s.mean;
    item["std"] = s.stddev;
    out.append(item);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_drelkit, m) {
  m.doc() = "Implicit discourse relation classification toolkit (C++ core)";

  // Translators are tried newest first, so the base class is registered before
  // its subclasses.
  const auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CoverageError>(m, "CoverageError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());
  py::register_exception<DataError>(m, "DataError", base.ptr());

  py::enum_<SenseTop>(m, "SenseTop")
      .value("Comparison", SenseTop::Comparison)
      .value("Contingency", SenseTop::Contingency)
      .value("Expansion", SenseTop::Expansion)
      .value("Temporal", SenseTop::Temporal);

  py::class_<DiscourseRelation>(m, "DiscourseRelation")
      .def(py::init<>())
      .def_readwrite("id", &DiscourseRelation::id)
      .def_readwrite("corpus", &DiscourseRelation::corpus)
      .def_readwrite("lang", &DiscourseRelation::lang)
      .def_readwrite("doc_id", &DiscourseRelation::doc_id)
      .def_property(
          "rel_type", [](const DiscourseRelation& r) { return r.rel_type.label(); },
          [](DiscourseRelation& r, const std::string& label) { r.rel_type = RelationType::parse(label); })
      .def_readwrite("senses", &DiscourseRelation::senses)
      .def_readwrite("arg1", &DiscourseRelation::arg1)
      .def_readwrite("arg2", &DiscourseRelation::arg2)
      .def("__repr__", [](const DiscourseRelation& r) { return "<DiscourseRelation " + r.id + ">"; });

  m.def("parse_jsonl", [](const std::string& text, bool strict) { return parse_jsonl(text, {strict}); },
        py::arg("text"), py::arg("strict") = false);
  m.def("write_jsonl", [](const std::vector<DiscourseRelation>& rels) { return write_jsonl(rels); });
  m.def("top_sense", &top_sense);
  m.def("select_implicit", [](const std::vector<DiscourseRelation>& rels) { return select_implicit(rels); });
  m.def("sense_histogram", [](const std::vector<DiscourseRelation>& rels) {
    const auto h = sense_histogram(rels);
    py::dict d;
    for (auto s : kAllSenses) d[py::str(std::string(to_string(s)))] = h[static_cast<std::size_t>(s)];
    return d;
  });
  m.def("assign_split", [](const DiscourseRelation& r) {
    return std::string(to_string(assign_split(r, SplitScheme::pdtb_standard())));
  });

  py::class_<EmbeddingStore>(m, "EmbeddingStore")
      .def(py::init([](std::uint32_t dim, const std::vector<std::pair<std::string, std::vector<float>>>& items) {
             std::vector<EmbeddingStore::Entry> entries;
             for (const auto& [k, v] : items) entries.push_back({k, v});
             return EmbeddingStore(dim, std::move(entries));
           }),
           py::arg("dim"), py::arg("entries"))
      .def_property_readonly("dim", &EmbeddingStore::dim)
      .def("__len__", &EmbeddingStore::size)
      .def("__contains__", [](const EmbeddingStore& s, const std::string& k) { return s.contains(k); })
      .def("lookup", [](const EmbeddingStore& s, const std::string& relation_id, const std::string& slot) {
        if (slot != "arg1" && slot != "arg2") throw DataError("slot must be arg1 or arg2");
        const auto v = s.lookup(relation_id, slot == "arg1" ? ArgSlot::Arg1 : ArgSlot::Arg2);
        return std::vector<float>(v.begin(), v.end());
      })
      .def("keys", [](const EmbeddingStore& s) {
        std::vector<std::string> keys;
        for (std::size_t i = 0; i < s.size(); ++i) keys.push_back(s.key_at(i));
        return keys;
      });

  m.def("read_embedding_file", [](const py::bytes& data) { return read_embedding_file(std::string(data)); });
  m.def("write_embedding_file", [](const EmbeddingStore& s) { return py::bytes(write_embedding_file(s)); });
  m.def("coverage_missing", [](const std::vector<DiscourseRelation>& rels, const EmbeddingStore& s) {
    return coverage(rels, s).missing;
  });

  m.def("compose", &compose_list, py::arg("arg1"), py::arg("arg2"));

  py::class_<MlpClassifier>(m, "MlpClassifier")
      .def(py::init([](std::uint32_t input_dim, std::uint32_t hidden, double lr, double dropout, double eps,
                       std::uint64_t seed, bool zero) {
             Hyperparameters h{input_dim, hidden, lr, dropout, eps, seed};
             return MlpClassifier(h, zero ? MlpClassifier::Init::Zero : MlpClassifier::Init::Glorot);
           }),
           py::arg("input_dim"), py::arg("hidden") = 100, py::arg("lr") = 0.01, py::arg("dropout") = 0.3,
           py::arg("eps") = 1e-8, py::arg("seed") = 0, py::arg("zero") = false)
      .def_property_readonly("input_dim", &MlpClassifier::input_dim)
      .def_property_readonly("hidden", &MlpClassifier::hidden)
      .def_property_readonly("parameter_count", &MlpClassifier::parameter_count)
      .def("forward", [](const MlpClassifier& m, const std::vector<double>& x) { return m.forward(x); })
      .def("predict", [](const MlpClassifier& m, const std::vector<double>& x) { return m.predict(x); })
      .def("save", [](const MlpClassifier& m) { return py::bytes(save_model(m)); })
      .def_static("load", [](const py::bytes& data) { return load_model(std::string(data)); });

  m.def("bce_loss", &bce_loss, py::arg("p"), py::arg("y"));
  m.def(
      "f1",
      [](std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn) {
        const auto s = f1(ConfusionCounts{tp, fp, fn, tn});
        return py::make_tuple(s.percent, s.degenerate);
      },
      py::arg("tp"), py::arg("fp"), py::arg("fn"), py::arg("tn") = 0);
  m.def("always_positive_baseline",
        py::overload_cast<std::size_t, std::size_t>(&always_positive_baseline), py::arg("positives"),
        py::arg("total"));
  m.def("macro_average", [](const std::vector<double>& v) { return macro_average(v); });
  m.def(
      "mann_whitney_u",
      [](const std::vector<double>& a, const std::vector<double>& b, bool two_sided) {
        return significance_dict(mann_whitney_u(a, b, two_sided ? Sidedness::TwoSided : Sidedness::Greater));
      },
      py::arg("a"), py::arg("b"), py::arg("two_sided") = false);
  m.def("format_mean_std", &format_mean_std);

  m.def("run_experiment", &run_experiment_py, py::arg("target"), py::arg("training"), py::arg("dev"),
        py::arg("tests"), py::arg("store"), py::arg("runs") = 100, py::arg("master_seed") = 0,
        py::arg("epochs") = 50, py::arg("batch_size") = 64, py::arg("lr") = 0.01, py::arg("dropout") = 0.3,
        py::arg("hidden") = 100, py::arg("jobs") = 1);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
