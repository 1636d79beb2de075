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

#include "drelkit/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "drelkit/error.hpp"

namespace drelkit {
namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", p);
  return buf;
}

// Scores of one (setup, target) pair, by sense.
struct Cell {
  std::vector<double> scores;
  double baseline = 0.0;
};

struct SetupTable {
  std::string setup;
  std::map<std::string, std::array<std::optional<Cell>, 4>> by_target;
};

// Per-run macro average when all four senses are present with equal run counts.
std::optional<std::vector<double>> per_run_average(const std::array<std::optional<Cell>, 4>& cells) {
  for (const auto& c : cells) {
    if (!c || c->scores.size() != cells[0]->scores.size()) return std::nullopt;
  }
  std::vector<double> avg(cells[0]->scores.size());
  for (std::size_t i = 0; i < avg.size(); ++i) {
    const std::array<double, 4> row = {cells[0]->scores[i], cells[1]->scores[i], cells[2]->scores[i],
                                       cells[3]->scores[i]};
    avg[i] = macro_average(row);
  }
  return avg;
}

std::string cell_text(const std::vector<double>& scores) {
  const auto s = summarize(scores);
  return scores.size() > 1 ? format_mean_std(s.mean, s.stddev) : fixed2(s.mean);
}

void table_header(std::ostringstream& md, const std::vector<std::string>& columns) {
  md << "| Language";
  for (const auto& c : columns) md << " | " << c;
  md << " |\n|---";
  for (std::size_t i = 0; i < columns.size(); ++i) md << "|---";
  md << "|\n";
}

}  // namespace

ReportTables make_report(std::span<const RunResults> results, const ReportOptions& options) {
  if (results.empty()) throw DataError("nothing to report");
  std::vector<SetupTable> setups;
  std::vector<std::string> target_order;
  for (const auto& r : results) {
    if (r.schema_version != kRunResultsSchemaVersion) throw DataError("run results schema mismatch");
    const std::string name = r.setup();
    auto it = std::find_if(setups.begin(), setups.end(), [&](const SetupTable& s) { return s.setup == name; });
    if (it == setups.end()) {
      setups.push_back({name, {}});
      it = std::prev(setups.end());
    }
    for (const auto& t : r.targets) {
      if (std::find(target_order.begin(), target_order.end(), t.target) == target_order.end()) {
        target_order.push_back(t.target);
      }
      auto& slot = it->by_target[t.target][static_cast<std::size_t>(r.task)];
      if (slot) {
        throw DataError("duplicate results for " + name + " / " + t.target + " / " +
                        std::string(to_string(r.task)));
      }
      slot = Cell{t.scores, t.baseline};
    }
  }

  std::vector<std::string> sense_columns;
  for (auto s : kAllSenses) sense_columns.emplace_back(to_string(s));
  auto with_average = sense_columns;
  with_average.emplace_back("Average");

  std::ostringstream md;
  std::ostringstream tsv;
  tsv << "language\tsense\tmean\tstd\tn_runs\tbaseline\ttraining\n";
  md << "# F1 scores (%)\n";

  for (const auto& setup : setups) {
    md << "\n## Training: " << setup.setup << "\n\n";
    table_header(md, with_average);
    for (const auto& target : target_order) {
      const auto found = setup.by_target.find(target);
      if (found == setup.by_target.end()) continue;
      const auto& cells = found->second;
      md << "| " << target;
      for (std::size_t k = 0; k < 4; ++k) {
        md << " | ";
        if (!cells[k]) {
          md << "-";
          continue;
        }
        md << cell_text(cells[k]->scores);
        const auto s = summarize(cells[k]->scores);
        tsv << target << '\t' << sense_columns[k] << '\t' << fixed2(s.mean) << '\t' << fixed2(s.stddev)
            << '\t' << cells[k]->scores.size() << '\t' << fixed2(cells[k]->baseline) << '\t'
            << setup.setup << '\n';
      }
      md << " | ";
      if (const auto avg = per_run_average(cells)) {
        const auto s = summarize(*avg);
        const std::array<double, 4> baselines = {cells[0]->baseline, cells[1]->baseline,
                                                 cells[2]->baseline, cells[3]->baseline};
        md << fixed2(s.mean);
        tsv << target << "\tAverage\t" << fixed2(s.mean) << '\t' << fixed2(s.stddev) << '\t' << avg->size()
            << '\t' << fixed2(macro_average(baselines)) << '\t' << setup.setup << '\n';
      } else {
        md << "-";
      }
      md << " |\n";
    }
  }

  // Baselines depend only on the test set; the first setup that has a cell supplies it.
  md << "\n## Baseline (always positive)\n\n";
  table_header(md, with_average);
  for (const auto& target : target_order) {
    md << "| " << target;
    std::array<std::optional<double>, 4> base;
    for (const auto& setup : setups) {
      const auto found = setup.by_target.find(target);
      if (found == setup.by_target.end()) continue;
      for (std::size_t k = 0; k < 4; ++k) {
        if (!base[k] && found->second[k]) base[k] = found->second[k]->baseline;
      }
    }
    bool complete = true;
    for (const auto& b : base) {
      md << " | " << (b ? fixed2(*b) : "-");
      complete = complete && b.has_value();
    }
    md << " | " << (complete ? fixed2(macro_average(std::array<double, 4>{*base[0], *base[1], *base[2], *base[3]})) : "-")
       << " |\n";
  }

  if (setups.size() > 1) {
    std::vector<std::string> setup_columns;
    for (const auto& s : setups) setup_columns.push_back(s.setup);
    for (std::size_t metric = 0; metric <= 4; ++metric) {
      const std::string metric_name = metric == 0 ? "Average" : sense_columns[metric - 1];
      md << "\n## Training setups compared: " << metric_name << "\n\n";
      table_header(md, setup_columns);
      for (const auto& target : target_order) {
        std::vector<std::optional<std::vector<double>>> dists;
        for (const auto& setup : setups) {
          const auto found = setup.by_target.find(target);
          if (found == setup.by_target.end()) {
            dists.emplace_back();
          } else if (metric == 0) {
            dists.push_back(per_run_average(found->second));
          } else if (const auto& c = found->second[metric - 1]) {
            dists.push_back(c->scores);
          } else {
            dists.emplace_back();
          }
        }
        // Best and runner-up by mean.
        std::optional<std::size_t> best, second;
        for (std::size_t i = 0; i < dists.size(); ++i) {
          if (!dists[i]) continue;
          const double m = summarize(*dists[i]).mean;
          if (!best || m > summarize(*dists[*best]).mean) {
            second = best;
            best = i;
          } else if (!second || m > summarize(*dists[*second]).mean) {
            second = i;
          }
        }
        bool bold = false;
        if (best && second && dists[*best]->size() > 1 && dists[*second]->size() > 1) {
          const auto test = mann_whitney_u(*dists[*best], *dists[*second], options.sidedness);
          bold = test.p_value < options.alpha;
        }
        md << "| " << target;
        for (std::size_t i = 0; i < dists.size(); ++i) {
          md << " | ";
          if (!dists[i]) {
            md << "-";
            continue;
          }
          const std::string value = fixed2(summarize(*dists[i]).mean);
          md << (bold && best == i ? "**" + value + "**" : value);
        }
        md << " |\n";
      }
      md << "\nBold: significantly higher than the runner-up (Mann-Whitney U, "
         << to_string(options.sidedness) << ", p < " << format_p(options.alpha) << ").\n";
    }
  }

  return {md.str(), tsv.str()};
}

std::vector<PairwiseComparison> compare_setups(std::span<const LabeledResults> setups,
                                               std::string_view target, const ReportOptions& options) {
  if (setups.size() < 2) throw DataError("comparison needs at least two run-results files");
  const SenseTop task = setups.front().results.task;
  std::vector<const TargetScores*> scores;
  for (const auto& s : setups) {
    if (s.results.task != task) {
      throw DataError("run results cover different senses: " + std::string(to_string(task)) + " and " +
                      std::string(to_string(s.results.task)));
    }
    scores.push_back(&s.results.target(target));
  }

  std::vector<PairwiseComparison> rows;
  for (std::size_t i = 0; i < setups.size(); ++i) {
    for (std::size_t j = i + 1; j < setups.size(); ++j) {
      PairwiseComparison row;
      row.first = setups[i].label;
      row.second = setups[j].label;
      row.first_mean = summarize(scores[i]->scores).mean;
      row.second_mean = summarize(scores[j]->scores).mean;
      const bool second_higher = row.second_mean > row.first_mean;
      const auto& hi = second_higher ? scores[j]->scores : scores[i]->scores;
      const auto& lo = second_higher ? scores[i]->scores : scores[j]->scores;
      row.higher = second_higher ? row.second : row.first;
      row.test = mann_whitney_u(hi, lo, options.sidedness);
      row.significant = row.test.p_value < options.alpha;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_comparison(std::span<const LabeledResults> setups, std::string_view target,
                              std::span<const PairwiseComparison> rows, const ReportOptions& options) {
  std::ostringstream out;
  out << "Test target: " << target;
  if (!setups.empty()) out << " (" << to_string(setups.front().results.task) << ")";
  out << "\n\n| Setup | Mean F1 | Runs |\n|---|---|---|\n";
  for (const auto& s : setups) {
    const auto& scores = s.results.target(target).scores;
    const auto sum = summarize(scores);
    out << "| " << s.label << " | " << (scores.size() > 1 ? format_mean_std(sum.mean, sum.stddev) : fixed2(sum.mean))
        << " | " << scores.size() << " |\n";
  }
  out << "\n| A | B | Mean A | Mean B | Tested greater | U | p | Method | Significant |\n"
      << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    auto mark = [&](const std::string& label) {
      return r.significant && label == r.higher ? "**" + label + "**" : label;
    };
    out << "| " << mark(r.first) << " | " << mark(r.second) << " | " << fixed2(r.first_mean) << " | "
        << fixed2(r.second_mean) << " | " << r.higher << " | " << fixed2(r.test.u_statistic) << " | "
        << format_p(r.test.p_value) << " | " << to_string(r.test.method) << " | "
        << (r.significant ? "yes" : "no") << " |\n";
  }
  out << "\nSidedness: " << to_string(options.sidedness) << ", alpha = " << format_p(options.alpha) << "\n";
  return out.str();
}

}  // namespace drelkit
