#pragma once

#include <set>
#include <string>
#include <vector>

#include "qbank/bankmodel.hpp"

namespace qbank::scen {

using bank::ModelSpec;
using bank::QFSeries;
using bank::TimeGrid;

enum class Tag { monotone_to_n, stationary, oscillatory, indistinguishable_tail };

const char* tag_name(Tag t);
Tag tag_from_name(const std::string& name);  // throws on unknown tag

struct ScenarioSpec {
  std::string name;
  ModelSpec model;
  TimeGrid grid;
  std::set<Tag> tags;
  std::string note;  // provenance remarks for assumed parameters
};

/// The four comparison initial states (1-based index; 1 is sharp φ11) and
/// the two real/complex amplitude sets used by the final preset family.
bank::InitialState initial_choice(int k);
bank::InitialState initial_alpha_real();
bank::InitialState initial_alpha_complex();

/// All built-in presets, construction order fixed.
const std::vector<ScenarioSpec>& registry();

/// Lookup by canonical name or alias; throws std::out_of_range with the
/// offending name when unknown.
const ScenarioSpec& get(const std::string& name);

struct TagReport {
  Tag tag;
  bool pass;
  std::string detail;
};

/// Runs the preset and, when `reports` is given, evaluates its tags.
QFSeries run(const ScenarioSpec& spec, const bank::QuadratureConfig& quad,
             std::vector<TagReport>* reports = nullptr,
             bank::Exec exec = bank::Exec::parallel);

// Tag evaluators: deterministic pure functions of the series.
bool eval_monotone_to_n(const QFSeries& s, const ModelSpec& m, std::string* detail = nullptr);
bool eval_stationary(const QFSeries& s, std::string* detail = nullptr);
bool eval_oscillatory(const QFSeries& s, std::string* detail = nullptr);
bool eval_indistinguishable_tail(const QFSeries& s, std::string* detail = nullptr);

/// Index of the first sample in the last quarter of the grid.
int tail_start(const QFSeries& s);

/// max − min of a series over the tail window.
double tail_peak_to_peak(const std::vector<double>& y, int from);

}  // namespace qbank::scen
