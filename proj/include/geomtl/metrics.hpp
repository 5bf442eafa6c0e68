#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace geomtl {

struct ScoredExample {
  double score = 0.0;
  int32_t label = 0;  // {0, 1}
  int32_t territory = 0;
  int32_t title_id = 0;
  int32_t user_id = 0;
  int64_t stable_index = 0;  // unique within an evaluation set; breaks score ties
};

// Average precision: sort descending by score, ties broken by stable_index
// ascending, AP = sum over positive hits of (R_k - R_{k-1}) * P_k.
// Throws MetricError when there is no positive or no negative example
// (never silently 0), ValidationError on non-finite scores or duplicate
// stable indexes.
double pr_auc(const std::vector<ScoredExample>& examples);

// 100 * (pr_new - pr_base) / pr_base; MetricError unless pr_base > 0.
double relative_gain(double pr_new, double pr_base);

struct Histogram {
  std::vector<double> bin_edges;          // n_bins + 1 ascending edges over [0, 1]
  std::vector<double> normalized_counts;  // n_bins entries, sum 1
};

// Uniform bins over [0, 1], right-inclusive last bin, counts normalized by
// the total. MetricError on empty input, ValidationError when n_bins < 2 or
// a score falls outside [0, 1].
Histogram score_histogram(const std::vector<ScoredExample>& examples, size_t n_bins = 20);

// ---------------------------------------------------------------------------
// Case study: local vs global titles in selected territories.

struct CaseStudyConfig {
  std::vector<int32_t> territories;  // studied territories
  size_t n_bins = 20;
  size_t min_positives = 10;     // per title, within the studied territory
  size_t min_negatives = 5;      // per title, within the studied territory
  double max_count_gap = 0.25;   // "comparable positive examples"
};

struct TitleCaseReport {
  int32_t territory = 0;  // studied territory
  int32_t title_id = 0;
  bool is_global = false;
  size_t positives = 0;          // within the studied territory
  int32_t affinity_group = -1;   // globals only: group with highest positive lift
  // Keyed by model name. PR-AUC is computed within the studied territory;
  // mean scores and histograms over the eligible rows: the studied territory
  // for local titles, all out-of-affinity territories for global ones.
  std::map<std::string, double> pr;
  std::map<std::string, double> mean_score;
  std::map<std::string, Histogram> hist;
  // Pairwise relative gains of the in-territory PR-AUC, Table-3 shape,
  // keyed "<new>_vs_<base>".
  std::map<std::string, double> gains;
  double delta_mean = 0.0;  // mean_mtl - mean_baseline over eligible rows
};

struct CaseStudyReport {
  std::vector<TitleCaseReport> titles;
};

// Selects, per studied territory, one local and one global title with
// comparable positive counts (gap < max_count_gap) from the scored test
// examples themselves, then reports per-model PR-AUC, gains, histograms, and
// the mean-score shift delta = mean_mtl - mean_baseline.
//
// `models` maps model name -> scored examples; every model must score the
// same example set (same stable indexes and fields, scores may differ) and
// the names must include "baseline" and "mtl". A global title's affinity
// group is the group with the highest share of its positives relative to the
// group's overall positive mass; out-of-affinity rows are those in other
// groups. Throws MetricError with a descriptive message when a territory has
// no qualifying (local, global) pair.
CaseStudyReport case_study(const std::map<std::string, std::vector<ScoredExample>>& models,
                           const std::vector<int32_t>& group_map,
                           const std::vector<uint8_t>& title_is_global,
                           const CaseStudyConfig& config);

// Lossless CSV round trip (%.17g doubles).
void write_case_study_csv(const std::string& path, const CaseStudyReport& report);
CaseStudyReport read_case_study_csv(const std::string& path);

// Standalone SVG bar chart of one histogram. Deterministic output.
void write_histogram_svg(const std::string& path, const Histogram& hist,
                         const std::string& chart_title);

}  // namespace geomtl
