#pragma once

/// \file analysis.hpp
/// Priority subsets, relative efficiency index and aggregate losses over a
/// set of analyzed functions.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "bfforms/arithmetic.hpp"
#include "bfforms/cost.hpp"
#include "bfforms/rational.hpp"
#include "bfforms/reed_muller.hpp"
#include "bfforms/sop.hpp"
#include "bfforms/truth_table.hpp"

namespace bfforms {

/// Set of forms attaining the minimum: bit 0 classical, bit 1 arithmetic,
/// bit 2 Reed-Muller. The empty set never occurs.
enum class SubsetLabel : std::uint8_t { C = 1, A = 2, CA = 3, RM = 4, CR = 5, AR = 6, CAR = 7 };

inline constexpr std::array<SubsetLabel, 7> kAllLabels = {SubsetLabel::C,  SubsetLabel::A,  SubsetLabel::RM,
                                                          SubsetLabel::CA, SubsetLabel::CR, SubsetLabel::AR,
                                                          SubsetLabel::CAR};
std::string_view label_name(SubsetLabel label);

enum class Form : std::uint8_t { CFR, AFR, RMFR, OFR };
inline constexpr std::array<Form, 4> kAllForms = {Form::CFR, Form::AFR, Form::RMFR, Form::OFR};
std::string_view form_name(Form form);

/// The three minimized representatives of one function, the polynomial
/// forms minimized under `criterion`.
struct SweepRecord {
  FunctionIndex function;
  Criterion criterion = Criterion::S_ad;
  CostVector cost_cfr;
  CostVector cost_afr;
  CostVector cost_rm;
  std::uint32_t afr_polarity = 0;
  std::uint32_t rm_polarity = 0;

  /// Criterion value of `form`; OFR is the minimum of the three.
  std::int64_t value(Form form, Criterion c) const;
  std::int64_t value(Form form) const { return value(form, criterion); }

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

/// One function analyzed under every criterion, indexed by criterion_slot.
struct FunctionAnalysis {
  FunctionIndex function;
  std::array<SweepRecord, kCriterionCount> by_criterion;

  friend bool operator==(const FunctionAnalysis&, const FunctionAnalysis&) = default;
};

SweepRecord analyze_function(const TruthTable& tt, Criterion criterion,
                             const MinimizerOptions& options = MinimizerOptions::from_environment());
/// analyze_function for all five criteria, sharing the SOP minimization and
/// one polarity scan per polynomial form.
FunctionAnalysis analyze_all(const TruthTable& tt,
                             const MinimizerOptions& options = MinimizerOptions::from_environment());

SubsetLabel classify(const SweepRecord& record, Criterion criterion);
inline SubsetLabel classify(const SweepRecord& record) { return classify(record, record.criterion); }

enum class ReiVariant : std::uint8_t {
  Plain,       ///< sum_{j=0..S_mm} N_ij / (N_max * S_mm)
  Normalized,  ///< same sum / (N_max * (S_mm + 1)), always in (0, 1]
};

struct ReiResult {
  Form form = Form::CFR;
  Criterion criterion = Criterion::S_ad;
  ReiVariant variant = ReiVariant::Plain;
  Rational eta;
  std::int64_t s_mm = 0;
  std::int64_t n_max = 0;
  /// Sampling standard error of eta, treating records as i.i.d. draws.
  double std_error = 0.0;
};

class AnalysisError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Largest criterion value over all forms and records.
std::int64_t max_cost(std::span<const SweepRecord> records, Criterion criterion);

/// N_ij counts records with cost <= j for j = 0..S_mm. Throws AnalysisError on
/// an empty record set and, for the plain variant, when S_mm = 0.
ReiResult rei(std::span<const SweepRecord> records, Form form, Criterion criterion, ReiVariant variant);

struct WeightEntry {
  std::int64_t count = 0;
  Rational weight;
  double std_error = 0.0;  ///< binomial sqrt(p (1 - p) / N)
};

/// Fractions of records per label; every label is present, the weights sum
/// to exactly 1.
std::map<SubsetLabel, WeightEntry> specific_weights(std::span<const SweepRecord> records, Criterion criterion);

enum class Scenario : std::uint8_t { CFR, CFR_AFR, CFR_RMFR, OFR };
inline constexpr std::array<Scenario, 4> kAllScenarios = {Scenario::CFR, Scenario::CFR_AFR, Scenario::CFR_RMFR,
                                                          Scenario::OFR};
std::string_view scenario_name(Scenario scenario);

struct LossReport {
  Scenario scenario = Scenario::CFR;
  Criterion criterion = Criterion::S_ad;
  std::int64_t q = 0;
  std::int64_t q_cfr = 0;
  std::int64_t absolute_benefit = 0;
  /// benefit / Q(CFR) * 100
  Rational percent_of_cfr;
  /// benefit / Q(scenario) * 100
  Rational percent_of_scenario;
};

/// Sum over records of the best criterion value available to the scenario.
/// Only S_ad and S_s are accepted.
LossReport q_aggregate(std::span<const SweepRecord> records, Scenario scenario, Criterion criterion);

/// Mergeable per-criterion tallies: label counts, and cost histograms per form.
/// Partial tallies over disjoint record sets combine with merge(), which is
/// associative and commutative; every statistic above is a function of the
/// merged tally.
struct Tally {
  Criterion criterion = Criterion::S_ad;
  std::int64_t records = 0;
  std::map<SubsetLabel, std::int64_t> labels;
  std::array<std::map<std::int64_t, std::int64_t>, 4> histogram;  ///< by Form

  void add(const SweepRecord& record);
  void merge(const Tally& other);
  friend bool operator==(const Tally&, const Tally&) = default;
};

Tally tally(std::span<const SweepRecord> records, Criterion criterion);
std::int64_t max_cost(const Tally& t);
ReiResult rei(const Tally& t, Form form, ReiVariant variant);
std::map<SubsetLabel, WeightEntry> specific_weights(const Tally& t);

}  // namespace bfforms
