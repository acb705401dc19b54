#include "bfforms/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bfforms {

std::string_view label_name(SubsetLabel label) {
  switch (label) {
    case SubsetLabel::C: return "C";
    case SubsetLabel::A: return "A";
    case SubsetLabel::CA: return "CA";
    case SubsetLabel::RM: return "RM";
    case SubsetLabel::CR: return "CR";
    case SubsetLabel::AR: return "AR";
    case SubsetLabel::CAR: return "CAR";
  }
  return "?";
}

std::string_view form_name(Form form) {
  switch (form) {
    case Form::CFR: return "CFR";
    case Form::AFR: return "AFR";
    case Form::RMFR: return "RMFR";
    case Form::OFR: return "OFR";
  }
  return "?";
}

std::string_view scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::CFR: return "CFR";
    case Scenario::CFR_AFR: return "CFR+AFR";
    case Scenario::CFR_RMFR: return "CFR+RMFR";
    case Scenario::OFR: return "OFR";
  }
  return "?";
}

std::int64_t SweepRecord::value(Form form, Criterion c) const {
  switch (form) {
    case Form::CFR: return cost_cfr[c];
    case Form::AFR: return cost_afr[c];
    case Form::RMFR: return cost_rm[c];
    case Form::OFR: return std::min({cost_cfr[c], cost_afr[c], cost_rm[c]});
  }
  return 0;
}

FunctionAnalysis analyze_all(const TruthTable& tt, const MinimizerOptions& options) {
  const unsigned n = tt.n();
  const CostVector cfr = cost_of_sop(minimize_sop(tt, options), n);
  const auto rm = best_polarity_all(tt);
  const auto afr = best_arith_polarity_all(tt);

  FunctionAnalysis out{tt.index(), {}};
  for (auto c : kAllCriteria) {
    const auto s = criterion_slot(c);
    out.by_criterion[s] = SweepRecord{tt.index(),          c, cfr, cost_of_arith(afr[s], n), cost_of_rm(rm[s], n),
                                      afr[s].polarity.k, rm[s].polarity.k};
  }
  return out;
}

SweepRecord analyze_function(const TruthTable& tt, Criterion criterion, const MinimizerOptions& options) {
  const unsigned n = tt.n();
  const auto rm = best_polarity(tt, criterion);
  const auto afr = best_arith_polarity(tt, criterion);
  return {tt.index(),       criterion, cost_of_sop(minimize_sop(tt, options), n), cost_of_arith(afr, n),
          cost_of_rm(rm, n), afr.polarity.k, rm.polarity.k};
}

SubsetLabel classify(const SweepRecord& record, Criterion criterion) {
  const std::int64_t c = record.cost_cfr[criterion];
  const std::int64_t a = record.cost_afr[criterion];
  const std::int64_t r = record.cost_rm[criterion];
  const std::int64_t best = std::min({c, a, r});
  const unsigned bits = (c == best ? 1U : 0U) | (a == best ? 2U : 0U) | (r == best ? 4U : 0U);
  return static_cast<SubsetLabel>(bits);
}

namespace {
constexpr std::size_t form_slot(Form f) { return static_cast<std::size_t>(f); }

void require_records(std::span<const SweepRecord> records, Criterion criterion) {
  if (records.empty()) throw AnalysisError("empty record set");
  for (const auto& r : records)
    if (r.criterion != criterion)
      throw AnalysisError("record minimized under " + std::string(criterion_name(r.criterion)) + ", queried under " +
                          std::string(criterion_name(criterion)));
}
}  // namespace

void Tally::add(const SweepRecord& record) {
  ++records;
  ++labels[classify(record, criterion)];
  for (auto f : kAllForms) ++histogram[form_slot(f)][record.value(f, criterion)];
}

void Tally::merge(const Tally& other) {
  if (other.records == 0) return;
  if (records && other.criterion != criterion) throw AnalysisError("merging tallies of different criteria");
  if (records == 0) criterion = other.criterion;
  records += other.records;
  for (const auto& [label, count] : other.labels) labels[label] += count;
  for (std::size_t f = 0; f < histogram.size(); ++f)
    for (const auto& [cost, count] : other.histogram[f]) histogram[f][cost] += count;
}

Tally tally(std::span<const SweepRecord> records, Criterion criterion) {
  require_records(records, criterion);
  Tally t;
  t.criterion = criterion;
  for (const auto& r : records) t.add(r);
  return t;
}

std::int64_t max_cost(const Tally& t) {
  std::int64_t m = 0;
  for (const auto& h : t.histogram)
    if (!h.empty()) m = std::max(m, h.rbegin()->first);
  return m;
}

std::int64_t max_cost(std::span<const SweepRecord> records, Criterion criterion) {
  std::int64_t m = 0;
  for (const auto& r : records)
    for (auto f : kAllForms) m = std::max(m, r.value(f, criterion));
  return m;
}

ReiResult rei(const Tally& t, Form form, ReiVariant variant) {
  if (t.records == 0) throw AnalysisError("empty record set");
  const std::int64_t s_mm = max_cost(t);
  if (variant == ReiVariant::Plain && s_mm == 0) throw AnalysisError("degenerate S_mm: every cost is 0");
  const std::int64_t denom = variant == ReiVariant::Plain ? s_mm : s_mm + 1;

  // sum_{j=0..S_mm} N_ij = sum over records of (S_mm - cost + 1)
  std::int64_t sum = 0;
  for (const auto& [cost, count] : t.histogram[form_slot(form)]) sum += count * (s_mm - cost + 1);

  ReiResult out{form, t.criterion, variant, Rational(sum, t.records * denom), s_mm, t.records, 0.0};
  if (t.records > 1) {
    // per-record contribution v = (S_mm - cost + 1) / denom; eta is their mean
    const double mean = static_cast<double>(sum) / static_cast<double>(t.records * denom);
    double ss = 0.0;
    for (const auto& [cost, count] : t.histogram[form_slot(form)]) {
      const double v = static_cast<double>(s_mm - cost + 1) / static_cast<double>(denom);
      ss += static_cast<double>(count) * (v - mean) * (v - mean);
    }
    const double n = static_cast<double>(t.records);
    out.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return out;
}

ReiResult rei(std::span<const SweepRecord> records, Form form, Criterion criterion, ReiVariant variant) {
  return rei(tally(records, criterion), form, variant);
}

std::map<SubsetLabel, WeightEntry> specific_weights(const Tally& t) {
  if (t.records == 0) throw AnalysisError("empty record set");
  std::map<SubsetLabel, WeightEntry> out;
  const double n = static_cast<double>(t.records);
  for (auto label : kAllLabels) {
    const auto it = t.labels.find(label);
    const std::int64_t count = it == t.labels.end() ? 0 : it->second;
    const double p = static_cast<double>(count) / n;
    out[label] = {count, Rational(count, t.records), std::sqrt(p * (1.0 - p) / n)};
  }
  return out;
}

std::map<SubsetLabel, WeightEntry> specific_weights(std::span<const SweepRecord> records, Criterion criterion) {
  return specific_weights(tally(records, criterion));
}

LossReport q_aggregate(std::span<const SweepRecord> records, Scenario scenario, Criterion criterion) {
  if (criterion != Criterion::S_ad && criterion != Criterion::S_s)
    throw AnalysisError("loss aggregates are defined for S_ad and S_s only");
  require_records(records, criterion);
  std::int64_t q = 0;
  std::int64_t q_cfr = 0;
  for (const auto& r : records) {
    const std::int64_t c = r.cost_cfr[criterion];
    const std::int64_t a = r.cost_afr[criterion];
    const std::int64_t m = r.cost_rm[criterion];
    q_cfr += c;
    switch (scenario) {
      case Scenario::CFR: q += c; break;
      case Scenario::CFR_AFR: q += std::min(c, a); break;
      case Scenario::CFR_RMFR: q += std::min(c, m); break;
      case Scenario::OFR: q += std::min({c, a, m}); break;
    }
  }
  LossReport out{scenario, criterion, q, q_cfr, q_cfr - q, Rational(0), Rational(0)};
  if (q_cfr) out.percent_of_cfr = Rational(100 * out.absolute_benefit, q_cfr);
  if (q) out.percent_of_scenario = Rational(100 * out.absolute_benefit, q);
  return out;
}

}  // namespace bfforms
