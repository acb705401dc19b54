#include "bfforms/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bfforms {

using nlohmann::json;

namespace {

std::string escape_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Reference values for the same populations, compared against in reference.csv.
struct ReferenceEntry {
  unsigned n;
  const char* metric;
  const char* value;
};

constexpr ReferenceEntry kReferences[] = {
    // REI, n = 3
    {3, "rei/CFR/S_ad", "0.74"}, {3, "rei/CFR/S_sh", "0.61"}, {3, "rei/CFR/S_L", "0.63"},
    {3, "rei/CFR/S_s", "0.53"}, {3, "rei/CFR/S_ac", "0.47"}, {3, "rei/AFR/S_ad", "0.58"},
    {3, "rei/AFR/S_sh", "0.8"}, {3, "rei/AFR/S_L", "0.61"}, {3, "rei/AFR/S_s", "0.63"},
    {3, "rei/AFR/S_ac", "0.89"}, {3, "rei/RMFR/S_ad", "0.7"}, {3, "rei/RMFR/S_sh", "0.75"},
    {3, "rei/RMFR/S_L", "0.66"}, {3, "rei/RMFR/S_s", "0.76"}, {3, "rei/RMFR/S_ac", "0.86"},
    {3, "rei/OFR/S_ad", "0.76"}, {3, "rei/OFR/S_sh", "0.86"}, {3, "rei/OFR/S_L", "0.71"},
    {3, "rei/OFR/S_s", "0.82"}, {3, "rei/OFR/S_ac", "0.92"},
    // REI, n = 4
    {4, "rei/CFR/S_ad", "0.742"}, {4, "rei/CFR/S_sh", "0.575"}, {4, "rei/CFR/S_L", "0.645"},
    {4, "rei/CFR/S_s", "0.514"}, {4, "rei/CFR/S_ac", "0.517"}, {4, "rei/AFR/S_ad", "0.644"},
    {4, "rei/AFR/S_sh", "0.611"}, {4, "rei/AFR/S_L", "0.664"}, {4, "rei/AFR/S_s", "0.665"},
    {4, "rei/AFR/S_ac", "0.784"}, {4, "rei/RMFR/S_ad", "0.656"}, {4, "rei/RMFR/S_sh", "0.591"},
    {4, "rei/RMFR/S_L", "0.642"}, {4, "rei/RMFR/S_s", "0.676"}, {4, "rei/RMFR/S_ac", "0.770"},
    {4, "rei/OFR/S_ad", "0.747"}, {4, "rei/OFR/S_sh", "0.667"}, {4, "rei/OFR/S_L", "0.711"},
    {4, "rei/OFR/S_s", "0.701"}, {4, "rei/OFR/S_ac", "0.816"},
    // aggregate losses
    {3, "q/S_ad/CFR", "590"}, {3, "q/S_ad/CFR+AFR", "582"}, {3, "q/S_ad/CFR+RMFR", "556"},
    {3, "q/S_ad/OFR", "556"}, {3, "q/S_s/CFR", "3540"}, {3, "q/S_s/CFR+AFR", "2121"},
    {3, "q/S_s/CFR+RMFR", "2052"}, {3, "q/S_s/OFR", "1908"},
    {4, "q/S_ad/CFR", "270897"}, {4, "q/S_ad/CFR+AFR", "269633"}, {4, "q/S_ad/CFR+RMFR", "266113"},
    {4, "q/S_ad/OFR", "265521"}, {4, "q/S_s/CFR", "2167176"}, {4, "q/S_s/CFR+AFR", "1494060"},
    {4, "q/S_s/CFR+RMFR", "1439512"}, {4, "q/S_s/OFR", "1331348"},
    {5, "q/S_ad/CFR", "491261"}, {5, "q/S_ad/CFR+AFR", "491236"}, {5, "q/S_ad/CFR+RMFR", "490595"},
    {5, "q/S_ad/OFR", "490570"}, {5, "q/S_s/CFR", "4912610"}, {5, "q/S_s/CFR+AFR", "4528740"},
    {5, "q/S_s/CFR+RMFR", "3771185"}, {5, "q/S_s/OFR", "3716360"},
    // classical share among priority subsets, n = 4
    {4, "weight/S_ad/C", "0.9278"}, {4, "weight/S_ad/C*", "0.9278"},
    {4, "weight/S_s/C", "0.019"}, {4, "weight/S_s/C*", "0.019"},
};

std::string key_rei(Form f, Criterion c) {
  return "rei/" + std::string(form_name(f)) + "/" + std::string(criterion_name(c));
}

struct Stats {
  std::array<std::vector<SweepRecord>, kCriterionCount> records;
  std::array<Tally, kCriterionCount> tallies;

  explicit Stats(const SweepData& data) {
    for (auto c : kAllCriteria) {
      records[criterion_slot(c)] = data.records(c);
      tallies[criterion_slot(c)] = tally(records[criterion_slot(c)], c);
    }
  }
  const Tally& t(Criterion c) const { return tallies[criterion_slot(c)]; }
  const std::vector<SweepRecord>& r(Criterion c) const { return records[criterion_slot(c)]; }
};

std::vector<std::string> criterion_headers(const std::string& first) {
  std::vector<std::string> h{first};
  for (auto c : kAllCriteria) h.emplace_back(criterion_name(c));
  return h;
}

std::optional<Rational> eta_or_none(const Tally& t, Form f, ReiVariant v) {
  try {
    return rei(t, f, v).eta;
  } catch (const AnalysisError&) {
    return std::nullopt;
  }
}

Rational contains_c_weight(const Tally& t) {
  std::int64_t count = 0;
  for (const auto& [label, k] : t.labels)
    if (static_cast<unsigned>(label) & 1U) count += k;
  return {count, t.records};
}

std::optional<Rational> observed_metric(const Stats& s, const std::string& metric) {
  for (auto f : kAllForms)
    for (auto c : kAllCriteria)
      if (metric == key_rei(f, c)) return eta_or_none(s.t(c), f, ReiVariant::Plain);
  for (auto c : {Criterion::S_ad, Criterion::S_s})
    for (auto sc : kAllScenarios)
      if (metric == "q/" + std::string(criterion_name(c)) + "/" + std::string(scenario_name(sc)))
        return Rational(q_aggregate(s.r(c), sc, c).q);
  for (auto c : kAllCriteria) {
    const std::string prefix = "weight/" + std::string(criterion_name(c)) + "/";
    if (metric == prefix + "C") return specific_weights(s.t(c)).at(SubsetLabel::C).weight;
    if (metric == prefix + "C*") return contains_c_weight(s.t(c));
  }
  return std::nullopt;
}

ReportTable reference_table_from(const SweepData& data, const Stats& s) {
  ReportTable t{"Observed vs reference values (C* = any label containing C)",
                {"metric", "reference", "observed", "difference"},
                {}};
  for (const auto& ref : kReferences) {
    if (ref.n != data.n) continue;
    const auto observed = observed_metric(s, ref.metric);
    if (!observed) continue;
    const Rational reference = parse_decimal(ref.value);
    t.rows.push_back({std::string(ref.metric), reference, *observed, *observed - reference});
  }
  return t;
}

}  // namespace

std::string render_cell(const Cell& cell, unsigned precision) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>)
          return escape_csv(v);
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v);
        else if constexpr (std::is_same_v<T, Rational>)
          return to_decimal(v, precision);
        else
          return fixed6(v);
      },
      cell);
}

std::string to_csv(const ReportTable& table, unsigned precision) {
  std::string out;
  for (std::size_t i = 0; i < table.headers.size(); ++i) out += (i ? "," : "") + escape_csv(table.headers[i]);
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + render_cell(row[i], precision);
    out += "\n";
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    any = true;
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

json rational_json(const Rational& r, unsigned precision) {
  return json{{"num", r.numerator()}, {"den", r.denominator()}, {"decimal", to_decimal(r, precision)}};
}

ReportTable rei_table(const SweepData& data, ReiVariant variant) {
  const Stats s(data);
  ReportTable t{variant == ReiVariant::Plain ? "Relative efficiency index" : "Relative efficiency index (normalized)",
                criterion_headers("form"),
                {}};
  for (auto f : kAllForms) {
    std::vector<Cell> row{std::string(form_name(f))};
    for (auto c : kAllCriteria) {
      const auto eta = eta_or_none(s.t(c), f, variant);
      row.push_back(eta ? Cell(*eta) : Cell(std::string("undefined")));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

ReportTable rei_stderr_table(const SweepData& data) {
  const Stats s(data);
  ReportTable t{"Standard error of the relative efficiency index", criterion_headers("form"), {}};
  for (auto f : kAllForms) {
    std::vector<Cell> row{std::string(form_name(f))};
    for (auto c : kAllCriteria) row.push_back(rei(s.t(c), f, ReiVariant::Normalized).std_error);
    t.rows.push_back(std::move(row));
  }
  return t;
}

ReportTable weights_table(const SweepData& data) {
  const Stats s(data);
  ReportTable t{"Specific weight of priority subsets", criterion_headers("label"), {}};
  for (auto label : kAllLabels) {
    std::vector<Cell> row{std::string(label_name(label))};
    for (auto c : kAllCriteria) row.push_back(specific_weights(s.t(c)).at(label).weight);
    t.rows.push_back(std::move(row));
  }
  return t;
}

ReportTable weights_stderr_table(const SweepData& data) {
  const Stats s(data);
  ReportTable t{"Standard error of specific weights", criterion_headers("label"), {}};
  for (auto label : kAllLabels) {
    std::vector<Cell> row{std::string(label_name(label))};
    for (auto c : kAllCriteria) row.push_back(specific_weights(s.t(c)).at(label).std_error);
    t.rows.push_back(std::move(row));
  }
  return t;
}

ReportTable figure_weights_table(const SweepData& data) {
  const Stats s(data);
  ReportTable t{"Specific weights, long format", {"criterion", "label", "count", "weight", "percent"}, {}};
  for (auto c : kAllCriteria) {
    const auto w = specific_weights(s.t(c));
    for (auto label : kAllLabels) {
      const auto& e = w.at(label);
      t.rows.push_back({std::string(criterion_name(c)), std::string(label_name(label)), e.count, e.weight,
                        e.weight * Rational(100)});
    }
  }
  return t;
}

ReportTable loss_table(const SweepData& data) {
  const Stats s(data);
  ReportTable t{"Aggregate cost per implementation scenario",
                {"criterion", "scenario", "q", "absolute_benefit", "percent_of_cfr", "percent_of_scenario"},
                {}};
  for (auto c : {Criterion::S_ad, Criterion::S_s})
    for (auto sc : kAllScenarios) {
      const auto l = q_aggregate(s.r(c), sc, c);
      t.rows.push_back({std::string(criterion_name(c)), std::string(scenario_name(sc)), l.q, l.absolute_benefit,
                        l.percent_of_cfr, l.percent_of_scenario});
    }
  return t;
}

ReportTable records_table(const SweepData& data) {
  ReportTable t{"Per-function records", {"draw", "function", "criterion"}, {}};
  for (const char* form : {"cfr", "afr", "rm"}) {
    if (std::string(form) != "cfr") t.headers.push_back(std::string(form) + "_polarity");
    for (const char* field : {"s_ad", "s_sh", "s_l", "s_s", "s_ac"}) t.headers.push_back(std::string(form) + "_" + field);
  }
  t.headers.push_back("label");
  std::int64_t draw = 0;
  for (const auto& f : data.functions) {
    for (const auto& r : f.by_criterion) {
      std::vector<Cell> row{draw, to_hex(tt_from_index(r.function)), std::string(criterion_name(r.criterion))};
      auto push = [&](const CostVector& cv) {
        for (auto v : {cv.s_ad, cv.s_sh, cv.s_l, cv.s_s, cv.s_ac}) row.push_back(v);
      };
      push(r.cost_cfr);
      row.push_back(static_cast<std::int64_t>(r.afr_polarity));
      push(r.cost_afr);
      row.push_back(static_cast<std::int64_t>(r.rm_polarity));
      push(r.cost_rm);
      row.push_back(std::string(label_name(classify(r))));
      t.rows.push_back(std::move(row));
    }
    ++draw;
  }
  return t;
}

ReportTable reference_table(const SweepData& data) { return reference_table_from(data, Stats(data)); }

json report_json(const SweepData& data, unsigned precision) {
  const Stats s(data);
  const auto records = static_cast<std::int64_t>(data.functions.size());
  json j;
  j["schema"] = "bfforms.report";
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = data.n;
  j["sampled"] = data.sampled;
  j["records"] = records;
  j["population"] = data.n <= 5 ? json(std::uint64_t{1} << row_count(data.n)) : json("2^64");
  if (data.sampled) j["seed"] = data.seed;

  double max_weight_se = 0.0;
  for (auto c : kAllCriteria) {
    const Tally& t = s.t(c);
    json cj;
    cj["s_mm"] = max_cost(t);
    for (auto f : kAllForms) {
      json fj;
      const auto normalized = rei(t, f, ReiVariant::Normalized);
      const auto plain = eta_or_none(t, f, ReiVariant::Plain);
      fj["plain"] = plain ? rational_json(*plain, precision) : json(nullptr);
      fj["normalized"] = rational_json(normalized.eta, precision);
      if (data.sampled) fj["std_error"] = normalized.std_error;
      cj["rei"][std::string(form_name(f))] = fj;
    }
    for (const auto& [label, e] : specific_weights(t)) {
      json wj{{"count", e.count}, {"weight", rational_json(e.weight, precision)}};
      if (data.sampled) wj["std_error"] = e.std_error;
      max_weight_se = std::max(max_weight_se, e.std_error);
      cj["weights"][std::string(label_name(label))] = wj;
    }
    if (c == Criterion::S_ad || c == Criterion::S_s) {
      for (auto sc : kAllScenarios) {
        const auto l = q_aggregate(s.r(c), sc, c);
        cj["losses"][std::string(scenario_name(sc))] = {{"q", l.q},
                                                        {"absolute_benefit", l.absolute_benefit},
                                                        {"percent_of_cfr", rational_json(l.percent_of_cfr, precision)},
                                                        {"percent_of_scenario",
                                                         rational_json(l.percent_of_scenario, precision)}};
      }
    }
    j["criteria"][std::string(criterion_name(c))] = cj;
  }

  if (data.sampled) {
    const double n = static_cast<double>(records);
    j["sampling"] = {{"max_weight_std_error", max_weight_se},
                     {"binomial_std_error_bound", std::sqrt(0.25 / n)},
                     {"ci95_halfwidth_bound", 1.96 * std::sqrt(0.25 / n)}};
  }

  json refs = json::array();
  for (const auto& row : reference_table_from(data, s).rows) {
    refs.push_back({{"metric", std::get<std::string>(row[0])},
                    {"reference", rational_json(std::get<Rational>(row[1]), precision)},
                    {"observed", rational_json(std::get<Rational>(row[2]), precision)},
                    {"difference", rational_json(std::get<Rational>(row[3]), precision)}});
  }
  j["reference"] = refs;
  return j;
}

std::map<std::string, std::string> render_reports(const SweepData& data, unsigned precision) {
  std::map<std::string, std::string> files;
  files["records.csv"] = to_csv(records_table(data), precision);
  files["rei.csv"] = to_csv(rei_table(data, ReiVariant::Plain), precision);
  files["rei_normalized.csv"] = to_csv(rei_table(data, ReiVariant::Normalized), precision);
  files["weights.csv"] = to_csv(weights_table(data), precision);
  files["figure_weights.csv"] = to_csv(figure_weights_table(data), precision);
  files["losses.csv"] = to_csv(loss_table(data), precision);
  files["reference.csv"] = to_csv(reference_table(data), precision);
  if (data.sampled) {
    files["rei_stderr.csv"] = to_csv(rei_stderr_table(data), precision);
    files["weights_stderr.csv"] = to_csv(weights_stderr_table(data), precision);
  }
  files["report.json"] = report_json(data, precision).dump(2) + "\n";
  return files;
}

void write_reports(const std::filesystem::path& dir, const SweepData& data, unsigned precision) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, content] : render_reports(data, precision)) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << content;
  }
}

std::optional<OutputFormat> parse_output_format(const std::string& text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

namespace {

json cost_json(const CostVector& c) {
  return {{"S_ad", c.s_ad}, {"S_sh", c.s_sh}, {"S_L", c.s_l}, {"S_s", c.s_s}, {"S_ac", c.s_ac}};
}

std::string polarity_bits(const Polarity& p) {
  std::string s;
  for (unsigned i = 1; i <= p.n; ++i) s += p.inverted(i) ? '1' : '0';
  return s;
}

}  // namespace

std::string render_analysis(const TruthTable& tt, std::optional<Criterion> criterion, OutputFormat format,
                            const MinimizerOptions& options) {
  const unsigned n = tt.n();
  const SopForm sop = minimize_sop(tt, options);
  const CostVector cfr = cost_of_sop(sop, n);
  std::vector<Criterion> criteria;
  if (criterion)
    criteria.push_back(*criterion);
  else
    criteria.assign(kAllCriteria.begin(), kAllCriteria.end());

  struct Row {
    Criterion c;
    RmPolynomial rm;
    ArithPolynomial afr;
    SweepRecord record;
  };
  std::vector<Row> rows;
  for (auto c : criteria) {
    auto rm = best_polarity(tt, c);
    auto afr = best_arith_polarity(tt, c);
    SweepRecord rec{tt.index(), c, cfr, cost_of_arith(afr, n), cost_of_rm(rm, n), afr.polarity.k, rm.polarity.k};
    rows.push_back({c, std::move(rm), std::move(afr), rec});
  }

  std::string bits;
  for (std::uint32_t r = 0; r < tt.size(); ++r) bits += tt.bit(r) ? '1' : '0';

  if (format == OutputFormat::Json) {
    json j;
    j["schema"] = "bfforms.analysis";
    j["schema_version"] = kReportSchemaVersion;
    j["n"] = n;
    j["tt"] = to_hex(tt);
    j["bits"] = bits;
    json terms = json::array();
    for (const auto& cube : sop.terms) terms.push_back(cube.to_string());
    j["cfr"] = {{"terms", terms}, {"text", format_sop(sop)}, {"cost", cost_json(cfr)}};
    for (const auto& row : rows) {
      json rmj{{"polarity", row.rm.polarity.k},
               {"polarity_bits", polarity_bits(row.rm.polarity)},
               {"coeffs", json::array()},
               {"text", format_rm(row.rm)},
               {"cost", cost_json(row.record.cost_rm)}};
      for (std::uint32_t k = 0; k < tt.size(); ++k) rmj["coeffs"].push_back(row.rm.coeff(k) ? 1 : 0);
      json afj{{"polarity", row.afr.polarity.k},
               {"polarity_bits", polarity_bits(row.afr.polarity)},
               {"coeffs", row.afr.coeffs},
               {"text", format_arith(row.afr)},
               {"cost", cost_json(row.record.cost_afr)}};
      j["criteria"][std::string(criterion_name(row.c))] = {
          {"rm", rmj}, {"afr", afj}, {"label", std::string(label_name(classify(row.record)))}};
    }
    return j.dump(2) + "\n";
  }

  if (format == OutputFormat::Csv) {
    ReportTable t{"analysis", {"criterion", "form", "polarity", "text", "s_ad", "s_sh", "s_l", "s_s", "s_ac", "label"},
                  {}};
    for (const auto& row : rows) {
      const std::string label(label_name(classify(row.record)));
      auto push = [&](const char* form, Cell polarity, const std::string& text, const CostVector& cv) {
        t.rows.push_back({std::string(criterion_name(row.c)), std::string(form), polarity, text, cv.s_ad, cv.s_sh,
                          cv.s_l, cv.s_s, cv.s_ac, label});
      };
      push("CFR", std::string(""), format_sop(sop), cfr);
      push("AFR", static_cast<std::int64_t>(row.afr.polarity.k), format_arith(row.afr), row.record.cost_afr);
      push("RMFR", static_cast<std::int64_t>(row.rm.polarity.k), format_rm(row.rm), row.record.cost_rm);
    }
    return to_csv(t);
  }

  std::ostringstream os;
  os << "function n=" << n << " tt=" << to_hex(tt) << " bits=" << bits << "\n";
  os << "CFR  " << format_sop(sop) << "\n     " << to_string(cfr) << "\n";
  for (const auto& row : rows) {
    os << "[" << criterion_name(row.c) << "] label " << label_name(classify(row.record)) << "\n";
    os << "  RMFR k=" << row.rm.polarity.k << " (" << polarity_bits(row.rm.polarity) << ")  " << format_rm(row.rm)
       << "\n       " << to_string(row.record.cost_rm) << "\n";
    os << "  AFR  k=" << row.afr.polarity.k << " (" << polarity_bits(row.afr.polarity) << ")  "
       << format_arith(row.afr) << "\n       " << to_string(row.record.cost_afr) << "\n";
  }
  return os.str();
}

}  // namespace bfforms
