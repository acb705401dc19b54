// Command-line front end: analyze, sweep, sample, convert.
//
// Exit codes: 0 success, 1 usage error, 2 input format error,
// 3 resource guard abort.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bfforms/pla.hpp"
#include "bfforms/report.hpp"
#include "bfforms/sweep.hpp"

namespace {

using namespace bfforms;

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kGuard = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Criterion criterion_or_throw(const std::string& text) {
  const auto c = parse_criterion(text);
  if (!c) throw UsageError("unknown criterion '" + text + "' (expected S_ad, S_sh, S_L, S_s or S_ac)");
  return *c;
}

TruthTable pla_function(const std::string& path, unsigned output, std::optional<unsigned> expect_n) {
  PlaParseResult parsed;
  try {
    parsed = parse_pla_with_warnings(read_file(path));
  } catch (const PlaParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  for (const auto& w : parsed.warnings) std::cerr << path << ": warning: " << w << "\n";
  const PlaDocument& doc = parsed.document;
  if (expect_n && doc.inputs != *expect_n)
    throw InputError(path + ": .i " + std::to_string(doc.inputs) + " does not match --n " + std::to_string(*expect_n));
  if (output >= doc.outputs)
    throw InputError(path + ": output " + std::to_string(output) + " out of range (.o " + std::to_string(doc.outputs) +
                     ")");
  return pla_table(doc, output);
}

void print_sweep_summary(const SweepData& data, const std::string& dir) {
  std::cerr << "wrote reports for n=" << data.n << " ("
            << data.functions.size() << (data.sampled ? " samples" : " functions") << ") to " << dir << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal classical, Reed-Muller and arithmetic forms of Boolean functions"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Minimize one function in all forms and classify it");
  unsigned a_n = 0;
  std::string a_tt, a_pla, a_criterion, a_format = "text";
  unsigned a_output = 0;
  analyze->add_option("--n", a_n, "Number of variables")->required()->check(CLI::Range(1U, kMaxVars));
  auto* tt_opt = analyze->add_option("--tt", a_tt, "Truth table as hex; bit j is the value at row j");
  auto* pla_opt = analyze->add_option("--pla", a_pla, "Berkeley PLA file");
  tt_opt->excludes(pla_opt);
  analyze->add_option("--output", a_output, "0-based PLA output column")->needs(pla_opt);
  analyze->add_option("--criterion", a_criterion, "Only this criterion (default: all five)");
  analyze->add_option("--format", a_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Analyze every function of n variables");
  unsigned s_n = 0, s_jobs = 0;
  std::string s_out;
  sweep_cmd->add_option("--n", s_n, "Number of variables")->required()->check(CLI::Range(1U, kMaxEnumerateVars));
  sweep_cmd->add_option("--out", s_out, "Report directory")->required();
  sweep_cmd->add_option("--jobs", s_jobs, "Worker threads (0 = OpenMP default)");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Analyze uniform random functions");
  unsigned m_n = 0, m_jobs = 0;
  std::uint64_t m_count = 65536, m_seed = 0;
  std::string m_out;
  sample_cmd->add_option("--n", m_n, "Number of variables")->required()->check(CLI::Range(1U, kMaxSweepVars));
  sample_cmd->add_option("--count", m_count, "Number of draws")->check(CLI::Range(std::uint64_t{1}, kMaxSampleCount));
  sample_cmd->add_option("--seed", m_seed, "Generator seed")->required();
  sample_cmd->add_option("--out", m_out, "Report directory")->required();
  sample_cmd->add_option("--jobs", m_jobs, "Worker threads (0 = OpenMP default)");

  // convert
  auto* convert = app.add_subcommand("convert", "Print one minimized form of a PLA function");
  std::string c_pla, c_form, c_polarity = "best", c_criterion = "S_ad";
  unsigned c_output = 0;
  convert->add_option("--pla", c_pla, "Berkeley PLA file")->required();
  convert->add_option("--form", c_form, "cfr, rm or afr")->required()->check(CLI::IsMember({"cfr", "rm", "afr"}));
  convert->add_option("--polarity", c_polarity, "Polarity integer K or 'best'");
  convert->add_option("--criterion", c_criterion, "Criterion for the best-polarity search");
  convert->add_option("--output", c_output, "0-based PLA output column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (analyze->parsed()) {
      if (a_tt.empty() == a_pla.empty()) throw UsageError("analyze needs exactly one of --tt or --pla");
      std::optional<Criterion> criterion;
      if (!a_criterion.empty()) criterion = criterion_or_throw(a_criterion);
      TruthTable tt;
      if (!a_tt.empty()) {
        try {
          tt = tt_from_hex(a_n, a_tt);
        } catch (const std::invalid_argument& e) {
          throw InputError(std::string("--tt: ") + e.what());
        }
      } else {
        tt = pla_function(a_pla, a_output, a_n);
      }
      std::cout << render_analysis(tt, criterion, *parse_output_format(a_format));
    } else if (sweep_cmd->parsed()) {
      const SweepData data = sweep(s_n, s_jobs);
      write_reports(s_out, data);
      print_sweep_summary(data, s_out);
    } else if (sample_cmd->parsed()) {
      const SweepData data = sampled_sweep(m_n, m_count, m_seed, m_jobs);
      write_reports(m_out, data);
      print_sweep_summary(data, m_out);
    } else if (convert->parsed()) {
      const TruthTable tt = pla_function(c_pla, c_output, std::nullopt);
      const unsigned n = tt.n();
      if (c_form == "cfr") {
        const SopForm sop = minimize_sop(tt);
        std::cout << format_sop(sop) << "\n" << to_string(cost_of_sop(sop, n)) << "\n" << emit_pla(pla_from_sop(sop));
        return kOk;
      }
      const Criterion criterion = criterion_or_throw(c_criterion);
      std::optional<Polarity> polarity;
      if (c_polarity != "best") {
        std::uint32_t k = 0;
        const auto res = std::from_chars(c_polarity.data(), c_polarity.data() + c_polarity.size(), k);
        if (res.ec != std::errc{} || res.ptr != c_polarity.data() + c_polarity.size())
          throw UsageError("--polarity must be an integer or 'best'");
        if (k >= row_count(n)) throw UsageError("--polarity out of range for n=" + std::to_string(n));
        polarity = Polarity(n, k);
      }
      if (c_form == "rm") {
        const RmPolynomial rm = polarity ? fprm_transform(tt, *polarity) : best_polarity(tt, criterion);
        std::cout << "polarity " << rm.polarity.k << "\n" << format_rm(rm) << "\n" << to_string(cost_of_rm(rm, n)) << "\n";
      } else {
        const ArithPolynomial afr = polarity ? arithmetic_transform(tt, *polarity) : best_arith_polarity(tt, criterion);
        std::cout << "polarity " << afr.polarity.k << "\n"
                  << format_arith(afr) << "\n"
                  << to_string(cost_of_arith(afr, n)) << "\n";
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
