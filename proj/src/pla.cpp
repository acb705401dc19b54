#include "bfforms/pla.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bfforms {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, std::string_view directive) {
  std::size_t value = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw PlaParseError(line, "malformed " + std::string(directive) + " value '" + std::string(token) + "'");
  return value;
}

}  // namespace

PlaParseResult parse_pla_with_warnings(std::string_view text) {
  PlaParseResult result;
  PlaDocument& doc = result.document;
  bool have_i = false;
  bool have_o = false;
  bool ended = false;
  std::size_t declared_p_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (ended) throw PlaParseError(line_no, "content after .e");

    const std::string_view head = tokens[0];
    if (head[0] == '.') {
      if (head == ".i" || head == ".o" || head == ".p") {
        if (tokens.size() != 2) throw PlaParseError(line_no, std::string(head) + " expects one value");
        const std::size_t value = parse_count(tokens[1], line_no, head);
        if (head == ".i") {
          if (have_i) throw PlaParseError(line_no, "duplicate .i");
          if (value < 1 || value > kMaxVars) throw PlaParseError(line_no, ".i must be between 1 and 6");
          doc.inputs = static_cast<unsigned>(value);
          have_i = true;
        } else if (head == ".o") {
          if (have_o) throw PlaParseError(line_no, "duplicate .o");
          if (value < 1) throw PlaParseError(line_no, ".o must be at least 1");
          doc.outputs = static_cast<unsigned>(value);
          have_o = true;
        } else {
          if (doc.products) throw PlaParseError(line_no, "duplicate .p");
          doc.products = value;
          declared_p_line = line_no;
        }
      } else if (head == ".e" || head == ".end") {
        ended = true;
      } else if (head == ".ilb" || head == ".ob") {
        result.warnings.push_back("line " + std::to_string(line_no) + ": " + std::string(head) + " ignored");
      } else {
        throw PlaParseError(line_no, "unknown directive " + std::string(head));
      }
      continue;
    }

    if (!have_i || !have_o) throw PlaParseError(line_no, "cube row before .i/.o header");
    if (tokens.size() != 2) throw PlaParseError(line_no, "row must be '<inputs> <outputs>'");
    const std::string_view in = tokens[0];
    const std::string_view out = tokens[1];
    if (in.size() != doc.inputs)
      throw PlaParseError(line_no, "input width " + std::to_string(in.size()) + " does not match .i " +
                                       std::to_string(doc.inputs));
    if (out.size() != doc.outputs)
      throw PlaParseError(line_no, "output width " + std::to_string(out.size()) + " does not match .o " +
                                       std::to_string(doc.outputs));
    for (char c : in)
      if (c != '0' && c != '1' && c != '-') throw PlaParseError(line_no, "input cube may only contain 0, 1, -");
    for (char c : out)
      if (c != '0' && c != '1') throw PlaParseError(line_no, "output may only contain 0, 1");
    doc.rows.push_back({std::string(in), std::string(out)});
  }

  if (!have_i || !have_o) throw PlaParseError(std::max<std::size_t>(line_no, 1), "missing .i or .o header");
  if (doc.products && *doc.products != doc.rows.size())
    throw PlaParseError(declared_p_line, ".p " + std::to_string(*doc.products) + " but " +
                                             std::to_string(doc.rows.size()) + " rows");
  return result;
}

std::string emit_pla(const PlaDocument& doc) {
  std::ostringstream os;
  os << ".i " << doc.inputs << "\n.o " << doc.outputs << "\n";
  if (doc.products) os << ".p " << *doc.products << "\n";
  for (const auto& row : doc.rows) os << row.inputs << ' ' << row.outputs << "\n";
  os << ".e\n";
  return os.str();
}

TruthTable pla_table(const PlaDocument& doc, unsigned output) {
  if (output >= doc.outputs) throw std::out_of_range("PLA output index out of range");
  std::uint64_t word = 0;
  for (const auto& row : doc.rows)
    if (row.outputs[output] == '1') word |= Cube::from_string(row.inputs).cover_word();
  return {doc.inputs, word};
}

std::vector<TruthTable> pla_tables(const PlaDocument& doc) {
  std::vector<TruthTable> out;
  for (unsigned j = 0; j < doc.outputs; ++j) out.push_back(pla_table(doc, j));
  return out;
}

PlaDocument pla_from_sop(const SopForm& sop) {
  PlaDocument doc{sop.n, 1, sop.terms.size(), {}};
  for (const auto& cube : sop.terms) doc.rows.push_back({cube.to_string(), "1"});
  return doc;
}

}  // namespace bfforms
