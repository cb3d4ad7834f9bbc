#include "dualfeas/instances.hpp"

#include <boost/random/uniform_int_distribution.hpp>

#include <fstream>
#include <random>
#include <sstream>

namespace dualfeas {

LPInstance random_instance(const GenConfig& cfg, std::size_t index) {
  if (cfg.lo > cfg.hi) throw std::invalid_argument("coefficient range is empty");
  const auto lo32 = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  const auto hi32 = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  const std::uint64_t idx = index;
  // seed_seq and mt19937_64 are fully specified by the standard; the boost
  // distribution pins down the integer mapping.
  std::seed_seq seq{lo32(cfg.seed), hi32(cfg.seed), lo32(cfg.m), lo32(cfg.n), lo32(idx), hi32(idx)};
  std::mt19937_64 engine(seq);
  boost::random::uniform_int_distribution<std::int64_t> draw(cfg.lo, cfg.hi);

  LPInstance inst(cfg.m, cfg.n);
  for (auto& cj : inst.c) cj = draw(engine);
  for (std::size_t i = 0; i < cfg.m; ++i) {
    for (std::size_t j = 0; j < cfg.n; ++j) inst.coeff(i, j) = draw(engine);
    inst.b[i] = draw(engine);
  }
  return inst;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      const std::size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos > start) line.tokens.push_back({raw.substr(start, pos - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
  }
  return lines;
}

std::size_t parse_dimension(const Line& line, const Token& token) {
  std::size_t value = 0;
  for (char ch : token.text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(line.number, token.column, "dimension must be a positive integer");
    }
    value = value * 10 + static_cast<std::size_t>(ch - '0');
    if (value > 1'000'000) throw ParseError(line.number, token.column, "dimension too large");
  }
  if (value == 0) throw ParseError(line.number, token.column, "dimension must be positive");
  return value;
}

Rational parse_number(const Line& line, const Token& token) {
  try {
    return parse_rational(token.text);
  } catch (const NumberFormatError& e) {
    throw ParseError(line.number, token.column, e.what());
  }
}

void expect_count(const Line& line, std::size_t expected, const char* what) {
  if (line.tokens.size() == expected) return;
  const std::size_t column = line.tokens.size() > expected ? line.tokens[expected].column
                                                           : line.tokens.back().column;
  throw ParseError(line.number, column,
                   std::string(what) + ": expected " + std::to_string(expected) + " numbers, found " +
                       std::to_string(line.tokens.size()));
}

}  // namespace

LPInstance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'lp <m> <n>' header");

  const Line& header = lines[0];
  if (header.tokens[0].text != "lp") {
    throw ParseError(header.number, header.tokens[0].column, "expected 'lp <m> <n>' header");
  }
  expect_count(header, 3, "header");
  LPInstance inst(parse_dimension(header, header.tokens[1]), parse_dimension(header, header.tokens[2]));

  const std::size_t needed = 2 + inst.m;
  if (lines.size() < needed) {
    const Line& last = lines.back();
    const std::string what = lines.size() < 2 ? "objective row" : "constraint rows";
    throw ParseError(last.number, last.tokens.back().column,
                     "unexpected end of input: expected " + what + " (" + std::to_string(inst.m) +
                         " declared rows, " + std::to_string(lines.size() < 2 ? 0 : lines.size() - 2) +
                         " present)");
  }

  const Line& objective = lines[1];
  expect_count(objective, inst.n, "objective row");
  for (std::size_t j = 0; j < inst.n; ++j) inst.c[j] = parse_number(objective, objective.tokens[j]);

  for (std::size_t i = 0; i < inst.m; ++i) {
    const Line& row = lines[2 + i];
    expect_count(row, inst.n + 1, "constraint row");
    for (std::size_t j = 0; j < inst.n; ++j) inst.coeff(i, j) = parse_number(row, row.tokens[j]);
    inst.b[i] = parse_number(row, row.tokens[inst.n]);
  }

  if (lines.size() > needed) {
    const Line& extra = lines[needed];
    throw ParseError(extra.number, extra.tokens[0].column, "unexpected content after the last row");
  }
  return inst;
}

std::string serialize_instance(const LPInstance& inst) {
  inst.validate();
  std::ostringstream out;
  out << "lp " << inst.m << ' ' << inst.n << '\n';
  for (std::size_t j = 0; j < inst.n; ++j) {
    out << (j ? " " : "") << format_rational(inst.c[j]);
  }
  out << '\n';
  for (std::size_t i = 0; i < inst.m; ++i) {
    for (std::size_t j = 0; j < inst.n; ++j) out << format_rational(inst.coeff(i, j)) << ' ';
    out << format_rational(inst.b[i]) << '\n';
  }
  return out.str();
}

LPInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

}  // namespace dualfeas
