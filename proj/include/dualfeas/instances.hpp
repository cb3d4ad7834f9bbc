#pragma once

#include "dualfeas/tableau.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dualfeas {

/// Uniform integer model: every c_j, b_i and a_ij drawn independently from
/// [lo, hi].
struct GenConfig {
  std::size_t m = 3;
  std::size_t n = 3;
  std::int64_t lo = -50;
  std::int64_t hi = 50;
  std::uint64_t seed = 1;
  std::size_t count = 500;
};

/// Instance `index` of the stream. Each (seed, m, n, index) has its own
/// substream, so instances can be generated in any order.
LPInstance random_instance(const GenConfig& cfg, std::size_t index);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads the line-oriented instance format:
///
///   lp <m> <n>
///   c_1 ... c_n
///   a_11 ... a_1n b_1
///   ...
///
/// '#' starts a comment; blank lines are skipped. Numbers are read exactly.
LPInstance parse_instance(std::string_view text);

std::string serialize_instance(const LPInstance& inst);

LPInstance read_instance_file(const std::string& path);

struct OracleResult {
  enum class Kind { Optimal, Infeasible, Unbounded };

  Kind kind = Kind::Infeasible;
  Rational value;
  std::vector<Rational> point;
};

std::string_view to_string(OracleResult::Kind kind);

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis enumeration over [A | I] in exact arithmetic. Throws TooLarge when
/// C(n+m, m) exceeds 10^6.
OracleResult oracle_solve(const LPInstance& inst);

}  // namespace dualfeas
