#include "dualfeas/trace.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dualfeas {

std::string format_cosine(double cosine) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", cosine);
  return buf;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string label_set(const std::vector<int>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(labels[i]);
  }
  return out + "}";
}

std::string indent(const std::string& block, const std::string& prefix) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += prefix + line + "\n";
  return out;
}

// Float cells are rounded to 6 significant digits for display.
std::string cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  std::string text = buf;
  return text == "-0" ? "0" : text;
}

std::string cell(const Rational& v) { return format_rational(v); }

}  // namespace

template <class T>
std::string format_dictionary(const Dictionary<T>& dict, const CosineTable* cosines, int selected) {
  const std::size_t rows = dict.num_rows() + 1;
  const std::size_t cols = dict.num_cols() + 1;

  std::vector<std::vector<std::string>> text(rows, std::vector<std::string>(cols));
  std::size_t width = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      text[r][c] = cell(dict.at(r, c));
      width = std::max(width, text[r][c].size());
    }
  }
  std::size_t label_width = 1;
  for (int label : dict.basis()) label_width = std::max(label_width, std::to_string(label).size());
  for (int label : dict.nonbasis()) width = std::max(width, std::to_string(label).size());

  std::ostringstream out;
  out << pad("", label_width) << " | " << pad("", width) << " |";
  for (int label : dict.nonbasis()) out << ' ' << pad(std::to_string(label), width);
  if (cosines) out << " | cos";
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string label = r == 0 ? "0" : std::to_string(dict.basic_label(r));
    out << pad(label, label_width) << " | " << pad(text[r][0], width) << " |";
    for (std::size_t c = 1; c < cols; ++c) out << ' ' << pad(text[r][c], width);
    if (cosines && r > 0) {
      const int k = dict.basic_label(r);
      auto it = std::find_if(cosines->begin(), cosines->end(),
                             [k](const CosineEntry& e) { return e.row == k; });
      if (it != cosines->end()) {
        out << " | " << format_cosine(it->cosine);
        if (k == selected) out << " <- max";
      }
    }
    out << '\n';
  }
  return out.str();
}

template <class T>
std::string format_trace(const SolveOutcome<T>& outcome) {
  std::ostringstream out;
  std::size_t iteration = 0;
  const std::string in = "    ";
  for (const auto& step : outcome.trace) {
    if (step.dual_simplex) {
      out << "Dual simplex: pivot (" << step.leaving << ", " << step.entering << ")\n";
      if (step.after) out << indent(format_dictionary(*step.after), in);
      continue;
    }
    ++iteration;
    out << "Iteration " << iteration << " [" << rule_name(step.rule) << "]\n";
    if (step.rule != RuleId::MinAngle) {
      out << "  pivot (" << step.leaving << ", " << step.entering << ")\n";
      if (step.after) out << indent(format_dictionary(*step.after), in);
      continue;
    }

    out << "  L = " << label_set(step.improving) << ", l = " << step.main_direction << "\n";
    if (step.sie) {
      out << "  SIE: driving variable " << step.driving << " inserted\n";
      if (step.with_driving_row) out << indent(format_dictionary(*step.with_driving_row), in);
      out << "  pivot (" << step.driving << ", " << step.main_direction << ")\n";
    }
    out << "  K = " << label_set(step.resisting) << "\n";
    const Dictionary<T>* shown = step.after_sie ? &*step.after_sie : (step.before ? &*step.before : nullptr);
    if (shown) out << indent(format_dictionary(*shown, &step.cosines, step.leaving), in);
    if (step.resisting.empty()) {
      out << "  no resisting constraint: dual inconsistent along " << step.driving << "\n";
      continue;
    }
    for (const auto& entry : step.cosines) {
      out << "  cos(" << entry.row << ", " << step.entering << ") = " << format_cosine(entry.cosine)
          << (entry.row == step.leaving ? " <- max" : "") << "\n";
    }
    out << "  pivot (" << step.leaving << ", " << step.entering << ")\n";
    if (step.sie) {
      if (step.after_pivot) out << indent(format_dictionary(*step.after_pivot), in);
      out << "  delete row " << step.driving << "\n";
    }
    if (step.after) out << indent(format_dictionary(*step.after), in);
  }
  return out.str();
}

template std::string format_dictionary<double>(const Dictionary<double>&, const CosineTable*, int);
template std::string format_dictionary<Rational>(const Dictionary<Rational>&, const CosineTable*, int);
template std::string format_trace<double>(const SolveOutcome<double>&);
template std::string format_trace<Rational>(const SolveOutcome<Rational>&);

}  // namespace dualfeas
