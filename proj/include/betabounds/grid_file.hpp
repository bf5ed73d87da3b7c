#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "betabounds/errors.hpp"
#include "betabounds/harness.hpp"

// Grid files: flat key = value lines with comma-separated list values.
// Intervals use a:b items.  Missing keys fall back to the built-in default
// grid, '#' starts a comment.
//
//   intervals = 0:1, 1:3, 0:0.5
//   p = 0.5, 1, 2, 3.5
//   alpha = 0.25, 0.5, 0.75, 1

namespace betabounds {

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  const auto last = s.find_last_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  return std::string(s.substr(first, last - first + 1));
}

inline double parse_number(const std::string& token, int line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParameterError("grid file line " + std::to_string(line_no) +
                         ": bad number '" + token + "'");
  }
}

}  // namespace detail

inline ParamGrid parse_grid_text(std::istream& in) {
  ParamGrid grid = default_grid();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string trimmed = detail::trim(line);
    if (trimmed.empty()) continue;

    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("grid file line " + std::to_string(line_no) +
                           ": expected 'key = values'");
    }
    const std::string key = detail::trim(trimmed.substr(0, eq));
    std::vector<std::string> items;
    {
      std::stringstream ss(trimmed.substr(eq + 1));
      std::string item;
      while (std::getline(ss, item, ',')) {
        const std::string t = detail::trim(item);
        if (!t.empty()) items.push_back(t);
      }
    }
    if (items.empty()) {
      throw ParameterError("grid file line " + std::to_string(line_no) +
                           ": key '" + key + "' has no values");
    }

    if (key == "intervals") {
      grid.intervals.clear();
      for (const auto& item : items) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
          throw ParameterError("grid file line " + std::to_string(line_no) +
                               ": interval must be a:b, got '" + item + "'");
        }
        grid.intervals.emplace_back(
            detail::parse_number(detail::trim(item.substr(0, colon)), line_no),
            detail::parse_number(detail::trim(item.substr(colon + 1)), line_no));
      }
      continue;
    }

    std::vector<double>* target = nullptr;
    if (key == "p") target = &grid.p_values;
    else if (key == "q") target = &grid.q_values;
    else if (key == "alpha") target = &grid.alpha_values;
    else if (key == "m") target = &grid.m_values;
    else if (key == "k") target = &grid.k_values;
    else if (key == "l") target = &grid.l_values;
    else {
      throw ParameterError("grid file line " + std::to_string(line_no) +
                           ": unknown key '" + key + "'");
    }
    target->clear();
    for (const auto& item : items) {
      target->push_back(detail::parse_number(item, line_no));
    }
  }
  grid.validate();
  return grid;
}

/// "default" names the built-in grid; anything else is a path.
inline ParamGrid load_grid(const std::string& name) {
  if (name == "default") return default_grid();
  std::ifstream in(name);
  if (!in) throw ParameterError("cannot open grid file '" + name + "'");
  return parse_grid_text(in);
}

}  // namespace betabounds
