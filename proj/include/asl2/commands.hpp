#pragma once

#include <optional>
#include <string>
#include <utility>

#include "asl2/report.hpp"

namespace asl2::cmd {

// One executed command: the shared JSON schema
// {"command", "params", "results", "pass"} plus a text rendering.
struct CommandResult {
  bool pass = false;
  Json json;
  std::string text;
};

using Window = std::pair<long, long>;

// Parses "a:b" into a window. Throws std::invalid_argument.
Window parse_window(const std::string& text);

CommandResult axioms(const std::optional<std::string>& structure_json,
                     bool complex_mode, std::optional<long> seed);
CommandResult rep_check(const std::string& weight,
                        std::optional<Window> window, int margin,
                        bool force_generic, std::optional<long> seed);
CommandResult weights(const std::string& weight, std::optional<Window> window,
                      bool force_generic, std::optional<long> seed);
CommandResult casimir(const std::string& weight, std::optional<Window> window,
                      int margin, std::optional<long> seed);
CommandResult classify(const std::string& weight, std::optional<long> seed);
CommandResult iso(const std::string& weight_from, const std::string& weight_to,
                  std::optional<Window> window_from, std::optional<long> seed);
CommandResult nogo(long max_nm, long rhs, std::optional<long> seed);
CommandResult geom(const std::string& lambda, long degree_window,
                   bool intertwine, std::optional<Window> chain_window,
                   std::optional<long> seed);
CommandResult tensor(const std::string& weight_left,
                     const std::string& weight_right,
                     std::optional<Window> window_left,
                     std::optional<Window> window_right, int margin,
                     bool dump_residual, std::optional<long> seed);

}  // namespace asl2::cmd
