#pragma once

#include <optional>

#include "hyperpoly/lexer.hpp"

namespace hyperpoly {

// Parses While-dt source into a Program. Mode variables come from the
// first-line pragma; `modes_override` (the --modes flag) takes
// precedence per variable.
Program parse_program(const std::string& src,
                      const std::optional<std::string>& modes_override = std::nullopt);

// Statement-level parse of an already-tokenized buffer (no pragma).
CmdPtr parse_command(const std::vector<Token>& tokens);

}  // namespace hyperpoly
