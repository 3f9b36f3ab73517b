#pragma once

#include <ostream>
#include <string>

#include "config.hpp"

namespace entconvex::cli {

// Exit codes: 0 success / agreement, 1 disagreement, 2 invalid input or numerical failure.
int cmd_table(int id, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_criterion(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_probe(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_cache(const std::string& action, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace entconvex::cli
