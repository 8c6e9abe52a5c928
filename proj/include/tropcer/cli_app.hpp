#pragma once

/**
 * @file cli_app.hpp
 * @brief Command-line front end: graph ingestion, dispatch, JSON output.
 *
 * Commands: info, jacobian, aj, ceresa, ceresa-unpointed, wclass, torsion,
 * morita, compare, selftest. One deterministic JSON result document goes to
 * the output stream; errors produce {"error": ...} and a nonzero exit code.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace tropcer {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::istream& in);

}  // namespace tropcer
