#pragma once

#include <string>
#include <vector>

namespace cliffsym {

/* Batch command surface. Exit codes: 0 success / all checks passed,
 * 1 verification failures, 2 usage errors, 3 resource bounds exceeded.
 * The CLIFFSYM_ORDER environment variable overrides the q-series
 * truncation order. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliffsym
