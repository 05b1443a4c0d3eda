#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliffsym/clifford.hpp"
#include "cliffsym/parallel.hpp"
#include "cliffsym/report.hpp"

namespace cliffsym {

struct SuiteParams {
    int n = 2;
    ParityConfig cfg;
    int max_degree = 6;
    int order = 12;
    ExecMode mode = ExecMode::serial;
};

/* Named verification suites behind `verify <name>`; the manifest makes
 * the coverage of the verifier operations mechanical to assert. */
struct SuiteSpec {
    std::string name;
    std::vector<std::string> covers;  // verifier operations exercised
    std::function<Report(const SuiteParams&)> run;
};

const std::vector<SuiteSpec>& suite_manifest();
std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const SuiteParams& params);
/* All suites in manifest order. */
Report run_all_suites(const SuiteParams& params);

int default_max_degree(int n);

}  // namespace cliffsym
