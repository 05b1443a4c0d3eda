#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace cliffsym {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on pass, counterexample description on failure
};

/* Outcome of a verification suite. Checks are order-normalized by name so
 * that serial and parallel runs produce identical reports. */
struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string detail = "")
    {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(Report other)
    {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }
    void normalize()
    {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    }
    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    size_t failure_count() const
    {
        size_t k = 0;
        for (const auto& c : checks)
            if (!c.pass) ++k;
        return k;
    }
    std::string summary() const
    {
        std::ostringstream os;
        os << checks.size() - failure_count() << "/" << checks.size() << " checks passed";
        return os.str();
    }
    friend bool operator==(const Report& a, const Report& b)
    {
        if (a.checks.size() != b.checks.size()) return false;
        for (size_t i = 0; i < a.checks.size(); ++i) {
            if (a.checks[i].name != b.checks[i].name || a.checks[i].pass != b.checks[i].pass ||
                a.checks[i].detail != b.checks[i].detail)
                return false;
        }
        return true;
    }
};

}  // namespace cliffsym
