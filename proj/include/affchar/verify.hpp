#ifndef AFFCHAR_VERIFY_HPP
#define AFFCHAR_VERIFY_HPP

#include <string>
#include <vector>

namespace affchar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample data on failure
};

/// Names accepted by run_verify_suite, "all" included.
std::vector<std::string> verify_suite_names();

/// Runs one named fixture/property suite; throws usage_error for an
/// unknown name. Failures are results, not exceptions.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace affchar

#endif
