#pragma once

#include <string>
#include <vector>

namespace weyl {

struct CheckResult {
    std::string group;
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

// Fixed seeds; `trials` scales the randomized checks.
std::vector<CheckResult> verify_algebra(int trials);
std::vector<CheckResult> verify_bracket(int trials);
std::vector<CheckResult> verify_transform(int trials);
std::vector<CheckResult> verify_chains();
std::vector<CheckResult> verify_group(const std::string& group, int trials);  // "all" runs every group

}  // namespace weyl
