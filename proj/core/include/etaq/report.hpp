#pragma once

#include <string>
#include <utility>
#include <vector>

namespace etaq {

// Outcome of one named structural check.
struct CheckResult {
    std::string name;
    bool pass = true;
    long checked = 0;    // number of individual identities or bounds tested
    std::string detail;  // first failure, or a short note
};

inline CheckResult make_check(std::string name)
{
    CheckResult c;
    c.name = std::move(name);
    return c;
}

inline bool all_pass(const std::vector<CheckResult>& checks)
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

// Records a failure unless one is already recorded.
inline void note_failure(CheckResult& c, const std::string& what)
{
    if (c.pass)
        c.detail = what;
    c.pass = false;
}

std::string checks_to_json(const std::vector<CheckResult>& checks);

}  // namespace etaq
