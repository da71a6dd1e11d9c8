#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "etaq/catalog.hpp"
#include "etaq/report.hpp"

namespace etaq::sequences {
class SequenceStore;
}

namespace etaq::congruence {

inline constexpr int kReportSchema = 1;

enum class Status { Pass, Fail, SkippedInfeasible };
const char* to_string(Status s);

struct Counterexample {
    long n;
    mpz_class value;  // the left-hand side at n
    mpz_class modulus;
};

struct VerificationReport {
    std::string claim;
    std::string sequence;
    std::map<std::string, long> params;
    long exponent = 0;
    long n_max = -1;  // window is 0 <= n <= n_max
    long checked = 0;
    long excluded = 0;  // indices ruled out by the side condition
    Status status = Status::SkippedInfeasible;
    long failures = 0;  // counterexamples found; at most kMaxListed are listed
    std::vector<Counterexample> counterexamples;
    long prec = 0;  // largest sequence index read, plus one
    double millis = 0;
    std::string detail;

    static constexpr std::size_t kMaxListed = 20;
    // Timing is left out when include_timing is false so that reports can
    // be compared byte for byte.
    std::string to_json(bool include_timing = true) const;
};

struct Overrides {
    std::optional<long> n_max;
    // Added to every instance's exponent; +1 turns a claim into a falsified one.
    long exponent_delta = 0;
    // Only instances whose parameters match all of these are run.
    std::map<std::string, long> select;
};

VerificationReport verify_instance(const catalog::CongruenceClaim& claim, const catalog::ClaimInstance& inst,
                                   const Overrides& overrides, sequences::SequenceStore& store);
std::vector<VerificationReport> verify_congruence(const catalog::CongruenceClaim& claim,
                                                  const Overrides& overrides = {});

// ---- suite ----

struct StructureReport {
    std::string name;
    std::map<std::string, long> params;
    std::vector<CheckResult> checks;
    double millis = 0;
    bool pass() const { return all_pass(checks); }
};

struct SuiteReport {
    std::string filter;
    std::vector<VerificationReport> claims;
    std::vector<StructureReport> structure;
    double millis = 0;

    long count(Status s) const;
    long structure_failures() const;
    // 0 all pass, 1 any failure, 2 nothing failed but something was skipped.
    int exit_code() const;
    std::string to_json(bool include_timing = true) const;
};

// Filter tokens, separated by commas or spaces, all of which must match:
// key=value compares an instance parameter (ell, k, r, m), any other token is
// a substring of the claim id or structure check name. "claims" and
// "structure" restrict the suite to one half. Empty runs everything.
struct Filter {
    std::map<std::string, long> params;
    std::vector<std::string> words;
    bool claims = true;
    bool structure = true;
};
Filter parse_filter(const std::string& text);

struct SuiteOptions {
    std::string filter;
    int jobs = 1;
    Overrides overrides;  // n_max and exponent_delta apply to every claim
};

SuiteReport run_suite(const SuiteOptions& options);

// Exit status of the command line tools on I/O and usage errors.
inline constexpr int kExitUsage = 3;

// Writes the suite report; returns the suite exit code, or kExitUsage when
// the file cannot be written.
int run_suite(const SuiteOptions& options, const std::string& out_path);

}  // namespace etaq::congruence
