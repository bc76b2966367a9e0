#pragma once

#include <string>
#include <vector>

#include "qa/corpus.hpp"

namespace qa {

struct CheckResult {
    std::string subject;  // case id or knot id
    std::string check;
    Decision verdict = Decision::No;
    std::string expected;
    std::string actual;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> results;  // sorted by (subject, check)

    int passed() const;
    int failed() const;
    int undecided() const;
    /// 0 all pass, 1 any failure, 3 undecided only
    int exit_code() const;
};

/// Options threaded through to the word-problem engine.
struct VerifyOptions {
    ReduceOptions reduce;
};

/// All checks for one case (braid chain + parity + surgery script + tangles).
std::vector<CheckResult> verify_case(const Corpus& c, const CaseData& cs,
                                     const VerifyOptions& opts = {});

/// Knot-level checks: closure, genus, L-space form, trunk chain.
std::vector<CheckResult> verify_knot(const Corpus& c, const KnotData& k,
                                     const VerifyOptions& opts = {});

/// Every case plus every knot-level check, in canonical order.
Report verify_all(const Corpus& c, const VerifyOptions& opts = {});

std::string to_string(Decision d);

}  // namespace qa
