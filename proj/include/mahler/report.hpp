#pragma once

#include "mahler/eigen_test.hpp"
#include "mahler/equation.hpp"
#include "mahler/hankel.hpp"
#include "mahler/verdict.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mahler {

// Everything the analyze subcommand reports on one equation.
struct AnalysisReport {
    std::string name;
    int k = 0;
    int d = 0;
    long H = 0;
    long kappa_value = 0;
    long vanishing_order = 0;

    std::optional<EigenReport> eigen;
    std::string eigen_skip_reason;
    std::optional<Verdict> universal;
    std::string universal_skip_reason;

    std::vector<Rational> coefficient_echo;  // leading series terms

    std::optional<double> eigen_ms;
    std::optional<double> universal_ms;
    double total_ms = 0;

    // Both tests conclusive and in agreement, or at most one conclusive.
    bool verdicts_agree() const {
        if (!eigen || !universal) return true;
        if (!eigen->verdict.conclusive() || !universal->conclusive()) return true;
        return eigen->verdict.tag == universal->tag;
    }
    const Verdict* final_verdict() const {
        if (universal && universal->conclusive()) return &*universal;
        if (eigen && eigen->verdict.conclusive()) return &eigen->verdict;
        if (eigen) return &eigen->verdict;
        return universal ? &*universal : nullptr;
    }
};

// Machine output: one JSON object, deterministic except the timing block.
std::string report_to_json(const AnalysisReport& report);

void print_human_report(std::ostream& out, const AnalysisReport& report);

}  // namespace mahler
