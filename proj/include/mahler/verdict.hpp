#pragma once

#include "mahler/matrix.hpp"
#include "mahler/polynomial.hpp"

#include <optional>
#include <string>

namespace mahler {

enum class VerdictTag { Transcendental, Rational, Inconclusive };
enum class TestMethod { Eigenvalue, Universal };
enum class EvidenceKind { Exact, Numeric };

struct RankEvidence {
    MatrixIndex rank = 0;
    MatrixIndex rows = 0;
    MatrixIndex cols = 0;
};

struct RationalForm {
    Poly p;
    Poly q;  // q(0) = 1, gcd(p, q) = 1
};

struct Verdict {
    VerdictTag tag = VerdictTag::Inconclusive;
    TestMethod method = TestMethod::Universal;
    std::optional<RankEvidence> rank_evidence;     // universal-test Transcendental
    std::optional<RationalForm> rational_form;     // universal-test Rational
    std::optional<EvidenceKind> evidence;          // eigenvalue-test Transcendental
    std::string reason;                            // Inconclusive diagnostics

    bool conclusive() const { return tag != VerdictTag::Inconclusive; }
};

inline const char* to_string(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::Transcendental: return "transcendental";
        case VerdictTag::Rational: return "rational";
        default: return "inconclusive";
    }
}

inline const char* to_string(TestMethod method) {
    return method == TestMethod::Eigenvalue ? "eigenvalue-test" : "universal-test";
}

inline const char* to_string(EvidenceKind kind) {
    return kind == EvidenceKind::Exact ? "exact" : "numeric";
}

}  // namespace mahler
