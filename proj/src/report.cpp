#include "mahler/report.hpp"

#include "json.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace mahler {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json literals(const std::vector<Rational>& values) {
    ordered_json out = ordered_json::array();
    for (const auto& v : values) out.push_back(format_rational(v));
    return out;
}

ordered_json poly_literals(const Poly& p) { return literals(p.coefficients()); }

ordered_json verdict_to_json(const Verdict& verdict) {
    ordered_json out;
    out["tag"] = to_string(verdict.tag);
    if (!verdict.reason.empty()) out["reason"] = verdict.reason;
    return out;
}

ordered_json eigen_report_to_json(const EigenReport& report) {
    ordered_json out;
    out["applicable"] = report.applicability.applicable;
    out["char_poly"] = poly_literals(report.char_poly.poly);
    out["k_power_roots"] = report.k_power_roots;
    ordered_json roots = ordered_json::array();
    if (report.roots)
        for (const auto& r : report.roots->roots) roots.push_back({r.real(), r.imag()});
    out["roots"] = roots;
    if (report.lambda_estimate.ok())
        out["lambda_estimate"] = *report.lambda_estimate.value;
    else
        out["lambda_estimate"] = nullptr;
    if (report.verdict.evidence)
        out["evidence"] = to_string(*report.verdict.evidence);
    else
        out["evidence"] = nullptr;
    out["verdict"] = verdict_to_json(report.verdict);
    return out;
}

ordered_json universal_to_json(const Verdict& verdict) {
    ordered_json out;
    out["verdict"] = verdict_to_json(verdict);
    if (verdict.rank_evidence) {
        out["rank"] = verdict.rank_evidence->rank;
        out["rows"] = verdict.rank_evidence->rows;
        out["cols"] = verdict.rank_evidence->cols;
    }
    if (verdict.rational_form) {
        out["p"] = poly_literals(verdict.rational_form->p);
        out["q"] = poly_literals(verdict.rational_form->q);
    }
    return out;
}

std::string format_double(double value) {
    std::ostringstream out;
    out << std::setprecision(9) << value;
    return out.str();
}

void print_verdict_line(std::ostream& out, const Verdict& verdict) {
    switch (verdict.tag) {
        case VerdictTag::Transcendental:
            out << "TRANSCENDENTAL";
            if (verdict.evidence) out << " (" << to_string(*verdict.evidence) << " evidence)";
            break;
        case VerdictTag::Rational:
            out << "RATIONAL";
            break;
        case VerdictTag::Inconclusive:
            out << "INCONCLUSIVE (" << verdict.reason << ")";
            break;
    }
    out << "\n";
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
    ordered_json out;
    ordered_json equation;
    equation["name"] = report.name;
    equation["k"] = report.k;
    equation["d"] = report.d;
    equation["H"] = report.H;
    equation["kappa"] = report.kappa_value;
    equation["vanishing_order"] = report.vanishing_order;
    out["equation"] = equation;

    if (report.eigen)
        out["eigen"] = eigen_report_to_json(*report.eigen);
    else
        out["eigen"] = {{"skipped", report.eigen_skip_reason}};
    if (report.universal)
        out["universal"] = universal_to_json(*report.universal);
    else
        out["universal"] = {{"skipped", report.universal_skip_reason}};

    out["coefficients"] = literals(report.coefficient_echo);

    ordered_json timing;
    if (report.eigen_ms) timing["eigen_ms"] = *report.eigen_ms;
    if (report.universal_ms) timing["universal_ms"] = *report.universal_ms;
    timing["total_ms"] = report.total_ms;
    out["timing"] = timing;
    return out.dump(2) + "\n";
}

void print_human_report(std::ostream& out, const AnalysisReport& report) {
    out << "equation        : " << (report.name.empty() ? "(unnamed)" : report.name) << " (k="
        << report.k << ", d=" << report.d << ", H=" << report.H << ", v="
        << report.vanishing_order << ", kappa=" << report.kappa_value << ")\n";
    if (!report.coefficient_echo.empty()) {
        out << "series          :";
        for (const auto& c : report.coefficient_echo) out << " " << format_rational(c);
        out << " ...\n";
    }

    out << "\neigenvalue test\n";
    if (!report.eigen) {
        out << "  skipped       : " << report.eigen_skip_reason << "\n";
    } else {
        const EigenReport& er = *report.eigen;
        out << "  p_F(lambda)   : " << format_poly(er.char_poly.poly, "lambda") << "\n";
        out << "  applicable    : "
            << (er.applicability.applicable ? "yes" : "no (" + er.applicability.reason + ")")
            << "\n";
        if (er.applicability.applicable) {
            out << "  k-power roots : ";
            if (er.k_power_roots.empty()) {
                out << "none\n";
            } else {
                for (std::size_t i = 0; i < er.k_power_roots.size(); ++i)
                    out << (i ? ", " : "") << "k^" << er.k_power_roots[i];
                out << "\n";
            }
            if (er.roots) {
                out << "  roots         : ";
                for (std::size_t i = 0; i < er.roots->roots.size(); ++i) {
                    const auto& r = er.roots->roots[i];
                    out << (i ? ", " : "") << format_double(r.real());
                    if (r.imag() != 0) out << (r.imag() > 0 ? "+" : "") << format_double(r.imag()) << "i";
                }
                out << "\n";
            }
            if (er.lambda_estimate.ok()) {
                out << "  lambda est.   : " << format_double(*er.lambda_estimate.value)
                    << " (ladder level " << er.lambda_estimate.stabilized_level << ", "
                    << er.lambda_estimate.terms_used << " terms)\n";
            } else if (!er.lambda_estimate.error.empty()) {
                out << "  lambda est.   : unavailable (" << er.lambda_estimate.error << ")\n";
            }
            if (er.exponent_estimate.ok()) {
                out << "  exponent est. : " << format_double(*er.exponent_estimate.value);
                if (er.lambda_estimate.ok()) {
                    const double recovered =
                        std::pow(double(report.k), *er.exponent_estimate.value);
                    out << "  (|k^beta - lambda| = "
                        << format_double(std::abs(recovered - *er.lambda_estimate.value)) << ")";
                }
                out << "\n";
            }
        }
        out << "  verdict       : ";
        print_verdict_line(out, er.verdict);
    }

    out << "\nuniversal test\n";
    if (!report.universal) {
        out << "  skipped       : " << report.universal_skip_reason << "\n";
    } else {
        const Verdict& uv = *report.universal;
        if (uv.rank_evidence) {
            out << "  matrix        : " << uv.rank_evidence->rows << " x "
                << uv.rank_evidence->cols << ", rank " << uv.rank_evidence->rank
                << (uv.rank_evidence->rank == uv.rank_evidence->rows ? " (full)" : "") << "\n";
        }
        if (uv.rational_form) {
            out << "  P(z)          : " << format_poly(uv.rational_form->p, "z") << "\n";
            out << "  Q(z)          : " << format_poly(uv.rational_form->q, "z") << "\n";
        }
        out << "  verdict       : ";
        print_verdict_line(out, uv);
    }

    if (report.eigen && report.universal && report.eigen->verdict.conclusive() &&
        report.universal->conclusive())
        out << "\nagreement       : " << (report.verdicts_agree() ? "ok" : "VERDICTS DISAGREE")
            << "\n";

    out << "\ntiming          :";
    if (report.eigen_ms) out << " eigen " << *report.eigen_ms << " ms,";
    if (report.universal_ms) out << " universal " << *report.universal_ms << " ms,";
    out << " total " << report.total_ms << " ms\n";
}

}  // namespace mahler
