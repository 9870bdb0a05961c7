#include "report_io.hpp"

#include <cstdio>

namespace hypmod::cli {

std::string g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

bool VerifySuiteResult::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass)
            return false;
    return true;
}

namespace {

std::string pad(int indent) { return std::string(indent, ' '); }

} // namespace

void write_report_json(std::ostream& out, const ModulusReport& report,
                       unsigned seed, int indent) {
    const std::string p0 = pad(indent);
    const std::string p1 = pad(indent + 2);
    const std::string p2 = pad(indent + 4);

    out << p0 << "{\n";
    out << p1 << "\"family\": \"" << family_name(report.family) << "\",\n";
    out << p1 << "\"parameters\": {";
    bool first = true;
    for (const auto& [key, value] : report.parameters) {
        out << (first ? "" : ", ") << "\"" << key << "\": " << g9(value);
        first = false;
    }
    out << "},\n";
    out << p1 << "\"closed_form\": " << g9(report.closed_form) << ",\n";
    out << p1 << "\"density_energy\": " << g9(report.density_energy) << ",\n";
    out << p1 << "\"admissibility_min\": " << g9(report.admissibility.min_integral)
        << ",\n";
    out << p1 << "\"admissibility_argmin\": "
        << g9(report.admissibility.argmin_parameter) << ",\n";
    out << p1 << "\"discrete_lower_bound\": " << g9(report.discrete_lower_bound)
        << ",\n";
    out << p1 << "\"oracle_value\": "
        << (report.oracle_value ? g9(*report.oracle_value) : "null") << ",\n";
    out << p1 << "\"warnings\": [";
    for (std::size_t i = 0; i < report.warnings.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n")
            << p2 << "\"" << json_escape(report.warnings[i]) << "\"";
    }
    if (!report.warnings.empty())
        out << "\n" << p1;
    out << "],\n";
    out << p1 << "\"seed\": " << seed << "\n";
    out << p0 << "}";
}

void write_report_csv(std::ostream& out, const ModulusReport& report) {
    out << "parameter,integral\n";
    const AuditReport& audit = report.admissibility;
    for (std::size_t i = 0; i < audit.per_curve_integrals.size(); ++i)
        out << g9(audit.per_curve_parameters[i]) << ","
            << g9(audit.per_curve_integrals[i]) << "\n";
}

void write_suite_json(std::ostream& out, const VerifySuiteResult& suite) {
    out << "{\n";
    out << "  \"suite\": \"" << suite.suite << "\",\n";
    out << "  \"seed\": " << suite.seed << ",\n";
    out << "  \"grid_n\": " << suite.grid_n << ",\n";
    out << "  \"tol\": " << g9(suite.tol) << ",\n";
    out << "  \"reports\": [";
    for (std::size_t i = 0; i < suite.reports.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n");
        write_report_json(out, suite.reports[i], suite.seed, 4);
    }
    if (!suite.reports.empty())
        out << "\n  ";
    out << "],\n";
    out << "  \"checks\": [";
    for (std::size_t i = 0; i < suite.checks.size(); ++i) {
        const CheckResult& c = suite.checks[i];
        out << (i == 0 ? "\n" : ",\n");
        out << "    {\"name\": \"" << json_escape(c.name) << "\", \"value\": "
            << g9(c.value) << ", \"threshold\": " << g9(c.threshold)
            << ", \"pass\": " << (c.pass ? "true" : "false") << "}";
    }
    if (!suite.checks.empty())
        out << "\n  ";
    out << "],\n";
    out << "  \"all_pass\": " << (suite.all_pass() ? "true" : "false") << "\n";
    out << "}\n";
}

void write_suite_csv(std::ostream& out, const VerifySuiteResult& suite) {
    out << "family,parameter,integral\n";
    for (const ModulusReport& report : suite.reports) {
        const AuditReport& audit = report.admissibility;
        for (std::size_t i = 0; i < audit.per_curve_integrals.size(); ++i)
            out << family_name(report.family) << ","
                << g9(audit.per_curve_parameters[i]) << ","
                << g9(audit.per_curve_integrals[i]) << "\n";
    }
}

} // namespace hypmod::cli
