#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace lf {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

bool verification_report::all_pass() const {
    for (const auto& l : lines_)
        if (!l.pass) return false;
    return true;
}

int verification_report::pass_count() const {
    int n = 0;
    for (const auto& l : lines_) n += l.pass ? 1 : 0;
    return n;
}

int verification_report::fail_count() const { return static_cast<int>(lines_.size()) - pass_count(); }

ordered_json verification_report::to_json() const {
    ordered_json j;
    j["job"] = job_;
    j["seed"] = seed_;
    ordered_json checks = ordered_json::array();
    for (const auto& l : lines_) {
        ordered_json c;
        c["anchor"] = l.anchor;
        c["pass"] = l.pass;
        c["residual"] = format_double(l.residual);
        c["tolerance"] = format_double(l.tolerance);
        if (!l.detail.empty()) c["detail"] = l.detail;
        checks.push_back(c);
    }
    j["checks"] = checks;
    if (!notes_.empty()) {
        ordered_json n;
        for (const auto& [k, v] : notes_) n[k] = v;
        j["notes"] = n;
    }
    j["summary"] = {{"pass", pass_count()}, {"fail", fail_count()}, {"ok", all_pass()}};
    return j;
}

std::string verification_report::to_markdown() const {
    std::ostringstream os;
    os << "# Verification report: " << job_ << "\n\n";
    os << "seed: " << seed_ << "\n\n";
    os << "| status | anchor | residual | tolerance | detail |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& l : lines_) {
        os << "| " << (l.pass ? "PASS" : "FAIL") << " | " << l.anchor << " | "
           << format_double(l.residual) << " | " << format_double(l.tolerance) << " | " << l.detail
           << " |\n";
    }
    os << "\n";
    for (const auto& [k, v] : notes_) os << "- " << k << ": " << v << "\n";
    os << "\ntotal: " << pass_count() << " pass, " << fail_count() << " fail\n";
    return os.str();
}

} // namespace lf
