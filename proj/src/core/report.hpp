#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadric.hpp"

#include <json.hpp>

namespace lf {

using ordered_json = nlohmann::ordered_json;

// One verification line: a stable anchor naming the fact being checked, the
// measured residual, and the tolerance it was held to.
struct check_line {
    std::string anchor;
    bool pass = false;
    double residual = 0;
    double tolerance = 0;
    std::string detail;
};

class verification_report {
  public:
    verification_report(std::string job, std::uint64_t seed) : job_(std::move(job)), seed_(seed) {}

    void add(const check_line& line) { lines_.push_back(line); }
    void add(const std::string& anchor, const check_report& c) {
        lines_.push_back(check_line{anchor, c.pass, c.residual, c.tolerance, c.detail});
    }
    void add_flag(const std::string& anchor, bool pass, const std::string& detail) {
        lines_.push_back(check_line{anchor, pass, pass ? 0.0 : 1.0, 0.0, detail});
    }
    void note(const std::string& key, const std::string& value) {
        notes_.emplace_back(key, value);
    }

    bool all_pass() const;
    int pass_count() const;
    int fail_count() const;
    const std::vector<check_line>& lines() const { return lines_; }

    ordered_json to_json() const;
    std::string to_markdown() const;

  private:
    std::string job_;
    std::uint64_t seed_;
    std::vector<check_line> lines_;
    std::vector<std::pair<std::string, std::string>> notes_;
};

// fixed-width float formatting shared by every artifact we write to disk
std::string format_double(double x);

} // namespace lf
