#pragma once

#include <string>
#include <vector>

namespace dbl {

struct CheckResult {
    std::string name;
    bool pass = true;
    // Canonical rendering of the residual or of the computed value.
    std::string detail;
};

class Report {
  public:
    void add(CheckResult result) { checks_.push_back(std::move(result)); }
    void add(const std::string& name, bool pass, std::string detail = {}) {
        checks_.push_back({name, pass, std::move(detail)});
    }
    void append(const Report& other, const std::string& prefix = {});

    bool pass() const;
    const std::vector<CheckResult>& checks() const { return checks_; }
    // First failing check, or nullptr.
    const CheckResult* first_failure() const;

  private:
    std::vector<CheckResult> checks_;
};

}  // namespace dbl
