#include "dbl/check.hpp"

namespace dbl {

void Report::append(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.detail});
}

bool Report::pass() const {
    for (const auto& c : checks_) {
        if (!c.pass) return false;
    }
    return true;
}

const CheckResult* Report::first_failure() const {
    for (const auto& c : checks_) {
        if (!c.pass) return &c;
    }
    return nullptr;
}

}  // namespace dbl
