#ifndef QT_VERIFY_HPP
#define QT_VERIFY_HPP

#include "qt/ball.hpp"

#include <string>
#include <vector>

// Invariant suites run from the command line and the test harness.
namespace qt::verify {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::string detail;
    friend bool operator==(const SuiteCheck&, const SuiteCheck&) = default;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;
    bool passed() const;
    long failures() const;
    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// pade-bounds, lucas-identities, measure-scan, oracle-agreement.
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const PrecisionPolicy& policy = PrecisionPolicy::from_env());

} // namespace qt::verify

#endif
