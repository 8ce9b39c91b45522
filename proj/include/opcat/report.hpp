#pragma once

#include <string>
#include <vector>

namespace opcat {

/// One detected violation. `code` is a stable machine-readable identifier,
/// `subject` names the offending element, `detail` explains the instance.
struct Finding {
    std::string code;
    std::string subject;
    std::string detail;

    bool operator==(const Finding&) const = default;
};

/// Every validation enumerates all violations, never just the first.
/// Renderings are deterministic so reports can be compared byte-for-byte.
struct ValidationReport {
    std::vector<Finding> findings;

    bool ok() const { return findings.empty(); }
    std::size_t size() const { return findings.size(); }

    void add(std::string code, std::string subject, std::string detail);
    void merge(const ValidationReport& other);
    std::size_t count(const std::string& code) const;

    /// One line per finding: "code subject: detail".
    std::string to_text() const;

    bool operator==(const ValidationReport&) const = default;
};

} // namespace opcat
