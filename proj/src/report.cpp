#include "opcat/report.hpp"

#include <sstream>

namespace opcat {

void ValidationReport::add(std::string code, std::string subject, std::string detail) {
    findings.push_back(Finding{std::move(code), std::move(subject), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

std::size_t ValidationReport::count(const std::string& code) const {
    std::size_t n = 0;
    for (const auto& f : findings) {
        if (f.code == code) {
            ++n;
        }
    }
    return n;
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    for (const auto& f : findings) {
        out << f.code << ' ' << f.subject << ": " << f.detail << '\n';
    }
    return out.str();
}

} // namespace opcat
