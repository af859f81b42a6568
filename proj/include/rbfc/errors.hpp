#pragma once

#include <stdexcept>
#include <string>

namespace rbfc {

// Error categories, mirrored by the CLI exit codes and message prefixes.
enum class ErrorCategory { parse, capacity, infeasible, verification };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category(cat) {}
    ErrorCategory category;
};

inline Error parse_error(const std::string& msg) {
    return Error(ErrorCategory::parse, msg);
}
inline Error capacity_error(const std::string& msg) {
    return Error(ErrorCategory::capacity, msg);
}
inline Error infeasible_error(const std::string& msg) {
    return Error(ErrorCategory::infeasible, msg);
}
inline Error verification_error(const std::string& msg) {
    return Error(ErrorCategory::verification, msg);
}

const char* category_name(ErrorCategory cat);

} // namespace rbfc
