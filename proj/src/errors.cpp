#include "rbfc/errors.hpp"

namespace rbfc {

const char* category_name(ErrorCategory cat) {
    switch (cat) {
    case ErrorCategory::parse: return "parse";
    case ErrorCategory::capacity: return "capacity";
    case ErrorCategory::infeasible: return "infeasible";
    case ErrorCategory::verification: return "verification";
    }
    return "?";
}

} // namespace rbfc
