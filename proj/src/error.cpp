#include "mildisc/error.hpp"

namespace mildisc {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::structural: return "structural error";
    case ErrorKind::empty_dataset: return "empty dataset";
    case ErrorKind::unusable_dataset: return "unusable dataset";
    case ErrorKind::unsupported_feature: return "unsupported feature";
    case ErrorKind::all_missing: return "all values missing";
    case ErrorKind::type: return "type error";
    case ErrorKind::parameter: return "parameter error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::schema: return "schema error";
    case ErrorKind::io: return "I/O error";
    case ErrorKind::contract: return "contract violation";
    }
    return "error";
}

void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

} // namespace mildisc
