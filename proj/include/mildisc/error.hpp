#pragma once

#include <stdexcept>
#include <string>

namespace mildisc {

enum class ErrorKind {
    structural,          // malformed CSV/ARFF layout
    empty_dataset,
    unusable_dataset,    // e.g. class column entirely missing
    unsupported_feature, // ARFF string/date attributes
    all_missing,
    type,                // nominal attribute where a continuous one is required
    parameter,
    domain,              // value outside the training range
    schema,              // scheme/data attribute mismatch
    io,
    contract,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

} // namespace mildisc
