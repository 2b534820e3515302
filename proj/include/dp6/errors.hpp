#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dp6 {

// Base for all library errors. `code` is the stable machine-readable name
// (e.g. "RankOneMember", "NotDelPezzo"); `condition` carries the specific
// violated condition where one exists (e.g. the orbit label "O4").
struct Error : std::runtime_error {
    std::string code;
    std::string condition;

    Error(std::string code_, std::string condition_, const std::string& what_)
        : std::runtime_error(what_), code(std::move(code_)), condition(std::move(condition_)) {}
};

// Rejections of user input or precondition failures: a well-formed question
// whose answer is "this is not a valid instance". CLI exit code 2.
struct DomainError : Error {
    using Error::Error;
};

// A broken internal invariant (wrong table, inconsistent computation).
// CLI exit code 1.
struct InternalError : Error {
    InternalError(std::string code_, const std::string& what_)
        : Error(std::move(code_), "", what_) {}
};

inline DomainError domain_error(std::string code, std::string condition, const std::string& what) {
    return DomainError(std::move(code), std::move(condition), what);
}

}  // namespace dp6
