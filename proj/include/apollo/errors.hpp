#pragma once

#include <stdexcept>
#include <string>

namespace apollo {

enum class ErrorKind {
    ContractViolation,
    ContainmentViolation,
    InvalidTrisector,
    NoSuchVertex,
    OrderUndefined,
    InvalidEdge,
    RequiresPerturbedInSphere,
    ParseError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace apollo
