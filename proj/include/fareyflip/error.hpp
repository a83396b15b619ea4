#ifndef FAREYFLIP_ERROR_HPP
#define FAREYFLIP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fareyflip {

// Coarse classes used to pick process exit codes.
enum class ErrorClass {
    Validation,  // bad input or refused operation (exit 2)
    TooLarge,    // oracle size guard tripped (exit 3)
    Internal,    // invariant breach, indicates a bug (exit 4)
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), cls_(cls), code_(std::move(code)) {}

    ErrorClass cls() const { return cls_; }
    const std::string& code() const { return code_; }

private:
    ErrorClass cls_;
    std::string code_;
};

[[noreturn]] inline void throw_validation(const std::string& code, const std::string& what) {
    throw Error(ErrorClass::Validation, code, what);
}
[[noreturn]] inline void throw_too_large(const std::string& what) {
    throw Error(ErrorClass::TooLarge, "TooLarge", what);
}
[[noreturn]] inline void throw_internal(const std::string& what) {
    throw Error(ErrorClass::Internal, "Internal", what);
}

}  // namespace fareyflip

#endif
