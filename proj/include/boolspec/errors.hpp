#pragma once

#include <stdexcept>
#include <string>

namespace boolspec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotBoolean : Error { using Error::Error; };
struct DependentMasks : Error { using Error::Error; };
struct SizeGuard : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct Undefined : Error { using Error::Error; };
struct NoValidThreshold : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct NoClosedForm : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace boolspec
