#ifndef TYPEA_ERRORS_HPP
#define TYPEA_ERRORS_HPP

#include <stdexcept>

namespace typea {

/// A computation needed objects outside the representable/searchable range.
/// Raised instead of silently truncating.
struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A verified postcondition or internal consistency gate failed.
struct CheckError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace typea

#endif
