#ifndef VSPREAD_ERRORS_HPP
#define VSPREAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vspread {

/* Bad input: dimension mismatches, domain violations, malformed instances,
 * unmet preconditions.  The CLI maps this to exit code 2. */
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/* A configured resource cap was hit (generator counts, variable bounds,
 * search budgets).  The CLI maps this to exit code 3. */
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/* Two routes that must agree did not, or a certified property failed to
 * verify.  This signals a mismatch between the implemented theorems and the
 * code, and carries the evidence in its message.  CLI exit code 4. */
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace vspread

#endif
