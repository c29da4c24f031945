#ifndef HBE_ERRORS_HPP
#define HBE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hbe {

// A point, argument or index outside the domain an operation is defined on.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Digamma/trigamma evaluated at a nonpositive integer.
class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A product leaving the span of {1, ln2, ln2^2, pi^2}.
class OutOfSpan : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// The polynomial ansatz could not be fitted.
class SingularSystem : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace hbe

#endif // HBE_ERRORS_HPP
