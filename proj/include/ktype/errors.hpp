#ifndef KTYPE_ERRORS_HPP
#define KTYPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ktype {

// Caller passed arguments violating a precondition (bad sizes, bad syntax,
// segments out of order, ...).  CLI maps this to exit code 2.
class usage_error : public std::invalid_argument {
  public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter q (or derived data) fails a structural guard, e.g. the
// semisimplicity condition on the quantum factorials.  Exit code 2.
class parameter_error : public std::invalid_argument {
  public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// A value left its mathematical domain (evaluation at zero with negative
// exponents, and the like).  Exit code 2.
class domain_error : public std::domain_error {
  public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Internal consistency failure: an identity that must hold by theory does
// not.  Signals a bug in relation handling, never a user mistake.  Exit
// code 3.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ktype

#endif
