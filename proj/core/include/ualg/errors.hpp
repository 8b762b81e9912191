#ifndef UALG_ERRORS_HPP_
#define UALG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ualg {

/// Input data failed a structural check (bad table, non-congruence, ...).
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured size/count cap was hit before the computation finished.
class cap_exceeded : public std::runtime_error {
public:
  explicit cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// A theorem-guaranteed cross-check failed; signals a bug, not bad input.
class consistency_error : public std::logic_error {
public:
  explicit consistency_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace ualg

#endif  // UALG_ERRORS_HPP_
