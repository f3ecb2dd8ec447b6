#ifndef ARTINSYS_ERRORS_HPP
#define ARTINSYS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artinsys {

/// Thrown when an enumeration would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t attempted, std::size_t budget)
      : std::runtime_error(what + ": attempted size " + std::to_string(attempted) +
                           " exceeds budget " + std::to_string(budget)),
        attempted_(attempted),
        budget_(budget) {}

  std::size_t attempted() const noexcept { return attempted_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t attempted_;
  std::size_t budget_;
};

/// A link was requested for a vertex whose neighbourhood is not fully
/// contained in a truncated ball.
class MarginViolation : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed defining-graph input. `location` is a JSON pointer.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& location, const std::string& message)
      : std::runtime_error(location.empty() ? message : location + ": " + message),
        location_(location),
        message_(message) {}

  const std::string& location() const noexcept { return location_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string location_;
  std::string message_;
};

}  // namespace artinsys

#endif  // ARTINSYS_ERRORS_HPP
