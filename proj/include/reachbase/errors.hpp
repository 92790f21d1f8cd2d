#ifndef REACHBASE_ERRORS_HPP
#define REACHBASE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reachbase {

/// Malformed input text or labels. Carries the 1-based line number when
/// the problem was found while reading a DEL document (0 otherwise).
class InputError : public std::runtime_error {
   public:
    explicit InputError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

/// A vertex, component or path that does not belong to the digraph at hand.
class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Well-formed arguments that violate an operation's precondition,
/// e.g. minimizing a set that is not reaching.
class SemanticError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Input larger than a configured limit (oracle cap, family ceiling).
class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace reachbase

#endif
