#pragma once

#include <stdexcept>
#include <string>

namespace trig {

/// Error taxonomy used across the toolkit. The CLI maps `usage` and `parse`
/// to exit code 2, everything else to exit code 1.
enum class ErrorKind {
    contract,      // precondition / invariant violation
    parse,         // malformed textual input
    config,        // invalid presentation / rule set
    domain,        // valid input, no valid answer (degenerate data, ...)
    not_in_kernel, // lattice class outside the kernel lattice
    usage,         // bad command line
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

struct ParseError : Error {
    // `offset` is the 0-based character position of the offending token.
    ParseError(std::string msg, std::size_t offset)
        : Error(ErrorKind::parse,
                msg + " (at offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

inline Error contract_error(std::string msg) {
    return Error(ErrorKind::contract, std::move(msg));
}
inline Error config_error(std::string msg) {
    return Error(ErrorKind::config, std::move(msg));
}
inline Error domain_error(std::string msg) {
    return Error(ErrorKind::domain, std::move(msg));
}

} // namespace trig
