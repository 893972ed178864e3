#ifndef FBC_ERRORS_HPP
#define FBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fbc {

// Base for everything thrown by the library.  `code` is the machine-readable
// name surfaced by the CLI's JSON mode.
struct FbcError : std::runtime_error {
  std::string code;
  FbcError(std::string c, const std::string& what) : std::runtime_error(what), code(std::move(c)) {}
};

// Bad input: parse errors, invalid graphs/maps, classes outside the cone.
// The CLI exits with status 2 on these.
struct ValidationError : FbcError {
  using FbcError::FbcError;
};

// A mathematical identity the theory guarantees failed to hold; always an
// internal bug or inconsistent upstream data.  CLI exit status 3.
struct TheoryError : FbcError {
  using FbcError::FbcError;
};

inline ValidationError syntax_error(int line, int col, const std::string& what) {
  return ValidationError("SyntaxError", "line " + std::to_string(line) + ", column " +
                                            std::to_string(col) + ": " + what);
}

}  // namespace fbc

#endif  // FBC_ERRORS_HPP
