#ifndef XYK_ERRORS_HPP
#define XYK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xyk {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ModulusMismatch : std::domain_error {
  ModulusMismatch(unsigned long a, unsigned long b)
      : std::domain_error("prime-field modulus mismatch: " + std::to_string(a) +
                          " vs " + std::to_string(b)) {}
};

struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("operands belong to different rings") {}
};

struct ExponentOverflow : std::overflow_error {
  ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        column(col_) {}
};

}  // namespace xyk

#endif
