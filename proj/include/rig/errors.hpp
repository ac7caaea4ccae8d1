#ifndef RIG_ERRORS_HPP
#define RIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rig {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
  FieldMismatch() : Error("operands belong to different fields") {}
};

struct RingMismatch : Error {
  RingMismatch() : Error("operands belong to different rings") {}
};

struct UnitIdeal : Error {
  UnitIdeal() : Error("ideal contains 1") {}
};

struct NotProper : Error {
  NotProper() : Error("ideal is not proper") {}
};

struct NotMaximal : Error {
  NotMaximal() : Error("prime is not the graded maximal ideal") {}
};

struct ZeroModule : Error {
  ZeroModule() : Error("module is zero") {}
};

struct InhomogeneousInput : Error {
  explicit InhomogeneousInput(const std::string& what)
      : Error("inhomogeneous input: " + what) {}
};

struct BoundTooSmall : Error {
  explicit BoundTooSmall(const std::string& what)
      : Error("bound too small: " + what) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what)
      : Error("computation budget exceeded: " + what) {}
};

struct ElementNotInMaximalIdeal : Error {
  ElementNotInMaximalIdeal()
      : Error("Koszul input element has a nonzero constant term") {}
};

/// Parse failure with 1-based location and what was expected there.
struct ParseError : Error {
  int line;
  int col;
  std::string expected;
  ParseError(int line_, int col_, const std::string& expected_)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": expected " + expected_),
        line(line_),
        col(col_),
        expected(expected_) {}
};

}  // namespace rig

#endif
