#pragma once

#include <stdexcept>
#include <string>

namespace cliff {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SignatureMismatch : Error {
  explicit SignatureMismatch(const std::string& msg = "signature mismatch") : Error(msg) {}
};
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& msg = "element is not invertible") : Error(msg) {}
};
struct NotLipschitz : Error {
  explicit NotLipschitz(const std::string& msg = "element is not in the Lipschitz group") : Error(msg) {}
};
struct NotOrthogonal : Error {
  explicit NotOrthogonal(const std::string& msg = "matrix does not preserve the bilinear form") : Error(msg) {}
};
struct NotVahlen : Error {
  explicit NotVahlen(const std::string& msg = "matrix fails the Vahlen criteria") : Error(msg) {}
};
struct DenominatorNotInvertible : Error {
  explicit DenominatorNotInvertible(const std::string& msg = "cx+d is not invertible at this point") : Error(msg) {}
};
struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& msg = "singular matrix") : Error(msg) {}
};
struct SingularGram : Error {
  explicit SingularGram(const std::string& msg = "Gram matrix is singular") : Error(msg) {}
};
struct ZeroImage : Error {
  explicit ZeroImage(const std::string& msg = "gamma image is zero") : Error(msg) {}
};

// function_calculus errors
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& msg)
      : Error("syntax error at " + std::to_string(pos) + ": " + msg), position(pos) {}
};
struct GradeError : Error {
  explicit GradeError(const std::string& msg = "base expression is not scalar-valued") : Error(msg) {}
};
struct PoleError : Error {
  explicit PoleError(const std::string& msg = "evaluation at a pole") : Error(msg) {}
};
struct ChamberMismatch : Error {
  explicit ChamberMismatch(const std::string& msg = "point violates the declared chamber signs") : Error(msg) {}
};
struct ChamberIncomplete : Error {
  explicit ChamberIncomplete(const std::string& msg = "chamber does not declare every base") : Error(msg) {}
};
struct InexactPower : Error {
  explicit InexactPower(const std::string& msg = "power does not evaluate to a rational") : Error(msg) {}
};

}  // namespace cliff
