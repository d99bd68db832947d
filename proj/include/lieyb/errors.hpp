#ifndef LIEYB_ERRORS_HPP
#define LIEYB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieyb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (text scalars, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Shape or dimension mismatch between arguments.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class AntisymmetryViolation : public Error {
 public:
  AntisymmetryViolation(std::size_t i, std::size_t j);
  std::size_t i, j;
};

class JacobiViolation : public Error {
 public:
  /// residual holds the coordinates of [[b_i,b_j],b_k] + cyclic.
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, std::vector<std::string> residual);
  std::size_t i, j, k;
  std::vector<std::string> residual;
};

/// A dual bracket (from a cocycle or from r) fails Jacobi.
class JacobiFailure : public JacobiViolation {
 public:
  using JacobiViolation::JacobiViolation;
};

class NonPositiveLambda : public Error {
 public:
  using Error::Error;
};

class UnsortedLambda : public Error {
 public:
  using Error::Error;
};

class NotInNormalForm : public Error {
 public:
  NotInNormalForm(std::string what, std::vector<std::string> residual);
  /// Components r(e_{-1}^*, s^*) over the S basis.
  std::vector<std::string> residual;
};

class RNotInWedge2S : public Error {
 public:
  using Error::Error;
};

class ConditionViolated : public Error {
 public:
  using Error::Error;
};

class NotGeneric : public Error {
 public:
  using Error::Error;
};

class NotABialgebra : public Error {
 public:
  using Error::Error;
};

class NotAYbeSolution : public Error {
 public:
  using Error::Error;
};

class StructureMismatch : public Error {
 public:
  using Error::Error;
};

class Degenerate : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotAdInvariant : public Error {
 public:
  NotAdInvariant(std::size_t u, std::size_t v, std::size_t w);
  std::size_t u, v, w;
};

class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

/// The commutator and ad*_{u_r} curvature formulas disagree.
class FormulaMismatch : public Error {
 public:
  using Error::Error;
};

class BadIndices : public Error {
 public:
  using Error::Error;
};

class ConstraintViolated : public Error {
 public:
  using Error::Error;
};

class OverlappingIndices : public Error {
 public:
  using Error::Error;
};

class NotIsotropic : public Error {
 public:
  using Error::Error;
};

class DegenerateMu : public Error {
 public:
  using Error::Error;
};

}  // namespace lieyb

#endif  // LIEYB_ERRORS_HPP
