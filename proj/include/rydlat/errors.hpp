// errors.hpp — error taxonomy shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace rydlat {

// Base for every library error; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Configuration / validation problems (CLI exit code 3).
class SchemaError : public Error {
 public:
  SchemaError(const std::string& field, const std::string& reason)
      : Error("config field '" + field + "': " + reason), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class UnitError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

// Numerical failures (CLI exit code 4).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateSteadyState : public NumericalError {
 public:
  DegenerateSteadyState(double s_min, double s_next, const std::string& msg)
      : NumericalError(msg), s_min_(s_min), s_next_(s_next) {}
  double smallest_singular_value() const { return s_min_; }
  double second_singular_value() const { return s_next_; }

 private:
  double s_min_;
  double s_next_;
};

class MissingC6 : public NumericalError {
 public:
  MissingC6() : NumericalError("c6 coefficient required but not configured") {}
};

class FitDiverged : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BracketFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotConverged : public NumericalError {
 public:
  NotConverged(long iters, double last_delta, const std::string& msg)
      : NumericalError(msg), iters_(iters), last_delta_(last_delta) {}
  long iterations() const { return iters_; }
  double last_delta() const { return last_delta_; }

 private:
  long iters_;
  double last_delta_;
};

class UnstableStep : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BoxedSpectrumUnsupported : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotAnExtremum : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class FitWindowTooSmall : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class UnknownTemperature : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StepTooLarge : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Manifold file problems.
class ParseError : public Error {
 public:
  ParseError(long line, const std::string& msg)
      : Error("parse error at line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

class DuplicateLabel : public Error {
 public:
  using Error::Error;
};

class AsymmetricCoupling : public Error {
 public:
  using Error::Error;
};

// Filesystem problems (CLI exit code 5).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rydlat
