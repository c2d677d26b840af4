#pragma once

#include <stdexcept>
#include <string>

namespace orthoplex {

// All library errors derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong arity, non-finite coordinates, bad indices.
class InputError : public Error {
 public:
  using Error::Error;
};

// Vertices are affinely dependent within the tolerance policy.
class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, double eigenvalue_ratio)
      : Error(what), eigenvalue_ratio_(eigenvalue_ratio) {}
  double eigenvalue_ratio() const noexcept { return eigenvalue_ratio_; }

 private:
  double eigenvalue_ratio_;
};

// A Gram candidate has an eigenvalue below -rank_cut * lambda_max.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double eigenvalue_ratio)
      : Error(what), eigenvalue_ratio_(eigenvalue_ratio) {}
  double eigenvalue_ratio() const noexcept { return eigenvalue_ratio_; }

 private:
  double eigenvalue_ratio_;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

// Barycentric parameters that cannot describe an orthocentric simplex.
class ParametrizationError : public Error {
 public:
  using Error::Error;
};

// An operation was applied outside its domain (e.g. needs an orthocentric
// or non-rectangular simplex).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotLiftableError : public Error {
 public:
  NotLiftableError() : Error("not liftable: obtuseness >= 0") {}
};

// (d, m) violates m*n < ((d^2-3d+4)/(2(d-2)))^2.
class AdmissibilityError : public Error {
 public:
  AdmissibilityError(const std::string& what, long long mn, double bound)
      : Error(what), mn_(mn), bound_(bound) {}
  long long mn() const noexcept { return mn_; }
  double bound() const noexcept { return bound_; }

 private:
  long long mn_;
  double bound_;
};

}  // namespace orthoplex
