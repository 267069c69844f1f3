#pragma once

#include <stdexcept>
#include <string>

namespace esetlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside a gauge or curve parameter domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Malformed or infeasible input (empty grid, bad counts, ...).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

/// Interval with lo >= hi.
class InvalidInterval : public Error {
  public:
    using Error::Error;
};

/// Operation not defined for this gauge kind.
class UnsupportedGauge : public Error {
  public:
    using Error::Error;
};

/// Disc intersects the boundary of the curve-family domain.
class PartialDomain : public Error {
  public:
    using Error::Error;
};

/// Disc violates x_n - r_n >= x_n/2 >= e (or the unit-disc analogue).
class NotInAsymptoticRegime : public Error {
  public:
    using Error::Error;
};

/// Disc center lies outside every non-tangential approach region considered.
class NotStolz : public Error {
  public:
    using Error::Error;
};

/// Evaluation at a zero or pole.
class SingularPoint : public Error {
  public:
    using Error::Error;
};

/// Density hypothesis of an avoidance lemma fails on the grid tail.
class HypothesisFail : public Error {
  public:
    using Error::Error;
};

/// Quadrature or minimization did not reach its tolerance within budget.
class NumericFailure : public Error {
  public:
    using Error::Error;
};

}  // namespace esetlab
