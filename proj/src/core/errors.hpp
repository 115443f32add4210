#pragma once

#include <stdexcept>
#include <string>

namespace grunwald {

/// A routine was called with arguments outside its documented domain
/// (bad interval, order out of range, index out of bounds, ...).
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A user-supplied callable produced a non-finite value (NaN/Inf) at a point
/// where a finite value was required.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An adaptive numeric routine exhausted its refinement budget before meeting
/// the requested tolerance.  Carries the best estimate reached so the caller
/// can decide whether it is still usable.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double best_re, double best_im,
                 double err_estimate)
      : std::runtime_error(what),
        best_re(best_re),
        best_im(best_im),
        err_estimate(err_estimate) {}

  double best_re;
  double best_im;
  double err_estimate;
};

/// A search for a sign-change / negativity witness scanned its whole domain
/// without finding one (e.g. the order-1 interpolation mean, which is a
/// positive operator and admits no negativity witness).
class WitnessNotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grunwald
