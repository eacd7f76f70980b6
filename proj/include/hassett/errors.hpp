#ifndef HASSETT_ERRORS_HPP
#define HASSETT_ERRORS_HPP

#include <stdexcept>

namespace hassett {

/// Wrong matrix or vector dimensions, or a non-symmetric form.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linearly dependent vectors where a basis was required.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A positive-definite form was required.
class DefinitenessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's domain (e.g. a discriminant failing (*)).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hassett

#endif  // HASSETT_ERRORS_HPP
