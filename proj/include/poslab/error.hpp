#ifndef POSLAB_ERROR_HPP
#define POSLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace poslab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument values: out-of-range parameters, unknown catalog keys,
/// length mismatches between operands.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public InvalidArgument {
 public:
  LengthMismatch(std::size_t left, std::size_t right)
      : InvalidArgument("length mismatch: " + std::to_string(left) + " vs " +
                        std::to_string(right)) {}
};

/// Not enough moments (or basis orders) to evaluate the requested order.
class InsufficientMoments : public Error {
 public:
  InsufficientMoments(std::size_t required, std::size_t available)
      : Error("insufficient moments: need " + std::to_string(required) + ", have " +
              std::to_string(available)),
        required_(required),
        available_(available) {}

  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

/// A Hankel determinant that had to be strictly positive was not.
class DegenerateMeasure : public Error {
 public:
  DegenerateMeasure(int order, const std::string& what)
      : Error("degenerate measure at order " + std::to_string(order) + ": " + what),
        order_(order) {}

  int order() const { return order_; }

 private:
  int order_;
};

class RecurrenceInconsistency : public Error {
 public:
  using Error::Error;
};

/// Input documents that do not match the expected JSON layout. The message
/// always starts with the JSON path of the offending field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace poslab

#endif  // POSLAB_ERROR_HPP
