#ifndef CCOMB_ERRORS_HPP
#define CCOMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccomb {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A restriction was requested onto a subspace the operator does not preserve.
class NotInvariant : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration or realization exceeded its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Division by an eta-series that vanishes identically, i.e. by a distribution
// concentrated at zero.
class DivisorVanishes : public Error {
 public:
  using Error::Error;
};

class SeriesError : public Error {
 public:
  using Error::Error;
};

class WordError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccomb

#endif  // CCOMB_ERRORS_HPP
