#pragma once

#include <stdexcept>
#include <string>

namespace nodkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error { using Error::Error; };
class MapError : public Error { using Error::Error; };
class RecognitionError : public Error { using Error::Error; };
class DualError : public Error { using Error::Error; };
class SubdivisionError : public Error { using Error::Error; };
class GuardError : public Error { using Error::Error; };
class PatternError : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };

}  // namespace nodkit
