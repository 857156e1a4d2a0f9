#pragma once

#include <stdexcept>
#include <string>

namespace pairclust {

// Raised for violated preconditions and malformed input data. The CLI maps
// it to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pairclust
