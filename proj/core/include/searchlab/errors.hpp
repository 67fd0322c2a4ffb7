#pragma once

#include <stdexcept>
#include <string>

namespace searchlab {

// Bad input data (files, wire payloads, checkpoints). The CLI maps this to
// exit code 2; anything else unexpected maps to 3.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace searchlab
