#pragma once

#include <stdexcept>
#include <string>

namespace threedot {

// A joint table was requested over more coordinates than the configured
// bound; the caller should fall back to sampling.
struct LengthBoundError : std::runtime_error {
  explicit LengthBoundError(const std::string& what) : std::runtime_error(what) {}
};

// 3-adic increment ran off the end of a truncated skeleton; extend before
// shifting.
struct CarryOverflowError : std::runtime_error {
  explicit CarryOverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A conditioned triple straddles a block boundary under the given skeleton.
struct BadAlignmentError : std::runtime_error {
  explicit BadAlignmentError(const std::string& what) : std::runtime_error(what) {}
};

// A window law expected to be uniform on its support is not.
struct NonUniformError : std::runtime_error {
  explicit NonUniformError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace threedot
