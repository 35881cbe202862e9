#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace boxdim {

// Bad argument or malformed input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A scale schedule probes below a set's resolution gap, or leaves too few
// usable scales. The CLI maps this to exit code 3.
class WindowError : public std::runtime_error {
 public:
  WindowError(const std::string& what, std::string offending_scale,
              unsigned long long required_m = 0)
      : std::runtime_error(what),
        offending_scale_(std::move(offending_scale)),
        required_m_(required_m) {}

  const std::string& offending_scale() const { return offending_scale_; }

  // Smallest reciprocal-set truncation that would widen the window enough,
  // 0 when a larger truncation would not help.
  unsigned long long required_m() const { return required_m_; }

 private:
  std::string offending_scale_;
  unsigned long long required_m_;
};

}  // namespace boxdim
