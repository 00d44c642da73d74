#pragma once

#include <chrono>
#include <optional>

namespace triclub {

/// Wall-clock budget. A default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::optional<double> seconds) {
    Deadline d;
    if (seconds) d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
    return d;
  }

  bool expired() const { return end_ && Clock::now() >= *end_; }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace triclub
