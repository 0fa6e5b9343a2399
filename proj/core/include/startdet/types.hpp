// Core sequence types shared by every module: frame-by-behavior grids and
// per-behavior start lists.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace startdet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values, dimension mismatches, out-of-range frames.
struct InvalidInputError : Error {
  using Error::Error;
};

// Operation called against state it no longer belongs to (e.g. stale cache).
struct InvalidStateError : Error {
  using Error::Error;
};

// Exhaustive oracle asked to handle an instance beyond its search bound.
struct SizeLimitError : Error {
  using Error::Error;
};

// Configuration that cannot produce a valid run (generator, CLI).
struct ConfigError : Error {
  using Error::Error;
};

// Malformed or inconsistent file content.
struct FormatError : Error {
  using Error::Error;
};

// Dense T-by-B grid of real values, row-major by frame. Used both for
// ground-truth label indicators (binary, or blurred into [0,1]) and for
// classifier scores in [0,1].
class Grid {
 public:
  Grid() = default;
  Grid(int frames, int behaviors, double fill = 0.0)
      : frames_(frames), behaviors_(behaviors) {
    if (frames <= 0 || behaviors <= 0)
      throw InvalidInputError("Grid dimensions must be positive, got " +
                              std::to_string(frames) + "x" +
                              std::to_string(behaviors));
    values_.assign(static_cast<size_t>(frames) * behaviors, fill);
  }

  int frames() const { return frames_; }
  int behaviors() const { return behaviors_; }

  double operator()(int t, int b) const {
    return values_[static_cast<size_t>(t) * behaviors_ + b];
  }
  double& operator()(int t, int b) {
    return values_[static_cast<size_t>(t) * behaviors_ + b];
  }

  double at(int t, int b) const {
    check_index(t, b);
    return (*this)(t, b);
  }
  double& at(int t, int b) {
    check_index(t, b);
    return (*this)(t, b);
  }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  bool is_binary() const {
    return std::ranges::all_of(values_,
                               [](double v) { return v == 0.0 || v == 1.0; });
  }
  bool in_unit_range() const {
    return std::ranges::all_of(values_,
                               [](double v) { return v >= 0.0 && v <= 1.0; });
  }
  bool same_shape(const Grid& other) const {
    return frames_ == other.frames_ && behaviors_ == other.behaviors_;
  }

  bool operator==(const Grid&) const = default;

 private:
  void check_index(int t, int b) const {
    if (t < 0 || t >= frames_ || b < 0 || b >= behaviors_)
      throw InvalidInputError("Grid index (" + std::to_string(t) + "," +
                              std::to_string(b) + ") outside " +
                              std::to_string(frames_) + "x" +
                              std::to_string(behaviors_));
  }

  int frames_ = 0;
  int behaviors_ = 0;
  std::vector<double> values_;
};

using LabelGrid = Grid;
using ScoreGrid = Grid;

// One detected or annotated action start. Confidence is present on
// detections extracted from scores, absent on ground-truth annotations.
struct Start {
  int frame = 0;
  std::optional<double> confidence;

  bool operator==(const Start&) const = default;
};

// Per-behavior sorted lists of start frames.
class StartSet {
 public:
  StartSet() = default;
  explicit StartSet(int behaviors) : starts_(behaviors) {
    if (behaviors <= 0)
      throw InvalidInputError("StartSet needs at least one behavior");
  }

  int behaviors() const { return static_cast<int>(starts_.size()); }

  const std::vector<Start>& of(int b) const { return starts_.at(b); }

  void add(int b, int frame, std::optional<double> confidence = {}) {
    if (frame < 0)
      throw InvalidInputError("start frame must be non-negative, got " +
                              std::to_string(frame));
    if (confidence && (*confidence < 0.0 || *confidence > 1.0))
      throw InvalidInputError("confidence outside [0,1]: " +
                              std::to_string(*confidence));
    auto& list = starts_.at(b);
    Start s{frame, confidence};
    auto pos = std::ranges::lower_bound(list, frame, {}, &Start::frame);
    if (pos != list.end() && pos->frame == frame)
      throw InvalidInputError("duplicate start frame " + std::to_string(frame) +
                              " for behavior " + std::to_string(b));
    list.insert(pos, s);
  }

  // Frames only, sorted ascending.
  std::vector<int> frames(int b) const {
    std::vector<int> out;
    out.reserve(starts_.at(b).size());
    for (const Start& s : starts_.at(b)) out.push_back(s.frame);
    return out;
  }

  size_t count(int b) const { return starts_.at(b).size(); }
  size_t total() const {
    size_t n = 0;
    for (const auto& list : starts_) n += list.size();
    return n;
  }
  bool empty() const { return total() == 0; }

  int max_frame() const {
    int m = -1;
    for (const auto& list : starts_)
      if (!list.empty()) m = std::max(m, list.back().frame);
    return m;
  }

  bool operator==(const StartSet&) const = default;

 private:
  std::vector<std::vector<Start>> starts_;
};

}  // namespace startdet
