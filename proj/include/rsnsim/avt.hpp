#pragma once

namespace rsnsim {

/// Directional feedback driving the tracker.
enum class Feedback { Up, Down, Good };

struct AvtParams {
  double v_min = -1e-4;
  double v_max = 1e-4;
  double accel = 2.0;        // step growth on a same-direction streak
  double decel = 1.0 / 3.0;  // step shrink on direction change or "good"
  double delta_min = 2e-10;
  double delta_max = 5e-5;

  /// Defaults scaled to a search space: delta_max = span/4,
  /// delta_min = span * 1e-6.
  static AvtParams from_range(double v_min, double v_max);

  void validate() const;

  friend bool operator==(const AvtParams&, const AvtParams&) = default;
};

/// Proposes a value inside [v_min, v_max] and walks it toward an unknown,
/// possibly moving target. The step grows geometrically while feedback keeps
/// pointing the same way and shrinks on reversals, so the tracker closes in
/// dichotomically and stays reactive once settled.
class Avt {
 public:
  Avt(const AvtParams& params, double v0);

  double value() const { return v_; }
  double step() const { return delta_; }
  const AvtParams& params() const { return params_; }

  void adjust(Feedback feedback);

 private:
  enum class Dir { None, Up, Down };

  AvtParams params_;
  double v_;
  double delta_;
  Dir last_dir_ = Dir::None;
};

}  // namespace rsnsim
