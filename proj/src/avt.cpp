#include "rsnsim/avt.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsnsim {

AvtParams AvtParams::from_range(double v_min, double v_max) {
  if (!(v_min < v_max))
    throw std::invalid_argument("AvtParams::from_range: v_min must be < v_max");
  double span = v_max - v_min;
  AvtParams p;
  p.v_min = v_min;
  p.v_max = v_max;
  p.delta_min = span * 1e-6;
  p.delta_max = span / 4.0;
  return p;
}

void AvtParams::validate() const {
  if (!(v_min < v_max))
    throw std::invalid_argument("AvtParams: v_min must be < v_max");
  if (!(accel > 1.0))
    throw std::invalid_argument("AvtParams: accel must be > 1");
  if (!(decel > 0.0 && decel < 1.0))
    throw std::invalid_argument("AvtParams: decel must be in (0, 1)");
  if (!(delta_min > 0.0 && delta_min <= delta_max))
    throw std::invalid_argument("AvtParams: need 0 < delta_min <= delta_max");
}

Avt::Avt(const AvtParams& params, double v0)
    : params_(params), v_(v0), delta_(params.delta_max) {
  params_.validate();
  if (v0 < params_.v_min || v0 > params_.v_max)
    throw std::invalid_argument("Avt: v0 outside the search space");
}

void Avt::adjust(Feedback feedback) {
  switch (feedback) {
    case Feedback::Up:
      delta_ = last_dir_ == Dir::Up
                   ? std::min(delta_ * params_.accel, params_.delta_max)
                   : std::max(delta_ * params_.decel, params_.delta_min);
      v_ = std::min(v_ + delta_, params_.v_max);
      last_dir_ = Dir::Up;
      break;
    case Feedback::Down:
      delta_ = last_dir_ == Dir::Down
                   ? std::min(delta_ * params_.accel, params_.delta_max)
                   : std::max(delta_ * params_.decel, params_.delta_min);
      v_ = std::max(v_ - delta_, params_.v_min);
      last_dir_ = Dir::Down;
      break;
    case Feedback::Good:
      delta_ = std::max(delta_ * params_.decel, params_.delta_min);
      last_dir_ = Dir::None;
      break;
  }
}

}  // namespace rsnsim
