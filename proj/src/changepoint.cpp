#include "precog/changepoint.hpp"

namespace precog {

std::vector<Eigen::Index> detect_change_points(const TimeSeries& ts, double z_threshold) {
  return detect_change_points(ts.values(), z_threshold);
}

}  // namespace precog
