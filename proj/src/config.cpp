#include "precog/config.hpp"

#include "precog/error.hpp"

namespace precog {

void PrecogConfig::validate() const {
  auto fail = [](const char* what) { throw Error(Errc::invalid_config, what); };
  if (!(threshold_u > 0.0 && threshold_u <= 100.0)) fail("threshold_u must lie in (0, 100]");
  if (critical_time.count() <= 0) fail("critical_time must be positive");
  if (resample_resolution.count() <= 0) fail("resample_resolution must be positive");
  if (smoothing_window < resample_resolution)
    fail("smoothing_window must be at least resample_resolution");
  if (!(r2_min > 0.0 && r2_min <= 1.0)) fail("r2_min must lie in (0, 1]");
  if (!(cpd_z_threshold > 0.0)) fail("cpd_z_threshold must be positive");
  if (min_segment_points < 3) fail("min_segment_points must be at least 3");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) fail("train_fraction must lie in (0, 1)");
}

}  // namespace precog
