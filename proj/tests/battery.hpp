#pragma once

// Shared Young-function battery: three powers, five power-logs, three
// exponentials and the L^infty gauge (12 members).

#include <vector>

#include "orso/young.hpp"

inline std::vector<orso::young::YoungFunction> young_battery() {
  using orso::young::YoungFunction;
  return {
      YoungFunction::power(1.2),
      YoungFunction::power(2.0),
      YoungFunction::power(5.0),
      YoungFunction::power_log(2, 1, 4, -1),
      YoungFunction::power_log(2, 0, 4, 4),
      YoungFunction::power_log(1, -0.5, 3, 0),
      YoungFunction::power_log(1.5, 0, 2, 1),
      YoungFunction::power_log(4, 3, 5, 0),
      YoungFunction::exponential(-1, 1),
      YoungFunction::exponential(-1, 2),
      YoungFunction::exponential(-0.5, 1),
      YoungFunction::linfty_gauge(),
  };
}

// finite-valued members that vanish only at zero (direct index formula applies)
inline std::vector<orso::young::YoungFunction> young_battery_finite() {
  auto all = young_battery();
  all.pop_back();  // drop the gauge
  return all;
}
