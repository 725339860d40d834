#pragma once

namespace niho {

// Execution policy for the enumeration kernels.  Parallel uses OpenMP when it
// was enabled at configure time and falls back to serial otherwise.
enum class Exec { serial, parallel };

}  // namespace niho
