#pragma once

namespace boxdim {

// Selects the OpenMP kernel or the serial reference path. Both produce
// identical results; the serial path is kept as the testing baseline.
enum class Exec { serial, parallel };

}  // namespace boxdim
