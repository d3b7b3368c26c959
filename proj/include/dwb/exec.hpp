#pragma once

namespace dwb {

/// Selects the OpenMP kernel or its serial reference.
enum class Exec { serial, parallel };

}  // namespace dwb
