#pragma once

// Umbrella header.

#include "bijection.hpp"   // IWYU pragma: export
#include "enumerate.hpp"   // IWYU pragma: export
#include "json_io.hpp"     // IWYU pragma: export
#include "partition.hpp"   // IWYU pragma: export
#include "verify.hpp"      // IWYU pragma: export
