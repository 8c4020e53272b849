#pragma once

#include "mvsteg/formats/container.hpp"

namespace mvsteg::stego {

// Negates both components of every INTER vector; residuals and everything
// else stay as coded. Applying it twice gives back the same bytes.
formats::StegoContainer invert_motion_vectors(const formats::StegoContainer& container);

}  // namespace mvsteg::stego
