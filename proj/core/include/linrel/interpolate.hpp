#pragma once

#include <span>

#include "linrel/polynomial.hpp"

namespace linrel {

struct Sample {
  Rat x;
  Rat y;
};

/// Unique polynomial of degree < samples.size() through every sample.
/// Throws std::invalid_argument on an empty list or a repeated abscissa.
Poly lagrange_interpolate(std::span<const Sample> samples);

}  // namespace linrel
