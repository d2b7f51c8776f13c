#include "linrel/interpolate.hpp"

#include <stdexcept>
#include <vector>

namespace linrel {

Poly lagrange_interpolate(std::span<const Sample> samples) {
  if (samples.empty()) throw std::invalid_argument("interpolation needs at least one sample");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].x == samples[j].x) {
        throw std::invalid_argument("duplicate abscissa " + samples[i].x.str() +
                                    " in interpolation samples");
      }
    }
  }

  // Newton divided differences, then expand the nested form.
  const std::size_t count = samples.size();
  std::vector<Rat> diff(count);
  for (std::size_t i = 0; i < count; ++i) diff[i] = samples[i].y;
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / (samples[i].x - samples[i - level].x);
    }
  }

  Poly result = Poly::constant(diff[count - 1]);
  for (std::size_t i = count - 1; i-- > 0;) {
    result *= Poly::linear(1, -samples[i].x);
    result += Poly::constant(diff[i]);
  }
  return result;
}

}  // namespace linrel
