#include "casimir/stack.hpp"

#include <cmath>
#include <string>

#include "casimir/error.hpp"

namespace casimir {
namespace {

std::string where(std::size_t j) { return "layers[" + std::to_string(j) + "]"; }

}  // namespace

Stack::Stack(std::vector<Layer> layers) : layers_(std::move(layers)) {
  if (layers_.size() < 2) {
    throw InputError("a stack needs at least two layers");
  }
  for (std::size_t j = 0; j < layers_.size(); ++j) {
    const Layer& layer = layers_[j];
    try {
      validate(layer.material);
    } catch (const InputError& e) {
      throw InputError(where(j) + ".material: " + e.what());
    }
    const bool outer = j == 0 || j == last();
    const bool pec = is_perfect_conductor(layer.material);
    if (layer.thickness) {
      const double d = *layer.thickness;
      if (!std::isfinite(d) || d <= 0.0) {
        throw InputError(where(j) + ".thickness_m: must be finite and > 0");
      }
      if (outer && !pec) {
        throw InputError(where(j) + ".thickness_m: outermost layers must be semi-infinite");
      }
    } else if (!outer && !pec) {
      throw InputError(where(j) + ".thickness_m: only outermost layers may be semi-infinite");
    }
  }
}

const Layer& Stack::at(std::size_t j) const {
  if (j >= layers_.size()) {
    throw InputError("layer index " + std::to_string(j) + " out of range [0, " +
                     std::to_string(last()) + "]");
  }
  return layers_[j];
}

double Stack::thickness(std::size_t j) const {
  const Layer& layer = at(j);
  if (is_perfect_conductor(layer.material)) {
    throw InputError(where(j) + " is a perfect conductor");
  }
  if (!layer.thickness || j == 0 || j == last()) {
    throw InputError(where(j) + " is semi-infinite");
  }
  return *layer.thickness;
}

Stack Stack::with_thickness(std::size_t j, double d) const {
  auto layers = layers_;
  if (j >= layers.size()) {
    throw InputError("layer index " + std::to_string(j) + " out of range");
  }
  layers[j].thickness = d;
  return Stack(std::move(layers));
}

Stack Stack::with_inserted(std::size_t position, Layer layer) const {
  if (position == 0 || position > last()) {
    throw InputError("insertion position must be interior");
  }
  auto layers = layers_;
  layers.insert(layers.begin() + static_cast<std::ptrdiff_t>(position), std::move(layer));
  return Stack(std::move(layers));
}

}  // namespace casimir
