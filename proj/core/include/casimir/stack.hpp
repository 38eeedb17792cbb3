#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

/// One planar layer. An empty thickness marks a semi-infinite half-space,
/// allowed only at either end of a stack.
struct Layer {
  Material material;
  std::optional<double> thickness;

  static Layer half_space(Material m) { return {std::move(m), std::nullopt}; }
  static Layer slab(Material m, double d) { return {std::move(m), d}; }

  bool is_semi_infinite() const { return !thickness.has_value(); }
  bool operator==(const Layer&) const = default;
};

/// Ordered layers 0..n, left to right along +z.
///
/// The outermost layers are half-spaces or perfect conductors. A perfect
/// conductor in the interior is an opaque mirror: its thickness is ignored
/// and reflection recursions stop at it.
class Stack {
 public:
  /// Validates every layer and the stack invariants; throws InputError.
  explicit Stack(std::vector<Layer> layers);

  std::size_t size() const { return layers_.size(); }
  /// Index n of the rightmost layer.
  std::size_t last() const { return layers_.size() - 1; }

  const Layer& operator[](std::size_t j) const { return layers_[j]; }
  const Layer& at(std::size_t j) const;
  const std::vector<Layer>& layers() const { return layers_; }

  /// Thickness of layer j; throws InputError for a half-space or a perfect
  /// conductor.
  double thickness(std::size_t j) const;

  Stack with_thickness(std::size_t j, double d) const;
  Stack with_inserted(std::size_t position, Layer layer) const;

  bool operator==(const Stack&) const = default;

 private:
  std::vector<Layer> layers_;
};

enum class Polarization { p, s };

inline constexpr std::array<Polarization, 2> kPolarizations{Polarization::p, Polarization::s};

/// +1 for p (TM), -1 for s (TE).
constexpr double polarization_sign(Polarization q) { return q == Polarization::p ? 1.0 : -1.0; }

/// Reflection coefficient of an ideal conductor: r^p = +1, r^s = -1.
constexpr double pec_reflection(Polarization q) { return polarization_sign(q); }

constexpr Polarization swapped(Polarization q) {
  return q == Polarization::p ? Polarization::s : Polarization::p;
}

}  // namespace casimir
