#pragma once

#include <string>
#include <string_view>

#include "casimir/cavity.hpp"
#include "casimir/error.hpp"
#include "casimir/stack.hpp"

namespace casimir {

/// Stack file error. what() names the offending field, e.g.
/// "layers[1].thickness_m: must be finite and > 0".
class StackFileError : public InputError {
 public:
  using InputError::InputError;
};

/// Parses a stack document (JSON):
///
///   { "layers": [ { "material": <material>, "thickness_m": <number> | "semi_infinite" }, ... ] }
///
/// where <material> is "vacuum", "perfect_conductor",
/// {"model": "constant", "epsilon": x}, {"model": "drude", "omega_p": x, "gamma": x}
/// or {"model": "lorentz", "omega_0": x, "omega_p": x, "gamma": x}, SI units.
/// Schema violations are reported with a "schema error:" prefix, stack
/// invariant violations with "invalid stack:".
Stack parse_stack(std::string_view text);

/// Inverse of parse_stack; numbers are written in shortest round-trip form.
std::string serialize_stack(const Stack& stack);

/// Parses a slab-in-cavity document:
///
///   { "medium": <material>,
///     "slab": { "material": <material>, "thickness_m": x },
///     "d1_m": x, "d2_m": x,
///     "left_mirror": [<layer>, ...] | "perfect_conductor",
///     "right_mirror": [<layer>, ...] | "perfect_conductor" }
///
/// Mirror layers use the stack-file layer syntax, listed left to right.
/// Omitted mirrors default to perfect conductors.
CavityConfig parse_cavity(std::string_view text);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_number(double value);

}  // namespace casimir
