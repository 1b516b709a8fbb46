#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "shiftdec/element_set.hpp"
#include "shiftdec/field.hpp"

namespace shiftdec {

enum class Composition { Sum, Difference, Product, Ratio };

std::string_view composition_name(Composition kind) noexcept;

/// {x o y : x in X, y in Y}. Ratio is x * y^{-1}; throws ZeroDivisor if 0 is in Y.
ElementSet compose_sets(const Field & field, const ElementSet & x, const ElementSet & y,
                        Composition kind);

/// Number of pairs (x, y) with x o y = z, indexed by z.
std::vector<std::uint32_t> representation_counts(const Field & field, const ElementSet & x,
                                                 const ElementSet & y, Composition kind);

enum class DropZero : bool { No = false, Yes = true };

/// {scale * x + shift : x in X}, optionally without 0. Throws ZeroScale for scale == 0.
ElementSet affine_image(const Field & field, const ElementSet & x, Residue scale, Residue shift,
                        DropZero drop_zero);

enum class TargetVariant {
    ShiftMinusLambda,  ///< (G - lambda) \ {0}
    XiShift,           ///< (xi G + mu) \ {0}
    XiShiftWithZero,   ///< ((xi G u {0}) + mu) \ {0}
    GUnionZero,        ///< G u {0}
};

std::string_view target_variant_name(TargetVariant variant) noexcept;

struct TargetParams {
    Residue lambda = 0;
    Residue xi = 0;
    Residue mu = 0;
};

/// Builds the shifted-subgroup targets. Throws ZeroParameter when lambda (or
/// xi, mu for the xi variants) is zero.
ElementSet build_target(const MultSubgroup & g, TargetVariant variant, const TargetParams & params);

} // namespace shiftdec
