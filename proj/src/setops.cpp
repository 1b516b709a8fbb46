#include "shiftdec/setops.hpp"

#include "shiftdec/error.hpp"

namespace shiftdec {

std::string_view composition_name(Composition kind) noexcept
{
    switch (kind) {
        case Composition::Sum: return "sum";
        case Composition::Difference: return "difference";
        case Composition::Product: return "product";
        case Composition::Ratio: return "ratio";
    }
    return "?";
}

std::string_view target_variant_name(TargetVariant variant) noexcept
{
    switch (variant) {
        case TargetVariant::ShiftMinusLambda: return "shift-minus-lambda";
        case TargetVariant::XiShift: return "xi-shift";
        case TargetVariant::XiShiftWithZero: return "xi-shift-with-zero";
        case TargetVariant::GUnionZero: return "g-union-zero";
    }
    return "?";
}

namespace {

void check_operands(const Field & field, const ElementSet & x, const ElementSet & y)
{
    if (x.modulus() != field.p() || y.modulus() != field.p())
        throw Error(Errc::ModulusMismatch, "operand modulus differs from F_" + std::to_string(field.p()));
}

template <typename F>
void for_each_composite(const Field & field, const ElementSet & x, const ElementSet & y,
                        Composition kind, F && emit)
{
    check_operands(field, x, y);
    if (kind == Composition::Ratio && y.contains(0))
        throw Error(Errc::ZeroDivisor, "ratio set with 0 in the denominator set");
    // Transform Y once so the inner loop is a plain sum or product.
    std::vector<Residue> ys;
    ys.reserve(y.size());
    y.for_each([&](Residue v) {
        switch (kind) {
            case Composition::Difference: ys.push_back(field.neg(v)); break;
            case Composition::Ratio: ys.push_back(field.inv(v)); break;
            default: ys.push_back(v); break;
        }
    });
    const bool additive = kind == Composition::Sum || kind == Composition::Difference;
    x.for_each([&](Residue u) {
        for (auto v : ys)
            emit(additive ? field.add(u, v) : field.mul(u, v));
    });
}

} // namespace

ElementSet compose_sets(const Field & field, const ElementSet & x, const ElementSet & y,
                        Composition kind)
{
    ElementSet out(field.p());
    for_each_composite(field, x, y, kind, [&](Residue z) { out.insert(z); });
    return out;
}

std::vector<std::uint32_t> representation_counts(const Field & field, const ElementSet & x,
                                                 const ElementSet & y, Composition kind)
{
    std::vector<std::uint32_t> counts(field.p(), 0);
    for_each_composite(field, x, y, kind, [&](Residue z) { ++counts[z]; });
    return counts;
}

ElementSet affine_image(const Field & field, const ElementSet & x, Residue scale, Residue shift,
                        DropZero drop_zero)
{
    if (x.modulus() != field.p())
        throw Error(Errc::ModulusMismatch, "affine image operand");
    if (scale % field.p() == 0)
        throw Error(Errc::ZeroScale, "affine image with scale 0");
    ElementSet out(field.p());
    x.for_each([&](Residue v) { out.insert(field.add(field.mul(scale, v), shift % field.p())); });
    if (drop_zero == DropZero::Yes)
        out.erase(0);
    return out;
}

ElementSet build_target(const MultSubgroup & g, TargetVariant variant, const TargetParams & params)
{
    const Field & field = g.field();
    const Residue p = field.p();
    switch (variant) {
        case TargetVariant::ShiftMinusLambda:
            if (params.lambda % p == 0)
                throw Error(Errc::ZeroParameter, "lambda must be nonzero");
            return affine_image(field, g.elements(), 1, field.neg(params.lambda % p), DropZero::Yes);
        case TargetVariant::XiShift:
        case TargetVariant::XiShiftWithZero: {
            if (params.xi % p == 0 || params.mu % p == 0)
                throw Error(Errc::ZeroParameter, "xi and mu must be nonzero");
            ElementSet base = g.elements();
            if (variant == TargetVariant::XiShiftWithZero) {
                base = affine_image(field, base, params.xi, 0, DropZero::No);
                base.insert(0);
                return affine_image(field, base, 1, params.mu, DropZero::Yes);
            }
            return affine_image(field, base, params.xi, params.mu, DropZero::Yes);
        }
        case TargetVariant::GUnionZero: {
            ElementSet out = g.elements();
            out.insert(0);
            return out;
        }
    }
    throw Error(Errc::ZeroParameter, "unknown target variant");
}

} // namespace shiftdec
