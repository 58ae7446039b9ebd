#include "chowmot/nu.hpp"

namespace chowmot {

NuContext::NuContext(Variety source, Variety target)
    : source_(std::move(source)),
      target_(std::move(target)),
      sqrt_todd_(ChowClass::zero(product(source_, target_))) {
    const ChowClass td = todd(product(source_, target_));
    sqrt_todd_ = ChowClass(td.variety(), sqrt_unipotent(td.poly()));
    if (sqrt_todd_ * sqrt_todd_ != td) {
        throw InternalError("square root of the Todd class failed to square back");
    }
}

KCorrespondence nu_hom(const NuContext& ctx, const ChowCorrespondence& c) {
    if (c.source() != ctx.source() || c.target() != ctx.target()) {
        throw VarietyMismatchError("correspondence does not match the context's hom-set");
    }
    const ChowClass twisted =
        c.kernel() * ChowClass(ctx.sqrt_todd().variety(),
                               invert_unipotent(ctx.sqrt_todd().poly()));
    return KCorrespondence(c.source(), c.target(), ch_inverse(twisted));
}

KCorrespondence nu_hom(const ChowCorrespondence& c) {
    return nu_hom(NuContext(c.source(), c.target()), c);
}

ChowCorrespondence nu_inverse_hom(const NuContext& ctx, const KCorrespondence& e) {
    if (e.source() != ctx.source() || e.target() != ctx.target()) {
        throw VarietyMismatchError("correspondence does not match the context's hom-set");
    }
    return ChowCorrespondence(e.source(), e.target(), ch(e.kernel()) * ctx.sqrt_todd());
}

ChowCorrespondence nu_inverse_hom(const KCorrespondence& e) {
    return nu_inverse_hom(NuContext(e.source(), e.target()), e);
}

KCorrespondence k_identity(const Variety& x) {
    return nu_hom(ChowCorrespondence::identity(x));
}

bool check_nu_functorial(const ChowCorrespondence& a, const ChowCorrespondence& b) {
    if (a.target() != b.source()) {
        throw CompositionError("correspondences are not composable");
    }
    const KCorrespondence lhs = nu_hom(compose(a, b));
    const KCorrespondence rhs = compose(nu_hom(a), nu_hom(b));
    return lhs == rhs;
}

}  // namespace chowmot
