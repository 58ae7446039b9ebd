#include "chowmot/correspondence.hpp"

#include <numeric>
#include <sstream>

namespace chowmot {

namespace {

void require_kernel_ambient(const Variety& source, const Variety& target,
                            const Variety& ambient) {
    if (ambient != product(source, target)) {
        throw VarietyMismatchError("kernel does not live on source x target");
    }
}

/// The three projections from X x Y x Z, with blocks in that order.
struct TripleProjections {
    Variety xyz;
    Projection to_xy;
    Projection to_yz;
    Projection to_xz;
};

TripleProjections triple_projections(const Variety& x, const Variety& y, const Variety& z) {
    const Variety xyz = product(product(x, y), z);
    const int kx = x.factor_count();
    const int ky = y.factor_count();
    const int kz = z.factor_count();
    std::vector<int> xy(static_cast<std::size_t>(kx + ky));
    std::iota(xy.begin(), xy.end(), 0);
    std::vector<int> yz(static_cast<std::size_t>(ky + kz));
    std::iota(yz.begin(), yz.end(), kx);
    std::vector<int> xz;
    xz.reserve(static_cast<std::size_t>(kx + kz));
    for (int i = 0; i < kx; ++i) xz.push_back(i);
    for (int i = 0; i < kz; ++i) xz.push_back(kx + ky + i);
    return TripleProjections{xyz, Projection(xyz, std::move(xy)),
                             Projection(xyz, std::move(yz)),
                             Projection(xyz, std::move(xz))};
}

void require_composable(const Variety& a_target, const Variety& b_source) {
    if (a_target != b_source) {
        throw CompositionError("correspondences are not composable: target of the first "
                               "differs from source of the second");
    }
}

}  // namespace

ChowCorrespondence::ChowCorrespondence(Variety source, Variety target, ChowClass kernel)
    : source_(std::move(source)), target_(std::move(target)), kernel_(std::move(kernel)) {
    require_kernel_ambient(source_, target_, kernel_.variety());
}

ChowCorrespondence ChowCorrespondence::identity(const Variety& x) {
    return ChowCorrespondence(x, x, diagonal(x));
}

ChowCorrespondence ChowCorrespondence::zero(const Variety& source, const Variety& target) {
    return ChowCorrespondence(source, target, ChowClass::zero(product(source, target)));
}

ChowCorrespondence& ChowCorrespondence::operator+=(const ChowCorrespondence& rhs) {
    if (source_ != rhs.source_ || target_ != rhs.target_) {
        throw CompositionError("correspondence sum requires matching endpoints");
    }
    kernel_ += rhs.kernel_;
    return *this;
}

ChowCorrespondence& ChowCorrespondence::operator*=(const Rational& c) {
    kernel_ *= c;
    return *this;
}

KCorrespondence::KCorrespondence(Variety source, Variety target, KClass kernel)
    : source_(std::move(source)), target_(std::move(target)), kernel_(std::move(kernel)) {
    require_kernel_ambient(source_, target_, kernel_.variety());
}

KCorrespondence& KCorrespondence::operator+=(const KCorrespondence& rhs) {
    if (source_ != rhs.source_ || target_ != rhs.target_) {
        throw CompositionError("correspondence sum requires matching endpoints");
    }
    kernel_ += rhs.kernel_;
    return *this;
}

KCorrespondence& KCorrespondence::operator*=(const Rational& c) {
    kernel_ *= c;
    return *this;
}

ChowCorrespondence compose(const ChowCorrespondence& a, const ChowCorrespondence& b) {
    require_composable(a.target(), b.source());
    const auto proj = triple_projections(a.source(), a.target(), b.target());
    const ChowClass convolved =
        pushforward(proj.to_xz, pullback(proj.to_xy, a.kernel()) *
                                    pullback(proj.to_yz, b.kernel()));
    return ChowCorrespondence(a.source(), b.target(), convolved);
}

KCorrespondence compose(const KCorrespondence& a, const KCorrespondence& b) {
    require_composable(a.target(), b.source());
    const auto proj = triple_projections(a.source(), a.target(), b.target());
    const KClass convolved = grr_pushforward(
        proj.to_xz,
        tensor(k_pullback(proj.to_xy, a.kernel()), k_pullback(proj.to_yz, b.kernel())));
    return KCorrespondence(a.source(), b.target(), convolved);
}

ChowClass fm_action(const ChowCorrespondence& a, const ChowClass& alpha) {
    if (alpha.variety() != a.source()) {
        throw VarietyMismatchError("class does not live on the correspondence's source");
    }
    const Variety xy = product(a.source(), a.target());
    const int kx = a.source().factor_count();
    const int ky = a.target().factor_count();
    std::vector<int> x_block(static_cast<std::size_t>(kx));
    std::iota(x_block.begin(), x_block.end(), 0);
    std::vector<int> y_block(static_cast<std::size_t>(ky));
    std::iota(y_block.begin(), y_block.end(), kx);
    const Projection to_x(xy, std::move(x_block));
    const Projection to_y(xy, std::move(y_block));
    return pushforward(to_y, a.kernel() * pullback(to_x, alpha));
}

std::string to_string(const ChowCorrespondence& a) {
    std::ostringstream os;
    os << "corr " << to_string(a.source()) << " -> " << to_string(a.target()) << " : "
       << to_string(a.kernel());
    return os.str();
}

}  // namespace chowmot
