#include "chowmot/motive.hpp"

#include <map>
#include <sstream>

namespace chowmot {

bool is_idempotent(const ChowCorrespondence& p) {
    if (p.source() != p.target()) {
        throw DomainError("idempotence is only defined for endo-correspondences");
    }
    return compose(p, p) == p;
}

Motive::Motive(Variety variety, ChowCorrespondence projector, int twist)
    : variety_(std::move(variety)), projector_(std::move(projector)), twist_(twist) {
    if (projector_.source() != variety_ || projector_.target() != variety_) {
        throw VarietyMismatchError("projector endpoints differ from the motive's variety");
    }
    if (!projector_.kernel().poly().is_homogeneous(variety_.dimension())) {
        throw DomainError("projector kernel must be homogeneous of degree dim X");
    }
    if (!is_idempotent(projector_)) {
        throw DomainError("projector is not idempotent");
    }
}

Motive Motive::unit(int twist) {
    return Motive(Variety::point(), ChowCorrespondence::identity(Variety::point()), twist);
}

Motive Motive::of_variety(const Variety& x, int twist) {
    return Motive(x, ChowCorrespondence::identity(x), twist);
}

bool Motive::is_twisted_unit() const {
    return variety_ == Variety::point();
}

namespace {

int hom_degree(const Motive& from, const Motive& to) {
    return from.variety().dimension() + to.twist() - from.twist();
}

ChowCorrespondence as_correspondence(const Motive& from, const Motive& to,
                                     const ChowClass& cls) {
    return ChowCorrespondence(from.variety(), to.variety(), cls);
}

/// q . c . p, computed by convolution on both sides.
ChowClass absorb(const Motive& from, const Motive& to, const ChowClass& cls) {
    const ChowCorrespondence c = as_correspondence(from, to, cls);
    return compose(compose(from.projector(), c), to.projector()).kernel();
}

}  // namespace

MotiveMorphism::MotiveMorphism(Motive from, Motive to, ChowClass cls)
    : from_(std::move(from)), to_(std::move(to)), cls_(std::move(cls)) {}

MotiveMorphism MotiveMorphism::make(Motive from, Motive to, const ChowClass& raw) {
    if (raw.variety() != product(from.variety(), to.variety())) {
        throw VarietyMismatchError("morphism class does not live on X x Y");
    }
    if (!raw.poly().is_homogeneous(hom_degree(from, to))) {
        throw DomainError("morphism class must be homogeneous of degree dim X + twist(to) - twist(from)");
    }
    ChowClass absorbed = absorb(from, to, raw);
    return MotiveMorphism(std::move(from), std::move(to), std::move(absorbed));
}

MotiveMorphism MotiveMorphism::zero(Motive from, Motive to) {
    ChowClass z = ChowClass::zero(product(from.variety(), to.variety()));
    return MotiveMorphism(std::move(from), std::move(to), std::move(z));
}

MotiveMorphism MotiveMorphism::identity(const Motive& m) {
    return MotiveMorphism(m, m, m.projector().kernel());
}

MotiveMorphism& MotiveMorphism::operator+=(const MotiveMorphism& rhs) {
    if (from_ != rhs.from_ || to_ != rhs.to_) {
        throw CompositionError("morphism sum requires matching endpoints");
    }
    cls_ += rhs.cls_;
    return *this;
}

MotiveMorphism& MotiveMorphism::operator*=(const Rational& c) {
    cls_ *= c;
    return *this;
}

MotiveMorphism MotiveMorphism::twisted(int by) const {
    return MotiveMorphism(from_.twisted(by), to_.twisted(by), cls_);
}

MotiveMorphism compose(const MotiveMorphism& f, const MotiveMorphism& g) {
    if (f.to() != g.from()) {
        throw CompositionError("motive morphisms are not composable");
    }
    const ChowCorrespondence composite =
        compose(as_correspondence(f.from(), f.to(), f.cls()),
                as_correspondence(g.from(), g.to(), g.cls()));
    // Both factors are already absorbed, so the convolution is too.
    return MotiveMorphism::make(f.from(), g.to(), composite.kernel());
}

bool check_iso_pair(const MotiveMorphism& f, const MotiveMorphism& g) {
    if (f.from() != g.to() || f.to() != g.from()) {
        throw CompositionError("iso-pair endpoints do not match");
    }
    return compose(f, g) == MotiveMorphism::identity(f.from()) &&
           compose(g, f) == MotiveMorphism::identity(g.from());
}

std::vector<DecompositionPiece> decompose_product(const Variety& x) {
    const Variety xx = product(x, x);
    const auto xx_profile = xx.profile();
    const int k = x.factor_count();

    std::vector<DecompositionPiece> pieces;
    for (const Multidegree& d : profile_box(x.profile())) {
        // Projector prod_i h_i^(n_i - d_i) h_(k+i)^(d_i).
        Exponents proj(static_cast<std::size_t>(2 * k), 0);
        Exponents onto(static_cast<std::size_t>(k), 0);   // class of f on X
        Exponents embed(static_cast<std::size_t>(k), 0);  // class of g on X
        for (int i = 0; i < k; ++i) {
            const int di = d[static_cast<std::size_t>(i)];
            proj[static_cast<std::size_t>(i)] = x.factor(i) - di;
            proj[static_cast<std::size_t>(k + i)] = di;
            onto[static_cast<std::size_t>(i)] = x.factor(i) - di;
            embed[static_cast<std::size_t>(i)] = di;
        }
        const ChowCorrespondence projector(
            x, x, ChowClass(xx, SparsePoly::monomial(xx_profile, proj, 1)));
        Motive summand(x, projector, 0);
        Motive tate = Motive::unit(-total_degree(d));

        // X x pt and pt x X both have X's Chow ring.
        const ChowClass f_class = ChowClass::monomial(x, onto, 1);
        const ChowClass g_class = ChowClass::monomial(x, embed, 1);
        MotiveMorphism f = MotiveMorphism::make(summand, tate, f_class);
        MotiveMorphism g = MotiveMorphism::make(tate, summand, g_class);
        pieces.push_back(DecompositionPiece{std::move(summand), std::move(tate),
                                            std::move(f), std::move(g)});
    }
    return pieces;
}

std::vector<DecompositionPiece> decompose_projective(int n) {
    if (n < 0) throw DomainError("projective space of negative dimension");
    return decompose_product(Variety::projective(n));
}

std::vector<ChowClass> hom_space(const Motive& m, const Motive& n) {
    const int d = hom_degree(m, n);
    const Variety ambient = product(m.variety(), n.variety());
    std::vector<ChowClass> basis;
    if (d < 0 || d > ambient.dimension()) return basis;

    // Gaussian elimination with the lexicographically smallest monomial of
    // each absorbed candidate as its pivot.
    std::map<Exponents, SparsePoly> pivots;
    for (const Exponents& e : monomials_of_degree(ambient.profile(), d)) {
        SparsePoly candidate =
            absorb(m, n, ChowClass::monomial(ambient, e, 1)).poly();
        while (!candidate.is_zero()) {
            const Exponents& lead = candidate.terms().begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) break;
            candidate -= it->second * candidate.terms().begin()->second;
        }
        if (candidate.is_zero()) continue;
        const Rational lead_coeff = candidate.terms().begin()->second;
        candidate *= Rational(1) / lead_coeff;
        pivots.emplace(candidate.terms().begin()->first, std::move(candidate));
    }
    basis.reserve(pivots.size());
    for (const auto& [lead, row] : pivots) basis.emplace_back(ambient, row);
    return basis;
}

MotiveSum MotiveSum::twisted(int by) const {
    std::vector<Motive> twisted;
    twisted.reserve(summands_.size());
    for (const auto& m : summands_) twisted.push_back(m.twisted(by));
    return MotiveSum(std::move(twisted));
}

MotiveMatrix MotiveMatrix::zero(MotiveSum from, MotiveSum to) {
    MotiveMatrix m;
    m.from_ = std::move(from);
    m.to_ = std::move(to);
    m.entries_.reserve(static_cast<std::size_t>(m.to_.size()));
    for (int row = 0; row < m.to_.size(); ++row) {
        std::vector<MotiveMorphism> line;
        line.reserve(static_cast<std::size_t>(m.from_.size()));
        for (int col = 0; col < m.from_.size(); ++col) {
            line.push_back(MotiveMorphism::zero(m.from_.summand(col), m.to_.summand(row)));
        }
        m.entries_.push_back(std::move(line));
    }
    return m;
}

MotiveMatrix MotiveMatrix::identity(const MotiveSum& s) {
    MotiveMatrix m = zero(s, s);
    for (int i = 0; i < s.size(); ++i) {
        m.set_entry(i, i, MotiveMorphism::identity(s.summand(i)));
    }
    return m;
}

const MotiveMorphism& MotiveMatrix::entry(int row, int col) const {
    return entries_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

void MotiveMatrix::set_entry(int row, int col, MotiveMorphism f) {
    auto& slot = entries_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    if (f.from() != slot.from() || f.to() != slot.to()) {
        throw CompositionError("matrix entry endpoints do not match the sums");
    }
    slot = std::move(f);
}

bool MotiveMatrix::is_zero() const {
    for (const auto& row : entries_) {
        for (const auto& f : row) {
            if (!f.is_zero()) return false;
        }
    }
    return true;
}

MotiveMatrix& MotiveMatrix::operator+=(const MotiveMatrix& rhs) {
    if (from_ != rhs.from_ || to_ != rhs.to_) {
        throw CompositionError("matrix sum requires matching endpoints");
    }
    for (int row = 0; row < to_.size(); ++row) {
        for (int col = 0; col < from_.size(); ++col) {
            entries_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] +=
                rhs.entry(row, col);
        }
    }
    return *this;
}

MotiveMatrix MotiveMatrix::twisted(int by) const {
    MotiveMatrix m = zero(from_.twisted(by), to_.twisted(by));
    for (int row = 0; row < to_.size(); ++row) {
        for (int col = 0; col < from_.size(); ++col) {
            m.set_entry(row, col, entry(row, col).twisted(by));
        }
    }
    return m;
}

MotiveMatrix compose(const MotiveMatrix& f, const MotiveMatrix& g) {
    if (f.to() != g.from()) {
        throw CompositionError("matrices are not composable");
    }
    MotiveMatrix result = MotiveMatrix::zero(f.from(), g.to());
    for (int row = 0; row < g.to().size(); ++row) {
        for (int col = 0; col < f.from().size(); ++col) {
            MotiveMorphism acc = MotiveMorphism::zero(f.from().summand(col),
                                                      g.to().summand(row));
            for (int mid = 0; mid < f.to().size(); ++mid) {
                acc += compose(f.entry(mid, col), g.entry(row, mid));
            }
            result.set_entry(row, col, std::move(acc));
        }
    }
    return result;
}

MotiveSum verified_tate_form(const Variety& x) {
    const auto pieces = decompose_product(x);
    ChowCorrespondence sum = ChowCorrespondence::zero(x, x);
    std::vector<Motive> tate_summands;
    tate_summands.reserve(pieces.size());
    for (const auto& piece : pieces) {
        if (!check_iso_pair(piece.to_tate, piece.from_tate)) {
            throw InternalError("decomposition witness pair failed to compose to identities");
        }
        sum += piece.summand.projector();
        tate_summands.push_back(piece.tate);
    }
    if (sum != ChowCorrespondence::identity(x)) {
        throw InternalError("decomposition projectors do not sum to the diagonal");
    }
    return MotiveSum(std::move(tate_summands));
}

std::string to_string(const Motive& m) {
    if (m.is_twisted_unit()) {
        if (m.twist() == 0) return "1";
        return "1(" + std::to_string(m.twist()) + ")";
    }
    std::ostringstream os;
    os << "M(" << to_string(m.variety()) << "; pi=" << to_string(m.projector().kernel())
       << "; twist=" << m.twist() << ")";
    return os.str();
}

std::string to_string(const MotiveSum& s) {
    if (s.size() == 0) return "0";
    std::ostringstream os;
    for (int i = 0; i < s.size(); ++i) {
        if (i > 0) os << " + ";
        os << to_string(s.summand(i));
    }
    return os.str();
}

}  // namespace chowmot
