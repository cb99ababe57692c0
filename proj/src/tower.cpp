#include "chowkit/tower.hpp"

#include <algorithm>

namespace chowkit {

namespace {

Expo padded(const Expo& e, std::size_t n) {
    Expo r = e;
    r.resize(n, 0);
    return r;
}

KClass repad(const KClass& k, const RingPtr& ring) {
    KClass r(ring);
    for (const auto& [e, m] : k.terms()) r.add(padded(e, ring->generator_count()), m);
    return r;
}

// Elementary symmetric class e_i of the summand divisor classes:
// coefficient of t^i in prod_j (1 + t l_j).
ChowClass elementary_symmetric(const RingPtr& ring, const std::vector<ChowClass>& lin, int i) {
    std::vector<ChowClass> coeff(i + 1, ChowClass::zero(ring));
    coeff[0] = ChowClass::one(ring);
    for (const auto& l : lin)
        for (int k = i; k >= 1; --k) coeff[k] = coeff[k] + coeff[k - 1] * l;
    return coeff[i];
}

} // namespace

Expo SplitBundle::det(std::size_t arity) const {
    Expo d(arity, 0);
    for (const auto& s : summands)
        for (std::size_t i = 0; i < s.size() && i < arity; ++i) d[i] += s[i];
    return d;
}

Space Space::base(const std::vector<int>& dims) {
    Space s;
    s.ring_ = ChowPresentation::product_of_projective_spaces(dims);
    s.tangent_ = KClass(s.ring_);
    s.canonical_ = Expo(s.ring_->generator_count(), 0);
    const std::size_t n = s.ring_->generator_count();
    for (std::size_t i = 0; i < dims.size(); ++i) {
        s.dim_ += dims[i];
        Expo hi(n, 0);
        hi[i] = 1;
        s.tangent_.add(hi, dims[i] + 1);
        s.tangent_.add(Expo(n, 0), -1);
        s.canonical_[i] = -(dims[i] + 1);
    }
    Step st;
    st.kind = StepKind::Base;
    st.base_dims = dims;
    s.steps_.push_back(std::move(st));
    return s;
}

Space build_base(const std::vector<int>& dims) { return Space::base(dims); }

Space add_proj_bundle(const Space& s, const SplitBundle& b, const std::string& name) {
    if (b.rank() < 1) throw std::invalid_argument("add_proj_bundle: bundle rank must be >= 1");
    if (s.has_zero_locus())
        throw std::invalid_argument("add_proj_bundle: cannot projectivize after a zero-locus step");
    const int e = b.rank();
    const std::size_t old_n = s.ring_->generator_count();
    for (const auto& sm : b.summands)
        if (sm.size() != old_n)
            throw std::invalid_argument("add_proj_bundle: summand degree arity mismatch");

    // Grothendieck relation xi^e = -sum_{i>=1} c_i(B) xi^{e-i}, over the extended ring.
    std::vector<ChowClass> lin;
    for (const auto& sm : b.summands) lin.push_back(ChowClass::divisor(s.ring_, sm));
    std::map<Expo, Rational> tail;
    for (int i = 1; i <= e; ++i) {
        ChowClass ci = elementary_symmetric(s.ring_, lin, i);
        for (const auto& [ex, c] : ci.terms()) {
            Expo t = padded(ex, old_n + 1);
            t[old_n] = e - i;
            auto it = tail.find(t);
            if (it == tail.end()) tail[t] = -c;
            else it->second -= c;
        }
    }
    std::string gname = name;
    if (gname.empty()) {
        int count = 0;
        for (const auto& g : s.ring_->generators())
            if (g.is_relative) ++count;
        gname = count == 0 ? "xi" : "xi" + std::to_string(count + 1);
    }

    Space out;
    out.steps_ = s.steps_;
    Step st;
    st.kind = StepKind::ProjBundle;
    st.bundle = b;
    out.steps_.push_back(std::move(st));
    out.ring_ = ChowPresentation::extend_relative(s.ring_, gname, e, std::move(tail), e - 1);
    out.dim_ = s.dim_ + e - 1;
    out.notes_ = s.notes_;

    const std::size_t n = out.ring_->generator_count();
    out.tangent_ = repad(s.tangent_, out.ring_);
    // T_rel = sum_i [O_xi(1) tensor B_i] - [O]
    for (const auto& sm : b.summands) {
        Expo d = padded(sm, n);
        d[n - 1] += 1;
        out.tangent_.add(d, 1);
    }
    out.tangent_.add(Expo(n, 0), -1);
    // K = p*(K_X tensor det B^v) tensor O_xi(-e)
    out.canonical_ = padded(s.canonical_, n);
    Expo det = b.det(old_n);
    for (std::size_t i = 0; i < old_n; ++i) out.canonical_[i] -= det[i];
    out.canonical_[n - 1] = -e;
    return out;
}

Space cut_zero_locus(const Space& s, const SplitBundle& b) {
    if (b.rank() == 0) return s;  // documented no-op
    if (b.rank() > s.dim())
        throw std::invalid_argument("cut_zero_locus: bundle rank exceeds the space dimension");
    const std::size_t n = s.ring_->generator_count();
    for (const auto& sm : b.summands)
        if (sm.size() != n)
            throw std::invalid_argument("cut_zero_locus: summand degree arity mismatch");

    Space out = s;
    Step st;
    st.kind = StepKind::ZeroLocus;
    st.bundle = b;
    out.steps_.push_back(std::move(st));
    out.dim_ = s.dim_ - b.rank();
    for (const auto& sm : b.summands) {
        out.tangent_.add(sm, -1);
        for (std::size_t i = 0; i < n; ++i) out.canonical_[i] += sm[i];
        if (std::any_of(sm.begin(), sm.end(), [](int d) { return d < 0; }))
            out.notes_.push_back("zero-locus summand with a negative degree component; "
                                 "effectivity not guaranteed");
    }
    out.normal_.push_back(b);
    return out;
}

Expo Space::anticanonical() const {
    Expo a(canonical_.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = -canonical_[i];
    return a;
}

ChowClass Space::normal_top_class() const {
    ChowClass c = ChowClass::one(ring_);
    for (const auto& nb : normal_)
        for (const auto& sm : nb.summands) c = c * ChowClass::divisor(ring_, sm);
    return c;
}

Rational Space::integrate_class(const ChowClass& ambient_class) const {
    check_same_ring(ring_, ambient_class.ring(), "integrate_class");
    if (normal_.empty()) return integrate(ambient_class);
    return integrate(ambient_class * normal_top_class());
}

bool Space::fano_positivity() const {
    for (int d : anticanonical())
        if (d <= 0) return false;
    return true;
}

std::optional<PresetName> preset_from_string(const std::string& name) {
    if (name == "X") return PresetName::X;
    if (name == "Y") return PresetName::Y;
    if (name == "S") return PresetName::S;
    if (name == "T") return PresetName::T;
    if (name == "PE") return PresetName::PE;
    if (name == "PFdual") return PresetName::PFdual;
    return std::nullopt;
}

Space preset(PresetName name) {
    switch (name) {
    case PresetName::X:
        return build_base({2, 2});
    case PresetName::PFdual: {
        Space x = build_base({2, 2});
        return add_proj_bundle(x, SplitBundle{{{-2, 0}, {0, -2}}});
    }
    case PresetName::S: {
        Space p = preset(PresetName::PFdual);
        SplitBundle n{{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}}};
        return cut_zero_locus(p, n);
    }
    case PresetName::PE: {
        Space x = build_base({2, 2});
        return add_proj_bundle(x, SplitBundle{{{0, 0}, {0, 0}, {0, 0}}});
    }
    case PresetName::Y: {
        // Z(O(1,2,0) + O(1,0,2)) in P(W) x P(V) x P(V')
        Space a = build_base({2, 2, 2});
        return cut_zero_locus(a, SplitBundle{{{1, 2, 0}, {1, 0, 2}}});
    }
    case PresetName::T: {
        // P_{X x P(W)}(F^v) cut by O_xi(1) tensor O_W(1); W is the third factor.
        Space a = build_base({2, 2, 2});
        Space p = add_proj_bundle(a, SplitBundle{{{-2, 0, 0}, {0, -2, 0}}});
        return cut_zero_locus(p, SplitBundle{{{0, 0, 1, 1}}});
    }
    }
    throw std::invalid_argument("unknown preset");
}

Space preset(const std::string& name) {
    auto p = preset_from_string(name);
    if (!p) throw std::invalid_argument("unknown preset: " + name);
    return preset(*p);
}

} // namespace chowkit
