#include "chowkit/kclass.hpp"

#include <functional>
#include <sstream>

namespace chowkit {

KClass KClass::structure_sheaf(RingPtr ring) {
    KClass k(std::move(ring));
    k.add(Expo(k.ring_->generator_count(), 0), 1);
    return k;
}

KClass KClass::line_bundle(RingPtr ring, const Expo& multidegree, long mult) {
    KClass k(std::move(ring));
    k.add(multidegree, mult);
    return k;
}

long KClass::rank() const {
    long r = 0;
    for (const auto& [e, m] : terms_) r += m;
    return r;
}

KClass& KClass::add(const Expo& symbol, long mult) {
    if (symbol.size() != ring_->generator_count())
        throw std::invalid_argument("line-bundle symbol arity does not match the ring");
    if (mult == 0) return *this;
    auto it = terms_.find(symbol);
    if (it == terms_.end()) terms_[symbol] = mult;
    else {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

KClass KClass::operator+(const KClass& o) const {
    check_same_ring(ring_, o.ring_, "K +");
    KClass r = *this;
    for (const auto& [e, m] : o.terms_) r.add(e, m);
    return r;
}

KClass KClass::operator-(const KClass& o) const {
    check_same_ring(ring_, o.ring_, "K -");
    KClass r = *this;
    for (const auto& [e, m] : o.terms_) r.add(e, -m);
    return r;
}

KClass KClass::operator*(long n) const {
    KClass r(ring_);
    if (n == 0) return r;
    for (const auto& [e, m] : terms_) r.terms_[e] = m * n;
    return r;
}

Expo KClass::determinant() const {
    Expo d(ring_->generator_count(), 0);
    for (const auto& [e, m] : terms_)
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += static_cast<int>(m) * e[i];
    return d;
}

std::string KClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, m] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << m << "*O(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ",";
            os << e[i];
        }
        os << ")";
    }
    return os.str();
}

KClass k_tensor(const KClass& a, const KClass& b) {
    check_same_ring(a.ring(), b.ring(), "k_tensor");
    KClass r(a.ring());
    for (const auto& [ea, ma] : a.terms())
        for (const auto& [eb, mb] : b.terms()) {
            Expo e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add(e, ma * mb);
        }
    return r;
}

KClass k_dual(const KClass& a) {
    KClass r(a.ring());
    for (const auto& [e, m] : a.terms()) {
        Expo d(e.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = -e[i];
        r.add(d, m);
    }
    return r;
}

namespace {

using KPoly = std::vector<KClass>;  // coefficient of t^k at index k

KPoly kpoly_one(const RingPtr& ring, int order) {
    KPoly p(order + 1, KClass(ring));
    p[0] = KClass::structure_sheaf(ring);
    return p;
}

KPoly kpoly_mul(const KPoly& a, const KPoly& b, int order) {
    KPoly out(order + 1, KClass(a.empty() ? RingPtr{} : a[0].ring()));
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            if (a[i].terms().empty() || b[j].terms().empty()) continue;
            out[i + j] = out[i + j] + k_tensor(a[i], b[j]);
        }
    return out;
}

Expo scale(const Expo& e, int k) {
    Expo r(e.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = k * e[i];
    return r;
}

} // namespace

KClass exterior_power(const KClass& a, int p) {
    if (p < 0) throw std::invalid_argument("exterior_power: p must be >= 0");
    const RingPtr& ring = a.ring();
    if (p == 0) return KClass::structure_sheaf(ring);
    KPoly acc = kpoly_one(ring, p);
    for (const auto& [sym, mult] : a.terms()) {
        KPoly factor(p + 1, KClass(ring));
        if (mult >= 0) {
            // (1 + t[L])^m: binomial coefficients on tensor powers of L
            for (int k = 0; k <= p; ++k) {
                Integer c = binomial(Integer(mult), static_cast<unsigned>(k));
                if (c == 0) continue;
                factor[k] = KClass::line_bundle(ring, scale(sym, k), c.get_si());
            }
        } else {
            // (1 + t[L])^{-|m|}: negative binomial series
            long n = -mult;
            for (int k = 0; k <= p; ++k) {
                Integer c = binomial(Integer(n + k - 1), static_cast<unsigned>(k));
                long sgn = (k % 2) ? -1 : 1;
                factor[k] = KClass::line_bundle(ring, scale(sym, k), sgn * c.get_si());
            }
        }
        acc = kpoly_mul(acc, factor, p);
    }
    return acc[p];
}

namespace {

// exp(l) truncated at the ring's total dimension.
ChowClass exp_class(const ChowClass& l) {
    const RingPtr& ring = l.ring();
    ChowClass acc = ChowClass::one(ring);
    ChowClass pw = ChowClass::one(ring);
    for (int k = 1; k <= ring->total_dimension(); ++k) {
        pw = pw * l;
        if (pw.is_zero()) break;
        acc = acc + pw * Rational(Integer(1), factorial(static_cast<unsigned>(k)));
    }
    return acc;
}

// Coefficients of x/(1 - e^{-x}) up to x^D, by inverting sum (-1)^k x^k/(k+1)!.
std::vector<Rational> todd_series(int D) {
    std::vector<Rational> d(D + 1), q(D + 1);
    for (int k = 0; k <= D; ++k) {
        Rational c(Integer(1), factorial(static_cast<unsigned>(k + 1)));
        d[k] = (k % 2) ? -c : c;
    }
    q[0] = 1;
    for (int n = 1; n <= D; ++n) {
        Rational s = 0;
        for (int j = 1; j <= n; ++j) s += d[j] * q[n - j];
        q[n] = -s;
    }
    return q;
}

ChowClass eval_series(const std::vector<Rational>& coeffs, const ChowClass& l) {
    const RingPtr& ring = l.ring();
    ChowClass acc = ChowClass::constant(ring, coeffs[0]);
    ChowClass pw = ChowClass::one(ring);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        pw = pw * l;
        if (pw.is_zero()) break;
        if (coeffs[k] != 0) acc = acc + pw * coeffs[k];
    }
    return acc;
}

ChowClass multiplicative_over_symbols(
    const KClass& a, const std::function<ChowClass(const ChowClass&)>& factor_of) {
    const RingPtr& ring = a.ring();
    ChowClass acc = ChowClass::one(ring);
    for (const auto& [sym, mult] : a.terms()) {
        ChowClass f = factor_of(ChowClass::divisor(ring, sym));
        if (mult >= 0) {
            for (long i = 0; i < mult; ++i) acc = acc * f;
        } else {
            ChowClass fi = f.inverse();
            for (long i = 0; i < -mult; ++i) acc = acc * fi;
        }
    }
    return acc;
}

} // namespace

ChowClass chern_character(const KClass& a) {
    const RingPtr& ring = a.ring();
    ChowClass acc(ring);
    for (const auto& [sym, mult] : a.terms())
        acc = acc + exp_class(ChowClass::divisor(ring, sym)) * rational(mult);
    return acc;
}

ChowClass todd(const KClass& a) {
    auto series = todd_series(a.ring()->total_dimension());
    return multiplicative_over_symbols(
        a, [&](const ChowClass& l) { return eval_series(series, l); });
}

ChowClass total_chern(const KClass& a) {
    return multiplicative_over_symbols(
        a, [](const ChowClass& l) { return ChowClass::one(l.ring()) + l; });
}

ChowClass chern_class(const KClass& a, int j) { return total_chern(a).graded_part(j); }

} // namespace chowkit
