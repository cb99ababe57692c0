#include "chowkit/chow.hpp"

#include <algorithm>
#include <sstream>

namespace chowkit {

int total_degree(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

std::shared_ptr<const ChowPresentation> ChowPresentation::product_of_projective_spaces(
    const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("base requires at least one factor");
    auto ring = std::make_shared<ChowPresentation>();
    int i = 1;
    for (int n : dims) {
        if (n < 1) throw std::invalid_argument("projective factor dimension must be >= 1");
        Generator g;
        g.name = "h" + std::to_string(i++);
        g.lead = n + 1;
        g.is_relative = false;
        ring->gens_.push_back(std::move(g));
        ring->total_dimension_ += n;
    }
    return ring;
}

std::shared_ptr<const ChowPresentation> ChowPresentation::extend_relative(
    const RingPtr& base, const std::string& name, int rank, std::map<Expo, Rational> tail,
    int dim_increment) {
    auto ring = std::make_shared<ChowPresentation>();
    ring->gens_ = base->gens_;
    Generator g;
    g.name = name;
    g.lead = rank;
    g.is_relative = true;
    g.tail = std::move(tail);
    for (const auto& [e, c] : g.tail) {
        if (e.size() != base->generator_count() + 1)
            throw std::invalid_argument("relation tail has wrong arity");
        if (total_degree(e) != rank)
            throw std::invalid_argument("relation tail must be homogeneous of the leading degree");
    }
    ring->gens_.push_back(std::move(g));
    ring->total_dimension_ = base->total_dimension_ + dim_increment;
    return ring;
}

int ChowPresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

Expo ChowPresentation::fundamental_monomial() const {
    Expo e(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
        e[i] = gens_[i].is_relative ? gens_[i].lead - 1 : gens_[i].lead - 1;
    return e;
}

namespace {

// Worklist reduction. Each substitution strictly lowers the exponent of the
// highest reducible relative generator (tails only involve earlier generators
// and lower powers), and h-nilpotency kills terms outright, so this terminates.
void reduce_into(const ChowPresentation& ring, std::map<Expo, Rational>& out,
                 std::vector<std::pair<Expo, Rational>>& work) {
    const auto& gens = ring.generators();
    const int D = ring.total_dimension();
    while (!work.empty()) {
        auto [e, c] = std::move(work.back());
        work.pop_back();
        if (c == 0) continue;
        if (total_degree(e) > D) continue;
        int red = -1;
        for (int gi = static_cast<int>(gens.size()) - 1; gi >= 0; --gi) {
            if (e[gi] >= gens[gi].lead) { red = gi; break; }
        }
        if (red < 0) {
            auto it = out.find(e);
            if (it == out.end()) {
                out.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
            continue;
        }
        if (!gens[red].is_relative) continue;  // h^{n+1} = 0
        Expo rest = e;
        rest[red] -= gens[red].lead;
        for (const auto& [te, tc] : gens[red].tail) {
            Expo ne(rest.size());
            for (std::size_t i = 0; i < ne.size(); ++i) ne[i] = rest[i] + te[i];
            work.emplace_back(std::move(ne), c * tc);
        }
    }
}

std::map<Expo, Rational> reduce_terms(const RingPtr& ring, std::map<Expo, Rational>&& raw) {
    std::vector<std::pair<Expo, Rational>> work;
    work.reserve(raw.size());
    for (auto& [e, c] : raw) {
        if (e.size() != ring->generator_count())
            throw std::invalid_argument("exponent vector arity does not match the ring");
        work.emplace_back(e, c);
    }
    std::map<Expo, Rational> out;
    reduce_into(*ring, out, work);
    return out;
}

} // namespace

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
    if (a != b) throw std::invalid_argument(std::string("ring mismatch in ") + op);
}

ChowClass::ChowClass(RingPtr ring, std::map<Expo, Rational> terms) : ring_(std::move(ring)) {
    terms_ = reduce_terms(ring_, std::move(terms));
}

ChowClass ChowClass::one(RingPtr ring) { return constant(std::move(ring), 1); }

ChowClass ChowClass::constant(RingPtr ring, Rational c) {
    ChowClass r(std::move(ring));
    if (c != 0) r.terms_[Expo(r.ring_->generator_count(), 0)] = std::move(c);
    return r;
}

ChowClass ChowClass::monomial(RingPtr ring, Expo e, Rational c) {
    std::map<Expo, Rational> t;
    t.emplace(std::move(e), std::move(c));
    return ChowClass(std::move(ring), std::move(t));
}

ChowClass ChowClass::divisor(RingPtr ring, const Expo& multidegree) {
    if (multidegree.size() != ring->generator_count())
        throw std::invalid_argument("multidegree arity does not match the ring");
    std::map<Expo, Rational> t;
    for (std::size_t i = 0; i < multidegree.size(); ++i) {
        if (multidegree[i] == 0) continue;
        Expo e(multidegree.size(), 0);
        e[i] = 1;
        t[e] = rational(multidegree[i]);
    }
    return ChowClass(std::move(ring), std::move(t));
}

Rational ChowClass::coefficient(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

ChowClass ChowClass::graded_part(int degree) const {
    ChowClass r(ring_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == degree) r.terms_[e] = c;
    return r;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    check_same_ring(ring_, o.ring_, "+");
    ChowClass r(ring_);
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) r.terms_[e] = c;
        else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

ChowClass ChowClass::operator-() const {
    ChowClass r(ring_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const { return *this + (-o); }

ChowClass ChowClass::operator*(const ChowClass& o) const {
    check_same_ring(ring_, o.ring_, "*");
    const int D = ring_->total_dimension();
    std::vector<std::pair<Expo, Rational>> work;
    for (const auto& [ea, ca] : terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + total_degree(eb) > D) continue;  // integrates to 0 anyway
            Expo e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            work.emplace_back(std::move(e), ca * cb);
        }
    }
    ChowClass r(ring_);
    reduce_into(*ring_, r.terms_, work);
    return r;
}

ChowClass ChowClass::operator*(const Rational& c) const {
    ChowClass r(ring_);
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
    return r;
}

ChowClass ChowClass::pow(unsigned n) const {
    ChowClass r = one(ring_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

ChowClass ChowClass::inverse() const {
    Expo unit(ring_->generator_count(), 0);
    if (coefficient(unit) != 1)
        throw std::invalid_argument("inverse requires constant term 1");
    ChowClass u = *this - one(ring_);  // nilpotent
    ChowClass acc = one(ring_);
    ChowClass p = one(ring_);
    for (int k = 1; k <= ring_->total_dimension(); ++k) {
        p = p * u;
        if (p.is_zero()) break;
        acc = (k % 2) ? acc - p : acc + p;
    }
    return acc;
}

bool ChowClass::operator==(const ChowClass& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

std::string ChowClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << ring_->generators()[i].name;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

ChowClass normal_form(const ChowClass& c) {
    // Terms are maintained in normal form; re-reduce to make idempotence testable.
    ChowClass r(c.ring_);
    std::vector<std::pair<Expo, Rational>> work(c.terms_.begin(), c.terms_.end());
    reduce_into(*c.ring_, r.terms_, work);
    return r;
}

Rational integrate(const ChowClass& c) {
    return c.coefficient(c.ring()->fundamental_monomial());
}

} // namespace chowkit
