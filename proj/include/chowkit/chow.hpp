#pragma once

#include "chowkit/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace chowkit {

// Exponent vector over the ring generators. Also doubles as a line-bundle
// multidegree, where negative entries are allowed.
using Expo = std::vector<int>;

int total_degree(const Expo& e);

// Presentation of a multigraded quotient ring
//   Q[h_1..h_k, xi_1..xi_m] / (h_i^{n_i+1}, xi_j^{r_j} - tail_j)
// where every generator is a codimension-1 class. Base hyperplane classes are
// nilpotent; each relative class xi carries a Grothendieck relation whose tail
// only involves generators declared before it (plus lower powers of xi itself).
class ChowPresentation {
public:
    struct Generator {
        std::string name;
        int lead = 0;                      // reduction exponent: n_i+1 for h, rank for xi
        bool is_relative = false;          // xi generators carry a tail
        std::map<Expo, Rational> tail;     // xi^lead = tail (empty for h generators)
    };

    // Ring of a product of projective spaces, one nilpotent generator per factor.
    static std::shared_ptr<const ChowPresentation> product_of_projective_spaces(
        const std::vector<int>& dims);

    // Extends `base` by one relative generator of rank `rank` whose Grothendieck
    // relation is xi^rank = tail; `tail` is given over the extended generator list.
    static std::shared_ptr<const ChowPresentation> extend_relative(
        const std::shared_ptr<const ChowPresentation>& base, const std::string& name,
        int rank, std::map<Expo, Rational> tail, int dim_increment);

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }
    int total_dimension() const { return total_dimension_; }
    int generator_index(const std::string& name) const;  // -1 if absent

    // Exponents of the fundamental monomial h_1^{n_1}...xi_m^{r_m-1}.
    Expo fundamental_monomial() const;

private:
    std::vector<Generator> gens_;
    int total_dimension_ = 0;
};

using RingPtr = std::shared_ptr<const ChowPresentation>;

// Sparse exact-rational cycle class in a ChowPresentation, kept in normal form
// (no reducible monomials, nothing above total_dimension).
class ChowClass {
public:
    ChowClass() = default;
    explicit ChowClass(RingPtr ring) : ring_(std::move(ring)) {}
    ChowClass(RingPtr ring, std::map<Expo, Rational> terms);

    static ChowClass zero(RingPtr ring) { return ChowClass(std::move(ring)); }
    static ChowClass one(RingPtr ring);
    static ChowClass constant(RingPtr ring, Rational c);
    static ChowClass monomial(RingPtr ring, Expo e, Rational c = 1);
    // Divisor class with the given multidegree: sum d_i * g_i.
    static ChowClass divisor(RingPtr ring, const Expo& multidegree);

    const RingPtr& ring() const { return ring_; }
    const std::map<Expo, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Expo& e) const;
    ChowClass graded_part(int degree) const;

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const ChowClass& o) const;
    ChowClass operator*(const Rational& c) const;
    ChowClass operator-() const;
    ChowClass pow(unsigned n) const;
    // Multiplicative inverse; requires constant term 1 (positive part is nilpotent).
    ChowClass inverse() const;

    bool operator==(const ChowClass& o) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::map<Expo, Rational> terms_;

    friend ChowClass normal_form(const ChowClass&);
};

// Reduces a class modulo the relation ideal; idempotent. Class construction and
// arithmetic already normalize, so this is mostly the spec'd public entry point.
ChowClass normal_form(const ChowClass& c);

// Coefficient of the fundamental monomial of the normal form (degree map).
Rational integrate(const ChowClass& c);

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* op);

} // namespace chowkit
