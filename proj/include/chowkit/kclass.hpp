#pragma once

#include "chowkit/chow.hpp"

namespace chowkit {

// Integer formal combination of line-bundle symbols. A symbol is a multidegree
// over the ring generators, standing for the line bundle with that first Chern
// class; negative multiplicities give virtual classes.
class KClass {
public:
    KClass() = default;
    explicit KClass(RingPtr ring) : ring_(std::move(ring)) {}

    static KClass zero(RingPtr ring) { return KClass(std::move(ring)); }
    static KClass structure_sheaf(RingPtr ring);
    static KClass line_bundle(RingPtr ring, const Expo& multidegree, long mult = 1);

    const RingPtr& ring() const { return ring_; }
    const std::map<Expo, long>& terms() const { return terms_; }

    long rank() const;
    KClass& add(const Expo& symbol, long mult);

    KClass operator+(const KClass& o) const;
    KClass operator-(const KClass& o) const;
    KClass operator*(long n) const;
    bool operator==(const KClass& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

    // Determinant multidegree: sum of mult * symbol.
    Expo determinant() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::map<Expo, long> terms_;
};

KClass k_tensor(const KClass& a, const KClass& b);
KClass k_dual(const KClass& a);

// lambda^p via lambda_t(x+y) = lambda_t(x)lambda_t(y), lambda_t([L]) = 1+t[L],
// with inverse series for negative multiplicities.
KClass exterior_power(const KClass& a, int p);

ChowClass chern_character(const KClass& a);
ChowClass todd(const KClass& a);
ChowClass total_chern(const KClass& a);
ChowClass chern_class(const KClass& a, int j);

} // namespace chowkit
