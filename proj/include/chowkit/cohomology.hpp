#pragma once

#include "chowkit/tower.hpp"

namespace chowkit {

// Full cohomology h^0..h^dim of the line bundle O(L) on a tower with no
// zero-locus steps. Base factors go by the standard projective-space formula
// and Kunneth; projective-bundle steps are peeled by pushforward:
//   a >= 0:        q_* O(a xi) = Sym^a(B^v)           (degree shift 0)
//   -e < a < 0:    no cohomology
//   a <= -e:       R^{e-1} q_* O(a xi) = Sym^{-a-e}(B) tensor det B
// (subbundle convention; the last case is relative Serre duality).
std::vector<Integer> tower_cohomology(const Space& s, const Expo& L);

struct KoszulH0 {
    Integer value;
    bool certified = false;
    // Ambient cohomology of each Koszul term: table[j][i] = h^i(Lambda^j N^v (L)).
    std::vector<std::vector<Integer>> table;
    std::string note;
};

// h^0 of O(L) restricted to the zero locus, via the Koszul resolution of its
// structure sheaf. Certified when no spectral-sequence differential can run
// between nonzero entries, in which case every H^k is the diagonal sum; else
// returns the Euler characteristic with certified=false.
KoszulH0 h0_via_koszul(const Space& s, const Expo& L);

} // namespace chowkit
