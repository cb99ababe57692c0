#pragma once

#include "chowkit/cohomology.hpp"
#include "chowkit/ledger.hpp"

#include <optional>

namespace chowkit {

// integral of c_top(T) — the topological Euler number.
Integer euler_number(const Space& s);

// Hirzebruch-Riemann-Roch: integral of ch(O(L)) td(T).
Integer chi(const Space& s, const Expo& L);

// integral of L^dim.
Integer degree(const Space& s, const Expo& L);

struct ChiYProfile {
    std::vector<Integer> chi_p;  // chi(Omega^p), p = 0..dim

    Integer at_minus_one() const;  // sum (-1)^p chi^p = Euler number
};

// chi^p = chi(Lambda^p Omega) for p = 0..dim; Serre duality
// chi^p = (-1)^dim chi^{dim-p} is asserted.
ChiYProfile chi_y(const Space& s);

struct DegeneracyQuery {
    int dimX = 0, e = 0, f = 0, r = 0;
    void validate() const;
};

// m_r = dimX - (e-r)(f-r); negative signals expected emptiness.
int expected_degeneracy_dim(const DegeneracyQuery& q);

enum class StratumCase { GrassBirational, ProjBundle, ZSide };

struct StratumEntry {
    int i = 0;
    long preimage_dim = 0;          // the displayed per-stratum formula value
    bool structurally_empty = false;  // no fiber at all (z_side, i=0)
    bool expected_empty = false;      // the underlying stratum D_{f-i} has m < 0
};

struct StratumTable {
    StratumCase which;
    std::vector<StratumEntry> entries;  // i = 0..f
    std::vector<std::string> notes;
};

StratumTable stratum_dimensions(int dimX, int e, int f, StratumCase which);

enum class SectionSpaceModel { HomBundle, ProjESide, ProductSide, ProjFdualSide };

// Section-space dimension of the production instance computed in the four
// equivalent models; all must agree at 36.
Integer section_space_dim(SectionSpaceModel model);

struct FanoHostResult {
    bool cond_a = false;
    bool cond_b = false;
    bool fano_host = false;
};

// cond_a: expected D_{f-2} empty (m_{f-2} < 0). cond_b: in index mode the
// inequality iota - alpha - beta > 0; otherwise every component of
// -(K_X + det E + det F) strictly positive. Requires e > f.
FanoHostResult fano_host_check(int dimX, int e, int f, const Expo& K_X, const Expo& detE,
                               const Expo& detF, bool index_mode);

Integer hh0_from_diamond(const HodgeDiamond& d);

} // namespace chowkit
