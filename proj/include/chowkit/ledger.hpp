#pragma once

#include "chowkit/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace chowkit {

using TorsionSet = std::map<std::string, long>;  // group name -> multiplicity

std::string torsion_to_string(const TorsionSet& t);
TorsionSet torsion_union(const TorsionSet& a, const TorsionSet& b);

// Integral cohomology bookkeeping: per degree a free rank, named torsion
// summands, and optional lattice labels.
struct CohomologyLedger {
    struct Entry {
        long rank = 0;
        TorsionSet torsion;
        std::vector<std::string> labels;
    };
    std::vector<Entry> degrees;  // index = cohomological degree

    long euler() const;
    bool poincare_symmetric() const;
    std::vector<long> ranks() const;
};

// H^k(out) = H^k(X) + sum_{i=1}^{codim-1} H^{k-2i}(S); torsion and labels carry through.
CohomologyLedger blowup_cohomology(const CohomologyLedger& X, const CohomologyLedger& S,
                                   int codim);

struct HodgeDiamond {
    int dim = 0;
    std::vector<std::vector<Integer>> h;  // h[p][q], 0 <= p,q <= dim

    static HodgeDiamond zeros(int dim);
    static HodgeDiamond diagonal(const std::vector<Integer>& hpp);
    void validate() const;  // symmetry h^{pq}=h^{qp}=h^{dim-p,dim-q}, nonnegativity
    Integer euler() const;
    Integer hh0() const;  // sum of h^{p,p}
};

HodgeDiamond blowup_hodge(const HodgeDiamond& X, const HodgeDiamond& S, int codim);

// Additive shadow of a semiorthogonal component.
struct K0Summary {
    long rank = 0;
    TorsionSet torsion;
    bool operator==(const K0Summary&) const = default;
};

K0Summary exceptional_objects(int n);
K0Summary sod_compose(const std::vector<K0Summary>& parts);
// Obstructed iff the torsion multiset is nonempty.
bool fec_obstruction(const K0Summary& k);

struct FanoFamily {
    std::string id;
    int rho = 0;
    bool fec = false;
};

std::vector<FanoFamily> load_fano_table(const std::string& path);

struct ThreefoldExclusion {
    int hh0_required = 0;
    int rho_min = 0;
    std::vector<FanoFamily> admissible;
    bool table_covers_range = false;
    bool all_admit_fec = false;
    bool excluded = false;
    std::vector<std::string> notes;
};

// Minimal rho with 2+2*rho >= hh0_required; exclusion holds when the table
// provably covers every family in range and all of them admit a full
// exceptional collection (torsion-free K0).
ThreefoldExclusion threefold_exclusion(int hh0_required, const std::vector<FanoFamily>& table);

// Static inputs for the production instance.
CohomologyLedger enriques_ledger();
CohomologyLedger p2xp2_ledger();
HodgeDiamond enriques_diamond();
HodgeDiamond p2_diamond();
HodgeDiamond p2xp2_diamond();
HodgeDiamond point_diamond();
K0Summary enriques_k0();
K0Summary proj_fdual_k0();

inline constexpr const char* kTorsionPlacementAssumption =
    "2-torsion carried in degree 2 of the Enriques ledger only (the placement the "
    "codim-2 blow-up formula needs to land it in degree 4 of the fourfold)";

} // namespace chowkit
