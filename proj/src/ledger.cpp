#include "chowkit/ledger.hpp"

#include <fstream>
#include <sstream>

namespace chowkit {

std::string torsion_to_string(const TorsionSet& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, count] : t) {
        for (long i = 0; i < count; ++i) {
            if (!first) os << " + ";
            first = false;
            os << name;
        }
    }
    return os.str();
}

TorsionSet torsion_union(const TorsionSet& a, const TorsionSet& b) {
    TorsionSet r = a;
    for (const auto& [name, count] : b) r[name] += count;
    return r;
}

long CohomologyLedger::euler() const {
    long e = 0;
    for (std::size_t k = 0; k < degrees.size(); ++k)
        e += (k % 2) ? -degrees[k].rank : degrees[k].rank;
    return e;
}

bool CohomologyLedger::poincare_symmetric() const {
    const std::size_t n = degrees.size();
    for (std::size_t k = 0; k < n; ++k)
        if (degrees[k].rank != degrees[n - 1 - k].rank) return false;
    return true;
}

std::vector<long> CohomologyLedger::ranks() const {
    std::vector<long> r;
    r.reserve(degrees.size());
    for (const auto& d : degrees) r.push_back(d.rank);
    return r;
}

CohomologyLedger blowup_cohomology(const CohomologyLedger& X, const CohomologyLedger& S,
                                   int codim) {
    if (codim < 2) throw std::invalid_argument("blowup_cohomology: codim must be >= 2");
    CohomologyLedger out;
    std::size_t n = X.degrees.size();
    for (int i = 1; i <= codim - 1; ++i)
        n = std::max(n, S.degrees.size() + 2 * i);
    out.degrees.resize(n);
    for (std::size_t k = 0; k < X.degrees.size(); ++k) out.degrees[k] = X.degrees[k];
    for (int i = 1; i <= codim - 1; ++i)
        for (std::size_t k = 0; k < S.degrees.size(); ++k) {
            auto& d = out.degrees[k + 2 * i];
            d.rank += S.degrees[k].rank;
            d.torsion = torsion_union(d.torsion, S.degrees[k].torsion);
            for (const auto& l : S.degrees[k].labels) d.labels.push_back(l);
        }
    return out;
}

HodgeDiamond HodgeDiamond::zeros(int dim) {
    HodgeDiamond d;
    d.dim = dim;
    d.h.assign(dim + 1, std::vector<Integer>(dim + 1, Integer(0)));
    return d;
}

HodgeDiamond HodgeDiamond::diagonal(const std::vector<Integer>& hpp) {
    HodgeDiamond d = zeros(static_cast<int>(hpp.size()) - 1);
    for (std::size_t p = 0; p < hpp.size(); ++p) d.h[p][p] = hpp[p];
    return d;
}

void HodgeDiamond::validate() const {
    if (static_cast<int>(h.size()) != dim + 1)
        throw std::invalid_argument("malformed Hodge diamond: row count");
    for (int p = 0; p <= dim; ++p) {
        if (static_cast<int>(h[p].size()) != dim + 1)
            throw std::invalid_argument("malformed Hodge diamond: column count");
        for (int q = 0; q <= dim; ++q) {
            if (h[p][q] < 0) throw std::invalid_argument("malformed Hodge diamond: negative entry");
            if (h[p][q] != h[q][p])
                throw std::invalid_argument("malformed Hodge diamond: h^{pq} != h^{qp}");
            if (h[p][q] != h[dim - p][dim - q])
                throw std::invalid_argument("malformed Hodge diamond: Serre asymmetry");
        }
    }
}

Integer HodgeDiamond::euler() const {
    Integer e = 0;
    for (int p = 0; p <= dim; ++p)
        for (int q = 0; q <= dim; ++q) e += ((p + q) % 2) ? -h[p][q] : h[p][q];
    return e;
}

Integer HodgeDiamond::hh0() const {
    Integer s = 0;
    for (int p = 0; p <= dim; ++p) s += h[p][p];
    return s;
}

HodgeDiamond blowup_hodge(const HodgeDiamond& X, const HodgeDiamond& S, int codim) {
    if (codim < 2) throw std::invalid_argument("blowup_hodge: codim must be >= 2");
    if (S.dim + codim - 1 > X.dim)
        throw std::invalid_argument("blowup_hodge: center does not fit in the ambient");
    X.validate();
    S.validate();
    HodgeDiamond out = X;
    for (int i = 1; i <= codim - 1; ++i)
        for (int p = 0; p <= S.dim; ++p)
            for (int q = 0; q <= S.dim; ++q) out.h[p + i][q + i] += S.h[p][q];
    out.validate();
    return out;
}

K0Summary exceptional_objects(int n) {
    if (n < 0) throw std::invalid_argument("exceptional_objects: n must be >= 0");
    return K0Summary{n, {}};
}

K0Summary sod_compose(const std::vector<K0Summary>& parts) {
    K0Summary out;
    for (const auto& p : parts) {
        out.rank += p.rank;
        out.torsion = torsion_union(out.torsion, p.torsion);
    }
    return out;
}

bool fec_obstruction(const K0Summary& k) { return !k.torsion.empty(); }

std::vector<FanoFamily> load_fano_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Fano-threefold table: " + path);
    std::vector<FanoFamily> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        FanoFamily f;
        int fec = 0;
        if (ls >> f.id >> f.rho >> fec) {
            f.fec = fec != 0;
            out.push_back(std::move(f));
        }
    }
    if (out.empty()) throw std::runtime_error("Fano-threefold table is empty: " + path);
    return out;
}

ThreefoldExclusion threefold_exclusion(int hh0_required, const std::vector<FanoFamily>& table) {
    if (hh0_required < 2)
        throw std::invalid_argument("threefold_exclusion: hh0_required must be >= 2");
    ThreefoldExclusion out;
    out.hh0_required = hh0_required;
    // smallest rho with 2 + 2*rho >= hh0_required
    out.rho_min = (hh0_required - 2 + 1) / 2;
    for (const auto& f : table)
        if (f.rho >= out.rho_min) out.admissible.push_back(f);
    // The shipped table lists every family with rho >= 5, so the range is fully
    // covered exactly when rho_min >= 5.
    out.table_covers_range = out.rho_min >= 5;
    out.all_admit_fec = true;
    for (const auto& f : out.admissible)
        if (!f.fec) out.all_admit_fec = false;
    out.excluded = out.table_covers_range && out.all_admit_fec;
    out.notes.push_back(
        "HH0 counted as sum of h^{p,p} = 2 + 2*rho for a Fano threefold; with the "
        "alternative formula HH0 = 2 + rho the bound would be rho >= " +
        std::to_string(std::max(0, hh0_required - 2)) + " instead of rho >= " +
        std::to_string(out.rho_min));
    return out;
}

CohomologyLedger enriques_ledger() {
    CohomologyLedger s;
    s.degrees.resize(5);
    s.degrees[0].rank = 1;
    s.degrees[2].rank = 10;
    s.degrees[2].torsion["Z/2"] = 1;
    s.degrees[2].labels.push_back("Lambda");
    s.degrees[4].rank = 1;
    return s;
}

CohomologyLedger p2xp2_ledger() {
    CohomologyLedger x;
    x.degrees.resize(9);
    const long ranks[9] = {1, 0, 2, 0, 3, 0, 2, 0, 1};
    for (int k = 0; k < 9; ++k) x.degrees[k].rank = ranks[k];
    return x;
}

HodgeDiamond enriques_diamond() { return HodgeDiamond::diagonal({1, 10, 1}); }
HodgeDiamond p2_diamond() { return HodgeDiamond::diagonal({1, 1, 1}); }
HodgeDiamond p2xp2_diamond() { return HodgeDiamond::diagonal({1, 2, 3, 2, 1}); }
HodgeDiamond point_diamond() { return HodgeDiamond::diagonal({Integer(1)}); }

K0Summary enriques_k0() { return K0Summary{12, {{"Z/2", 1}}}; }
K0Summary proj_fdual_k0() { return K0Summary{18, {}}; }

} // namespace chowkit
