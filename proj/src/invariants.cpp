#include "chowkit/invariants.hpp"

#include <algorithm>

namespace chowkit {

Integer euler_number(const Space& s) {
    ChowClass ctop = chern_class(s.tangent(), s.dim());
    return to_integer(s.integrate_class(ctop), "Euler number");
}

Integer chi(const Space& s, const Expo& L) {
    ChowClass integrand = chern_character(KClass::line_bundle(s.ring(), L)) * todd(s.tangent());
    return to_integer(s.integrate_class(integrand), "chi");
}

Integer degree(const Space& s, const Expo& L) {
    ChowClass l = ChowClass::divisor(s.ring(), L);
    return to_integer(s.integrate_class(l.pow(static_cast<unsigned>(s.dim()))), "degree");
}

Integer ChiYProfile::at_minus_one() const {
    Integer e = 0;
    for (std::size_t p = 0; p < chi_p.size(); ++p)
        e += (p % 2) ? -chi_p[p] : chi_p[p];
    return e;
}

ChiYProfile chi_y(const Space& s) {
    ChiYProfile prof;
    KClass omega = k_dual(s.tangent());
    ChowClass td_t = todd(s.tangent());
    for (int p = 0; p <= s.dim(); ++p) {
        ChowClass integrand = chern_character(exterior_power(omega, p)) * td_t;
        prof.chi_p.push_back(to_integer(s.integrate_class(integrand), "chi^p"));
    }
    const int n = s.dim();
    for (int p = 0; p <= n; ++p) {
        Integer mirror = (n % 2) ? -prof.chi_p[n - p] : prof.chi_p[n - p];
        if (prof.chi_p[p] != mirror)
            throw std::runtime_error("chi_y: Serre duality violated; inconsistent tower data");
    }
    return prof;
}

void DegeneracyQuery::validate() const {
    if (r < 0 || r > std::min(e, f))
        throw std::invalid_argument("DegeneracyQuery: need 0 <= r <= min(e,f)");
}

int expected_degeneracy_dim(const DegeneracyQuery& q) {
    q.validate();
    return q.dimX - (q.e - q.r) * (q.f - q.r);
}

StratumTable stratum_dimensions(int dimX, int e, int f, StratumCase which) {
    if (!(e > f && f >= 1))
        throw std::invalid_argument("stratum_dimensions: need e > f >= 1");
    StratumTable out;
    out.which = which;
    const int dimD = dimX - (e - f + 1);  // dim D_{f-1}
    for (int i = 0; i <= f; ++i) {
        StratumEntry s;
        s.i = i;
        switch (which) {
        case StratumCase::GrassBirational:
            s.preimage_dim = dimX - i * i;
            break;
        case StratumCase::ProjBundle:
            s.preimage_dim = dimX + (e - f - 1) - i * (e - f + i - 1);
            break;
        case StratumCase::ZSide:
            if (i == 0) {
                s.preimage_dim = 0;
                s.structurally_empty = true;  // fibers over the open stratum are empty
            } else {
                s.preimage_dim = dimD + (1 - i) * (e - f + i);
            }
            break;
        }
        // the stratum sits over D_{f-i}, expected dimension m_{f-i}
        int m = dimX - (e - f + i) * i;
        s.expected_empty = s.structurally_empty || m < 0;
        out.entries.push_back(s);
    }
    if (which == StratumCase::ProjBundle) {
        long stated = dimX + (e - f + 1);
        long open_stratum = dimX + (e - f - 1);
        if (stated > open_stratum)
            out.notes.push_back("stated bound dim <= dimX+(e-f+1) exceeds the open-stratum "
                                "dimension dimX+(e-f-1); suspected typo, per-stratum formula kept");
    }
    return out;
}

namespace {

Integer h0_of(const Space& s, const Expo& L) { return tower_cohomology(s, L)[0]; }

} // namespace

Integer section_space_dim(SectionSpaceModel model) {
    switch (model) {
    case SectionSpaceModel::HomBundle: {
        // H^0(X, E^v tensor F) = H^0(X, F)^3 for trivial E of rank 3
        Space x = preset(PresetName::X);
        return (h0_of(x, {2, 0}) + h0_of(x, {0, 2})) * 3;
    }
    case SectionSpaceModel::ProjESide: {
        // H^0(P_X(E), p*F tensor O_E(1))
        Space pe = preset(PresetName::PE);
        return h0_of(pe, {2, 0, 1}) + h0_of(pe, {0, 2, 1});
    }
    case SectionSpaceModel::ProductSide: {
        // H^0(P(W) x X, O(1,2,0) + O(1,0,2))
        Space prod = build_base({2, 2, 2});
        return h0_of(prod, {1, 2, 0}) + h0_of(prod, {1, 0, 2});
    }
    case SectionSpaceModel::ProjFdualSide: {
        // H^0(P_X(F^v), q*E^v tensor O(1)) = H^0(O_xi(1))^3
        Space pf = preset(PresetName::PFdual);
        return h0_of(pf, {0, 0, 1}) * 3;
    }
    }
    throw std::invalid_argument("unknown section-space model");
}

FanoHostResult fano_host_check(int dimX, int e, int f, const Expo& K_X, const Expo& detE,
                               const Expo& detF, bool index_mode) {
    if (e <= f) throw std::invalid_argument("fano_host_check: requires e > f");
    FanoHostResult out;
    DegeneracyQuery q{dimX, e, f, f - 2};
    out.cond_a = f - 2 < 0 || expected_degeneracy_dim(q) < 0;
    if (K_X.size() != detE.size() || K_X.size() != detF.size())
        throw std::invalid_argument("fano_host_check: multidegree arity mismatch");
    if (index_mode) {
        if (K_X.size() != 1)
            throw std::invalid_argument("fano_host_check: index mode expects Picard rank one");
        long iota = -K_X[0];
        out.cond_b = iota - detE[0] - detF[0] > 0;
    } else {
        out.cond_b = true;
        for (std::size_t i = 0; i < K_X.size(); ++i)
            if (-(K_X[i] + detE[i] + detF[i]) <= 0) out.cond_b = false;
    }
    out.fano_host = out.cond_a && out.cond_b;
    return out;
}

Integer hh0_from_diamond(const HodgeDiamond& d) {
    d.validate();
    return d.hh0();
}

} // namespace chowkit
