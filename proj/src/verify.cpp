#include "chowkit/verify.hpp"

#include "chowkit/fforacle.hpp"
#include "chowkit/invariants.hpp"

#include <sstream>

namespace chowkit {

namespace {

std::string join_ints(const std::vector<Integer>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

bool profile_equals(const ChiYProfile& prof, const std::vector<long>& expect) {
    if (prof.chi_p.size() != expect.size()) return false;
    for (std::size_t i = 0; i < expect.size(); ++i)
        if (prof.chi_p[i] != expect[i]) return false;
    return true;
}

// Independent route to criterion 2: the coefficient of h1^2 h2^2 h3^2 in
// (h1+h2+h3)^4 (h1+2h2)(h1+2h3), computed by dense trivariate convolution
// over plain integers, no quotient ring involved.
long multinomial_oracle() {
    constexpr int N = 7;
    auto idx = [](int a, int b, int c) { return (a * N + b) * N + c; };
    std::vector<long> acc(N * N * N, 0), lin(N * N * N, 0);
    acc[idx(0, 0, 0)] = 1;
    lin[idx(1, 0, 0)] = 1;
    lin[idx(0, 1, 0)] = 1;
    lin[idx(0, 0, 1)] = 1;
    auto mul = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> out(N * N * N, 0);
        for (int a1 = 0; a1 < N; ++a1)
            for (int a2 = 0; a2 < N; ++a2)
                for (int a3 = 0; a3 < N; ++a3) {
                    long ca = a[idx(a1, a2, a3)];
                    if (!ca) continue;
                    for (int b1 = 0; a1 + b1 < N; ++b1)
                        for (int b2 = 0; a2 + b2 < N; ++b2)
                            for (int b3 = 0; a3 + b3 < N; ++b3) {
                                long cb = b[idx(b1, b2, b3)];
                                if (cb) out[idx(a1 + b1, a2 + b2, a3 + b3)] += ca * cb;
                            }
                }
        return out;
    };
    for (int k = 0; k < 4; ++k) acc = mul(acc, lin);
    std::vector<long> f1(N * N * N, 0), f2(N * N * N, 0);
    f1[idx(1, 0, 0)] = 1;
    f1[idx(0, 1, 0)] = 2;
    f2[idx(1, 0, 0)] = 1;
    f2[idx(0, 0, 1)] = 2;
    acc = mul(mul(acc, f1), f2);
    return acc[idx(2, 2, 2)];
}

struct PropertyStats {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

// Criterion 14: randomized chowcore property suite (1000 cases per family).
void run_property_suite(PropertyStats& st) {
    Space pf = preset(PresetName::PFdual);
    RingPtr ring = pf.ring();
    std::mt19937_64 rng(20250809);

    auto rand_class = [&]() {
        std::map<Expo, Rational> terms;
        int nterms = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < nterms; ++t) {
            Expo e(3);
            e[0] = static_cast<int>(rng() % 4);
            e[1] = static_cast<int>(rng() % 4);
            e[2] = static_cast<int>(rng() % 3);
            long num = static_cast<long>(rng() % 19) - 9;
            long den = 1 + static_cast<long>(rng() % 4);
            terms[e] += rational(num, den);
        }
        return ChowClass(ring, std::move(terms));
    };
    auto rand_kclass = [&](int max_terms) {
        KClass k(ring);
        int nterms = 1 + static_cast<int>(rng() % max_terms);
        for (int t = 0; t < nterms; ++t) {
            Expo e(3);
            e[0] = static_cast<int>(rng() % 5) - 2;
            e[1] = static_cast<int>(rng() % 5) - 2;
            e[2] = static_cast<int>(rng() % 3) - 1;
            k.add(e, static_cast<long>(rng() % 5) - 2);
        }
        return k;
    };

    for (int i = 0; i < 1000; ++i) {
        ChowClass a = rand_class(), b = rand_class(), c = rand_class();
        st.check((a * b) * c == a * (b * c), "ring associativity");
        st.check(a * b == b * a, "ring commutativity");
        st.check(a * (b + c) == a * b + a * c, "ring distributivity");
        st.check(normal_form(a) == a, "normal_form idempotence");
        st.check(integrate(a * b) == integrate(b * a), "integrate symmetry");
    }
    for (int i = 0; i < 1000; ++i) {
        KClass a = rand_kclass(2), b = rand_kclass(2);
        st.check(chern_character(k_tensor(a, b)) == chern_character(a) * chern_character(b),
                 "ch multiplicativity");
        st.check(k_dual(k_dual(a)) == a, "dual involution");
        // lambda-ring additivity up to p = 4
        for (int p = 0; p <= 4; ++p) {
            KClass lhs = exterior_power(a + b, p);
            KClass rhs(ring);
            for (int j = 0; j <= p; ++j)
                rhs = rhs + k_tensor(exterior_power(a, j), exterior_power(b, p - j));
            st.check(lhs == rhs, "lambda additivity");
        }
    }
    // HRR integrality of integral K-classes over the presets
    std::vector<Space> spaces = {preset(PresetName::S), preset(PresetName::Y)};
    for (const auto& s : spaces) {
        ChowClass td_t = todd(s.tangent());
        std::mt19937_64 rng2(7 + s.dim());
        for (int i = 0; i < 50; ++i) {
            KClass k(s.ring());
            for (int t = 0; t < 2; ++t) {
                Expo e(s.ring()->generator_count());
                for (auto& x : e) x = static_cast<int>(rng2() % 5) - 2;
                k.add(e, static_cast<long>(rng2() % 5) - 2);
            }
            Rational v = s.integrate_class(chern_character(k) * td_t);
            st.check(is_integral(v), "HRR integrality");
        }
    }
}

struct FFOutcome {
    bool identities_ok = true;
    std::vector<std::string> details;
    bool rates_ok = true;
};

FFOutcome run_ff_suite(const VerifyOptions& opt) {
    FFOutcome out;
    for (uint32_t p : opt.primes) {
        uint64_t drawn = 0, good = 0, seeds_ok = 0;
        uint64_t identity_failures = 0;
        std::vector<std::string> redraw_log;
        for (int seed = 1; seed <= opt.seeds_per_prime; ++seed) {
            bool seed_good = false;
            for (int attempt = 0; attempt <= opt.redraw_cap && !seed_good; ++attempt) {
                uint64_t iseed =
                    (static_cast<uint64_t>(p) << 32) ^ (static_cast<uint64_t>(seed) << 8) ^
                    static_cast<uint64_t>(attempt);
                auto m = ff::MorphismMatrix::random_production(p, iseed);
                ++drawn;
                auto strat = ff::stratified_count_identity(m, opt.budget);
                if (!strat.holds) ++identity_failures;
                auto blow = ff::blowup_identity(m, opt.budget);
                if (blow.applicable && !blow.holds) ++identity_failures;
                bool n0_zero = blow.applicable;
                ff::Rng rng(iseed ^ 0xabcdef12345ULL);
                auto jy = ff::jacobian_sample(m, ff::SampleLocus::Y, opt.jacobian_trials, rng,
                                              opt.budget);
                auto jd = ff::jacobian_sample(m, ff::SampleLocus::D1, opt.jacobian_trials, rng,
                                              opt.budget);
                bool smooth = jy.singular_hits == 0 && jd.singular_hits == 0;
                if (n0_zero && smooth) {
                    ++good;
                    seed_good = true;
                } else {
                    std::ostringstream os;
                    os << "p=" << p << " seed=" << seed << " attempt=" << attempt
                       << ": redrawn (";
                    if (!n0_zero) os << "N0>0";
                    if (!n0_zero && !smooth) os << ", ";
                    if (!smooth)
                        os << "singular samples Y=" << jy.singular_hits
                           << " D1=" << jd.singular_hits;
                    os << ")";
                    redraw_log.push_back(os.str());
                }
            }
            if (seed_good) ++seeds_ok;
        }
        double rate = drawn ? static_cast<double>(good) / static_cast<double>(drawn) : 0.0;
        std::ostringstream os;
        os << "p=" << p << ": drawn " << drawn << ", good " << good << " ("
           << static_cast<int>(rate * 100.0 + 0.5) << "% of draws), seeds with a good instance "
           << seeds_ok << "/" << opt.seeds_per_prime << ", identity failures "
           << identity_failures;
        out.details.push_back(os.str());
        if (identity_failures) out.identities_ok = false;
        if (rate < 0.9) out.rates_ok = false;
        // keep the log short: first few redraw reasons per prime
        for (std::size_t i = 0; i < redraw_log.size() && i < 3; ++i)
            out.details.push_back("  " + redraw_log[i]);
        if (redraw_log.size() > 3)
            out.details.push_back("  ... " + std::to_string(redraw_log.size() - 3) +
                                  " more redraws logged");
    }
    return out;
}

} // namespace

std::vector<CheckResult> run_paper_checks(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    auto add = [&](int id, const std::string& label, bool pass,
                   std::vector<std::string> details = {}) {
        out.push_back(CheckResult{id, label, pass, std::move(details)});
    };

    Space Y = preset(PresetName::Y);
    Space S = preset(PresetName::S);
    Space T = preset(PresetName::T);

    // 1. Euler number of the fourfold
    Integer eY = euler_number(Y);
    add(1, "euler_number(Y) = 21", eY == 21, {"computed " + eY.get_str()});

    // 2. anticanonical degree, cross-checked against the multinomial expansion
    Integer dY = degree(Y, {1, 1, 1});
    long oracle = multinomial_oracle();
    add(2, "degree(Y, (1,1,1)) = 102, multinomial oracle agrees", dY == 102 && oracle == 102,
        {"engine " + dY.get_str() + ", oracle " + std::to_string(oracle)});

    // 3. h0 of the anticanonical bundle, certified
    auto h0Y = h0_via_koszul(Y, {1, 1, 1});
    add(3, "h0_via_koszul(Y, (1,1,1)) = {27, certified}", h0Y.value == 27 && h0Y.certified,
        {"value " + h0Y.value.get_str() + (h0Y.certified ? ", certified" : ", uncertified")});

    // 4. chi_y profile of the fourfold
    ChiYProfile cyY = chi_y(Y);
    add(4, "chi_y(Y) = (1, -3, 13, -3, 1)", profile_equals(cyY, {1, -3, 13, -3, 1}),
        {"computed " + join_ints(cyY.chi_p)});

    // 5. blow-up ledgers: Betti ranks and the degree-4 torsion placement
    {
        CohomologyLedger ly = blowup_cohomology(p2xp2_ledger(), enriques_ledger(), 2);
        std::vector<long> want = {1, 0, 3, 0, 13, 0, 3, 0, 1};
        bool ranks_ok = ly.ranks() == want;
        bool torsion_ok = true;
        for (std::size_t k = 0; k < ly.degrees.size(); ++k) {
            bool expect_torsion = k == 4;
            bool has = !ly.degrees[k].torsion.empty();
            if (has != expect_torsion) torsion_ok = false;
            if (expect_torsion &&
                (ly.degrees[k].torsion.size() != 1 || ly.degrees[k].torsion.count("Z/2") == 0))
                torsion_ok = false;
        }
        HodgeDiamond dy = blowup_hodge(p2xp2_diamond(), enriques_diamond(), 2);
        bool hodge_ok = dy.h[1][1] == 3 && dy.h[2][2] == 13 && dy.euler() == 21;
        // Betti numbers from the diamond must reproduce the same ranks
        for (int k = 0; k <= 8 && hodge_ok; ++k) {
            Integer b = 0;
            for (int q = 0; q <= 4; ++q) {
                int pp = k - q;
                if (pp >= 0 && pp <= 4) b += dy.h[pp][q];
            }
            if (b != want[k]) hodge_ok = false;
        }
        std::ostringstream os;
        os << "ranks (";
        for (std::size_t i = 0; i < ly.degrees.size(); ++i)
            os << (i ? "," : "") << ly.degrees[i].rank;
        os << "), H^4 torsion " << torsion_to_string(ly.degrees[4].torsion);
        add(5, "blow-up ledger ranks (1,0,3,0,13,0,3,0,1) with Z/2 in degree 4",
            ranks_ok && torsion_ok && hodge_ok, {os.str()});
    }

    // 6. Enriques invariants of the degeneracy surface
    {
        Integer eS = euler_number(S);
        Integer chiS = chi(S, {0, 0, 0});
        ChiYProfile cyS = chi_y(S);
        bool ok = eS == 12 && chiS == 1 && profile_equals(cyS, {1, -10, 1}) &&
                  cyS.at_minus_one() == eS;
        add(6, "euler(S) = 12, chi(S,O) = 1, chi_y(S) = (1,-10,1), internal consistency", ok,
            {"e " + eS.get_str() + ", chi " + chiS.get_str() + ", chi_y " + join_ints(cyS.chi_p)});
    }

    // 7. expected degeneracy dimensions
    {
        int m1 = expected_degeneracy_dim({4, 3, 2, 1});
        int m0 = expected_degeneracy_dim({4, 3, 2, 0});
        add(7, "expected_degeneracy_dim: (4,3,2,1) = 2 and (4,3,2,0) = -2", m1 == 2 && m0 == -2,
            {"m1 = " + std::to_string(m1) + ", m0 = " + std::to_string(m0)});
    }

    // 8. the section-space dimension chain
    {
        Integer a = section_space_dim(SectionSpaceModel::HomBundle);
        Integer b = section_space_dim(SectionSpaceModel::ProjESide);
        Integer c = section_space_dim(SectionSpaceModel::ProductSide);
        Integer d = section_space_dim(SectionSpaceModel::ProjFdualSide);
        bool ok = a == 36 && b == 36 && c == 36 && d == 36;
        add(8, "section_space_dim = 36 in all four models", ok,
            {"hom " + a.get_str() + ", projE " + b.get_str() + ", product " + c.get_str() +
             ", projFdual " + d.get_str()});
    }

    // 9. Fano-host conditions on the production data
    {
        auto r = fano_host_check(4, 3, 2, {-3, -3}, {0, 0}, {2, 2}, false);
        add(9, "fano_host_check on the production instance", r.cond_a && r.cond_b && r.fano_host,
            {std::string("cond_a ") + (r.cond_a ? "true" : "false") + ", cond_b " +
             (r.cond_b ? "true" : "false")});
    }

    // 10. K0 bookkeeping of the fourfold
    {
        std::vector<K0Summary> parts = {enriques_k0(), exceptional_objects(9)};
        K0Summary k = sod_compose(parts);
        bool ok = k.rank == 21 && k.torsion.size() == 1 && k.torsion.count("Z/2") == 1 &&
                  fec_obstruction(k);
        add(10, "K0(Y) has rank 21 with Z/2 torsion; no full exceptional collection", ok,
            {"rank " + std::to_string(k.rank) + ", torsion " + torsion_to_string(k.torsion)});
    }

    // 11. the sixfold: Euler number and SOD rank bookkeeping
    {
        Integer eT = euler_number(T);
        Integer ePF = euler_number(preset(PresetName::PFdual));
        Integer eS = euler_number(S);
        K0Summary kT = sod_compose({enriques_k0(), proj_fdual_k0(), proj_fdual_k0()});
        bool ok = eT == 48 && kT.rank == 48 && ePF * 2 + eS == eT;
        add(11, "euler_number(T) = 48 and the SOD rank bookkeeping gives 48", ok,
            {"e(T) " + eT.get_str() + ", 2*e(PFdual)+e(S) = " + (ePF * 2 + eS).get_str() +
             ", SOD rank " + std::to_string(kT.rank)});
    }

    // 12. threefold exclusion
    {
        auto table = load_fano_table(opt.tables_path);
        auto ex = threefold_exclusion(12, table);
        bool ok = ex.rho_min == 5 && ex.admissible.size() == 8 && ex.excluded;
        add(12, "threefold_exclusion(12): rho >= 5, 8 families, excluded", ok,
            {"rho_min " + std::to_string(ex.rho_min) + ", families " +
             std::to_string(ex.admissible.size()) +
             (ex.excluded ? ", excluded" : ", not excluded")});
    }

    // 13. finite-field oracle: exact count identities, then the genericity rates
    {
        FFOutcome ff = run_ff_suite(opt);
        std::vector<std::string> details = ff.details;
        if (!ff.rates_ok)
            details.push_back("rate clause (>= 90% of drawn instances good) not met; "
                              "random instances over tiny fields hit the discriminant "
                              "with probability far above 10% (see the logged redraws)");
        add(13, "finite-field oracle: identities exact on every draw; N0 = 0 and zero singular "
               "samples on >= 90% of drawn instances",
            ff.identities_ok && ff.rates_ok, details);
    }

    // 14. randomized property suites
    {
        PropertyStats st;
        run_property_suite(st);
        add(14, "chowcore property suites (ring axioms, lambda-ring, ch, HRR integrality)",
            st.failures == 0,
            {std::to_string(st.cases) + " checks, " + std::to_string(st.failures) + " failures" +
             (st.failures ? " (first: " + st.first_failure + ")" : "")});
    }

    return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace chowkit
