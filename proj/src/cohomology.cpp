#include "chowkit/cohomology.hpp"

#include <algorithm>
#include <functional>

namespace chowkit {

namespace {

// h^i(P^n, O(d)) is nonzero only at i=0 (d >= 0) or i=n (d <= -n-1).
struct FactorCohomology {
    int level = 0;
    Integer rank = 0;  // 0 means no cohomology at all
};

FactorCohomology projective_space_cohomology(int n, int d) {
    FactorCohomology f;
    if (d >= 0) {
        f.level = 0;
        f.rank = binomial(Integer(n + d), static_cast<unsigned>(n));
    } else if (d <= -n - 1) {
        f.level = n;
        f.rank = binomial(Integer(-d - 1), static_cast<unsigned>(n));
    }
    return f;
}

int tower_dim_through(const std::vector<Step>& steps, std::size_t nsteps) {
    int d = 0;
    for (std::size_t i = 0; i < nsteps; ++i) {
        if (steps[i].kind == StepKind::Base)
            for (int n : steps[i].base_dims) d += n;
        else if (steps[i].kind == StepKind::ProjBundle)
            d += steps[i].bundle.rank() - 1;
    }
    return d;
}

void add_vec(std::vector<Integer>& acc, const std::vector<Integer>& v, int shift) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc[i + shift] += v[i];
}

// Visits every multiset of size k over {0..n-1} as a count vector.
void for_each_multiset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> counts(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            counts[pos] = left;
            fn(counts);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            counts[pos] = c;
            rec(pos + 1, left - c);
        }
    };
    if (n == 0) {
        if (k == 0) fn(counts);
        return;
    }
    rec(0, k);
}

std::vector<Integer> cohom_rec(const std::vector<Step>& steps, std::size_t nsteps, const Expo& L) {
    const int dim = tower_dim_through(steps, nsteps);
    std::vector<Integer> h(dim + 1, Integer(0));
    const Step& last = steps[nsteps - 1];
    if (last.kind == StepKind::Base) {
        // product of projective spaces; Kunneth
        Integer rank = 1;
        int level = 0;
        for (std::size_t i = 0; i < last.base_dims.size(); ++i) {
            auto f = projective_space_cohomology(last.base_dims[i], L[i]);
            if (f.rank == 0) return h;
            rank *= f.rank;
            level += f.level;
        }
        h[level] = rank;
        return h;
    }
    if (last.kind != StepKind::ProjBundle)
        throw std::invalid_argument("tower_cohomology: unsupported tower shape");

    const SplitBundle& b = last.bundle;
    const int e = b.rank();
    const int a = L.back();
    Expo rest(L.begin(), L.end() - 1);

    if (a >= 0) {
        // Sym^a(B^v) tensor O(rest)
        for_each_multiset(e, a, [&](const std::vector<int>& counts) {
            Expo d = rest;
            for (int i = 0; i < e; ++i)
                for (std::size_t g = 0; g < d.size(); ++g) d[g] -= counts[i] * b.summands[i][g];
            add_vec(h, cohom_rec(steps, nsteps - 1, d), 0);
        });
        return h;
    }
    if (a > -e) return h;  // fiberwise vanishing band
    // a <= -e: R^{e-1} = Sym^{-a-e}(B) tensor det B, cohomology shifted by e-1
    Expo det = b.det(rest.size());
    for_each_multiset(e, -a - e, [&](const std::vector<int>& counts) {
        Expo d = rest;
        for (std::size_t g = 0; g < d.size(); ++g) d[g] += det[g];
        for (int i = 0; i < e; ++i)
            for (std::size_t g = 0; g < d.size(); ++g) d[g] += counts[i] * b.summands[i][g];
        add_vec(h, cohom_rec(steps, nsteps - 1, d), e - 1);
    });
    return h;
}

} // namespace

std::vector<Integer> tower_cohomology(const Space& s, const Expo& L) {
    if (s.has_zero_locus())
        throw std::invalid_argument("tower_cohomology: space has zero-locus steps");
    if (L.size() != s.ring()->generator_count())
        throw std::invalid_argument("tower_cohomology: multidegree arity mismatch");
    return cohom_rec(s.steps(), s.steps().size(), L);
}

KoszulH0 h0_via_koszul(const Space& s, const Expo& L) {
    if (L.size() != s.ring()->generator_count())
        throw std::invalid_argument("h0_via_koszul: multidegree arity mismatch");

    // Ambient tower = the steps before the zero loci; all zero-locus bundles
    // merge into one normal bundle over the same ambient.
    std::vector<Step> ambient;
    std::vector<Expo> normal;
    for (const auto& st : s.steps()) {
        if (st.kind == StepKind::ZeroLocus)
            for (const auto& sm : st.bundle.summands) normal.push_back(sm);
        else
            ambient.push_back(st);
    }
    KoszulH0 out;
    if (normal.empty()) {
        auto h = cohom_rec(ambient, ambient.size(), L);
        out.value = h[0];
        out.certified = true;
        out.table.push_back(std::move(h));
        return out;
    }

    const int r = static_cast<int>(normal.size());
    out.table.resize(r + 1);
    const int ambient_dim = tower_dim_through(ambient, ambient.size());
    // table[j][i] = h^i(ambient, Lambda^j N^v tensor O(L)), split over j-subsets
    for (int j = 0; j <= r; ++j) {
        std::vector<Integer> hj(ambient_dim + 1, Integer(0));
        std::vector<int> idx(j);
        std::function<void(int, int)> rec = [&](int start, int k) {
            if (k == j) {
                Expo d = L;
                for (int t = 0; t < j; ++t)
                    for (std::size_t g = 0; g < d.size(); ++g) d[g] -= normal[idx[t]][g];
                add_vec(hj, cohom_rec(ambient, ambient.size(), d), 0);
                return;
            }
            for (int i = start; i < r; ++i) {
                idx[k] = i;
                rec(i + 1, k + 1);
            }
        };
        rec(0, 0);
        out.table[j] = std::move(hj);
    }

    // Degeneration is forced when no differential (any page) connects two
    // nonzero entries: d_m takes (j,i) to (j-m, i-m+1).
    bool forced = true;
    for (int j = 0; j <= r && forced; ++j)
        for (int i = 0; i <= ambient_dim && forced; ++i) {
            if (out.table[j][i] == 0) continue;
            for (int m = 1; m <= j; ++m) {
                int i2 = i - m + 1;
                if (i2 >= 0 && i2 <= ambient_dim && out.table[j - m][i2] != 0) {
                    forced = false;
                    break;
                }
            }
        }

    if (forced) {
        Integer h0 = 0;
        for (int j = 0; j <= r; ++j)
            if (j <= ambient_dim) h0 += out.table[j][j];
        out.value = h0;
        out.certified = true;
    } else {
        Integer chi = 0;
        for (int j = 0; j <= r; ++j)
            for (int i = 0; i <= ambient_dim; ++i) {
                if (out.table[j][i] == 0) continue;
                if ((i + j) % 2) chi -= out.table[j][i];
                else chi += out.table[j][i];
            }
        out.value = chi;
        out.certified = false;
        out.note = "spectral sequence not forced to degenerate; value is the Euler characteristic";
    }
    return out;
}

} // namespace chowkit
