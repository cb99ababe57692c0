#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace chowkit::ff {

using Rng = std::mt19937_64;

inline uint32_t mod_inverse(uint32_t a, uint32_t p) {
    // p prime, a != 0 mod p: Fermat
    uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

bool is_prime(uint32_t p);

// Number of F_p-points of P^d.
uint64_t projective_point_count(int d, uint32_t p);
// Product over the factors; the ambient point budget guards enumeration.
uint64_t product_point_count(const std::vector<int>& dims, uint32_t p);

// Normalized representatives of P^d(F_p): first nonzero coordinate is 1.
std::vector<std::vector<uint32_t>> projective_points(int d, uint32_t p);

inline constexpr uint64_t kDefaultPointBudget = 2'000'000;

// Streams every point of the product of projective spaces exactly once, as
// flat coordinates (factor blocks concatenated). Throws if the count exceeds
// the budget.
void for_each_product_point(const std::vector<int>& dims, uint32_t p, uint64_t budget,
                            const std::function<void(const std::vector<uint32_t>&)>& fn);

// Multihomogeneous form over F_p: exponent vectors run over all homogeneous
// coordinates of all factors and must match the multidegree factor by factor.
class MultiForm {
public:
    MultiForm() = default;
    MultiForm(std::vector<int> factor_dims, std::vector<int> multidegree, uint32_t p);

    static MultiForm random(const std::vector<int>& factor_dims,
                            const std::vector<int>& multidegree, uint32_t p, Rng& rng);

    const std::vector<int>& factor_dims() const { return dims_; }
    const std::vector<int>& multidegree() const { return deg_; }
    uint32_t prime() const { return p_; }
    const std::map<std::vector<uint8_t>, uint32_t>& terms() const { return terms_; }
    std::size_t coord_count() const;

    void set_coefficient(const std::vector<uint8_t>& expo, uint32_t c);
    uint32_t eval(const std::vector<uint32_t>& point) const;
    MultiForm derivative(std::size_t coord) const;
    bool is_zero() const { return terms_.empty(); }

    MultiForm operator*(const MultiForm& o) const;
    MultiForm operator+(const MultiForm& o) const;
    MultiForm operator-(const MultiForm& o) const;

    // All exponent vectors of the multidegree over these factors.
    static std::vector<std::vector<uint8_t>> monomials(const std::vector<int>& factor_dims,
                                                       const std::vector<int>& multidegree);

private:
    std::vector<int> dims_;
    std::vector<int> deg_;
    uint32_t p_ = 0;
    std::map<std::vector<uint8_t>, uint32_t> terms_;

    void check_exponent(const std::vector<uint8_t>& expo) const;
};

// f x e matrix of forms; row i is homogeneous of the i-th row multidegree.
struct MorphismMatrix {
    std::vector<int> factor_dims;
    uint32_t p = 0;
    int rows = 0, cols = 0;
    std::vector<std::vector<int>> row_degrees;
    std::vector<MultiForm> entries;  // row-major

    const MultiForm& at(int r, int c) const { return entries[r * cols + c]; }
    MultiForm& at(int r, int c) { return entries[r * cols + c]; }

    static MorphismMatrix random(const std::vector<int>& factor_dims,
                                 const std::vector<std::vector<int>>& row_degrees, int cols,
                                 uint32_t p, uint64_t seed);
    // The production shape: X = P2 x P2, rows O(2,0), O(0,2), three columns.
    static MorphismMatrix random_production(uint32_t p, uint64_t seed);
};

int matrix_rank(std::vector<std::vector<uint32_t>> m, uint32_t p);

// Counts of X-points by the rank of the evaluated matrix; index = rank.
std::vector<uint64_t> rank_profile(const MorphismMatrix& m,
                                   uint64_t budget = kDefaultPointBudget);

// The f equations of the incidence variety in P^{e-1} x X (sum_j w_j phi_ij).
std::vector<MultiForm> incidence_equations(const MorphismMatrix& m);

struct YCount {
    uint64_t direct = 0;      // enumeration of the incidence equations
    uint64_t via_fibers = 0;  // sum over rank strata of projective-space fibers
    std::vector<uint64_t> rank_counts;
    bool agree = false;
};

YCount count_Y(const MorphismMatrix& m, uint64_t budget = kDefaultPointBudget);

struct BlowupIdentity {
    bool applicable = false;  // N_0 = 0 and e = f+1
    uint64_t y_count = 0, x_count = 0, d1_count = 0;
    bool holds = false;  // |Y| = |X| + p|D1|, checked against the direct count
};

BlowupIdentity blowup_identity(const MorphismMatrix& m, uint64_t budget = kDefaultPointBudget);

struct StratifiedIdentity {
    uint64_t direct = 0;
    uint64_t stratified = 0;  // sum_i N_{f-i} |P^{e-f+i-1}|
    bool holds = false;
};

StratifiedIdentity stratified_count_identity(const MorphismMatrix& m,
                                             uint64_t budget = kDefaultPointBudget);

enum class SampleLocus { Y, D1 };

struct JacobianReport {
    uint64_t sampled = 0;
    uint64_t smooth_hits = 0;
    uint64_t singular_hits = 0;
    bool locus_empty = false;
};

// Samples points of the chosen locus and checks that the Jacobian of its
// defining equations has the expected rank (the codimension): the incidence
// equations for Y, the maximal minors for D1. Stochastic support, not proof.
JacobianReport jacobian_sample(const MorphismMatrix& m, SampleLocus which, uint64_t trials,
                               Rng& rng, uint64_t budget = kDefaultPointBudget);

// All f x f minors of the matrix (the equations of D_{f-1} in X).
std::vector<MultiForm> maximal_minors(const MorphismMatrix& m);

void save_instance(const MorphismMatrix& m, const std::string& path);
MorphismMatrix load_instance(const std::string& path);

} // namespace chowkit::ff
