#include "chowkit/fforacle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chowkit::ff {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t projective_point_count(int d, uint32_t p) {
    if (d < 0) return 0;
    uint64_t n = 0, pw = 1;
    for (int k = 0; k <= d; ++k) {
        n += pw;
        pw *= p;
    }
    return n;
}

uint64_t product_point_count(const std::vector<int>& dims, uint32_t p) {
    uint64_t n = 1;
    for (int d : dims) n *= projective_point_count(d, p);
    return n;
}

std::vector<std::vector<uint32_t>> projective_points(int d, uint32_t p) {
    std::vector<std::vector<uint32_t>> pts;
    pts.reserve(projective_point_count(d, p));
    for (int pivot = 0; pivot <= d; ++pivot) {
        std::vector<uint32_t> pt(d + 1, 0);
        pt[pivot] = 1;
        int frees = d - pivot;
        std::vector<uint32_t> tail(frees, 0);
        while (true) {
            for (int i = 0; i < frees; ++i) pt[pivot + 1 + i] = tail[i];
            pts.push_back(pt);
            int k = frees - 1;
            while (k >= 0 && tail[k] == p - 1) tail[k--] = 0;
            if (k < 0) break;
            ++tail[k];
        }
    }
    return pts;
}

void for_each_product_point(const std::vector<int>& dims, uint32_t p, uint64_t budget,
                            const std::function<void(const std::vector<uint32_t>&)>& fn) {
    if (!is_prime(p)) throw std::invalid_argument("for_each_product_point: p must be prime");
    if (product_point_count(dims, p) > budget)
        throw std::runtime_error("point budget exceeded");
    std::vector<std::vector<std::vector<uint32_t>>> factors;
    std::size_t total_coords = 0;
    for (int d : dims) {
        factors.push_back(projective_points(d, p));
        total_coords += d + 1;
    }
    std::vector<std::size_t> idx(dims.size(), 0);
    std::vector<uint32_t> flat(total_coords, 0);
    while (true) {
        std::size_t off = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) {
            const auto& pt = factors[f][idx[f]];
            std::copy(pt.begin(), pt.end(), flat.begin() + off);
            off += pt.size();
        }
        fn(flat);
        std::size_t k = factors.size();
        while (k > 0) {
            --k;
            if (++idx[k] < factors[k].size()) break;
            idx[k] = 0;
            if (k == 0) return;
        }
    }
}

MultiForm::MultiForm(std::vector<int> factor_dims, std::vector<int> multidegree, uint32_t p)
    : dims_(std::move(factor_dims)), deg_(std::move(multidegree)), p_(p) {
    if (dims_.size() != deg_.size())
        throw std::invalid_argument("MultiForm: factor/degree count mismatch");
}

std::size_t MultiForm::coord_count() const {
    std::size_t n = 0;
    for (int d : dims_) n += d + 1;
    return n;
}

void MultiForm::check_exponent(const std::vector<uint8_t>& expo) const {
    if (expo.size() != coord_count())
        throw std::invalid_argument("MultiForm: exponent arity mismatch");
    std::size_t off = 0;
    for (std::size_t f = 0; f < dims_.size(); ++f) {
        int s = 0;
        for (int i = 0; i <= dims_[f]; ++i) s += expo[off + i];
        if (s != deg_[f])
            throw std::invalid_argument("MultiForm: monomial does not match the multidegree");
        off += dims_[f] + 1;
    }
}

void MultiForm::set_coefficient(const std::vector<uint8_t>& expo, uint32_t c) {
    check_exponent(expo);
    c %= p_;
    if (c == 0) terms_.erase(expo);
    else terms_[expo] = c;
}

uint32_t MultiForm::eval(const std::vector<uint32_t>& point) const {
    uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        uint64_t t = c;
        for (std::size_t i = 0; i < e.size() && t; ++i) {
            for (uint8_t k = 0; k < e[i]; ++k) t = t * point[i] % p_;
            if (point[i] == 0 && e[i] > 0) t = 0;
        }
        acc = (acc + t) % p_;
    }
    return static_cast<uint32_t>(acc);
}

MultiForm MultiForm::derivative(std::size_t coord) const {
    MultiForm out(dims_, deg_, p_);
    // formal partial derivative; breaks multihomogeneity, so bypass the checks
    for (const auto& [e, c] : terms_) {
        if (e[coord] == 0) continue;
        uint32_t nc = static_cast<uint32_t>(static_cast<uint64_t>(c) * e[coord] % p_);
        if (nc == 0) continue;
        std::vector<uint8_t> ne = e;
        --ne[coord];
        out.terms_[ne] = (out.terms_.count(ne) ? (out.terms_[ne] + nc) % p_ : nc);
    }
    return out;
}

MultiForm MultiForm::operator*(const MultiForm& o) const {
    if (dims_ != o.dims_ || p_ != o.p_)
        throw std::invalid_argument("MultiForm*: shape mismatch");
    std::vector<int> deg(deg_.size());
    for (std::size_t i = 0; i < deg.size(); ++i) deg[i] = deg_[i] + o.deg_[i];
    MultiForm out(dims_, deg, p_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<uint8_t> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(ca) * cb % p_);
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                if (c) out.terms_[e] = c;
            } else {
                it->second = (it->second + c) % p_;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

MultiForm MultiForm::operator+(const MultiForm& o) const {
    if (dims_ != o.dims_ || p_ != o.p_ || deg_ != o.deg_)
        throw std::invalid_argument("MultiForm+: shape mismatch");
    MultiForm out = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) out.terms_[e] = c;
        else {
            it->second = (it->second + c) % p_;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

MultiForm MultiForm::operator-(const MultiForm& o) const {
    MultiForm neg = o;
    for (auto& [e, c] : neg.terms_) c = (p_ - c) % p_;
    return *this + neg;
}

std::vector<std::vector<uint8_t>> MultiForm::monomials(const std::vector<int>& factor_dims,
                                                       const std::vector<int>& multidegree) {
    // exponent tuples per factor, then cartesian product
    std::vector<std::vector<std::vector<uint8_t>>> per_factor;
    for (std::size_t f = 0; f < factor_dims.size(); ++f) {
        std::vector<std::vector<uint8_t>> tuples;
        int nv = factor_dims[f] + 1, d = multidegree[f];
        std::vector<uint8_t> cur(nv, 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == nv - 1) {
                cur[pos] = static_cast<uint8_t>(left);
                tuples.push_back(cur);
                return;
            }
            for (int c = 0; c <= left; ++c) {
                cur[pos] = static_cast<uint8_t>(c);
                rec(pos + 1, left - c);
            }
        };
        rec(0, d);
        per_factor.push_back(std::move(tuples));
    }
    std::vector<std::vector<uint8_t>> out;
    std::vector<std::size_t> idx(per_factor.size(), 0);
    while (true) {
        std::vector<uint8_t> e;
        for (std::size_t f = 0; f < per_factor.size(); ++f)
            e.insert(e.end(), per_factor[f][idx[f]].begin(), per_factor[f][idx[f]].end());
        out.push_back(std::move(e));
        std::size_t k = per_factor.size();
        while (k > 0) {
            --k;
            if (++idx[k] < per_factor[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

MultiForm MultiForm::random(const std::vector<int>& factor_dims,
                            const std::vector<int>& multidegree, uint32_t p, Rng& rng) {
    MultiForm out(factor_dims, multidegree, p);
    for (const auto& e : monomials(factor_dims, multidegree)) {
        uint32_t c = static_cast<uint32_t>(rng() % p);
        if (c) out.terms_[e] = c;
    }
    return out;
}

MorphismMatrix MorphismMatrix::random(const std::vector<int>& factor_dims,
                                      const std::vector<std::vector<int>>& row_degrees, int cols,
                                      uint32_t p, uint64_t seed) {
    if (!is_prime(p)) throw std::invalid_argument("MorphismMatrix: p must be prime");
    MorphismMatrix m;
    m.factor_dims = factor_dims;
    m.p = p;
    m.rows = static_cast<int>(row_degrees.size());
    m.cols = cols;
    m.row_degrees = row_degrees;
    Rng rng(seed);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.entries.push_back(MultiForm::random(factor_dims, row_degrees[r], p, rng));
    return m;
}

MorphismMatrix MorphismMatrix::random_production(uint32_t p, uint64_t seed) {
    return random({2, 2}, {{2, 0}, {0, 2}}, 3, p, seed);
}

int matrix_rank(std::vector<std::vector<uint32_t>> m, uint32_t p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        uint32_t inv = mod_inverse(m[rank][c] % p, p);
        for (std::size_t j = c; j < cols; ++j)
            m[rank][j] = static_cast<uint32_t>(static_cast<uint64_t>(m[rank][j]) * inv % p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] % p == 0) continue;
            uint64_t f = m[r][c] % p;
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] = static_cast<uint32_t>((m[r][j] + (p - f) * m[rank][j]) % p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<uint64_t> rank_profile(const MorphismMatrix& m, uint64_t budget) {
    std::vector<uint64_t> counts(std::min(m.rows, m.cols) + 1, 0);
    for_each_product_point(m.factor_dims, m.p, budget, [&](const std::vector<uint32_t>& pt) {
        std::vector<std::vector<uint32_t>> vals(m.rows, std::vector<uint32_t>(m.cols));
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) vals[r][c] = m.at(r, c).eval(pt);
        ++counts[matrix_rank(std::move(vals), m.p)];
    });
    return counts;
}

std::vector<MultiForm> incidence_equations(const MorphismMatrix& m) {
    // factors: P^{e-1} first, then X
    std::vector<int> dims;
    dims.push_back(m.cols - 1);
    dims.insert(dims.end(), m.factor_dims.begin(), m.factor_dims.end());
    std::vector<MultiForm> eqs;
    for (int r = 0; r < m.rows; ++r) {
        std::vector<int> deg;
        deg.push_back(1);
        deg.insert(deg.end(), m.row_degrees[r].begin(), m.row_degrees[r].end());
        MultiForm eq(dims, deg, m.p);
        for (int c = 0; c < m.cols; ++c)
            for (const auto& [e, coef] : m.at(r, c).terms()) {
                std::vector<uint8_t> ne(m.cols, 0);
                ne[c] = 1;
                ne.insert(ne.end(), e.begin(), e.end());
                eq.set_coefficient(ne, coef);
            }
        eqs.push_back(std::move(eq));
    }
    return eqs;
}

namespace {

std::vector<int> incidence_dims(const MorphismMatrix& m) {
    std::vector<int> dims;
    dims.push_back(m.cols - 1);
    dims.insert(dims.end(), m.factor_dims.begin(), m.factor_dims.end());
    return dims;
}

uint64_t count_common_zeros(const std::vector<MultiForm>& eqs, const std::vector<int>& dims,
                            uint32_t p, uint64_t budget,
                            std::vector<std::vector<uint32_t>>* collect = nullptr) {
    uint64_t count = 0;
    for_each_product_point(dims, p, budget, [&](const std::vector<uint32_t>& pt) {
        for (const auto& eq : eqs)
            if (eq.eval(pt) != 0) return;
        ++count;
        if (collect) collect->push_back(pt);
    });
    return count;
}

} // namespace

YCount count_Y(const MorphismMatrix& m, uint64_t budget) {
    YCount out;
    out.rank_counts = rank_profile(m, budget);
    for (std::size_t rho = 0; rho < out.rank_counts.size(); ++rho)
        out.via_fibers +=
            out.rank_counts[rho] * projective_point_count(m.cols - 1 - static_cast<int>(rho), m.p);
    out.direct = count_common_zeros(incidence_equations(m), incidence_dims(m), m.p, budget);
    out.agree = out.direct == out.via_fibers;
    return out;
}

BlowupIdentity blowup_identity(const MorphismMatrix& m, uint64_t budget) {
    BlowupIdentity out;
    YCount yc = count_Y(m, budget);
    out.y_count = yc.direct;
    out.x_count = product_point_count(m.factor_dims, m.p);
    uint64_t d1 = 0;
    for (int rho = 0; rho < std::min(m.rows, m.cols); ++rho) d1 += yc.rank_counts[rho];
    out.d1_count = d1;
    out.applicable = m.cols == m.rows + 1 && yc.rank_counts[0] == 0;
    out.holds = out.applicable && out.y_count == out.x_count + m.p * out.d1_count;
    return out;
}

StratifiedIdentity stratified_count_identity(const MorphismMatrix& m, uint64_t budget) {
    StratifiedIdentity out;
    YCount yc = count_Y(m, budget);
    out.direct = yc.direct;
    const int f = std::min(m.rows, m.cols);
    for (int i = 0; i <= f; ++i)
        out.stratified +=
            yc.rank_counts[f - i] * projective_point_count(m.cols - m.rows + i - 1, m.p);
    out.holds = out.direct == out.stratified;
    return out;
}

std::vector<MultiForm> maximal_minors(const MorphismMatrix& m) {
    const int f = m.rows;
    if (f > m.cols) throw std::invalid_argument("maximal_minors: expects rows <= cols");
    // all f-subsets of columns, Laplace along the first row
    std::vector<MultiForm> out;
    std::vector<int> cols(f);
    std::function<MultiForm(const std::vector<int>&, const std::vector<int>&)> det =
        [&](const std::vector<int>& rs, const std::vector<int>& cs) -> MultiForm {
        if (rs.size() == 1) return m.at(rs[0], cs[0]);
        std::vector<int> sub_rows(rs.begin() + 1, rs.end());
        MultiForm acc;
        bool first = true;
        for (std::size_t j = 0; j < cs.size(); ++j) {
            std::vector<int> sub_cols;
            for (std::size_t k = 0; k < cs.size(); ++k)
                if (k != j) sub_cols.push_back(cs[k]);
            MultiForm term = m.at(rs[0], cs[j]) * det(sub_rows, sub_cols);
            if (first) {
                acc = term;
                first = false;
            } else {
                acc = (j % 2) ? acc - term : acc + term;
            }
        }
        return acc;
    };
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == f) {
            std::vector<int> rs(f);
            for (int i = 0; i < f; ++i) rs[i] = i;
            out.push_back(det(rs, cols));
            return;
        }
        for (int c = start; c < m.cols; ++c) {
            cols[k] = c;
            rec(c + 1, k + 1);
        }
    };
    rec(0, 0);
    return out;
}

namespace {

// Jacobian rank at a normalized point: rows = equations, columns = non-pivot
// coordinates of every factor (the affine chart through the point).
int jacobian_rank_at(const std::vector<MultiForm>& eqs,
                     const std::vector<std::vector<MultiForm>>& derivs,
                     const std::vector<int>& dims, const std::vector<uint32_t>& pt, uint32_t p) {
    (void)eqs;
    std::vector<std::size_t> chart_cols;
    std::size_t off = 0;
    for (int d : dims) {
        std::size_t pivot = off;
        while (pt[pivot] == 0) ++pivot;
        for (std::size_t i = off; i < off + d + 1; ++i)
            if (i != pivot) chart_cols.push_back(i);
        off += d + 1;
    }
    std::vector<std::vector<uint32_t>> jac(derivs.size(),
                                           std::vector<uint32_t>(chart_cols.size()));
    for (std::size_t r = 0; r < derivs.size(); ++r)
        for (std::size_t c = 0; c < chart_cols.size(); ++c)
            jac[r][c] = derivs[r][chart_cols[c]].eval(pt);
    return matrix_rank(std::move(jac), p);
}

} // namespace

JacobianReport jacobian_sample(const MorphismMatrix& m, SampleLocus which, uint64_t trials,
                               Rng& rng, uint64_t budget) {
    if (trials < 1) throw std::invalid_argument("jacobian_sample: trials must be >= 1");
    JacobianReport out;

    std::vector<MultiForm> eqs;
    std::vector<int> dims;
    int expected_rank = 0;
    std::vector<std::vector<uint32_t>> locus;
    if (which == SampleLocus::Y) {
        eqs = incidence_equations(m);
        dims = incidence_dims(m);
        expected_rank = m.rows;  // codim of Y in P^{e-1} x X
        count_common_zeros(eqs, dims, m.p, budget, &locus);
    } else {
        eqs = maximal_minors(m);
        dims = m.factor_dims;
        expected_rank = m.cols - m.rows + 1;  // codim of D_{f-1} in X
        count_common_zeros(eqs, dims, m.p, budget, &locus);
    }
    if (locus.empty()) {
        out.locus_empty = true;
        return out;
    }
    std::vector<std::vector<MultiForm>> derivs;
    std::size_t ncoords = eqs[0].coord_count();
    for (const auto& eq : eqs) {
        std::vector<MultiForm> row;
        for (std::size_t c = 0; c < ncoords; ++c) row.push_back(eq.derivative(c));
        derivs.push_back(std::move(row));
    }
    for (uint64_t t = 0; t < trials; ++t) {
        const auto& pt = locus[rng() % locus.size()];
        int r = jacobian_rank_at(eqs, derivs, dims, pt, m.p);
        ++out.sampled;
        if (r == expected_rank) ++out.smooth_hits;
        else ++out.singular_hits;
    }
    return out;
}

void save_instance(const MorphismMatrix& m, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write instance file: " + path);
    os << "ffinstance 1\n";
    os << "p " << m.p << "\n";
    os << "factors";
    for (int d : m.factor_dims) os << " " << d;
    os << "\nshape " << m.rows << " " << m.cols << "\n";
    for (int r = 0; r < m.rows; ++r) {
        os << "rowdeg " << r;
        for (int d : m.row_degrees[r]) os << " " << d;
        os << "\n";
    }
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            for (const auto& [e, coef] : m.at(r, c).terms()) {
                os << "mon " << r << " " << c << " " << coef;
                for (uint8_t x : e) os << " " << static_cast<int>(x);
                os << "\n";
            }
    os << "end\n";
}

MorphismMatrix load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::string tok;
    int version = 0;
    if (!(in >> tok >> version) || tok != "ffinstance" || version != 1)
        throw std::runtime_error("instance file: bad header");
    MorphismMatrix m;
    bool shaped = false;
    while (in >> tok) {
        if (tok == "p") {
            in >> m.p;
            if (!is_prime(m.p)) throw std::runtime_error("instance file: p is not prime");
        } else if (tok == "factors") {
            std::string rest;
            std::getline(in, rest);
            std::istringstream ls(rest);
            int d;
            while (ls >> d) m.factor_dims.push_back(d);
        } else if (tok == "shape") {
            in >> m.rows >> m.cols;
            m.row_degrees.assign(m.rows, std::vector<int>(m.factor_dims.size(), 0));
            shaped = true;
        } else if (tok == "rowdeg") {
            int r;
            in >> r;
            if (!shaped || r < 0 || r >= m.rows)
                throw std::runtime_error("instance file: rowdeg out of range");
            for (auto& d : m.row_degrees[r]) in >> d;
        } else if (tok == "mon") {
            if (m.entries.empty()) {
                for (int r = 0; r < m.rows; ++r)
                    for (int c = 0; c < m.cols; ++c)
                        m.entries.emplace_back(m.factor_dims, m.row_degrees[r], m.p);
            }
            int r, c;
            uint32_t coef;
            in >> r >> c >> coef;
            if (r < 0 || r >= m.rows || c < 0 || c >= m.cols)
                throw std::runtime_error("instance file: mon out of range");
            std::vector<uint8_t> e;
            std::size_t nc = m.entries[0].coord_count();
            for (std::size_t i = 0; i < nc; ++i) {
                int x;
                in >> x;
                e.push_back(static_cast<uint8_t>(x));
            }
            m.at(r, c).set_coefficient(e, coef);
        } else if (tok == "end") {
            break;
        } else {
            throw std::runtime_error("instance file: unknown directive: " + tok);
        }
    }
    if (!shaped) throw std::runtime_error("instance file: missing shape");
    if (m.entries.empty())
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c)
                m.entries.emplace_back(m.factor_dims, m.row_degrees[r], m.p);
    return m;
}

} // namespace chowkit::ff
