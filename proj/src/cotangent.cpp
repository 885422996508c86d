#include "chom/cotangent.hpp"

#include <algorithm>

#include "chom/derham.hpp"
#include "chom/hochschild.hpp"
#include "chom/parallel.hpp"

namespace chom {

namespace {

// truncated power series with integer coefficients
std::vector<long> series_mul(const std::vector<long>& a, const std::vector<long>& b, int cap) {
    std::vector<long> out(static_cast<std::size_t>(cap) + 1, 0);
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; i + j <= cap; ++j)
            out[static_cast<std::size_t>(i + j)] +=
                (i < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(i)] : 0) *
                (j < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(j)] : 0);
    return out;
}

// 1 / (1 - t^w) truncated
std::vector<long> geometric(int w, int cap) {
    std::vector<long> out(static_cast<std::size_t>(cap) + 1, 0);
    for (int i = 0; i <= cap; i += w) out[static_cast<std::size_t>(i)] = 1;
    return out;
}

}  // namespace

bool regular_sequence_check(const GradedAlgebra& A, int W) {
    std::vector<long> series{1};
    for (const auto& f : A.presentation().relations) {
        int d = *f.weight(A.weights());
        std::vector<long> factor(static_cast<std::size_t>(W) + 1, 0);
        factor[0] = 1;
        if (d <= W) factor[static_cast<std::size_t>(d)] = -1;
        series = series_mul(series, factor, W);
    }
    for (int w : A.weights()) series = series_mul(series, geometric(w, W), W);

    std::vector<int> hs = A.hilbert_series(W);
    for (int w = 0; w <= W; ++w)
        if (static_cast<long>(hs[static_cast<std::size_t>(w)]) != series[static_cast<std::size_t>(w)])
            return false;
    return true;
}

CotangentComplex::CotangentComplex(const GradedAlgebra& A, bool ci_override) : A_(&A) {
    for (const auto& f : A.presentation().relations) rel_weights_.push_back(*f.weight(A.weights()));
    if (!regular_sequence_check(A, A.weight_cap())) {
        if (!ci_override)
            throw NotCompleteIntersection("relations fail the graded regular-sequence criterion");
        overridden_ = true;
    }
}

CotangentComplex::Piece CotangentComplex::piece(int p, int a, int w) const {
    Piece out;
    if (a < 0 || a > p) return out;
    const GradedAlgebra& A = *A_;
    const int g = A.num_generators();
    const int r = static_cast<int>(rel_weights_.size());
    const auto& wt = A.weights();

    std::vector<std::vector<int>> sets;
    {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(cur.size()) == p - a) {
                sets.push_back(cur);
                return;
            }
            for (int i = start; i < g; ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    std::vector<std::vector<unsigned>> exps;
    {
        std::vector<unsigned> cur(static_cast<std::size_t>(r), 0u);
        std::function<void(int, int)> rec = [&](int i, int remaining) {
            if (i == r) {
                if (remaining == 0) exps.push_back(cur);
                return;
            }
            for (int e = remaining; e >= 0; --e) {
                cur[static_cast<std::size_t>(i)] = static_cast<unsigned>(e);
                rec(i + 1, remaining - e);
            }
            cur[static_cast<std::size_t>(i)] = 0;
        };
        rec(0, a);
    }

    int offset = 0;
    for (const auto& S : sets)
        for (const auto& al : exps) {
            int hw = 0;
            for (int i : S) hw += wt[static_cast<std::size_t>(i)];
            for (int j = 0; j < r; ++j)
                hw += static_cast<int>(al[static_cast<std::size_t>(j)]) * rel_weights_[static_cast<std::size_t>(j)];
            int cw = w - hw;
            if (cw < 0 || A.dim(cw) == 0) continue;
            out.block.emplace(std::make_pair(S, al), offset);
            for (int i = 0; i < A.dim(cw); ++i)
                out.basis.push_back(PieceBasisElt{S, al, cw, i});
            offset += A.dim(cw);
        }
    return out;
}

RatMatrix CotangentComplex::koszul(int p, int a, int w) const {
    const GradedAlgebra& A = *A_;
    const int g = A.num_generators();
    const int r = static_cast<int>(rel_weights_.size());
    Piece src = piece(p, a, w);
    Piece dst = piece(p, a - 1, w);
    RatMatrix m(static_cast<int>(dst.basis.size()), static_cast<int>(src.basis.size()));
    for (std::size_t k = 0; k < src.basis.size(); ++k) {
        const PieceBasisElt& e = src.basis[k];
        for (int j = 0; j < r; ++j) {
            unsigned aj = e.es[static_cast<std::size_t>(j)];
            if (aj == 0) continue;
            std::vector<unsigned> al = e.es;
            --al[static_cast<std::size_t>(j)];
            for (int i = 0; i < g; ++i) {
                int sg = insertion_sign(i, e.dxs);
                if (sg == 0) continue;
                Poly coeff = A.basis_poly(e.coeff_weight, e.coeff_index) *
                             A.presentation().relations[static_cast<std::size_t>(j)].derivative(i);
                if (coeff.is_zero()) continue;
                Elem ce = A.elem(coeff);
                if (ce.is_zero()) continue;
                std::vector<int> S = e.dxs;
                S.insert(std::upper_bound(S.begin(), S.end(), i), i);
                auto it = dst.block.find(std::make_pair(S, al));
                if (it == dst.block.end()) continue;  // coefficient space is zero
                for (std::size_t t = 0; t < ce.coords.size(); ++t)
                    if (ce.coords[t] != 0)
                        m.add(it->second + static_cast<int>(t), static_cast<int>(k),
                              Rat(static_cast<int>(aj)) * sg * ce.coords[t]);
            }
        }
    }
    return m;
}

int CotangentComplex::h0_dim(int w) const {
    RatMatrix d = koszul(1, 1, w);
    // cokernel of e_j |-> df_j at weight w
    return d.rows() - d.rank();
}

int CotangentComplex::h1_dim(int w) const {
    RatMatrix d = koszul(1, 1, w);
    return d.cols() - d.rank();
}

int CotangentComplex::sym_shift_dim(int p, int n, int w) const {
    int a = n - p;
    if (a < 0 || a > p) return 0;
    RatMatrix d_out = koszul(p, a, w);
    RatMatrix d_in = koszul(p, a + 1, w);
    return homology_dim(d_out, d_in);
}

DerivedHkrReport derived_hkr_check(const GradedAlgebra& A, int n_max, int W, int jobs) {
    DerivedHkrReport rep;
    rep.ci = regular_sequence_check(A, A.weight_cap());
    CotangentComplex L(A, /*ci_override=*/!rep.ci);
    HochschildChains H(A, W, jobs);

    std::vector<std::pair<int, int>> grid;
    for (int n = 0; n <= n_max; ++n)
        for (int w = 0; w <= W; ++w) grid.emplace_back(n, w);
    std::vector<DerivedHkrCell> cells(grid.size());
    parallel_for(jobs, static_cast<int>(grid.size()), [&](int g) {
        auto [n, w] = grid[static_cast<std::size_t>(g)];
        int sym = 0;
        for (int p = (n + 1) / 2; p <= n; ++p) sym += L.sym_shift_dim(p, n, w);
        cells[static_cast<std::size_t>(g)] = DerivedHkrCell{n, w, H.hh_dim(n, w), sym};
    });
    for (const auto& c : cells) {
        rep.cells.push_back(c);
        if (c.hh != c.sym_total) {
            rep.all_pass = false;
            rep.failures.push_back("(" + std::to_string(c.n) + "," + std::to_string(c.w) +
                                   "): HH = " + std::to_string(c.hh) +
                                   ", Sym(L[1]) = " + std::to_string(c.sym_total));
        }
    }
    return rep;
}

}  // namespace chom
