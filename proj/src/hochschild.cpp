#include "chom/hochschild.hpp"

#include <algorithm>

#include "chom/parallel.hpp"

namespace chom {

namespace {

// weight compositions (w0 >= 0, w1..wn >= 1) with given total
void compositions(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    std::size_t i = cur.size();
    if (i == static_cast<std::size_t>(n) + 1) {
        if (total == 0) out.push_back(cur);
        return;
    }
    int lo = i == 0 ? 0 : 1;
    for (int w = lo; w <= total; ++w) {
        cur.push_back(w);
        compositions(n, total - w, cur, out);
        cur.pop_back();
    }
}

}  // namespace

HochschildChains::HochschildChains(const GradedAlgebra& A, int w_cap, int jobs)
    : A_(&A), w_cap_(w_cap) {
    if (w_cap_ > A.weight_cap()) throw Error("Hochschild weight cap exceeds algebra cache");

    cells_.resize(static_cast<std::size_t>(w_cap_) + 1);
    for (int w = 0; w <= w_cap_; ++w) {
        cells_[static_cast<std::size_t>(w)].resize(static_cast<std::size_t>(w) + 2);
        for (int n = 0; n <= w + 1; ++n) {
            Cell& c = cells_[static_cast<std::size_t>(w)][static_cast<std::size_t>(n)];
            std::vector<std::vector<int>> comps;
            std::vector<int> cur;
            compositions(n, w, cur, comps);
            for (const auto& wts : comps) {
                // cartesian product of per-slot bases
                std::vector<int> idx(wts.size(), 0);
                bool any_empty = false;
                for (std::size_t i = 0; i < wts.size(); ++i)
                    if (A.dim(wts[i]) == 0) any_empty = true;
                if (any_empty) continue;
                while (true) {
                    TensorBasisElt t;
                    for (std::size_t i = 0; i < wts.size(); ++i)
                        t.slots.emplace_back(wts[i], idx[i]);
                    c.index.emplace(t, static_cast<int>(c.basis.size()));
                    c.basis.push_back(std::move(t));
                    std::size_t i = wts.size();
                    bool wrapped = true;
                    while (i-- > 0) {
                        if (++idx[i] < A.dim(wts[i])) {
                            wrapped = false;
                            break;
                        }
                        idx[i] = 0;
                    }
                    if (wrapped) break;
                }
            }
        }
    }

    // differential matrices; cells are independent given the bases
    std::vector<std::pair<int, int>> grid;
    for (int w = 0; w <= w_cap_; ++w)
        for (int n = 0; n <= w + 1; ++n) grid.emplace_back(n, w);
    parallel_for(jobs, static_cast<int>(grid.size()), [&](int g) {
        auto [n, w] = grid[static_cast<std::size_t>(g)];
        build_boundaries(n, w, cells_[static_cast<std::size_t>(w)][static_cast<std::size_t>(n)]);
    });
}

void HochschildChains::build_boundaries(int n, int w, Cell& c) const {
    const GradedAlgebra& A = *A_;
    int dim_here = static_cast<int>(c.basis.size());
    int dim_down = dim(n - 1, w);
    int dim_up = dim(n + 1, w);

    RatMatrix b(dim_down, dim_here);
    if (n >= 1) {
        const Cell& down = cell(n - 1, w);
        for (int k = 0; k < dim_here; ++k) {
            const auto& s = c.basis[static_cast<std::size_t>(k)].slots;
            auto emit = [&](int i_merged, const RatVec& prod, int mw, int sign, bool last) {
                for (std::size_t t = 0; t < prod.size(); ++t) {
                    if (prod[t] == 0) continue;
                    TensorBasisElt e;
                    if (!last) {
                        for (int i = 0; i < i_merged; ++i) e.slots.push_back(s[static_cast<std::size_t>(i)]);
                        e.slots.emplace_back(mw, static_cast<int>(t));
                        for (std::size_t i = static_cast<std::size_t>(i_merged) + 2; i < s.size(); ++i)
                            e.slots.push_back(s[i]);
                    } else {
                        e.slots.emplace_back(mw, static_cast<int>(t));
                        for (std::size_t i = 1; i + 1 < s.size(); ++i) e.slots.push_back(s[i]);
                    }
                    b.add(down.index.at(e), k, Rat(sign) * prod[t]);
                }
            };
            for (int i = 0; i < n; ++i) {
                const auto& [wi, ii] = s[static_cast<std::size_t>(i)];
                const auto& [wj, jj] = s[static_cast<std::size_t>(i) + 1];
                emit(i, A.basis_product(wi, ii, wj, jj), wi + wj, i % 2 == 0 ? 1 : -1, false);
            }
            const auto& [wn, in] = s[static_cast<std::size_t>(n)];
            const auto& [w0, i0] = s[0];
            emit(0, A.basis_product(wn, in, w0, i0), wn + w0, n % 2 == 0 ? 1 : -1, true);
        }
    }
    c.b = std::move(b);

    RatMatrix B(dim_up, dim_here);
    if (n + 1 <= w) {
        const Cell& up = cell(n + 1, w);
        for (int k = 0; k < dim_here; ++k) {
            const auto& s = c.basis[static_cast<std::size_t>(k)].slots;
            if (s[0].first == 0) continue;  // scalar in a normalized slot: drops
            for (int i = 0; i <= n; ++i) {
                TensorBasisElt e;
                e.slots.emplace_back(0, 0);
                for (int t = i; t <= n; ++t) e.slots.push_back(s[static_cast<std::size_t>(t)]);
                for (int t = 0; t < i; ++t) e.slots.push_back(s[static_cast<std::size_t>(t)]);
                int sign = (n * i) % 2 == 0 ? 1 : -1;
                B.add(up.index.at(e), k, sign);
            }
        }
    }
    c.B = std::move(B);
}

const HochschildChains::Cell& HochschildChains::cell(int n, int w) const {
    if (w < 0 || w > w_cap_ || n < 0 || n > w + 1) throw Error("Hochschild cell outside cached range");
    return cells_[static_cast<std::size_t>(w)][static_cast<std::size_t>(n)];
}

int HochschildChains::dim(int n, int w) const {
    if (n < 0 || n > w) return 0;  // connectedness: C_{n,w} = 0 for n > w
    return static_cast<int>(cell(n, w).basis.size());
}

const std::vector<TensorBasisElt>& HochschildChains::basis(int n, int w) const {
    return cell(n, w).basis;
}

const RatMatrix& HochschildChains::boundary_b(int n, int w) const { return cell(n, w).b; }

const RatMatrix& HochschildChains::connes_B(int n, int w) const { return cell(n, w).B; }

int HochschildChains::hh_dim(int n, int w) const {
    if (n > w) return 0;
    return homology_dim(boundary_b(n, w), boundary_b(n + 1, w));
}

Chain HochschildChains::zero_chain(int n, int w) const {
    return Chain{n, w, RatVec(static_cast<std::size_t>(dim(n, w)), Rat(0))};
}

Chain HochschildChains::basis_chain(int n, int w, int k) const {
    Chain c = zero_chain(n, w);
    c.coords[static_cast<std::size_t>(k)] = 1;
    return c;
}

Chain HochschildChains::tensor(const std::vector<Elem>& factors) const {
    int n = static_cast<int>(factors.size()) - 1;
    int w = 0;
    for (const auto& f : factors) w += f.weight;
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i].weight < 1) throw Error("tensor: inner slot must have positive weight");
    Chain out = zero_chain(n, w);
    const Cell& c = cell(n, w);

    std::vector<std::size_t> idx(factors.size(), 0);
    TensorBasisElt e;
    e.slots.resize(factors.size());
    std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t i, const Rat& coeff) {
        if (i == factors.size()) {
            out.coords[static_cast<std::size_t>(c.index.at(e))] += coeff;
            return;
        }
        for (std::size_t k = 0; k < factors[i].coords.size(); ++k) {
            const Rat& x = factors[i].coords[k];
            if (x == 0) continue;
            e.slots[i] = {factors[i].weight, static_cast<int>(k)};
            rec(i + 1, coeff * x);
        }
    };
    rec(0, Rat(1));
    return out;
}

namespace {

// all (p,q)-interleavings of a.slots[1..] and b.slots[1..] with shuffle signs
void interleavings(const std::vector<std::pair<int, int>>& a, std::size_t ai,
                   const std::vector<std::pair<int, int>>& b, std::size_t bi,
                   std::vector<std::pair<int, int>>& cur, int sign,
                   const std::function<void(const std::vector<std::pair<int, int>>&, int)>& emit) {
    if (ai == a.size() && bi == b.size()) {
        emit(cur, sign);
        return;
    }
    if (ai < a.size()) {
        cur.push_back(a[ai]);
        interleavings(a, ai + 1, b, bi, cur, sign, emit);
        cur.pop_back();
    }
    if (bi < b.size()) {
        // taking from b while (a.size() - ai) elements of a remain
        int flip = static_cast<int>(a.size() - ai) % 2 == 0 ? 1 : -1;
        cur.push_back(b[bi]);
        interleavings(a, ai, b, bi + 1, cur, sign * flip, emit);
        cur.pop_back();
    }
}

}  // namespace

Chain HochschildChains::shuffle(const Chain& a, const Chain& b) const {
    int n = a.n + b.n, w = a.w + b.w;
    Chain out = zero_chain(n, w);
    const Cell& dst = cell(n, w);
    const auto& ba = basis(a.n, a.w);
    const auto& bb = basis(b.n, b.w);
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j] == 0) continue;
            const auto& sa = ba[i].slots;
            const auto& sb = bb[j].slots;
            const RatVec& head = A_->basis_product(sa[0].first, sa[0].second, sb[0].first, sb[0].second);
            Rat c0 = a.coords[i] * b.coords[j];
            std::vector<std::pair<int, int>> atail(sa.begin() + 1, sa.end());
            std::vector<std::pair<int, int>> btail(sb.begin() + 1, sb.end());
            std::vector<std::pair<int, int>> cur;
            interleavings(atail, 0, btail, 0, cur, 1,
                          [&](const std::vector<std::pair<int, int>>& tail, int sign) {
                              for (std::size_t h = 0; h < head.size(); ++h) {
                                  if (head[h] == 0) continue;
                                  TensorBasisElt e;
                                  e.slots.emplace_back(sa[0].first + sb[0].first, static_cast<int>(h));
                                  for (const auto& s : tail) e.slots.push_back(s);
                                  out.coords[static_cast<std::size_t>(dst.index.at(e))] +=
                                      c0 * sign * head[h];
                              }
                          });
        }
    }
    return out;
}

RatMatrix HochschildChains::hkr_matrix(const DeRhamAlgebra& d, int n, int w) const {
    if (&d.algebra() != A_) throw Error("hkr_matrix: mismatched algebras");
    RatMatrix m(dim(n, w), d.dim(n, w));
    const auto& forms = d.basis(n, w);
    for (std::size_t k = 0; k < forms.size(); ++k) {
        const FormBasisElt& fb = forms[k];
        Chain acc = zero_chain(n, w);
        std::vector<int> perm = fb.dxs;  // sorted ascending
        std::sort(perm.begin(), perm.end());
        do {
            // parity of perm relative to the sorted order
            int inv = 0;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b2 = a + 1; b2 < perm.size(); ++b2)
                    if (perm[a] > perm[b2]) ++inv;
            int sign = inv % 2 == 0 ? 1 : -1;
            std::vector<Elem> factors;
            factors.push_back(A_->basis_elem(fb.coeff_weight, fb.coeff_index));
            bool dead = false;
            for (int i : perm) {
                Elem x = A_->generator_elem(i);
                if (x.is_zero()) dead = true;
                factors.push_back(std::move(x));
            }
            if (!dead) {
                Chain t = tensor(factors);
                for (std::size_t r = 0; r < t.coords.size(); ++r)
                    acc.coords[r] += sign * t.coords[r];
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (std::size_t r = 0; r < acc.coords.size(); ++r)
            if (acc.coords[r] != 0) m.set(static_cast<int>(r), static_cast<int>(k), acc.coords[r]);
    }
    return m;
}

MixedComplex HochschildChains::to_mixed() const {
    std::vector<MixedComplex::WeightPart> parts;
    for (int w = 0; w <= w_cap_; ++w) {
        MixedComplex::WeightPart part;
        for (int n = 0; n <= w; ++n) part.dims.push_back(dim(n, w));
        for (int n = 0; n <= w; ++n) {
            part.b.push_back(boundary_b(n, w));
            part.B.push_back(connes_B(n, w));
        }
        parts.push_back(std::move(part));
    }
    return MixedComplex(std::move(parts));
}

HkrReport hkr_check(const GradedAlgebra& A, int n_max, int W, int jobs) {
    DeRhamAlgebra D(A, n_max, W);
    HochschildChains H(A, W, jobs);
    HkrReport rep;

    std::vector<std::pair<int, int>> grid;
    for (int n = 0; n <= n_max; ++n)
        for (int w = 0; w <= W; ++w) grid.emplace_back(n, w);
    std::vector<HkrCell> cells(grid.size());
    std::vector<std::vector<RatMatrix>> hkr(static_cast<std::size_t>(n_max) + 1,
                                            std::vector<RatMatrix>(static_cast<std::size_t>(W) + 1));
    parallel_for(jobs, static_cast<int>(grid.size()), [&](int g) {
        auto [n, w] = grid[static_cast<std::size_t>(g)];
        if (n > w) {  // both sides vanish above the diagonal
            cells[static_cast<std::size_t>(g)] = HkrCell{n, w, 0, 0, true, true, true};
            hkr[static_cast<std::size_t>(n)][static_cast<std::size_t>(w)] = RatMatrix(0, 0);
            return;
        }
        RatMatrix M = H.hkr_matrix(D, n, w);
        HkrCell cell{n, w, D.dim(n, w), H.hh_dim(n, w), false, false, false};
        cell.dims_equal = cell.omega_dim == cell.hh;
        cell.image_in_cycles = (H.boundary_b(n, w) * M).is_zero();
        const RatMatrix& bnd_in = H.boundary_b(n + 1, w);
        int induced_rank = M.augment(bnd_in).rank() - bnd_in.rank();
        cell.induced_iso = cell.image_in_cycles && induced_rank == cell.hh && cell.dims_equal;
        cells[static_cast<std::size_t>(g)] = cell;
        hkr[static_cast<std::size_t>(n)][static_cast<std::size_t>(w)] = std::move(M);
    });
    for (const auto& c : cells) {
        rep.cells.push_back(c);
        if (!(c.dims_equal && c.image_in_cycles && c.induced_iso)) {
            rep.all_pass = false;
            rep.failures.push_back("(" + std::to_string(c.n) + "," + std::to_string(c.w) +
                                   "): dim Omega = " + std::to_string(c.omega_dim) +
                                   ", HH = " + std::to_string(c.hh) +
                                   (c.image_in_cycles ? "" : ", image not in cycles") +
                                   (c.induced_iso ? "" : ", induced map not iso"));
        }
    }

    // exact multiplicativity hkr(a ^ b) = shuffle(hkr a, hkr b), all basis
    // pairs within the caps
    for (int p = 0; p <= n_max; ++p)
        for (int q = 0; p + q <= n_max; ++q)
            for (int v = 0; v <= W; ++v)
                for (int u = 0; v + u <= W; ++u)
                    for (int i = 0; i < D.dim(p, v); ++i)
                        for (int j = 0; j < D.dim(q, u); ++j) {
                            Form wf = D.wedge(D.basis_form(p, v, i), D.basis_form(q, u, j));
                            const RatMatrix& Mpq = hkr[static_cast<std::size_t>(p + q)]
                                                      [static_cast<std::size_t>(v + u)];
                            RatVec lhs = Mpq.apply(wf.coords);
                            Chain ca{p, v, hkr[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)]
                                               .apply(D.basis_form(p, v, i).coords)};
                            Chain cb{q, u, hkr[static_cast<std::size_t>(q)][static_cast<std::size_t>(u)]
                                               .apply(D.basis_form(q, u, j).coords)};
                            Chain rhs = H.shuffle(ca, cb);
                            if (lhs != rhs.coords) {
                                rep.multiplicative = false;
                                rep.all_pass = false;
                                rep.failures.push_back(
                                    "multiplicativity fails at (" + std::to_string(p) + "," +
                                    std::to_string(v) + ")x(" + std::to_string(q) + "," +
                                    std::to_string(u) + ")");
                            }
                        }
    return rep;
}

BSuiteReport b_compatibility_suite(const GradedAlgebra& A, int n_max, int W) {
    BSuiteReport rep;
    DeRhamAlgebra D(A, n_max + 1, W);
    HochschildChains H(A, W);

    auto defect_of = [&](const Chain& u, const Chain& v) {
        Chain s = H.shuffle(u, v);
        RatVec lhs = H.connes_B(s.n, s.w).apply(s.coords);
        Chain bu{u.n + 1, u.w, H.connes_B(u.n, u.w).apply(u.coords)};
        Chain bv{v.n + 1, v.w, H.connes_B(v.n, v.w).apply(v.coords)};
        Chain r1 = H.shuffle(bu, v);
        Chain r2 = H.shuffle(u, bv);
        int sg = u.n % 2 == 0 ? 1 : -1;
        Chain out{s.n + 1, s.w, RatVec(lhs.size(), Rat(0))};
        for (std::size_t k = 0; k < lhs.size(); ++k)
            out.coords[k] = lhs[k] - r1.coords[k] - sg * r2.coords[k];
        return out;
    };

    // chain-level Leibniz defect: search small basis chains
    int cap_w = std::min(W, 3);
    for (int p = 0; p <= std::min(n_max, 2); ++p)
        for (int q = 0; q <= std::min(n_max, 2); ++q)
            for (int v = 0; v <= cap_w; ++v)
                for (int u = 0; u + v <= W && u <= cap_w; ++u) {
                    if (p + q + 1 > u + v) continue;
                    for (int i = 0; i < H.dim(p, v); ++i)
                        for (int j = 0; j < H.dim(q, u); ++j) {
                            Chain d = defect_of(H.basis_chain(p, v, i), H.basis_chain(q, u, j));
                            if (!d.is_zero()) {
                                ++rep.defect_count;
                                if (!rep.chain_defect)
                                    rep.chain_defect = BSuiteReport::DefectWitness{p, v, q, u, i, j};
                            }
                        }
                }

    // homology-level repair: the defect of two cycles is an exact boundary
    for (int p = 0; p <= std::min(n_max, 2); ++p)
        for (int q = 0; q <= std::min(n_max, 2); ++q)
            for (int v = 0; v <= cap_w; ++v)
                for (int u = 0; u + v <= W && u <= cap_w; ++u) {
                    if (p + q + 2 > u + v + 1) continue;
                    if (H.dim(p, v) == 0 || H.dim(q, u) == 0) continue;
                    auto zu = H.boundary_b(p, v).kernel_basis();
                    auto zv = H.boundary_b(q, u).kernel_basis();
                    for (const auto& cu : zu)
                        for (const auto& cv : zv) {
                            Chain d = defect_of(Chain{p, v, cu}, Chain{q, u, cv});
                            ++rep.cycle_pairs_tested;
                            if (d.is_zero()) continue;
                            const RatMatrix& bnd = H.boundary_b(d.n + 1, d.w);
                            if (!bnd.solve(d.coords)) {
                                rep.cycle_defects_are_boundaries = false;
                                rep.notes.push_back("defect not a boundary at (" + std::to_string(d.n) +
                                                    "," + std::to_string(d.w) + ")");
                            }
                        }
                }

    // comparison constants lambda_n between B.hkr and hkr.eps on homology
    int lam_max = std::min(n_max, 3);
    rep.lambda.assign(static_cast<std::size_t>(lam_max) + 1, std::nullopt);
    for (int n = 0; n <= lam_max; ++n) {
        for (int w = 0; w <= W; ++w) {
            if (n + 1 > w) continue;
            RatMatrix Mn = H.hkr_matrix(D, n, w);
            RatMatrix Mn1 = H.hkr_matrix(D, n + 1, w);
            const RatMatrix& eps = D.epsilon_matrix(n, w);
            const RatMatrix& bnd = H.boundary_b(n + 2, w);
            for (int k = 0; k < D.dim(n, w); ++k) {
                RatVec col(static_cast<std::size_t>(D.dim(n, w)), Rat(0));
                col[static_cast<std::size_t>(k)] = 1;
                RatVec e = Mn1.apply(eps.apply(col));
                RatVec f = H.connes_B(n, w).apply(Mn.apply(col));
                if (bnd.in_column_space(e)) {
                    if (!bnd.in_column_space(f)) {
                        rep.lambda_consistent = false;
                        rep.notes.push_back("lambda_" + std::to_string(n) +
                                            ": B hkr not nullhomologous where hkr eps is");
                    }
                    continue;
                }
                auto sol = bnd.augment_col(e).solve(f);
                if (!sol) {
                    rep.lambda_consistent = false;
                    rep.notes.push_back("lambda_" + std::to_string(n) + ": classes not proportional");
                    continue;
                }
                Rat lam = sol->back();
                auto& slot = rep.lambda[static_cast<std::size_t>(n)];
                if (!slot) {
                    slot = lam;
                } else if (*slot != lam) {
                    rep.lambda_consistent = false;
                    rep.notes.push_back("lambda_" + std::to_string(n) + ": inconsistent values");
                }
            }
        }
    }
    return rep;
}

}  // namespace chom
