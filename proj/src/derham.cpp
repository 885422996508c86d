#include "chom/derham.hpp"

#include <algorithm>

namespace chom {

int insertion_sign(int i, const std::vector<int>& S) {
    int below = 0;
    for (int s : S) {
        if (s == i) return 0;
        if (s < i) ++below;
    }
    return below % 2 == 0 ? 1 : -1;
}

int merge_sign(const std::vector<int>& S, const std::vector<int>& T) {
    int inversions = 0;
    for (int s : S)
        for (int t : T) {
            if (s == t) return 0;
            if (s > t) ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {
std::vector<int> merged_set(const std::vector<int>& S, const std::vector<int>& T) {
    std::vector<int> out;
    out.reserve(S.size() + T.size());
    std::merge(S.begin(), S.end(), T.begin(), T.end(), std::back_inserter(out));
    return out;
}

void subsets(int g, int p, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == p) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < g; ++i) {
        cur.push_back(i);
        subsets(g, p, i + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

int DeRhamAlgebra::set_weight(const std::vector<int>& S) const {
    int w = 0;
    for (int i : S) w += A_->weights()[static_cast<std::size_t>(i)];
    return w;
}

DeRhamAlgebra::DeRhamAlgebra(const GradedAlgebra& A, int p_cap, int w_cap)
    : A_(&A), p_cap_(p_cap), w_cap_(w_cap) {
    if (w_cap_ > A.weight_cap()) throw Error("de Rham weight cap exceeds algebra cache");
    const int g = A.num_generators();
    const auto& wt = A.weights();
    const auto& rels = A.presentation().relations;

    comps_.resize(static_cast<std::size_t>(p_cap_) + 2);
    for (int p = 0; p <= p_cap_ + 1; ++p) {
        comps_[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(w_cap_) + 1);
        std::vector<std::vector<int>> all_sets;
        std::vector<int> cur;
        subsets(g, p, 0, cur, all_sets);
        for (int w = 0; w <= w_cap_; ++w) {
            Component& c = comps_[static_cast<std::size_t>(p)][static_cast<std::size_t>(w)];
            for (const auto& S : all_sets) {
                if (set_weight(S) > w) continue;
                c.sets.push_back(S);
                c.block_offset.push_back(c.ambient_dim);
                c.ambient_dim += A.dim(w - set_weight(S));
            }

            // Jacobian submodule slice: rows a * df_j ^ dx_T
            std::vector<RatVec> rows;
            if (p >= 1) {
                std::vector<std::vector<int>> tsets;
                std::vector<int> tc;
                subsets(g, p - 1, 0, tc, tsets);
                for (std::size_t j = 0; j < rels.size(); ++j) {
                    std::vector<Poly> partials;
                    for (int i = 0; i < g; ++i) partials.push_back(rels[j].derivative(i));
                    auto dj = rels[j].weight(wt);
                    for (const auto& T : tsets) {
                        int aw = w - *dj - set_weight(T);
                        if (aw < 0) continue;
                        for (int ai = 0; ai < A.dim(aw); ++ai) {
                            RatVec row(static_cast<std::size_t>(c.ambient_dim), Rat(0));
                            bool nonzero = false;
                            for (int i = 0; i < g; ++i) {
                                if (partials[static_cast<std::size_t>(i)].is_zero()) continue;
                                int sg = insertion_sign(i, T);
                                if (sg == 0) continue;
                                Poly coeff = A.basis_poly(aw, ai) * partials[static_cast<std::size_t>(i)];
                                if (coeff.is_zero()) continue;
                                Elem e = A.elem(coeff);
                                if (e.is_zero()) continue;
                                std::vector<int> S = merged_set(std::vector<int>{i}, T);
                                int base = ambient_index(c, S, 0);
                                for (std::size_t k = 0; k < e.coords.size(); ++k) {
                                    if (e.coords[k] == 0) continue;
                                    row[static_cast<std::size_t>(base) + k] += sg * e.coords[k];
                                    nonzero = true;
                                }
                            }
                            if (nonzero) rows.push_back(std::move(row));
                        }
                    }
                }
            }
            RatMatrix rel(static_cast<int>(rows.size()), c.ambient_dim);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t k = 0; k < rows[r].size(); ++k)
                    if (rows[r][k] != 0) rel.set(static_cast<int>(r), static_cast<int>(k), rows[r][k]);
            c.reduction = rref_of(rel);
            c.basis_cols = c.reduction.free_cols();
            for (std::size_t i = 0; i < c.basis_cols.size(); ++i)
                c.col_to_basis.emplace(c.basis_cols[i], static_cast<int>(i));
            for (int col : c.basis_cols) {
                // locate the (set, coefficient) pair behind an ambient column
                std::size_t s = 0;
                while (s + 1 < c.sets.size() && c.block_offset[s + 1] <= col) ++s;
                FormBasisElt fb;
                fb.dxs = c.sets[s];
                fb.coeff_weight = w - set_weight(c.sets[s]);
                fb.coeff_index = col - c.block_offset[s];
                c.basis.push_back(std::move(fb));
            }
        }
    }

    // epsilon = de Rham differential, computed on representatives and
    // projected; this is where the Leibniz extension of d lives.
    eps_.resize(static_cast<std::size_t>(p_cap_) + 1);
    for (int p = 0; p <= p_cap_; ++p) {
        eps_[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(w_cap_) + 1);
        for (int w = 0; w <= w_cap_; ++w) {
            const Component& src = comp(p, w);
            const Component& dst = comp(p + 1, w);
            RatMatrix m(static_cast<int>(dst.basis.size()), static_cast<int>(src.basis.size()));
            for (std::size_t k = 0; k < src.basis.size(); ++k) {
                const FormBasisElt& fb = src.basis[k];
                Poly mono = A.basis_poly(fb.coeff_weight, fb.coeff_index);
                RatVec ambient(static_cast<std::size_t>(dst.ambient_dim), Rat(0));
                for (int i = 0; i < g; ++i) {
                    Poly der = mono.derivative(i);
                    if (der.is_zero()) continue;
                    int sg = insertion_sign(i, fb.dxs);
                    if (sg == 0) continue;
                    Elem e = A.elem(der);
                    if (e.is_zero()) continue;
                    int base = ambient_index(dst, merged_set({i}, fb.dxs), 0);
                    for (std::size_t t = 0; t < e.coords.size(); ++t)
                        ambient[static_cast<std::size_t>(base) + t] += sg * e.coords[t];
                }
                RatVec coords = reduce_ambient(p + 1, w, std::move(ambient));
                for (std::size_t r = 0; r < coords.size(); ++r)
                    if (coords[r] != 0) m.set(static_cast<int>(r), static_cast<int>(k), coords[r]);
            }
            eps_[static_cast<std::size_t>(p)][static_cast<std::size_t>(w)] = std::move(m);
        }
    }
}

const DeRhamAlgebra::Component& DeRhamAlgebra::comp(int p, int w) const {
    if (p < 0 || p > p_cap_ + 1 || w < 0 || w > w_cap_) throw Error("de Rham component outside cached range");
    return comps_[static_cast<std::size_t>(p)][static_cast<std::size_t>(w)];
}

int DeRhamAlgebra::ambient_index(const Component& c, const std::vector<int>& S, int a_index) const {
    for (std::size_t s = 0; s < c.sets.size(); ++s)
        if (c.sets[s] == S) return c.block_offset[s] + a_index;
    throw Error("wedge set not present in component");
}

RatVec DeRhamAlgebra::reduce_ambient(int p, int w, RatVec ambient) const {
    const Component& c = comp(p, w);
    c.reduction.reduce(ambient);
    RatVec out(c.basis_cols.size(), Rat(0));
    for (std::size_t i = 0; i < c.basis_cols.size(); ++i)
        out[i] = ambient[static_cast<std::size_t>(c.basis_cols[i])];
    return out;
}

int DeRhamAlgebra::dim(int p, int w) const {
    if (p < 0 || w < 0) return 0;
    if (p > p_cap_ + 1) return 0;  // beyond cache; only valid for p > #generators
    return static_cast<int>(comp(p, w).basis.size());
}

const std::vector<FormBasisElt>& DeRhamAlgebra::basis(int p, int w) const { return comp(p, w).basis; }

const RatMatrix& DeRhamAlgebra::epsilon_matrix(int p, int w) const {
    if (p < 0 || p > p_cap_ || w < 0 || w > w_cap_) throw Error("epsilon outside cached range");
    return eps_[static_cast<std::size_t>(p)][static_cast<std::size_t>(w)];
}

Form DeRhamAlgebra::epsilon(const Form& f) const {
    return Form{f.p + 1, f.w, epsilon_matrix(f.p, f.w).apply(f.coords)};
}

Form DeRhamAlgebra::wedge(const Form& a, const Form& b) const {
    int p = a.p + b.p, w = a.w + b.w;
    const Component& dst = comp(p, w);
    RatVec ambient(static_cast<std::size_t>(dst.ambient_dim), Rat(0));
    const auto& ba = basis(a.p, a.w);
    const auto& bb = basis(b.p, b.w);
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j] == 0) continue;
            const FormBasisElt& fa = ba[i];
            const FormBasisElt& fbj = bb[j];
            int sg = merge_sign(fa.dxs, fbj.dxs);
            if (sg == 0) continue;
            const RatVec& prod = A_->basis_product(fa.coeff_weight, fa.coeff_index,
                                                   fbj.coeff_weight, fbj.coeff_index);
            int base = ambient_index(dst, merged_set(fa.dxs, fbj.dxs), 0);
            Rat c = a.coords[i] * b.coords[j] * sg;
            for (std::size_t k = 0; k < prod.size(); ++k)
                if (prod[k] != 0) ambient[static_cast<std::size_t>(base) + k] += c * prod[k];
        }
    }
    return Form{p, w, reduce_ambient(p, w, std::move(ambient))};
}

Form DeRhamAlgebra::from_element(const Elem& a) const {
    RatVec ambient = a.coords;
    return Form{0, a.weight, reduce_ambient(0, a.weight, std::move(ambient))};
}

Form DeRhamAlgebra::basis_form(int p, int w, int k) const {
    Form f = zero_form(p, w);
    f.coords[static_cast<std::size_t>(k)] = 1;
    return f;
}

Form DeRhamAlgebra::zero_form(int p, int w) const {
    return Form{p, w, RatVec(static_cast<std::size_t>(dim(p, w)), Rat(0))};
}

int DeRhamAlgebra::cohomology_dim(int p, int w) const {
    const RatMatrix& d_out = epsilon_matrix(p, w);
    if (p == 0) {
        RatMatrix d_in(dim(0, w), 0);
        return homology_dim(d_out, d_in);
    }
    return homology_dim(d_out, epsilon_matrix(p - 1, w));
}

KaehlerModule::KaehlerModule(const GradedAlgebra& A, int w_cap) : dr_(A, 1, w_cap) {}

const RatMatrix& EpsilonCdgaMap::matrix(int p, int w) const {
    if (p < 0 || p > p_cap_ || w < 0 || w > w_cap_) throw Error("map component outside cached range");
    return mats_[static_cast<std::size_t>(p)][static_cast<std::size_t>(w)];
}

Form EpsilonCdgaMap::apply(const Form& f) const {
    return Form{f.p, f.w, matrix(f.p, f.w).apply(f.coords)};
}

EpsilonCdgaMap epsilon_extend(const DeRhamAlgebra& source, const DeRhamAlgebra& target,
                              const std::vector<Form>& gen_images) {
    const GradedAlgebra& A = source.algebra();
    const int g = A.num_generators();
    if (static_cast<int>(gen_images.size()) != g)
        throw Error("epsilon_extend: one image per generator required");
    for (int i = 0; i < g; ++i) {
        if (gen_images[static_cast<std::size_t>(i)].p != 0)
            throw Error("epsilon_extend: generator images must be 0-forms");
        if (gen_images[static_cast<std::size_t>(i)].w != A.weights()[static_cast<std::size_t>(i)])
            throw Error("epsilon_extend: generator image has wrong weight");
    }

    auto eval0 = [&](const Poly& poly, int weight) -> Form {
        // evaluate a homogeneous polynomial in the generators at the images
        Form acc = target.zero_form(0, weight);
        for (const auto& [e, c] : poly.terms()) {
            Form t = target.from_element(target.algebra().unit());
            for (int i = 0; i < g; ++i)
                for (unsigned k = 0; k < e[static_cast<std::size_t>(i)]; ++k)
                    t = target.wedge(t, gen_images[static_cast<std::size_t>(i)]);
            for (std::size_t k = 0; k < t.coords.size(); ++k)
                acc.coords[k] += c * t.coords[k];
        }
        return acc;
    };

    for (const auto& f : A.presentation().relations) {
        int dw = *f.weight(A.weights());
        if (dw > target.w_cap()) continue;  // unverifiable beyond the cache
        if (!eval0(f, dw).is_zero())
            throw RelationNotRespected("epsilon_extend: relation does not map to zero");
    }

    EpsilonCdgaMap out;
    out.source_ = &source;
    out.target_ = &target;
    out.p_cap_ = std::min(source.p_cap(), target.p_cap());
    out.w_cap_ = std::min(source.w_cap(), target.w_cap());
    out.mats_.resize(static_cast<std::size_t>(out.p_cap_) + 1);

    std::vector<Form> dx_images;  // dx_i must go to epsilon(f(x_i))
    for (int i = 0; i < g; ++i) dx_images.push_back(target.epsilon(gen_images[static_cast<std::size_t>(i)]));

    for (int p = 0; p <= out.p_cap_; ++p) {
        out.mats_[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(out.w_cap_) + 1);
        for (int w = 0; w <= out.w_cap_; ++w) {
            RatMatrix m(target.dim(p, w), source.dim(p, w));
            const auto& bs = source.basis(p, w);
            for (std::size_t k = 0; k < bs.size(); ++k) {
                const FormBasisElt& fb = bs[k];
                Form img = eval0(A.basis_poly(fb.coeff_weight, fb.coeff_index), fb.coeff_weight);
                for (int i : fb.dxs) img = target.wedge(img, dx_images[static_cast<std::size_t>(i)]);
                for (std::size_t r = 0; r < img.coords.size(); ++r)
                    if (img.coords[r] != 0) m.set(static_cast<int>(r), static_cast<int>(k), img.coords[r]);
            }
            out.mats_[static_cast<std::size_t>(p)][static_cast<std::size_t>(w)] = std::move(m);
        }
    }
    return out;
}

}  // namespace chom
