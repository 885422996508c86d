#include "chom/graded_algebra.hpp"

#include <algorithm>

namespace chom {

std::vector<int> Presentation::weights() const {
    std::vector<int> w;
    w.reserve(generators.size());
    for (const auto& g : generators) w.push_back(g.weight);
    return w;
}

std::vector<std::string> Presentation::names() const {
    std::vector<std::string> n;
    n.reserve(generators.size());
    for (const auto& g : generators) n.push_back(g.name);
    return n;
}

GradedAlgebra::GradedAlgebra(Presentation pres, int weight_cap)
    : pres_(std::move(pres)), weights_(pres_.weights()), cap_(weight_cap) {
    if (cap_ < 0) throw Error("negative weight cap");
    for (const auto& g : pres_.generators)
        if (g.weight < 1) throw Error("generator '" + g.name + "' must have positive weight (connectedness)");
    for (std::size_t i = 0; i < pres_.generators.size(); ++i)
        for (std::size_t j = i + 1; j < pres_.generators.size(); ++j)
            if (pres_.generators[i].name == pres_.generators[j].name)
                throw Error("duplicate generator name '" + pres_.generators[i].name + "'");
    for (const auto& f : pres_.relations) {
        if (f.is_zero()) throw NotHomogeneous("zero relation");
        if (f.nvars() != num_generators()) throw DimensionMismatch("relation variable count mismatch");
        auto w = f.weight(weights_);
        if (!w) throw NotHomogeneous("relation is not weight-homogeneous");
        if (*w < 1) throw Error("constant relation collapses the algebra");
        relation_weights_.push_back(*w);
    }

    slices_.resize(static_cast<std::size_t>(cap_) + 1);
    for (int w = 0; w <= cap_; ++w) {
        Slice& s = slices_[static_cast<std::size_t>(w)];
        s.monos = monomials_of_weight(weights_, w);
        for (std::size_t i = 0; i < s.monos.size(); ++i)
            s.mono_index.emplace(s.monos[i], static_cast<int>(i));

        // brute-force ideal slice: relation * every monomial of complementary weight
        std::vector<RatVec> rows;
        for (std::size_t j = 0; j < pres_.relations.size(); ++j) {
            int dj = relation_weights_[j];
            if (dj > w) continue;
            for (const auto& m : monomials_of_weight(weights_, w - dj)) {
                Poly prod = Poly::monomial(m) * pres_.relations[j];
                RatVec row(s.monos.size(), Rat(0));
                for (const auto& [e, c] : prod.terms())
                    row[static_cast<std::size_t>(s.mono_index.at(e))] = c;
                rows.push_back(std::move(row));
            }
        }
        RatMatrix ideal(static_cast<int>(rows.size()), static_cast<int>(s.monos.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (rows[r][c] != 0) ideal.set(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
        // Pivot on the highest column indices, i.e. the lex-smallest monomials,
        // so the quotient basis keeps the lex-greatest monomial of each coset
        // (e.g. Q[x,y]/(y^2 - x^3) keeps x^3 and reduces y^2 away).
        s.reduction = rref_of(ideal, ColOrder::Reverse);
        s.basis_cols = s.reduction.free_cols();
        for (std::size_t i = 0; i < s.basis_cols.size(); ++i)
            s.col_to_basis.emplace(s.basis_cols[i], static_cast<int>(i));
        for (int c : s.basis_cols) s.basis_monos.push_back(s.monos[static_cast<std::size_t>(c)]);
    }

    // multiplication tables for every basis pair with v + w <= cap
    mult_.resize(static_cast<std::size_t>(cap_) + 1);
    for (int v = 0; v <= cap_; ++v) {
        mult_[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(cap_ - v) + 1);
        for (int w = 0; v + w <= cap_; ++w) {
            auto& table = mult_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            table.resize(static_cast<std::size_t>(dim(v)) * static_cast<std::size_t>(dim(w)));
            for (int i = 0; i < dim(v); ++i)
                for (int j = 0; j < dim(w); ++j) {
                    Poly prod = basis_poly(v, i) * basis_poly(w, j);
                    const Slice& t = slice(v + w);
                    RatVec coords(t.monos.size(), Rat(0));
                    for (const auto& [e, c] : prod.terms())
                        coords[static_cast<std::size_t>(t.mono_index.at(e))] = c;
                    table[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim(w)) +
                          static_cast<std::size_t>(j)] = reduce_vector(v + w, std::move(coords));
                }
        }
    }
}

const GradedAlgebra::Slice& GradedAlgebra::slice(int w) const {
    if (w < 0 || w > cap_) throw Error("weight outside cached cap");
    return slices_[static_cast<std::size_t>(w)];
}

int GradedAlgebra::dim(int w) const {
    if (w < 0) return 0;
    return static_cast<int>(slice(w).basis_cols.size());
}

const std::vector<Exponents>& GradedAlgebra::weight_monomials(int w) const { return slice(w).monos; }

const std::vector<Exponents>& GradedAlgebra::weight_basis(int w) const { return slice(w).basis_monos; }

RatVec GradedAlgebra::reduce_vector(int w, RatVec mono_coords) const {
    const Slice& s = slice(w);
    s.reduction.reduce(mono_coords);
    RatVec out(s.basis_cols.size(), Rat(0));
    for (std::size_t i = 0; i < s.basis_cols.size(); ++i)
        out[i] = mono_coords[static_cast<std::size_t>(s.basis_cols[i])];
    return out;
}

Elem GradedAlgebra::elem(const Poly& p) const {
    auto w = p.weight(weights_);
    if (p.is_zero()) throw NotHomogeneous("zero polynomial has no weight; use zero_elem");
    if (!w) throw NotHomogeneous("polynomial is not weight-homogeneous");
    const Slice& s = slice(*w);
    RatVec coords(s.monos.size(), Rat(0));
    for (const auto& [e, c] : p.terms())
        coords[static_cast<std::size_t>(s.mono_index.at(e))] = c;
    return Elem{*w, reduce_vector(*w, std::move(coords))};
}

Elem GradedAlgebra::unit() const { return basis_elem(0, 0); }

Elem GradedAlgebra::generator_elem(int i) const { return elem(Poly::variable(i, num_generators())); }

Elem GradedAlgebra::zero_elem(int w) const { return Elem{w, RatVec(static_cast<std::size_t>(dim(w)), Rat(0))}; }

Elem GradedAlgebra::basis_elem(int w, int i) const {
    Elem e = zero_elem(w);
    e.coords[static_cast<std::size_t>(i)] = 1;
    return e;
}

Poly GradedAlgebra::basis_poly(int w, int i) const {
    const Slice& s = slice(w);
    return Poly::monomial(s.monos[static_cast<std::size_t>(s.basis_cols[static_cast<std::size_t>(i)])]);
}

const RatVec& GradedAlgebra::basis_product(int v, int i, int w, int j) const {
    return mult_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]
                [static_cast<std::size_t>(i) * static_cast<std::size_t>(dim(w)) + static_cast<std::size_t>(j)];
}

Elem GradedAlgebra::multiply(const Elem& a, const Elem& b) const {
    Elem out = zero_elem(a.weight + b.weight);
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j] == 0) continue;
            const RatVec& p = basis_product(a.weight, static_cast<int>(i), b.weight, static_cast<int>(j));
            Rat c = a.coords[i] * b.coords[j];
            for (std::size_t k = 0; k < p.size(); ++k) out.coords[k] += c * p[k];
        }
    }
    return out;
}

std::vector<int> GradedAlgebra::hilbert_series(int W) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(W) + 1);
    for (int w = 0; w <= W; ++w) out.push_back(dim(w));
    return out;
}

}  // namespace chom
