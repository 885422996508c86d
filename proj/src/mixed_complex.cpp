#include "chom/mixed_complex.hpp"

namespace chom {

MixedComplex::MixedComplex(std::vector<WeightPart> parts) : parts_(std::move(parts)) {
    for (const auto& p : parts_) {
        std::size_t n = p.dims.size();
        if (p.b.size() != n || p.B.size() != n)
            throw DimensionMismatch("mixed complex: dims/b/B length mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            int lower = i == 0 ? 0 : p.dims[i - 1];
            int upper = i + 1 < n ? p.dims[i + 1] : 0;
            if (p.b[i].cols() != p.dims[i] || p.b[i].rows() != lower)
                throw DimensionMismatch("mixed complex: b shape mismatch");
            if (p.B[i].cols() != p.dims[i] || p.B[i].rows() != upper)
                throw DimensionMismatch("mixed complex: B shape mismatch");
        }
    }
}

MixedComplex MixedComplex::unit() {
    WeightPart part;
    part.dims = {1};
    part.b = {RatMatrix(0, 1)};
    part.B = {RatMatrix(0, 1)};
    return MixedComplex({std::move(part)});
}

int MixedComplex::degree_bound(int w) const {
    if (w < 0 || w > w_cap()) throw Error("weight outside cached range");
    return static_cast<int>(parts_[static_cast<std::size_t>(w)].dims.size()) - 1;
}

int MixedComplex::dim(int n, int w) const {
    if (w < 0 || w > w_cap()) throw Error("weight outside cached range");
    const auto& d = parts_[static_cast<std::size_t>(w)].dims;
    if (n < 0 || n >= static_cast<int>(d.size())) return 0;
    return d[static_cast<std::size_t>(n)];
}

RatMatrix MixedComplex::b(int n, int w) const {
    if (n < 0 || n > degree_bound(w)) return RatMatrix(dim(n - 1, w), dim(n, w));
    return parts_[static_cast<std::size_t>(w)].b[static_cast<std::size_t>(n)];
}

RatMatrix MixedComplex::B(int n, int w) const {
    if (n < 0 || n > degree_bound(w)) return RatMatrix(dim(n + 1, w), dim(n, w));
    return parts_[static_cast<std::size_t>(w)].B[static_cast<std::size_t>(n)];
}

MixedIdentityReport verify_mixed_identities(const MixedComplex& m) {
    MixedIdentityReport rep;
    auto fail = [&](int n, int w, const std::string& what) {
        rep.ok = false;
        rep.violations.push_back("(" + std::to_string(n) + "," + std::to_string(w) + "): " + what);
    };
    for (int w = 0; w <= m.w_cap(); ++w) {
        int bound = m.degree_bound(w);
        for (int n = 0; n <= bound; ++n) {
            if (n >= 1 && !(m.b(n - 1, w) * m.b(n, w)).is_zero()) fail(n, w, "b^2 != 0");
            if (!(m.B(n + 1, w) * m.B(n, w)).is_zero()) fail(n, w, "B^2 != 0");
            if (!(m.b(n + 1, w) * m.B(n, w) + m.B(n - 1, w) * m.b(n, w)).is_zero())
                fail(n, w, "bB + Bb != 0");
        }
    }
    return rep;
}

namespace {

// slots of the negative cyclic term in total degree t: n = t + 2i >= 0
std::vector<int> cyclic_slots(const MixedComplex& m, int t, int w) {
    std::vector<int> out;
    int bound = m.degree_bound(w);
    int n0 = t >= 0 ? t : (t % 2 == 0 ? 0 : 1);
    for (int n = n0; n <= bound; n += 2)
        if (n >= t) out.push_back(n);
    return out;
}

struct Term {
    std::vector<int> slots;
    std::vector<int> offset;
    int total = 0;
};

Term make_term(const MixedComplex& m, const std::vector<int>& slots, int w) {
    Term t;
    t.slots = slots;
    for (int n : slots) {
        t.offset.push_back(t.total);
        t.total += m.dim(n, w);
    }
    return t;
}

void place_block(RatMatrix& out, const RatMatrix& block, int row0, int col0) {
    for (int r = 0; r < block.rows(); ++r)
        for (const auto& [c, v] : block.row(r)) out.set(row0 + r, col0 + c, v);
}

int slot_offset(const Term& t, int n) {
    for (std::size_t i = 0; i < t.slots.size(); ++i)
        if (t.slots[i] == n) return t.offset[i];
    return -1;
}

// b + B from src to dst: b sends slot n to n-1, B sends n to n+1.
RatMatrix total_differential(const MixedComplex& m, const Term& src, const Term& dst, int w) {
    RatMatrix out(dst.total, src.total);
    for (std::size_t i = 0; i < src.slots.size(); ++i) {
        int n = src.slots[i];
        if (n >= 1) {
            int off = slot_offset(dst, n - 1);
            if (off >= 0) place_block(out, m.b(n, w), off, src.offset[i]);
        }
        int off = slot_offset(dst, n + 1);
        if (off >= 0) place_block(out, m.B(n, w), off, src.offset[i]);
    }
    return out;
}

}  // namespace

int negative_cyclic_dim(const MixedComplex& m, int d, int w) {
    Term t_d = make_term(m, cyclic_slots(m, d, w), w);
    Term t_dm1 = make_term(m, cyclic_slots(m, d - 1, w), w);
    Term t_dp1 = make_term(m, cyclic_slots(m, d + 1, w), w);
    RatMatrix d_out = total_differential(m, t_d, t_dm1, w);
    RatMatrix d_in = total_differential(m, t_dp1, t_d, w);
    return homology_dim(d_out, d_in);
}

int periodic_dim(const MixedComplex& m, Parity parity, int w) {
    std::vector<int> even, odd;
    for (int n = 0; n <= m.degree_bound(w); ++n) (n % 2 == 0 ? even : odd).push_back(n);
    Term te = make_term(m, even, w);
    Term to = make_term(m, odd, w);
    const Term& self = parity == Parity::Even ? te : to;
    const Term& other = parity == Parity::Even ? to : te;
    RatMatrix d_out = total_differential(m, self, other, w);
    RatMatrix d_in = total_differential(m, other, self, w);
    return homology_dim(d_out, d_in);
}

MixedComplex derham_mixed(const DeRhamAlgebra& d) {
    const int g = d.algebra().num_generators();
    if (d.p_cap() < g)
        throw Error("derham_mixed: de Rham cache must cover p up to the generator count");
    std::vector<MixedComplex::WeightPart> parts;
    for (int w = 0; w <= d.w_cap(); ++w) {
        MixedComplex::WeightPart part;
        for (int n = 0; n <= g; ++n) part.dims.push_back(d.dim(n, w));
        for (int n = 0; n <= g; ++n) {
            part.b.emplace_back(n == 0 ? 0 : part.dims[static_cast<std::size_t>(n) - 1],
                                part.dims[static_cast<std::size_t>(n)]);
            if (n < g)
                part.B.push_back(d.epsilon_matrix(n, w));
            else
                part.B.emplace_back(0, part.dims[static_cast<std::size_t>(n)]);
        }
        parts.push_back(std::move(part));
    }
    return MixedComplex(std::move(parts));
}

}  // namespace chom
