#pragma once

#include <map>
#include <string>
#include <vector>

#include "chom/poly.hpp"
#include "chom/rat_matrix.hpp"

namespace chom {

struct Generator {
    std::string name;
    int weight;
};

/// Finite presentation Q[x_1..x_g]/(f_1..f_r) with positive generator weights
/// and weight-homogeneous relations.
struct Presentation {
    std::vector<Generator> generators;
    std::vector<Poly> relations;

    std::vector<int> weights() const;
    std::vector<std::string> names() const;
};

/// Element of a fixed weight piece A_w, as coordinates over weight_basis(w).
struct Elem {
    int weight = 0;
    RatVec coords;
    bool is_zero() const { return is_zero_vec(coords); }
};

/// Connected non-negatively weight-graded commutative Q-algebra with cached
/// per-weight monomial bases up to a weight cap. Immutable after construction;
/// safe for concurrent reads.
///
/// Basis of A_w: the standard monomials left over after row-reducing the
/// weight-w slice of the relation ideal, I_w = span{ m * f_j }, against the
/// descending-lex monomial list.
class GradedAlgebra {
public:
    GradedAlgebra(Presentation pres, int weight_cap);

    const Presentation& presentation() const { return pres_; }
    int weight_cap() const { return cap_; }
    int num_generators() const { return static_cast<int>(pres_.generators.size()); }
    const std::vector<int>& weights() const { return weights_; }

    int dim(int w) const;
    /// Ordered reduced monomial representatives of A_w.
    const std::vector<Exponents>& weight_basis(int w) const;
    const std::vector<Exponents>& weight_monomials(int w) const;

    /// Coordinates of a homogeneous polynomial over weight_basis(weight(p)).
    /// Throws NotHomogeneous. The zero polynomial is rejected (no weight).
    Elem elem(const Poly& p) const;
    RatVec normal_form(const Poly& p) const { return elem(p).coords; }

    Elem unit() const;
    Elem generator_elem(int i) const;
    Elem zero_elem(int w) const;
    Elem basis_elem(int w, int i) const;
    Poly basis_poly(int w, int i) const;

    Elem multiply(const Elem& a, const Elem& b) const;
    /// Product of basis elements, precomputed for all v + w <= cap.
    const RatVec& basis_product(int v, int i, int w, int j) const;

    /// [dim A_0, ..., dim A_W]; requires W <= weight_cap.
    std::vector<int> hilbert_series(int W) const;

private:
    struct Slice {
        std::vector<Exponents> monos;
        std::map<Exponents, int> mono_index;
        Rref reduction;                  // rref of the ideal slice I_w
        std::vector<int> basis_cols;     // free columns = standard monomials
        std::vector<Exponents> basis_monos;
        std::map<int, int> col_to_basis;
    };

    const Slice& slice(int w) const;
    RatVec reduce_vector(int w, RatVec mono_coords) const;

    Presentation pres_;
    std::vector<int> weights_;
    std::vector<int> relation_weights_;
    int cap_;
    std::vector<Slice> slices_;
    // mult_[v][w][i * dim(w) + j] = coords of basis(v,i)*basis(w,j) in basis(v+w)
    std::vector<std::vector<std::vector<RatVec>>> mult_;
};

}  // namespace chom
