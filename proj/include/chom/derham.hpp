#pragma once

#include <vector>

#include "chom/graded_algebra.hpp"

namespace chom {

/// Basis element of Omega^p_w: the form  m * dx_{S[0]} ^ ... ^ dx_{S[p-1]}
/// with S strictly increasing and m a standard monomial of the coefficient
/// weight w - weight(S).
struct FormBasisElt {
    std::vector<int> dxs;
    int coeff_weight;
    int coeff_index;
};

/// A homogeneous p-form of weight w, as coordinates over basis(p, w).
struct Form {
    int p = 0;
    int w = 0;
    RatVec coords;
    bool is_zero() const { return is_zero_vec(coords); }
};

// Sign authority for the ordered-basis convention: every wedge/insertion sign
// in the library goes through these two functions.

/// Sign of inserting index i into the strictly increasing set S (as dx_i ^ dx_S
/// -> dx_{sorted}); returns 0 when i is already in S.
int insertion_sign(int i, const std::vector<int>& S);
/// Sign of sorting the concatenation S . T; returns 0 when they intersect.
int merge_sign(const std::vector<int>& S, const std::vector<int>& T);

/// The de Rham algebra DR(A) = Sym_A(Omega^1[1]) = (+)_p Omega^p, with the
/// de Rham differential as the square-zero derivation epsilon raising p.
/// Components are cached for p <= p_cap + 1, w <= w_cap; epsilon matrices for
/// p <= p_cap. Immutable after construction.
///
/// Homological placement: a p-form is stored at index p (the homological
/// degree is -p); epsilon raises the index.
class DeRhamAlgebra {
public:
    DeRhamAlgebra(const GradedAlgebra& A, int p_cap, int w_cap);

    const GradedAlgebra& algebra() const { return *A_; }
    int p_cap() const { return p_cap_; }
    int w_cap() const { return w_cap_; }

    int dim(int p, int w) const;
    const std::vector<FormBasisElt>& basis(int p, int w) const;

    /// Matrix of the de Rham differential Omega^p_w -> Omega^{p+1}_w.
    const RatMatrix& epsilon_matrix(int p, int w) const;
    Form epsilon(const Form& f) const;
    Form wedge(const Form& a, const Form& b) const;

    Form from_element(const Elem& a) const;  // p = 0
    Form basis_form(int p, int w, int k) const;
    Form zero_form(int p, int w) const;

    /// dim of H^p at weight w of (Omega^{p-1} -> Omega^p -> Omega^{p+1}).
    int cohomology_dim(int p, int w) const;

private:
    struct Component {
        // ambient: blocks (S, A-basis of weight w - wt(S)); quotient by the
        // Jacobian submodule slice
        std::vector<std::vector<int>> sets;           // increasing p-subsets with wt <= w
        std::vector<int> block_offset;                // ambient offset per set
        int ambient_dim = 0;
        Rref reduction;
        std::vector<int> basis_cols;
        std::map<int, int> col_to_basis;
        std::vector<FormBasisElt> basis;
    };

    const Component& comp(int p, int w) const;
    int ambient_index(const Component& c, const std::vector<int>& S, int a_index) const;
    RatVec reduce_ambient(int p, int w, RatVec ambient) const;
    int set_weight(const std::vector<int>& S) const;

    const GradedAlgebra* A_;
    int p_cap_, w_cap_;
    std::vector<std::vector<Component>> comps_;   // [p][w], p <= p_cap + 1
    std::vector<std::vector<RatMatrix>> eps_;     // [p][w], p <= p_cap
};

/// Kaehler differentials Omega^1_{A/Q} with the universal derivation
/// d : A_w -> Omega^1_w. Thin per-weight view over the p = 1 component.
class KaehlerModule {
public:
    KaehlerModule(const GradedAlgebra& A, int w_cap);
    int dim(int w) const { return dr_.dim(1, w); }
    /// Matrix of d : A_w -> Omega^1_w.
    const RatMatrix& derivation(int w) const { return dr_.epsilon_matrix(0, w); }
    const DeRhamAlgebra& ambient() const { return dr_; }

private:
    DeRhamAlgebra dr_;
};

/// An epsilon-cdga map DR(A) -> target determined by images of the algebra
/// generators (the left-adjoint/freeness property: dx_i must go to
/// epsilon(f(x_i)), everything else is forced by multiplicativity).
class EpsilonCdgaMap {
public:
    const RatMatrix& matrix(int p, int w) const;
    Form apply(const Form& f) const;
    int p_cap() const { return p_cap_; }
    int w_cap() const { return w_cap_; }

private:
    friend EpsilonCdgaMap epsilon_extend(const DeRhamAlgebra&, const DeRhamAlgebra&,
                                         const std::vector<Form>&);
    const DeRhamAlgebra* source_;
    const DeRhamAlgebra* target_;
    int p_cap_, w_cap_;
    std::vector<std::vector<RatMatrix>> mats_;  // [p][w]
};

/// Builds the unique extension of an algebra map given on generators.
/// gen_images[i] must be a 0-form of the generator's weight in the target;
/// throws RelationNotRespected when a defining relation does not map to zero.
EpsilonCdgaMap epsilon_extend(const DeRhamAlgebra& source, const DeRhamAlgebra& target,
                              const std::vector<Form>& gen_images);

}  // namespace chom
