#pragma once

#include <string>
#include <vector>

#include "chom/graded_algebra.hpp"

namespace chom {

/// Graded complete-intersection test: the Hilbert series of A must match the
/// coefficients of prod_j (1 - t^{d_j}) / prod_i (1 - t^{w_i}) through W.
bool regular_sequence_check(const GradedAlgebra& A, int W);

/// Two-term cotangent complex of a graded complete intersection:
/// degree 1: free A-module on e_1..e_r (weight(e_j) = weight(f_j)),
/// degree 0: free A-module on dx_1..dx_g, differential e_j |-> sum_i
/// (df_j/dx_i) dx_i. Derived symmetric powers of the shift L[1] are computed
/// with the characteristic-zero parity rule: the dx_i (odd) contribute
/// exterior powers, the e_j (even) contribute symmetric powers.
class CotangentComplex {
public:
    /// Throws NotCompleteIntersection unless the regular-sequence gate passes
    /// (checked through the algebra's cached weight cap) or ci_override is set.
    explicit CotangentComplex(const GradedAlgebra& A, bool ci_override = false);

    const GradedAlgebra& algebra() const { return *A_; }
    bool gate_overridden() const { return overridden_; }

    /// dim H_0(L)_w = dim Omega^1_w (checked against the Kaehler module in tests).
    int h0_dim(int w) const;
    int h1_dim(int w) const;

    /// dim H_n(Sym^p(L[1]))_w. Sym^p(L[1]) lives in degrees p..2p: the piece
    /// with a relation-factors has degree p + a and equals
    /// Lambda^{p-a}(dx) (x) Sym^a(e) over A.
    int sym_shift_dim(int p, int n, int w) const;

private:
    // basis of the a-piece at weight w: (coefficient index, dx-subset, e-multiexponent)
    struct PieceBasisElt {
        std::vector<int> dxs;
        std::vector<unsigned> es;
        int coeff_weight;
        int coeff_index;
    };
    struct Piece {
        std::vector<PieceBasisElt> basis;
        std::map<std::pair<std::vector<int>, std::vector<unsigned>>, int> block;  // -> offset
    };
    Piece piece(int p, int a, int w) const;
    RatMatrix koszul(int p, int a, int w) const;  // piece(a) -> piece(a-1)

    const GradedAlgebra* A_;
    std::vector<int> rel_weights_;
    bool overridden_ = false;
};

struct DerivedHkrCell {
    int n, w;
    int hh;
    int sym_total;
};

struct DerivedHkrReport {
    bool all_pass = true;
    bool ci = true;
    std::vector<DerivedHkrCell> cells;
    std::vector<std::string> failures;
};

/// Dual-pipeline comparison hh_dim(n,w) = sum_p dim H_n(Sym^p(L[1]))_w over
/// n <= n_max, w <= W. Both sides computed independently.
DerivedHkrReport derived_hkr_check(const GradedAlgebra& A, int n_max, int W, int jobs = 1);

}  // namespace chom
