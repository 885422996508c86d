#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chom/derham.hpp"
#include "chom/graded_algebra.hpp"
#include "chom/mixed_complex.hpp"

namespace chom {

/// Basis element of the normalized cyclic bar chain group C_{n,w}:
/// a tensor  m_0 (x) m_1 (x) ... (x) m_n  of basis monomials, slot 0 in A and
/// slots 1..n in the augmentation ideal (weight >= 1). slots[i] = (weight,
/// basis index into weight_basis).
struct TensorBasisElt {
    std::vector<std::pair<int, int>> slots;
    bool operator<(const TensorBasisElt& o) const { return slots < o.slots; }
};

/// A chain in C_{n,w} as coordinates over the cached basis.
struct Chain {
    int n = 0;
    int w = 0;
    RatVec coords;
    bool is_zero() const { return is_zero_vec(coords); }
};

/// Normalized cyclic bar complex of a connected weight-graded algebra: chain
/// groups C_{n,w} = (A (x) Abar^n)_w for all n (zero for n > w), with the
/// Hochschild boundary b, the Connes operator B and the shuffle product.
/// Everything is cached eagerly for w <= w_cap; immutable afterwards.
class HochschildChains {
public:
    HochschildChains(const GradedAlgebra& A, int w_cap, int jobs = 1);

    const GradedAlgebra& algebra() const { return *A_; }
    int w_cap() const { return w_cap_; }

    int dim(int n, int w) const;
    const std::vector<TensorBasisElt>& basis(int n, int w) const;
    /// b : C_{n,w} -> C_{n-1,w}
    const RatMatrix& boundary_b(int n, int w) const;
    /// B : C_{n,w} -> C_{n+1,w}
    const RatMatrix& connes_B(int n, int w) const;

    int hh_dim(int n, int w) const;

    Chain zero_chain(int n, int w) const;
    Chain basis_chain(int n, int w, int k) const;
    /// Multilinear expansion of an elementary tensor of algebra elements;
    /// factors[0] may have any weight, factors[i>=1] must have weight >= 1.
    Chain tensor(const std::vector<Elem>& factors) const;

    /// Shuffle product C_{p,v} (x) C_{q,u} -> C_{p+q,v+u}.
    Chain shuffle(const Chain& a, const Chain& b) const;

    /// HKR antisymmetrization Omega^n_w -> C_{n,w} (no 1/n! factor):
    /// m dx_{i1}^...^dx_{in}  |->  sum_sigma sgn(sigma) m (x) x_{i sigma(1)}
    /// (x) ... (x) x_{i sigma(n)}.
    RatMatrix hkr_matrix(const DeRhamAlgebra& d, int n, int w) const;

    /// (C, b, B) as a mixed complex, full range n <= w per weight.
    MixedComplex to_mixed() const;

private:
    struct Cell {
        std::vector<TensorBasisElt> basis;
        std::map<TensorBasisElt, int> index;
        RatMatrix b;  // to (n-1, w)
        RatMatrix B;  // to (n+1, w)
    };
    const Cell& cell(int n, int w) const;
    void build_boundaries(int n, int w, Cell& c) const;

    const GradedAlgebra* A_;
    int w_cap_;
    std::vector<std::vector<Cell>> cells_;  // [w][n], n = 0..w+1
};

struct HkrCell {
    int n, w;
    int omega_dim, hh;
    bool dims_equal, image_in_cycles, induced_iso;
};

struct HkrReport {
    bool all_pass = true;
    bool multiplicative = true;  // hkr(a^b) = shuffle(hkr a, hkr b), exact
    std::vector<HkrCell> cells;
    std::vector<std::string> failures;
};

/// Dimension equality, homology isomorphism (rank test) and exact shuffle
/// multiplicativity of the HKR map, per (n,w) with n <= n_max, w <= W.
/// For non-smooth inputs the mismatches land in the report, never in a throw.
HkrReport hkr_check(const GradedAlgebra& A, int n_max, int W, int jobs = 1);

struct BSuiteReport {
    struct DefectWitness {
        int p, v;  // basis chain u in C_{p,v}
        int q, u;  // basis chain v in C_{q,u}
        int ui, vi;
    };
    std::optional<DefectWitness> chain_defect;  // first found
    int defect_count = 0;

    int cycle_pairs_tested = 0;
    bool cycle_defects_are_boundaries = true;

    /// lambda[n]: scalar with [B hkr(omega)] = lambda_n [hkr(eps omega)] on
    /// homology; nullopt when no class in range pins it down.
    std::vector<std::optional<Rat>> lambda;
    bool lambda_consistent = true;
    std::vector<std::string> notes;
};

/// Chain-level Leibniz defect of B against the shuffle product, the
/// homology-level repair (defects of cycles are exact boundaries, witnesses
/// solved for), and the measured comparison constants lambda_n.
BSuiteReport b_compatibility_suite(const GradedAlgebra& A, int n_max, int W);

}  // namespace chom
