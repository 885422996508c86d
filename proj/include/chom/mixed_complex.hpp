#pragma once

#include <string>
#include <vector>

#include "chom/derham.hpp"
#include "chom/rat_matrix.hpp"

namespace chom {

/// A weight-graded mixed complex: per weight w a bounded family of chain
/// spaces M_{n,w} with b of degree -1 and B of degree +1, anticommuting and
/// both square-zero. Degree convention: b lowers the stored index n, B raises
/// it; the conventional homological degree is -n.
class MixedComplex {
public:
    struct WeightPart {
        std::vector<int> dims;       // dims[n] = dim M_{n,w}
        std::vector<RatMatrix> b;    // b[n] : M_n -> M_{n-1}  (b[0] maps to 0)
        std::vector<RatMatrix> B;    // B[n] : M_n -> M_{n+1}
    };

    explicit MixedComplex(std::vector<WeightPart> parts);

    /// Q in degree 0, b = B = 0: the unit of the tensor structure.
    static MixedComplex unit();

    int w_cap() const { return static_cast<int>(parts_.size()) - 1; }
    /// Largest n with M_{n,w} possibly nonzero.
    int degree_bound(int w) const;
    int dim(int n, int w) const;
    RatMatrix b(int n, int w) const;
    RatMatrix B(int n, int w) const;

private:
    std::vector<WeightPart> parts_;
};

struct MixedIdentityReport {
    bool ok = true;
    std::vector<std::string> violations;  // "(n,w): which identity"
};

/// Checks b^2 = 0, B^2 = 0 and bB + Bb = 0 exactly over the cached range.
MixedIdentityReport verify_mixed_identities(const MixedComplex& m);

/// Homology dimension in total degree d of the negative cyclic totalization
/// at weight w: term_d = (+)_{i>=0} M_{d+2i,w}, differential b + B (B shifts
/// two slots down in the total grading).
int negative_cyclic_dim(const MixedComplex& m, int d, int w);

enum class Parity { Even, Odd };

/// Homology of the 2-periodic totalization (b + B on parity-graded sums).
int periodic_dim(const MixedComplex& m, Parity parity, int w);

/// epsilon(A) as a mixed complex: M_{n,w} = Omega^n_w, b = 0, B = the de Rham
/// differential. Requires the de Rham cache to cover p up to #generators.
MixedComplex derham_mixed(const DeRhamAlgebra& d);

}  // namespace chom
