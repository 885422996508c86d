// Acceptance suite: one pass/fail line per criterion, all checks exact over Q.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

#include "chom/cotangent.hpp"
#include "chom/derham.hpp"
#include "chom/hochschild.hpp"
#include "chom/mixed_complex.hpp"

using namespace chom;
using namespace testutil;

namespace {

int failures = 0;

// Runs one criterion, prints "criterion N: PASS|FAIL  name (T s)[ -- detail]".
void criterion(int id, const std::string& name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "over time budget";
    }
    if (!ok) ++failures;
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", id, ok ? "PASS" : "FAIL", name.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

const std::vector<GradedAlgebra>& test_algebras() {
    static const std::vector<GradedAlgebra> as = {q_x(6),           q_xy(6),
                                                  q_x_mod_xk(2, 6), q_x_mod_xk(3, 6),
                                                  q_xy_mod_x2y2(6), cusp(6)};
    return as;
}

// Mixed complexes of the criterion-2 algebras, shared with criterion 6.
std::vector<MixedComplex> g_mixed;

bool c1_ku_recovery(std::string& detail) {
    MixedComplex u = MixedComplex::unit();
    for (int d = -10; d <= 10; ++d) {
        int expect = (d <= 0 && d % 2 == 0) ? 1 : 0;
        if (negative_cyclic_dim(u, d, 0) != expect) {
            detail = "wrong dimension at degree " + std::to_string(d);
            return false;
        }
    }
    return true;
}

bool c2_mixed_identities(std::string& detail) {
    for (const GradedAlgebra& a : test_algebras()) {
        HochschildChains h(a, 6);
        MixedComplex m = h.to_mixed();
        MixedIdentityReport rep = verify_mixed_identities(m);
        if (!rep.ok) {
            detail = "identity violated: " + rep.violations.front();
            return false;
        }
        g_mixed.push_back(std::move(m));
    }
    return true;
}

bool c3_hkr_smooth(std::string& detail) {
    for (const GradedAlgebra& a : {q_x(5), q_xy(5)}) {
        HkrReport r = hkr_check(a, 3, 5);
        if (!r.all_pass || !r.multiplicative) {
            detail = r.failures.empty() ? "hkr mismatch" : r.failures.front();
            return false;
        }
    }
    return true;
}

bool c4_derived_hkr(std::string& detail) {
    DerivedHkrReport r1 = derived_hkr_check(q_x_mod_xk(2, 6), 4, 6);
    DerivedHkrReport r2 = derived_hkr_check(q_xy_mod_x2y2(4), 3, 4);
    for (const DerivedHkrReport* r : {&r1, &r2})
        if (!r->ci || !r->all_pass) {
            detail = r->failures.empty() ? "pipeline mismatch" : r->failures.front();
            return false;
        }
    return true;
}

bool c5_negative_cyclic_degree0(std::string& detail) {
    for (const GradedAlgebra& a : {q_x(5), q_xy(5)}) {
        HochschildChains h(a, 5);
        MixedComplex mh = h.to_mixed();
        DeRhamAlgebra d(a, a.num_generators(), 5);
        MixedComplex md = derham_mixed(d);
        for (int w = 0; w <= 5; ++w) {
            int nh = negative_cyclic_dim(mh, 0, w);
            int nd = negative_cyclic_dim(md, 0, w);
            int expect = w == 0 ? 1 : 0;
            if (nh != nd || nh != expect) {
                detail = "w=" + std::to_string(w) + ": hochschild " + std::to_string(nh) +
                         ", de Rham " + std::to_string(nd) + ", expected " +
                         std::to_string(expect);
                return false;
            }
        }
    }
    return true;
}

bool c6_periodicity(std::string& detail) {
    if (g_mixed.size() != test_algebras().size()) {
        detail = "criterion 2 complexes unavailable";
        return false;
    }
    for (std::size_t i = 0; i < g_mixed.size(); ++i) {
        const MixedComplex& m = g_mixed[i];
        for (int w = 0; w <= m.w_cap(); ++w) {
            int stab = -2 * m.degree_bound(w) - 2;
            bool ok = periodic_dim(m, Parity::Even, w) == negative_cyclic_dim(m, stab, w) &&
                      periodic_dim(m, Parity::Odd, w) == negative_cyclic_dim(m, stab - 1, w) &&
                      negative_cyclic_dim(m, stab - 2, w) == negative_cyclic_dim(m, stab, w);
            if (!ok) {
                detail = "algebra " + std::to_string(i) + ", w=" + std::to_string(w);
                return false;
            }
        }
    }
    return true;
}

bool c7_obstruction(std::string& detail) {
    BSuiteReport base = b_compatibility_suite(q_x(5), 3, 5);
    if (!base.chain_defect || base.defect_count == 0) {
        detail = "no chain-level Leibniz defect witness found";
        return false;
    }
    if (base.cycle_pairs_tested == 0 || !base.cycle_defects_are_boundaries) {
        detail = "cycle defect not an exact boundary";
        return false;
    }
    if (!base.lambda.empty() && (!base.lambda[0] || *base.lambda[0] != 1)) {
        detail = "lambda_0 != 1";
        return false;
    }

    // lambda_n for n <= 3 needs enough generators to produce nonzero n-forms.
    struct Run {
        GradedAlgebra a;
        int n_max, W;
    };
    std::vector<Run> runs;
    runs.push_back({q_xy(4), 2, 4});
    runs.push_back({poly_ring(3, 4), 3, 4});
    runs.push_back({poly_ring(4, 4), 3, 4});

    std::vector<std::optional<Rat>> seq(4);
    if (!base.lambda.empty()) seq[0] = base.lambda[0];
    for (const Run& r : runs) {
        BSuiteReport rep = b_compatibility_suite(r.a, r.n_max, r.W);
        if (!rep.lambda_consistent || !rep.cycle_defects_are_boundaries) {
            detail = "suite inconsistent on auxiliary algebra";
            return false;
        }
        for (std::size_t n = 0; n < rep.lambda.size() && n < seq.size(); ++n) {
            if (!rep.lambda[n]) continue;
            if (seq[n] && *seq[n] != *rep.lambda[n]) {
                detail = "lambda_" + std::to_string(n) + " differs between algebras";
                return false;
            }
            seq[n] = rep.lambda[n];
        }
    }
    std::ostringstream os;
    os << "lambda sequence:";
    for (std::size_t n = 0; n < seq.size(); ++n)
        os << " " << (seq[n] ? seq[n]->get_str() : std::string("?"));
    detail = os.str();
    for (int n = 0; n <= 3; ++n)
        if (!seq[static_cast<std::size_t>(n)]) {
            detail += "; lambda_" + std::to_string(n) + " not pinned down";
            return false;
        }
    return true;
}

// Forced-product identity: any epsilon-commuting multiplicative extension must
// send the basis form m dx_S to Phi(m) ^ eps(f(x_{s1})) ^ ... ; rebuilding the
// wedge in reversed order costs (-1)^{p(p-1)/2}.
bool uniqueness_on(std::mt19937& rng, const GradedAlgebra& a, std::string& detail) {
    int g = a.num_generators();
    DeRhamAlgebra d(a, g, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Form> imgs;
        for (int i = 0; i < g; ++i) {
            Poly f = Poly::constant(0, g);
            for (int j = 0; j < g; ++j) f = f + var(j, g).scaled(random_rat(rng));
            imgs.push_back(f.is_zero() ? d.zero_form(0, 1) : d.from_element(a.elem(f)));
        }
        EpsilonCdgaMap m = epsilon_extend(d, d, imgs);

        for (int p = 0; p + 1 <= g; ++p)
            for (int w = 0; w <= 5; ++w)
                if (m.matrix(p + 1, w) * d.epsilon_matrix(p, w) !=
                    d.epsilon_matrix(p, w) * m.matrix(p, w)) {
                    detail = "extension does not commute with epsilon";
                    return false;
                }

        for (int p = 0; p <= g; ++p)
            for (int w = 0; w <= 5; ++w) {
                const auto& bs = d.basis(p, w);
                for (std::size_t k = 0; k < bs.size(); ++k) {
                    const FormBasisElt& fb = bs[k];
                    Form coeff = d.zero_form(0, fb.coeff_weight);
                    coeff.coords[static_cast<std::size_t>(fb.coeff_index)] = 1;
                    Form acc = m.apply(coeff);
                    for (int s : fb.dxs)
                        acc = d.wedge(d.epsilon(imgs[static_cast<std::size_t>(s)]), acc);
                    int sg = ((p * (p - 1) / 2) % 2 == 0) ? 1 : -1;
                    Form img = m.apply(d.basis_form(p, w, static_cast<int>(k)));
                    for (std::size_t r = 0; r < img.coords.size(); ++r)
                        if (img.coords[r] != sg * acc.coords[r]) {
                            detail = "extension disagrees with the forced product";
                            return false;
                        }
                }
            }
    }
    return true;
}

bool c8_epsilon_freeness(std::string& detail) {
    std::mt19937 rng(97);
    return uniqueness_on(rng, q_x(5), detail) && uniqueness_on(rng, q_xy(5), detail);
}

bool c9_property_suites(std::string& detail) {
    std::mt19937 rng(101);
    GradedAlgebra a = q_xy_mod_x2y2(6);
    DeRhamAlgebra d(a, 2, 6);
    HochschildChains h(a, 6);
    std::uniform_int_distribution<int> pd(0, 1), wd(0, 3), nd(0, 2), cwd(0, 2);
    auto random_form = [&](int p, int w) {
        Form f = d.zero_form(p, w);
        for (auto& c : f.coords) c = random_rat(rng);
        return f;
    };
    auto random_chain = [&](int n, int w) {
        Chain c = h.zero_chain(n, w);
        for (auto& x : c.coords) x = random_rat(rng);
        return c;
    };

    for (int trial = 0; trial < 100; ++trial)
        if (!d.epsilon(d.epsilon(random_form(pd(rng), wd(rng)))).is_zero()) {
            detail = "epsilon^2 != 0";
            return false;
        }

    for (int trial = 0; trial < 100; ++trial) {
        int p = pd(rng), q = pd(rng), v = wd(rng), u = wd(rng);
        Form alpha = random_form(p, v), beta = random_form(q, u);
        Form lhs = d.epsilon(d.wedge(alpha, beta));
        Form r1 = d.wedge(d.epsilon(alpha), beta);
        Form r2 = d.wedge(alpha, d.epsilon(beta));
        int sg = p % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < lhs.coords.size(); ++k)
            if (lhs.coords[k] != r1.coords[k] + sg * r2.coords[k]) {
                detail = "graded Leibniz rule failed";
                return false;
            }
    }

    for (int trial = 0; trial < 100; ++trial) {
        int p = nd(rng), q = nd(rng), r = nd(rng);
        int v = cwd(rng), u = cwd(rng), t = cwd(rng);
        if (p > v || q > u || r > t) continue;
        Chain x = random_chain(p, v), y = random_chain(q, u), z = random_chain(r, t);

        Chain xy = h.shuffle(x, y), yx = h.shuffle(y, x);
        int sg = (p * q) % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < xy.coords.size(); ++k)
            if (xy.coords[k] != sg * yx.coords[k]) {
                detail = "shuffle graded commutativity failed";
                return false;
            }
        if (h.shuffle(xy, z).coords != h.shuffle(x, h.shuffle(y, z)).coords) {
            detail = "shuffle associativity failed";
            return false;
        }

        if (p + q >= 1) {
            RatVec lhs = h.boundary_b(p + q, v + u).apply(xy.coords);
            Chain bx{p - 1, v, h.boundary_b(p, v).apply(x.coords)};
            Chain by{q - 1, u, h.boundary_b(q, u).apply(y.coords)};
            Chain r1 = p >= 1 ? h.shuffle(bx, y) : h.zero_chain(p + q - 1, v + u);
            Chain r2 = q >= 1 ? h.shuffle(x, by) : h.zero_chain(p + q - 1, v + u);
            int sp = p % 2 == 0 ? 1 : -1;
            for (std::size_t k = 0; k < lhs.size(); ++k)
                if (lhs[k] != r1.coords[k] + sp * r2.coords[k]) {
                    detail = "b is not a derivation for shuffle";
                    return false;
                }
        }
    }
    return true;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion(1, "k[u] recovery (ext-ku pattern)", 1, c1_ku_recovery);
    criterion(2, "mixed identities on six algebras", 60, c2_mixed_identities);
    criterion(3, "HKR on smooth algebras", 120, c3_hkr_smooth);
    criterion(4, "derived HKR on complete intersections", 300, c4_derived_hkr);
    criterion(5, "negative cyclic degree 0 vs even de Rham", 120, c5_negative_cyclic_degree0);
    criterion(6, "periodic = stabilized negative cyclic", 120, c6_periodicity);
    criterion(7, "Leibniz obstruction and lambda sequence", 300, c7_obstruction);
    criterion(8, "epsilon-cdga freeness / uniqueness", 120, c8_epsilon_freeness);
    criterion(9, "randomized property suites", 120, c9_property_suites);
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("total: %d/9 criteria passed (%.2f s)\n", 9 - failures, total);
    return failures == 0 ? 0 : 1;
}
