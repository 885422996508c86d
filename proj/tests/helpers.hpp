#pragma once

#include <random>
#include <vector>

#include "chom/graded_algebra.hpp"
#include "chom/rat_matrix.hpp"

namespace testutil {

using namespace chom;

inline Poly var(int i, int n) { return Poly::variable(i, n); }

inline GradedAlgebra poly_ring(int g, int cap) {
    Presentation p;
    const char* names[] = {"x1", "x2", "x3", "x4", "x5"};
    for (int i = 0; i < g; ++i) p.generators.push_back({names[i], 1});
    return GradedAlgebra(p, cap);
}

inline GradedAlgebra q_x(int cap) {
    Presentation p;
    p.generators = {{"x", 1}};
    return GradedAlgebra(p, cap);
}

inline GradedAlgebra q_xy(int cap) {
    Presentation p;
    p.generators = {{"x", 1}, {"y", 1}};
    return GradedAlgebra(p, cap);
}

inline GradedAlgebra q_x_mod_xk(int k, int cap) {
    Presentation p;
    p.generators = {{"x", 1}};
    p.relations = {var(0, 1).pow(static_cast<unsigned>(k))};
    return GradedAlgebra(p, cap);
}

inline GradedAlgebra q_xy_mod_x2y2(int cap) {
    Presentation p;
    p.generators = {{"x", 1}, {"y", 1}};
    p.relations = {var(0, 2) * var(0, 2), var(1, 2) * var(1, 2)};
    return GradedAlgebra(p, cap);
}

// Q[x,y]/(y^2 - x^3), weights (2,3)
inline GradedAlgebra cusp(int cap) {
    Presentation p;
    p.generators = {{"x", 2}, {"y", 3}};
    p.relations = {var(1, 2) * var(1, 2) - var(0, 2) * var(0, 2) * var(0, 2)};
    return GradedAlgebra(p, cap);
}

inline Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline RatMatrix random_matrix(std::mt19937& rng, int rows, int cols, double density = 0.5) {
    RatMatrix m(rows, cols);
    std::bernoulli_distribution hit(density);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (hit(rng)) {
                Rat v = random_rat(rng);
                if (v != 0) m.set(r, c, v);
            }
    return m;
}

}  // namespace testutil
