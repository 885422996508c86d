#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chom/errors.hpp"
#include "chom/rational.hpp"

namespace chom {

/// Exponent vector of a monomial; length = number of generators.
using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial over Q.
class Poly {
public:
    Poly() = default;
    static Poly constant(const Rat& c, int nvars);
    static Poly variable(int idx, int nvars);
    static Poly monomial(const Exponents& e, const Rat& c = 1);

    bool is_zero() const { return terms_.empty(); }
    int nvars() const { return nvars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;
    Poly scaled(const Rat& c) const;
    Poly pow(unsigned k) const;
    bool operator==(const Poly& rhs) const { return nvars_ == rhs.nvars_ && terms_ == rhs.terms_; }

    /// Partial derivative with respect to generator i.
    Poly derivative(int i) const;

    /// Weight of a nonzero homogeneous polynomial; nullopt when mixed-weight.
    std::optional<int> weight(const std::vector<int>& weights) const;

    void add_term(const Exponents& e, const Rat& c);

private:
    int nvars_ = 0;
    std::map<Exponents, Rat> terms_;
};

inline int monomial_weight(const Exponents& e, const std::vector<int>& weights) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(e[i]) * weights[i];
    return w;
}

/// All monomials of the given weight, in descending lex order by exponent
/// vector (generator declaration order). This is the fixed monomial order
/// every basis in the library is stated in.
std::vector<Exponents> monomials_of_weight(const std::vector<int>& weights, int w);

std::string poly_to_string(const Poly& p, const std::vector<std::string>& names);

}  // namespace chom
