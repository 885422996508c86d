#include "chom/poly.hpp"

#include <algorithm>
#include <sstream>

namespace chom {

Poly Poly::constant(const Rat& c, int nvars) {
    Poly p;
    p.nvars_ = nvars;
    if (c != 0) p.terms_.emplace(Exponents(static_cast<std::size_t>(nvars), 0u), c);
    return p;
}

Poly Poly::variable(int idx, int nvars) {
    Exponents e(static_cast<std::size_t>(nvars), 0u);
    e[static_cast<std::size_t>(idx)] = 1;
    return monomial(e);
}

Poly Poly::monomial(const Exponents& e, const Rat& c) {
    Poly p;
    p.nvars_ = static_cast<int>(e.size());
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = static_cast<int>(e.size());
    if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly out = *this;
    if (out.nvars_ == 0) out.nvars_ = rhs.nvars_;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::scaled(const Rat& k) const {
    Poly out;
    out.nvars_ = nvars_;
    if (k == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    Poly out;
    out.nvars_ = nvars_ ? nvars_ : rhs.nvars_;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) {
            Exponents e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

Poly Poly::pow(unsigned k) const {
    Poly out = Poly::constant(1, nvars_);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

Poly Poly::derivative(int i) const {
    Poly out;
    out.nvars_ = nvars_;
    for (const auto& [e, c] : terms_) {
        unsigned k = e[static_cast<std::size_t>(i)];
        if (k == 0) continue;
        Exponents d = e;
        --d[static_cast<std::size_t>(i)];
        out.add_term(d, c * static_cast<int>(k));
    }
    return out;
}

std::optional<int> Poly::weight(const std::vector<int>& weights) const {
    std::optional<int> w;
    for (const auto& [e, c] : terms_) {
        int mw = monomial_weight(e, weights);
        if (!w)
            w = mw;
        else if (*w != mw)
            return std::nullopt;
    }
    return w;
}

namespace {
void enumerate(const std::vector<int>& weights, std::size_t i, int remaining, Exponents& cur,
               std::vector<Exponents>& out) {
    if (i == weights.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int wi = weights[i];
    // highest exponent first: descending lex order overall
    for (int e = remaining / wi; e >= 0; --e) {
        cur[i] = static_cast<unsigned>(e);
        enumerate(weights, i + 1, remaining - e * wi, cur, out);
    }
    cur[i] = 0;
}
}  // namespace

std::vector<Exponents> monomials_of_weight(const std::vector<int>& weights, int w) {
    std::vector<Exponents> out;
    if (w < 0) return out;
    Exponents cur(weights.size(), 0u);
    enumerate(weights, 0, w, cur, out);
    return out;
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    // descending lex over exponent vectors, matching the basis order
    std::vector<std::pair<Exponents, Rat>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
        bool wrote_coeff = false;
        if (a != 1 || constant) {
            if (a.get_den() == 1)
                os << a.get_num().get_str();
            else
                os << a.get_num().get_str() << "/" << a.get_den().get_str();
            wrote_coeff = true;
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote_coeff || !first_var) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            first_var = false;
        }
    }
    return os.str();
}

}  // namespace chom
