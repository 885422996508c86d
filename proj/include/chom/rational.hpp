#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace chom {

// Exact rational scalar. All arithmetic in the library is over Q with
// arbitrary-precision numerator/denominator; nothing is ever rounded.
using Rat = mpq_class;

// Total bit length of numerator and denominator; used for pivot selection.
inline std::size_t bit_size(const Rat& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

using RatVec = std::vector<Rat>;

inline bool is_zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace chom
