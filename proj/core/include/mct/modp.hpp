#ifndef MCT_MODP_HPP
#define MCT_MODP_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace mct {

bool is_prime(long long p);

/// Matrix over F_p in triplet form; at most one entry per cell.
struct MatModP {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<std::array<int, 3>> entries; // (row, col, value)
};

/// Exact rank over F_p. Dense elimination up to 5000 columns, sparse beyond.
int rank_mod_p(const MatModP& m);
int rank_mod_p(const std::vector<std::vector<int>>& dense, int p);

namespace detail {
int rank_dense(const MatModP& m);
int rank_sparse(const MatModP& m);
} // namespace detail

} // namespace mct

#endif
