#ifndef MCT_TEST_UTIL_HPP
#define MCT_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mct/ideal.hpp"
#include "mct/monomial.hpp"

namespace mct_test {

inline std::vector<std::string> var_names(int n) {
    std::vector<std::string> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

/// Proper nonzero square-free ideal on 2..max_vars variables with up to
/// max_gens generators (fewer after minimalization). Deterministic in the
/// rng state.
inline mct::MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int max_vars = 5,
                                                  int max_gens = 6) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vars - 1));
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gens));
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<mct::Monomial> gens;
    gens.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::uint32_t mask = 1 + static_cast<std::uint32_t>(rng() % full);
        gens.push_back(mct::squarefree_from_mask(n, mask));
    }
    return mct::MonomialIdeal::from_generators(var_names(n), gens);
}

/// Proper nonzero monomial ideal with exponents up to max_exp.
inline mct::MonomialIdeal random_ideal(std::mt19937_64& rng, int max_vars = 5, int max_gens = 6,
                                       int max_exp = 3) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vars - 1));
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gens));
    std::vector<mct::Monomial> gens;
    gens.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        mct::Monomial m = mct::Monomial::one(n);
        for (int v = 0; v < n; ++v) {
            int e = static_cast<int>(rng() % static_cast<std::uint64_t>(max_exp + 1));
            if (e > 0) m = m.times_power(v, e);
        }
        if (m.is_one()) m = m.times_power(static_cast<int>(rng() % static_cast<std::uint64_t>(n)),
                                          1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_exp)));
        gens.push_back(m);
    }
    return mct::MonomialIdeal::from_generators(var_names(n), gens);
}

} // namespace mct_test

#endif
