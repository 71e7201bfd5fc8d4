#include "mct/poset.hpp"

#include "mct/errors.hpp"

namespace mct {

Poset::Poset(int n, const std::function<bool(int, int)>& leq) : n_(n) {
    if (n < 0) throw error("poset size must be nonnegative");
    leq_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = leq(a, b);
    if (static_cast<long long>(n) * n <= (1 << 12)) verify_axioms();
}

void Poset::verify_axioms() const {
    for (int a = 0; a < n_; ++a) {
        if (!leq(a, a)) throw error("poset relation is not reflexive");
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (a != b && leq(a, b) && leq(b, a)) throw error("poset relation is not antisymmetric");
        }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!leq(a, b)) continue;
            for (int c = 0; c < n_; ++c) {
                if (leq(b, c) && !leq(a, c)) throw error("poset relation is not transitive");
            }
        }
}

Poset Poset::antichain(int n) {
    return Poset(n, [](int a, int b) { return a == b; });
}

Poset Poset::chain(int n) {
    return Poset(n, [](int a, int b) { return a <= b; });
}

Poset Poset::induced(const std::vector<int>& keep) const {
    std::vector<int> elems = keep;
    return Poset(static_cast<int>(elems.size()),
                 [&](int a, int b) { return leq(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]); });
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!less(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < n_ && direct; ++c) {
                if (less(a, c) && less(c, b)) direct = false;
            }
            if (direct) covers.push_back({a, b});
        }
    return covers;
}

} // namespace mct
