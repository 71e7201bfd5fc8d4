#ifndef MCT_POSET_HPP
#define MCT_POSET_HPP

#include <functional>
#include <utility>
#include <vector>

namespace mct {

/// Finite poset on elements 0..size()-1 with an explicit relation table.
/// Construction verifies reflexivity, antisymmetry and transitivity whenever
/// the table has at most 2^12 entries (size <= 64); larger posets are trusted.
class Poset {
public:
    Poset() = default;
    Poset(int n, const std::function<bool(int, int)>& leq);

    static Poset antichain(int n);
    static Poset chain(int n);

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    bool less(int a, int b) const { return a != b && leq(a, b); }

    /// Subposet induced on the given elements, relabeled 0..k-1 in order.
    Poset induced(const std::vector<int>& keep) const;

    /// Hasse diagram edges (a, b) with a covered by b.
    std::vector<std::pair<int, int>> cover_pairs() const;

private:
    int n_ = 0;
    std::vector<std::vector<bool>> leq_;

    void verify_axioms() const;
};

} // namespace mct

#endif
