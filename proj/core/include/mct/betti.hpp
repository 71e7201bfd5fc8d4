#ifndef MCT_BETTI_HPP
#define MCT_BETTI_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mct/ideal.hpp"
#include "mct/monomial.hpp"

namespace mct {

/// Which module a Betti table describes: the ideal I or the quotient R/I.
/// The two are off by one homological degree: β_{i,j}(R/I) = β_{i-1,j}(I)
/// for i ≥ 1, and β_{0,0}(R/I) = 1.
enum class Subject { ideal, quotient };

std::string to_string(Subject s);

/// Betti numbers over F_ell. Multigraded entries β_{i,m} are primary; the
/// graded entries β_{i,j} aggregate them by total degree. Absent means zero.
class BettiTable {
public:
    BettiTable(int ell, Subject subject, int variables,
               std::map<std::pair<int, Monomial>, int> multigraded);

    int characteristic() const { return ell_; }
    Subject subject() const { return subject_; }
    int variables() const { return vars_; }
    bool empty() const { return multi_.empty(); }

    int multigraded(int i, const Monomial& m) const;
    int graded(int i, int j) const;
    const std::map<std::pair<int, Monomial>, int>& multigraded_entries() const { return multi_; }
    const std::map<std::pair<int, int>, int>& graded_entries() const { return graded_; }

    bool operator==(const BettiTable& o) const {
        return ell_ == o.ell_ && subject_ == o.subject_ && multi_ == o.multi_;
    }

private:
    int ell_;
    Subject subject_;
    int vars_;
    std::map<std::pair<int, Monomial>, int> multi_;
    std::map<std::pair<int, int>, int> graded_;
};

/// Betti numbers via the lcm-lattice: for m ∈ L_I above the bottom,
/// β_{i,m}(R/I) = dim H̃_{i-2}(Δ((1, m)); F_ell), plus β_{0,1}(R/I) = 1.
BettiTable betti_gpw(const MonomialIdeal& I, int ell, Subject subject);

/// Independent oracle: β_{i,m}(R/I) is the i-th homology dimension of the
/// multidegree-m strand of the Taylor complex mod ell. Enumerates all
/// generator subsets, so the generator count is capped at 20.
BettiTable betti_taylor_oracle(const MonomialIdeal& I, int ell,
                               Subject subject = Subject::ideal);

/// Positions (i, j) of nonzero entries with no other nonzero entry in the
/// region k ≥ i, l - k ≥ j - i.
using ExtremalSet = std::vector<std::pair<int, int>>;
ExtremalSet extremal_betti(const BettiTable& T);

/// Largest homological degree with a nonzero entry.
int projdim(const BettiTable& T);
/// Largest j - i over nonzero entries.
int regularity(const BettiTable& T);
/// Largest i + j over nonzero entries.
int max_i_plus_j(const BettiTable& T);
/// Largest 2j - i over nonzero entries.
int max_2j_minus_i(const BettiTable& T);

/// Macaulay-style text diagram: columns are i, rows are j - i, "." is zero.
std::string betti_diagram(const BettiTable& T);

} // namespace mct

#endif
