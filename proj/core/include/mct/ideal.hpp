#ifndef MCT_IDEAL_HPP
#define MCT_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mct/monomial.hpp"

namespace mct {

/// Subset of the ambient variables, stored as a bitmask.
struct VariableSubset {
    std::uint32_t mask = 0;
    int nvars = 0;

    int size() const;
    bool contains(int v) const { return (mask >> v) & 1u; }
    std::vector<int> members() const;

    bool operator==(const VariableSubset& o) const = default;
};

/// Renders as a parenthesized prime, e.g. "(x0, x2, x4)".
std::string to_string(const VariableSubset& s, const std::vector<std::string>& vars);

/// Monomial ideal presented by its unique minimal monomial generating set.
/// Generators are minimalized and kept in canonical (graded, then lex) order.
/// The zero ideal (no generators) and the unit ideal (generator 1) are
/// representable; operations that need a proper nonzero ideal check for it.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Minimalizes, deduplicates and canonically sorts the generators.
    static MonomialIdeal from_generators(std::vector<std::string> vars,
                                         std::vector<Monomial> gens);
    static MonomialIdeal zero(std::vector<std::string> vars);
    static MonomialIdeal unit(std::vector<std::string> vars);

    /// Parses the generator-list grammar: generators separated by "," or
    /// newline; a monomial is factors joined by "*", each factor NAME or
    /// NAME^INT with INT >= 1; whitespace is ignored; names match
    /// [A-Za-z_][A-Za-z0-9_]*. With an explicit variable list, an undeclared
    /// name is also tried as a juxtaposition of declared names ("x0x1").
    /// Without one, variables are collected in order of first appearance.
    static MonomialIdeal parse(const std::string& text,
                               const std::optional<std::vector<std::string>>& vars = {});

    const std::vector<std::string>& variables() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<Monomial>& generators() const { return gens_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }
    bool is_squarefree() const;
    int max_generator_degree() const;

    /// True iff some generator divides m.
    bool contains(const Monomial& m) const;

    /// Canonical generator list, e.g. "x*y, x*z, y*z".
    std::string to_input_string() const;

    bool operator==(const MonomialIdeal& o) const {
        return vars_ == o.vars_ && gens_ == o.gens_;
    }

private:
    std::vector<std::string> vars_;
    std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset of the given monomials (deduplicated). A list
/// containing 1 minimalizes to {1}.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

/// Intersection of monomial ideals via pairwise lcms. Requires equal ambient
/// variable lists.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Minimal primes of a square-free proper nonzero monomial ideal: the
/// inclusion-minimal variable subsets hitting the support of every generator.
/// Exhaustive enumeration; ambient capped at 20 variables.
std::vector<VariableSubset> minimal_primes(const MonomialIdeal& I);

/// Alexander dual of a square-free proper nonzero ideal: one square-free
/// generator per minimal prime, the product of its variables.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

/// Subideal generated by the generators not divisible by variable v. May be
/// the zero ideal. The ambient variable list is unchanged.
MonomialIdeal restrict_ideal(const MonomialIdeal& I, int v);
MonomialIdeal restrict_ideal(const MonomialIdeal& I, const std::string& var_name);

/// Height (codimension) of a square-free proper nonzero ideal: the least
/// minimal-prime size.
int ideal_height(const MonomialIdeal& I);

} // namespace mct

#endif
