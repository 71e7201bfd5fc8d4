#ifndef MCT_MONOMIAL_HPP
#define MCT_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mct {

/// Monomial over a fixed ordered variable set, stored as an exponent vector.
/// Variable names live with the ideal; a Monomial only knows the ambient
/// variable count. All operations require operands of equal ambient size.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int nvars);
    static Monomial variable(int nvars, int v, int power = 1);

    int nvars() const { return static_cast<int>(exp_.size()); }
    int degree() const;
    int exponent(int v) const { return exp_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& exponents() const { return exp_; }

    bool is_one() const;
    bool is_squarefree() const;
    bool divides(const Monomial& m) const;

    /// Bit v set iff the exponent of variable v is positive. Ambient size
    /// must be at most 32 wherever masks are used.
    std::uint32_t support_mask() const;
    int support_size() const;
    /// Least variable index with positive exponent; -1 for the monomial 1.
    int first_support_var() const;

    Monomial times_power(int v, int k) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }
    /// Plain lexicographic order on exponent vectors; used as a map key order.
    bool operator<(const Monomial& o) const { return exp_ < o.exp_; }

private:
    std::vector<int> exp_;
};

/// Canonical output order: ascending total degree; ties broken so that the
/// lexicographically larger exponent vector comes first (x before y before z).
bool canonical_less(const Monomial& a, const Monomial& b);

/// Square-free monomial whose support is the given variable mask.
Monomial squarefree_from_mask(int nvars, std::uint32_t mask);

/// Renders as NAME, NAME^INT factors joined by "*"; the monomial 1 as "1".
std::string to_string(const Monomial& m, const std::vector<std::string>& vars);

} // namespace mct

#endif
