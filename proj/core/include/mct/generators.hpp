#ifndef MCT_GENERATORS_HPP
#define MCT_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mct/ideal.hpp"
#include "mct/monomial.hpp"
#include "mct/rooting.hpp"

namespace mct {

/// Sparse integer-coefficient polynomial. The constructions below mostly
/// produce 0/1 coefficients, but sums of face products can collide, so
/// general integers are kept and unit-ness is checkable where it matters.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int variables) : vars_(variables) {}

    int variables() const { return vars_; }
    const std::map<Monomial, int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int coefficient(const Monomial& m) const;

    /// Adds c * m, merging and dropping zero results.
    void add_term(const Monomial& m, int c);

    bool all_unit_coefficients() const;
    /// Common total degree of all terms, or nullopt (zero polynomial or
    /// mixed degrees).
    std::optional<int> homogeneous_degree() const;

    int evaluate_mod(const std::vector<int>& point, int q) const;

    std::string to_string(const std::vector<std::string>& vars) const;
    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

private:
    int vars_ = 0;
    std::map<Monomial, int> terms_;
};

enum class GenMethod { rooting, height };

std::string to_string(GenMethod m);

/// Polynomials cutting out V(I) up to radical, with the construction tag,
/// the per-polynomial target degrees, and the arithmetic-rank bound the
/// construction certifies (its own polynomial count).
struct GeneratorSet {
    GenMethod method = GenMethod::height;
    int variables = 0;
    std::vector<Polynomial> polys;
    std::vector<int> degrees;
    /// Rooting parameter d; 0 for the height construction.
    int d = 0;
    int claimed_bound = 0;
};

struct Counterexample {
    int q = 0;
    std::vector<int> point;
};

struct VerificationReport {
    /// Every term of every polynomial is divisible by the support of some
    /// generator, certifying V(I) ⊆ V(G) over every field.
    bool subset_certified = false;
    std::vector<int> fields_checked;
    std::map<int, bool> equal_over;
    std::optional<Counterexample> counterexample;

    bool all_equal() const;
};

/// f̄ = f · (first support variable)^(d - deg f): degree exactly d, same
/// support. Requires f ≠ 1 and d ≥ deg f.
Monomial normalize_generator(const Monomial& f, int d);

/// g_r = Σ_{F ∈ Γ^(r)} ∏_{f ∈ F} f̄ for r = 0..dim Γ, each homogeneous of
/// degree (r+1)d. Default d = max generator degree.
GeneratorSet generators_from_rooting(const MonomialIdeal& I, const RootingMap& rho,
                                     std::optional<int> d = std::nullopt);

/// g_r = Σ_{height σ = r} σ̄ for r = 1..height L, stratum r normalized to
/// degree d_r. Default d_r = max degree within the stratum.
GeneratorSet generators_from_heights(const MonomialIdeal& I,
                                     std::optional<std::vector<int>> d_vec = std::nullopt);

/// Syntactic V(I) ⊆ V(G) certificate plus exhaustive point scans of F_q^N
/// for each listed prime; any mismatch is reported with its
/// lexicographically least point.
VerificationReport verify_radical_equality(const MonomialIdeal& I, const GeneratorSet& G,
                                           const std::vector<int>& primes = {2, 3, 5},
                                           long long point_cap = 100'000'000);

/// Arithmetic-rank bounds with provenance notes: construction sizes from
/// above, qccd and constant-sheaf étale degrees from below.
struct AraBounds {
    int upper_rooting = 0;
    bool rooting_exhaustive = false;
    int upper_height = 0;
    std::map<int, int> lower_qccd;
    std::map<int, int> lower_etale;
    std::vector<std::string> notes;
};

AraBounds ara_bounds_report(const MonomialIdeal& I, const std::vector<int>& chars = {2, 3, 5},
                            const std::vector<int>& ells = {2, 3, 5},
                            std::uint64_t seed = 0, int samples = 200);

} // namespace mct

#endif
