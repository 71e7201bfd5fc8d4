#include "mct/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>

#include "mct/errors.hpp"

namespace mct {

int VariableSubset::size() const { return std::popcount(mask); }

std::vector<int> VariableSubset::members() const {
    std::vector<int> out;
    for (int v = 0; v < nvars; ++v) {
        if (contains(v)) out.push_back(v);
    }
    return out;
}

std::string to_string(const VariableSubset& s, const std::vector<std::string>& vars) {
    std::string out = "(";
    bool first = true;
    for (int v : s.members()) {
        if (!first) out += ", ";
        out += vars.at(static_cast<std::size_t>(v));
        first = false;
    }
    return out + ")";
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end(), canonical_less);
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    for (const Monomial& m : monomials) {
        if (m.is_one()) return {m};
    }
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < monomials.size() && !dominated; ++j) {
            if (i != j && monomials[j].divides(monomials[i])) dominated = true;
        }
        if (!dominated) out.push_back(monomials[i]);
    }
    return out;
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<std::string> vars,
                                             std::vector<Monomial> gens) {
    for (const Monomial& g : gens) {
        if (g.nvars() != static_cast<int>(vars.size()))
            throw error("generator ambient size does not match variable list");
    }
    MonomialIdeal I;
    I.vars_ = std::move(vars);
    I.gens_ = minimalize(std::move(gens));
    return I;
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> vars) {
    MonomialIdeal I;
    I.vars_ = std::move(vars);
    return I;
}

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> vars) {
    int n = static_cast<int>(vars.size());
    return from_generators(std::move(vars), {Monomial::one(n)});
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

int MonomialIdeal::max_generator_degree() const {
    int d = 0;
    for (const Monomial& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

std::string MonomialIdeal::to_input_string() const {
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += to_string(gens_[i], vars_);
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct RawFactor {
    std::string name;
    int power = 1;
    std::size_t pos = 0;
};

struct RawGenerator {
    std::vector<RawFactor> factors;
};

bool name_start(char c) {
    return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}

bool name_char(char c) {
    return c == '_' || std::isalnum(static_cast<unsigned char>(c));
}

bool space_char(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<RawGenerator> lex_generators(const std::string& text) {
    std::vector<RawGenerator> gens;
    RawGenerator cur;
    std::size_t i = 0;
    const std::size_t n = text.size();
    // after_factor: the next significant token must be '*', ',' or newline
    bool after_factor = false;
    bool expect_factor = false;   // a '*' promised another factor
    bool expect_generator = false; // a ',' promised another generator

    auto flush = [&] {
        if (expect_factor) throw parse_error("dangling '*'", i);
        gens.push_back(cur);
        cur = RawGenerator{};
        after_factor = false;
    };

    while (i < n) {
        char c = text[i];
        if (space_char(c)) {
            ++i;
            continue;
        }
        if (c == ',') {
            // commas must sit between generators; blank lines are fine but
            // empty comma-delimited items are not
            if (cur.factors.empty()) throw parse_error("expected a generator before ','", i);
            flush();
            expect_generator = true;
            ++i;
            continue;
        }
        if (c == '\n') {
            if (!cur.factors.empty()) flush();
            ++i;
            continue;
        }
        if (c == '*') {
            if (!after_factor) throw parse_error("unexpected '*'", i);
            after_factor = false;
            expect_factor = true;
            ++i;
            continue;
        }
        if (name_start(c)) {
            if (after_factor) throw parse_error("expected '*', ',' or newline", i);
            RawFactor f;
            f.pos = i;
            while (i < n && name_char(text[i])) f.name += text[i++];
            // optional exponent
            std::size_t j = i;
            while (j < n && space_char(text[j])) ++j;
            if (j < n && text[j] == '^') {
                ++j;
                while (j < n && space_char(text[j])) ++j;
                std::size_t digits_at = j;
                long long value = 0;
                while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
                    value = value * 10 + (text[j] - '0');
                    if (value > 1000000) throw parse_error("exponent too large", digits_at);
                    ++j;
                }
                if (j == digits_at) throw parse_error("expected an integer exponent", j);
                if (value < 1) throw parse_error("exponent must be at least 1", digits_at);
                f.power = static_cast<int>(value);
                i = j;
            }
            cur.factors.push_back(std::move(f));
            after_factor = true;
            expect_factor = false;
            expect_generator = false;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
    if (expect_generator && cur.factors.empty())
        throw parse_error("expected a generator after ','", n);
    if (!cur.factors.empty()) flush();
    return gens;
}

/// Decomposes name into a sequence of declared variable indices, longest
/// prefix first with backtracking. Returns empty on failure.
bool decompose_name(const std::string& name, const std::map<std::string, int>& index,
                    std::size_t at, std::vector<int>& out) {
    if (at == name.size()) return true;
    for (std::size_t len = name.size() - at; len >= 1; --len) {
        auto it = index.find(name.substr(at, len));
        if (it == index.end()) continue;
        out.push_back(it->second);
        if (decompose_name(name, index, at + len, out)) return true;
        out.pop_back();
    }
    return false;
}

} // namespace

MonomialIdeal MonomialIdeal::parse(const std::string& text,
                                   const std::optional<std::vector<std::string>>& vars) {
    std::vector<RawGenerator> raw = lex_generators(text);
    raw.erase(std::remove_if(raw.begin(), raw.end(),
                             [](const RawGenerator& g) { return g.factors.empty(); }),
              raw.end());
    if (raw.empty()) throw parse_error("empty generator list", 0);

    std::vector<std::string> names;
    std::map<std::string, int> index;
    if (vars) {
        names = *vars;
        if (names.empty()) throw error("explicit variable list is empty");
        for (std::size_t v = 0; v < names.size(); ++v) {
            if (!index.emplace(names[v], static_cast<int>(v)).second)
                throw error("duplicate variable name '" + names[v] + "'");
        }
    }

    // factor name -> list of (variable, power); resolved in two phases so an
    // implicit variable set is collected in order of first appearance.
    struct Resolved {
        std::vector<std::pair<int, int>> powers;
    };
    std::vector<std::vector<Resolved>> resolved(raw.size());

    for (std::size_t g = 0; g < raw.size(); ++g) {
        for (const RawFactor& f : raw[g].factors) {
            Resolved r;
            auto it = index.find(f.name);
            if (it != index.end()) {
                r.powers.push_back({it->second, f.power});
            } else if (vars) {
                std::vector<int> split;
                if (!decompose_name(f.name, index, 0, split)) {
                    throw parse_error("unknown variable '" + f.name + "'", f.pos);
                }
                for (std::size_t k = 0; k + 1 < split.size(); ++k) r.powers.push_back({split[k], 1});
                r.powers.push_back({split.back(), f.power});
            } else {
                int v = static_cast<int>(names.size());
                names.push_back(f.name);
                index.emplace(f.name, v);
                r.powers.push_back({v, f.power});
            }
            resolved[g].push_back(std::move(r));
        }
    }

    const int n = static_cast<int>(names.size());
    std::vector<Monomial> gens;
    for (const auto& factors : resolved) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (const Resolved& r : factors) {
            for (auto [v, p] : r.powers) e[static_cast<std::size_t>(v)] += p;
        }
        gens.emplace_back(std::move(e));
    }
    return from_generators(std::move(names), std::move(gens));
}

// ---------------------------------------------------------------------------
// ideal operations

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.variables() != b.variables()) throw error("ambient variable mismatch");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.variables());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& f : a.generators())
        for (const Monomial& g : b.generators()) gens.push_back(lcm(f, g));
    return MonomialIdeal::from_generators(a.variables(), std::move(gens));
}

std::vector<VariableSubset> minimal_primes(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw error("minimal_primes needs a square-free ideal");
    if (!I.is_proper_nonzero()) throw error("minimal_primes needs a proper nonzero ideal");
    const int n = I.nvars();
    if (n > 20) throw size_error("minimal_primes caps the ambient at 20 variables");

    std::vector<std::uint32_t> supports;
    supports.reserve(I.generators().size());
    for (const Monomial& g : I.generators()) supports.push_back(g.support_mask());

    auto covers = [&](std::uint32_t mask) {
        for (std::uint32_t s : supports)
            if ((s & mask) == 0) return false;
        return true;
    };

    std::vector<std::uint32_t> minimal;
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        if (!covers(mask)) continue;
        bool is_minimal = true;
        for (std::uint32_t rest = mask; rest && is_minimal; rest &= rest - 1) {
            std::uint32_t without = mask & ~(rest & (~rest + 1));
            if (covers(without)) is_minimal = false;
        }
        if (is_minimal) minimal.push_back(mask);
    }

    std::vector<VariableSubset> out;
    out.reserve(minimal.size());
    for (std::uint32_t m : minimal) out.push_back(VariableSubset{m, n});
    std::sort(out.begin(), out.end(), [](const VariableSubset& a, const VariableSubset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    return out;
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    std::vector<VariableSubset> primes = minimal_primes(I);
    std::vector<Monomial> gens;
    gens.reserve(primes.size());
    for (const VariableSubset& p : primes) gens.push_back(squarefree_from_mask(I.nvars(), p.mask));
    return MonomialIdeal::from_generators(I.variables(), std::move(gens));
}

MonomialIdeal restrict_ideal(const MonomialIdeal& I, int v) {
    if (v < 0 || v >= I.nvars()) throw error("variable index out of range");
    std::vector<Monomial> kept;
    for (const Monomial& g : I.generators()) {
        if (g.exponent(v) == 0) kept.push_back(g);
    }
    return MonomialIdeal::from_generators(I.variables(), std::move(kept));
}

MonomialIdeal restrict_ideal(const MonomialIdeal& I, const std::string& var_name) {
    const auto& vars = I.variables();
    auto it = std::find(vars.begin(), vars.end(), var_name);
    if (it == vars.end()) throw error("unknown variable '" + var_name + "'");
    return restrict_ideal(I, static_cast<int>(it - vars.begin()));
}

int ideal_height(const MonomialIdeal& I) {
    int h = I.nvars() + 1;
    for (const VariableSubset& p : minimal_primes(I)) h = std::min(h, p.size());
    return h;
}

} // namespace mct
