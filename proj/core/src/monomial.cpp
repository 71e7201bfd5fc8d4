#include "mct/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "mct/errors.hpp"

namespace mct {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_) {
        if (e < 0) throw error("monomial exponents must be nonnegative");
    }
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int v, int power) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(v)) = power;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    return std::accumulate(exp_.begin(), exp_.end(), 0);
}

bool Monomial::is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& m) const {
    if (nvars() != m.nvars()) throw error("ambient variable mismatch");
    for (int v = 0; v < nvars(); ++v) {
        if (exp_[static_cast<std::size_t>(v)] > m.exp_[static_cast<std::size_t>(v)]) return false;
    }
    return true;
}

std::uint32_t Monomial::support_mask() const {
    if (nvars() > 32) throw error("support masks need at most 32 variables");
    std::uint32_t mask = 0;
    for (int v = 0; v < nvars(); ++v) {
        if (exp_[static_cast<std::size_t>(v)] > 0) mask |= (std::uint32_t{1} << v);
    }
    return mask;
}

int Monomial::support_size() const {
    int s = 0;
    for (int e : exp_) s += (e > 0);
    return s;
}

int Monomial::first_support_var() const {
    for (int v = 0; v < nvars(); ++v) {
        if (exp_[static_cast<std::size_t>(v)] > 0) return v;
    }
    return -1;
}

Monomial Monomial::times_power(int v, int k) const {
    if (k < 0) throw error("times_power needs a nonnegative power");
    Monomial r = *this;
    r.exp_.at(static_cast<std::size_t>(v)) += k;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw error("ambient variable mismatch");
    std::vector<int> e(a.exp_.size());
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::max(a.exp_[v], b.exp_[v]);
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw error("ambient variable mismatch");
    std::vector<int> e(a.exp_.size());
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = a.exp_[v] + b.exp_[v];
    return Monomial(std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return b.exponents() < a.exponents();
}

Monomial squarefree_from_mask(int nvars, std::uint32_t mask) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    for (int v = 0; v < nvars; ++v) {
        if (mask & (std::uint32_t{1} << v)) e[static_cast<std::size_t>(v)] = 1;
    }
    return Monomial(std::move(e));
}

std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != m.nvars()) throw error("variable name list size mismatch");
    if (m.is_one()) return "1";
    std::string s;
    for (int v = 0; v < m.nvars(); ++v) {
        int e = m.exponent(v);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[static_cast<std::size_t>(v)];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace mct
