#include "mct/modp.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "mct/errors.hpp"

namespace mct {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

namespace {

int normalize(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

int inverse_mod(int a, int p) {
    // extended Euclid; a nonzero mod p, p prime
    int t = 0, new_t = 1;
    int r = p, new_r = a;
    while (new_r != 0) {
        int q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return normalize(t, p);
}

void check(const MatModP& m) {
    if (!is_prime(m.p)) throw error("modulus must be prime");
    if (m.rows < 0 || m.cols < 0) throw error("negative matrix dimensions");
    for (const auto& [r, c, v] : m.entries) {
        (void)v;
        if (r < 0 || r >= m.rows || c < 0 || c >= m.cols) throw error("matrix entry out of range");
    }
}

} // namespace

namespace detail {

int rank_dense(const MatModP& m) {
    const int p = m.p;
    std::vector<std::vector<int>> a(static_cast<std::size_t>(m.rows),
                                    std::vector<int>(static_cast<std::size_t>(m.cols), 0));
    for (const auto& [r, c, v] : m.entries) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            normalize(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] + v, p);
    }
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        const auto& prow = a[static_cast<std::size_t>(rank)];
        const long long inv = inverse_mod(prow[static_cast<std::size_t>(col)], p);
        for (int r = rank + 1; r < m.rows; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            const int lead = row[static_cast<std::size_t>(col)];
            if (lead == 0) continue;
            const long long factor = normalize(inv * lead, p);
            for (int c = col; c < m.cols; ++c) {
                row[static_cast<std::size_t>(c)] = normalize(
                    row[static_cast<std::size_t>(c)] - factor * prow[static_cast<std::size_t>(c)], p);
            }
        }
        ++rank;
    }
    return rank;
}

int rank_sparse(const MatModP& m) {
    const int p = m.p;
    // rows as sorted (col, value) vectors
    std::map<std::pair<int, int>, long long> cells;
    for (const auto& [r, c, v] : m.entries) cells[{r, c}] += v;
    std::vector<std::vector<std::pair<int, int>>> rows;
    {
        std::vector<std::vector<std::pair<int, int>>> byrow(static_cast<std::size_t>(m.rows));
        for (const auto& [rc, v] : cells) {
            int val = normalize(v, p);
            if (val != 0) byrow[static_cast<std::size_t>(rc.first)].push_back({rc.second, val});
        }
        for (auto& r : byrow)
            if (!r.empty()) rows.push_back(std::move(r));
    }

    auto axpy = [&](const std::vector<std::pair<int, int>>& pivot, long long factor,
                    const std::vector<std::pair<int, int>>& row) {
        // row - factor * pivot, merged by column
        std::vector<std::pair<int, int>> out;
        out.reserve(row.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || pivot[j].first < row[i].first) {
                int v = normalize(-factor * pivot[j].second, p);
                if (v != 0) out.push_back({pivot[j].first, v});
                ++j;
            } else {
                int v = normalize(row[i].second - factor * pivot[j].second, p);
                if (v != 0) out.push_back({row[i].first, v});
                ++i;
                ++j;
            }
        }
        return out;
    };

    int rank = 0;
    while (!rows.empty()) {
        // pick the sparsest row as the pivot row
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].size() < rows[best].size()) best = i;
        }
        std::vector<std::pair<int, int>> pivot = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        ++rank;
        const int col = pivot[0].first;
        const long long inv = inverse_mod(pivot[0].second, p);
        std::vector<std::vector<std::pair<int, int>>> next;
        next.reserve(rows.size());
        for (auto& row : rows) {
            auto it = std::lower_bound(row.begin(), row.end(), std::pair<int, int>{col, 0},
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it == row.end() || it->first != col) {
                next.push_back(std::move(row));
                continue;
            }
            long long factor = normalize(inv * it->second, p);
            auto reduced = axpy(pivot, factor, row);
            if (!reduced.empty()) next.push_back(std::move(reduced));
        }
        rows = std::move(next);
    }
    return rank;
}

} // namespace detail

int rank_mod_p(const MatModP& m) {
    check(m);
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
    return (m.cols > 5000) ? detail::rank_sparse(m) : detail::rank_dense(m);
}

int rank_mod_p(const std::vector<std::vector<int>>& dense, int p) {
    MatModP m;
    m.p = p;
    m.rows = static_cast<int>(dense.size());
    m.cols = dense.empty() ? 0 : static_cast<int>(dense[0].size());
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(dense[static_cast<std::size_t>(r)].size()) != m.cols)
            throw error("ragged matrix");
        for (int c = 0; c < m.cols; ++c) {
            int v = dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v != 0) m.entries.push_back({r, c, v});
        }
    }
    return rank_mod_p(m);
}

} // namespace mct
