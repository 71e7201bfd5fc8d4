#include "mct/simplicial.hpp"

#include <algorithm>

#include "mct/errors.hpp"

namespace mct {

SimplicialComplex SimplicialComplex::void_complex(int nvertices) {
    SimplicialComplex K;
    K.nvertices_ = nvertices;
    K.void_ = true;
    return K;
}

SimplicialComplex SimplicialComplex::irrelevant_complex(int nvertices) {
    SimplicialComplex K;
    K.nvertices_ = nvertices;
    K.void_ = false;
    return K;
}

SimplicialComplex SimplicialComplex::closure(int nvertices,
                                             const std::vector<std::vector<int>>& faces) {
    SimplicialComplex K;
    K.nvertices_ = nvertices;
    K.void_ = false;
    for (std::vector<int> f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f) {
            if (v < 0 || v >= nvertices) throw error("face vertex out of range");
        }
        if (f.empty()) continue;
        // enumerate all nonempty subsets of f
        const std::size_t k = f.size();
        if (k > 25) throw size_error("face too large to close downward");
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::uint32_t{1} << i)) sub.push_back(f[i]);
            K.all_.insert(std::move(sub));
        }
    }
    K.rebuild_by_dim();
    return K;
}

SimplicialComplex SimplicialComplex::from_closed_faces(int nvertices,
                                                       const std::vector<std::vector<int>>& faces) {
    SimplicialComplex K;
    K.nvertices_ = nvertices;
    K.void_ = false;
    for (std::vector<int> f : faces) {
        std::sort(f.begin(), f.end());
        for (int v : f) {
            if (v < 0 || v >= nvertices) throw error("face vertex out of range");
        }
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw error("face has a repeated vertex");
        if (!f.empty()) K.all_.insert(std::move(f));
    }
    for (const auto& f : K.all_) {
        if (f.size() == 1) continue;
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<int> sub;
            sub.reserve(f.size() - 1);
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != i) sub.push_back(f[j]);
            if (!K.all_.count(sub)) throw error("face list is not downward closed");
        }
    }
    K.rebuild_by_dim();
    return K;
}

void SimplicialComplex::rebuild_by_dim() {
    by_dim_.clear();
    for (const auto& f : all_) {
        const std::size_t k = f.size() - 1;
        if (by_dim_.size() <= k) by_dim_.resize(k + 1);
        by_dim_[k].push_back(f);
    }
    // std::set iterates in lexicographic order but groups by content, not
    // size; re-sort each dimension for a deterministic layout.
    for (auto& level : by_dim_) std::sort(level.begin(), level.end());
}

int SimplicialComplex::dim() const {
    if (void_) return -2;
    return static_cast<int>(by_dim_.size()) - 1;
}

const std::vector<std::vector<int>>& SimplicialComplex::faces_of_dim(int k) const {
    static const std::vector<std::vector<int>> none;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[static_cast<std::size_t>(k)];
}

long long SimplicialComplex::face_count() const {
    if (void_) return 0;
    return static_cast<long long>(all_.size()) + 1;
}

long long SimplicialComplex::euler_characteristic_reduced() const {
    if (void_) return 0;
    long long chi = -1; // empty face at dimension -1
    for (std::size_t k = 0; k < by_dim_.size(); ++k) {
        long long c = static_cast<long long>(by_dim_[k].size());
        chi += (k % 2 == 0) ? c : -c;
    }
    return chi;
}

bool SimplicialComplex::has_face(std::vector<int> f) const {
    if (void_) return false;
    if (f.empty()) return true;
    std::sort(f.begin(), f.end());
    return all_.count(f) > 0;
}

bool SimplicialComplex::contains_complex(const SimplicialComplex& sub) const {
    if (sub.is_void()) return true;
    if (is_void()) return false;
    return std::includes(all_.begin(), all_.end(), sub.all_.begin(), sub.all_.end());
}

bool SimplicialComplex::is_cone_with_apex(int v) const {
    if (void_) return false;
    if (v < 0 || v >= nvertices_) throw error("apex out of range");
    if (!has_face({v})) return false;
    for (const auto& f : all_) {
        if (std::binary_search(f.begin(), f.end(), v)) continue;
        std::vector<int> g = f;
        g.insert(std::lower_bound(g.begin(), g.end(), v), v);
        if (!all_.count(g)) return false;
    }
    return true;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& vertices) const {
    if (void_) return void_complex(static_cast<int>(vertices.size()));
    std::vector<int> relabel(static_cast<std::size_t>(nvertices_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= nvertices_) throw error("vertex out of range");
        relabel[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    SimplicialComplex K;
    K.nvertices_ = static_cast<int>(vertices.size());
    K.void_ = false;
    for (const auto& f : all_) {
        std::vector<int> g;
        g.reserve(f.size());
        bool keep = true;
        for (int v : f) {
            int w = relabel[static_cast<std::size_t>(v)];
            if (w < 0) {
                keep = false;
                break;
            }
            g.push_back(w);
        }
        if (!keep) continue;
        std::sort(g.begin(), g.end());
        K.all_.insert(std::move(g));
    }
    K.rebuild_by_dim();
    return K;
}

SimplicialComplex order_complex(const Poset& p) {
    const int n = p.size();
    SimplicialComplex K = SimplicialComplex::irrelevant_complex(n);
    if (n == 0) return K;

    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    // extension only moves strictly upward, so every nonempty chain is
    // produced exactly once, from its unique least element
    std::function<void(int)> extend = [&](int last) {
        chain.push_back(last);
        std::vector<int> face = chain;
        std::sort(face.begin(), face.end());
        chains.push_back(std::move(face));
        for (int next = 0; next < n; ++next) {
            if (p.less(last, next)) extend(next);
        }
        chain.pop_back();
    };
    for (int start = 0; start < n; ++start) extend(start);
    return SimplicialComplex::from_closed_faces(n, chains);
}

} // namespace mct
