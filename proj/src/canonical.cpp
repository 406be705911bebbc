#include "shedlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "shedlab/graph6.hpp"

namespace shedlab {

namespace {

// Splits cells until every vertex of a cell has the same number of
// neighbors in every cell. Sub-cells are ordered by that count, so the
// result depends only on the isomorphism type of (graph, ordered partition).
void refine(const Graph& g, std::vector<VertexSet>& cells) {
    std::array<int, kMaxVertices + 1> count_of{};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const VertexSet splitter = cells[s];
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const VertexSet cell = cells[c];
                if (cell.size() == 1) continue;
                int lo = kMaxVertices + 1;
                int hi = -1;
                for (int v : cell) {
                    int k = (g.neighbors(v) & splitter).size();
                    count_of[v] = k;
                    lo = std::min(lo, k);
                    hi = std::max(hi, k);
                }
                if (lo == hi) continue;

                std::vector<VertexSet> parts;
                for (int k = lo; k <= hi; ++k) {
                    VertexSet part;
                    for (int v : cell)
                        if (count_of[v] == k) part.insert(v);
                    if (!part.empty()) parts.push_back(part);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
                changed = true;
                break;
            }
        }
    }
}

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run() {
        std::vector<VertexSet> cells;
        if (n_ > 0) cells.push_back(g_.vertices());
        visit(std::move(cells));
    }

    const std::vector<int>& best_label() const { return best_lab_; }
    const std::vector<std::vector<int>>& automorphisms() const { return autos_; }

private:
    static constexpr int kNoJump = -1;

    int visit(std::vector<VertexSet> cells) {
        refine(g_, cells);
        if (static_cast<int>(cells.size()) == n_) return leaf(cells);

        const int level = static_cast<int>(path_.size());
        std::size_t target = 0;
        int target_size = kMaxVertices + 1;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            int sz = cells[c].size();
            if (sz > 1 && sz < target_size) {
                target = c;
                target_size = sz;
            }
        }

        VertexSet explored;
        for (int v : cells[target]) {
            if (!explored.empty() && orbit_of(v).intersects(explored)) continue;

            std::vector<VertexSet> next;
            next.reserve(cells.size() + 1);
            next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            next.push_back(VertexSet::single(v));
            next.push_back(cells[target].without(v));
            next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());

            path_.push_back(v);
            int jump = visit(std::move(next));
            path_.pop_back();
            explored.insert(v);
            if (jump != kNoJump && jump < level) return jump;
        }
        return kNoJump;
    }

    int leaf(const std::vector<VertexSet>& cells) {
        std::vector<int> lab(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) lab[cells[i].first()] = i;

        std::vector<std::uint64_t> code(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = 0;
            for (int u : g_.neighbors(cells[i].first())) row |= std::uint64_t{1} << lab[u];
            code[i] = row;
        }

        if (first_lab_.empty() && n_ > 0) {
            first_lab_ = best_lab_ = lab;
            first_code_ = best_code_ = code;
            first_path_ = best_path_ = path_;
            return kNoJump;
        }
        if (code == first_code_) {
            record_automorphism(first_lab_, lab);
            return common_prefix(first_path_);
        }
        if (code == best_code_) {
            record_automorphism(best_lab_, lab);
            return common_prefix(best_path_);
        }
        if (code < best_code_) {
            best_lab_ = std::move(lab);
            best_code_ = std::move(code);
            best_path_ = path_;
        }
        return kNoJump;
    }

    // Both labelings produce the same relabeled graph, so mapping the vertex
    // at position i of one to the vertex at position i of the other is an
    // automorphism.
    void record_automorphism(const std::vector<int>& lab_a, const std::vector<int>& lab_b) {
        std::vector<int> inv_b(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) inv_b[lab_b[v]] = v;
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            gamma[v] = inv_b[lab_a[v]];
            identity = identity && gamma[v] == v;
        }
        if (!identity) autos_.push_back(std::move(gamma));
    }

    int common_prefix(const std::vector<int>& other) const {
        std::size_t k = 0;
        while (k < path_.size() && k < other.size() && path_[k] == other[k]) ++k;
        return static_cast<int>(k);
    }

    // Orbit of v under the automorphisms found so far that fix the current
    // path pointwise.
    VertexSet orbit_of(int v) const {
        VertexSet orbit = VertexSet::single(v);
        VertexSet frontier = orbit;
        while (!frontier.empty()) {
            VertexSet next;
            for (const auto& gamma : autos_) {
                bool fixes = std::all_of(path_.begin(), path_.end(), [&](int p) { return gamma[p] == p; });
                if (!fixes) continue;
                for (int u : frontier) next.insert(gamma[u]);
            }
            next -= orbit;
            orbit |= next;
            frontier = next;
        }
        return orbit;
    }

    const Graph& g_;
    int n_;
    std::vector<int> path_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<int> first_path_, best_path_;
    std::vector<std::uint64_t> first_code_, best_code_;
    std::vector<std::vector<int>> autos_;
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonSearch search(g);
    search.run();
    std::vector<int> label = search.best_label();
    Graph plain = g.without_names();
    Graph canon = relabel(plain, label);
    return {std::move(canon), std::move(label)};
}

CanonicalKey canonical_key(const Graph& g) {
    return CanonicalKey{to_graph6(canonical_form(g).graph)};
}

std::vector<std::vector<int>> automorphism_generators(const Graph& g) {
    CanonSearch search(g);
    search.run();
    return search.automorphisms();
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_key(a) == canonical_key(b);
}

} // namespace shedlab
