#include "mforge/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace mforge {

namespace {

using Cells = std::vector<VertexMask>;
using Cert = std::vector<VertexMask>;

// Splits every cell by neighbour counts into each splitter cell until the
// partition is equitable. Sub-cells are ordered by ascending count, so the
// result depends only on the graph and the incoming cell order.
void refine(const MaskGraph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size(); ++s) {
            const VertexMask splitter = cells[s];
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (popcount(cells[c]) == 1) {
                    continue;
                }
                int lo = g.n + 1;
                int hi = -1;
                for_each_bit(cells[c], [&](int v) {
                    const int k = popcount(g.adj[static_cast<std::size_t>(v)] & splitter);
                    lo = std::min(lo, k);
                    hi = std::max(hi, k);
                });
                if (lo == hi) {
                    continue;
                }
                std::vector<std::pair<int, VertexMask>> groups;
                for_each_bit(cells[c], [&](int v) {
                    const int k = popcount(g.adj[static_cast<std::size_t>(v)] & splitter);
                    auto it = std::find_if(groups.begin(), groups.end(), [&](auto& p) { return p.first == k; });
                    if (it == groups.end()) {
                        groups.emplace_back(k, bit(v));
                    } else {
                        it->second |= bit(v);
                    }
                });
                std::sort(groups.begin(), groups.end(), [](auto& a, auto& b) { return a.first < b.first; });
                cells[c] = groups[0].second;
                for (std::size_t i = 1; i < groups.size(); ++i) {
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c + i), groups[i].second);
                }
                changed = true;
            }
        }
    }
}

struct Leaf {
    Cert cert;
    std::vector<int> order;
    std::vector<int> path;
};

class Searcher {
public:
    explicit Searcher(const MaskGraph& g) : g_(g) {}

    CanonicalLabelling run() {
        Cells cells;
        if (g_.n > 0) {
            // Seed with degree classes; refine() would find them anyway.
            std::vector<std::pair<int, VertexMask>> by_degree;
            for (int v = 0; v < g_.n; ++v) {
                const int d = g_.degree(v);
                auto it = std::find_if(by_degree.begin(), by_degree.end(), [&](auto& p) { return p.first == d; });
                if (it == by_degree.end()) {
                    by_degree.emplace_back(d, bit(v));
                } else {
                    it->second |= bit(v);
                }
            }
            std::sort(by_degree.begin(), by_degree.end(), [](auto& a, auto& b) { return a.first < b.first; });
            for (auto& [d, m] : by_degree) {
                cells.push_back(m);
            }
            refine(g_, cells);
        }
        std::vector<int> path;
        visit(cells, path);

        CanonicalLabelling out;
        out.order = best_.order;
        out.generators = std::move(generators_);
        out.form = encode(best_.cert);
        return out;
    }

private:
    CanonicalForm encode(const Cert& cert) const {
        std::string bytes;
        bytes.push_back(static_cast<char>(g_.n));
        unsigned acc = 0;
        int nbits = 0;
        for (int j = 1; j < g_.n; ++j) {
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | static_cast<unsigned>((cert[static_cast<std::size_t>(i)] >> j) & 1U);
                if (++nbits == 8) {
                    bytes.push_back(static_cast<char>(acc));
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits > 0) {
            bytes.push_back(static_cast<char>(acc << (8 - nbits)));
        }
        return {std::move(bytes)};
    }

    Leaf make_leaf(const Cells& cells, const std::vector<int>& path) const {
        Leaf leaf;
        leaf.path = path;
        std::vector<int> pos(static_cast<std::size_t>(g_.n));
        for (auto c : cells) {
            const int v = __builtin_ctzll(c);
            pos[static_cast<std::size_t>(v)] = static_cast<int>(leaf.order.size());
            leaf.order.push_back(v);
        }
        leaf.cert.assign(static_cast<std::size_t>(g_.n), 0);
        for (int i = 0; i < g_.n; ++i) {
            VertexMask row = 0;
            for_each_bit(g_.adj[static_cast<std::size_t>(leaf.order[static_cast<std::size_t>(i)])],
                         [&](int w) { row |= bit(pos[static_cast<std::size_t>(w)]); });
            leaf.cert[static_cast<std::size_t>(i)] = row;
        }
        return leaf;
    }

    // Records the automorphism mapping `ref` onto `leaf` and returns the depth
    // of the node whose remaining subtree is an image of explored territory,
    // or -1 if no backjump is justified.
    int automorphism(const Leaf& ref, const Leaf& leaf) {
        std::vector<int> gamma(static_cast<std::size_t>(g_.n));
        for (int i = 0; i < g_.n; ++i) {
            gamma[static_cast<std::size_t>(ref.order[static_cast<std::size_t>(i)])] =
                leaf.order[static_cast<std::size_t>(i)];
        }
        std::size_t j = 0;
        while (j < ref.path.size() && j < leaf.path.size() && ref.path[j] == leaf.path[j]) {
            ++j;
        }
        bool ok = j < ref.path.size() && j < leaf.path.size();
        for (std::size_t i = 0; ok && i < j; ++i) {
            ok = gamma[static_cast<std::size_t>(ref.path[i])] == ref.path[i];
        }
        if (ok) {
            ok = gamma[static_cast<std::size_t>(ref.path[j])] == leaf.path[j];
        }
        generators_.push_back(std::move(gamma));
        return ok ? static_cast<int>(j) : -1;
    }

    int on_leaf(const Cells& cells, const std::vector<int>& path) {
        Leaf leaf = make_leaf(cells, path);
        if (!have_first_) {
            first_ = leaf;
            best_ = std::move(leaf);
            have_first_ = true;
            return -1;
        }
        if (leaf.cert == first_.cert) {
            return automorphism(first_, leaf);
        }
        if (leaf.cert == best_.cert) {
            return automorphism(best_, leaf);
        }
        if (leaf.cert > best_.cert) {
            best_ = std::move(leaf);
        }
        return -1;
    }

    bool same_orbit_as_explored(int v, VertexMask explored, const std::vector<int>& path) const {
        std::vector<int> parent(static_cast<std::size_t>(g_.n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            }
            return x;
        };
        for (const auto& gamma : generators_) {
            bool fixes = true;
            for (int p : path) {
                if (gamma[static_cast<std::size_t>(p)] != p) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) {
                continue;
            }
            for (int x = 0; x < g_.n; ++x) {
                const int a = find(x);
                const int b = find(gamma[static_cast<std::size_t>(x)]);
                if (a != b) {
                    parent[static_cast<std::size_t>(a)] = b;
                }
            }
        }
        const int root = find(v);
        bool hit = false;
        for_each_bit(explored, [&](int w) { hit = hit || find(w) == root; });
        return hit;
    }

    int visit(const Cells& cells, std::vector<int>& path) {
        if (static_cast<int>(cells.size()) == g_.n) {
            return on_leaf(cells, path);
        }
        std::size_t target = cells.size();
        int target_size = g_.n + 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const int s = popcount(cells[i]);
            if (s > 1 && s < target_size) {
                target = i;
                target_size = s;
            }
        }
        const int depth = static_cast<int>(path.size());
        VertexMask explored = 0;
        const VertexMask candidates = cells[target];
        for (int v = 0; v < g_.n; ++v) {
            if (!((candidates >> v) & 1U)) {
                continue;
            }
            if (explored != 0 && same_orbit_as_explored(v, explored, path)) {
                continue;
            }
            Cells child = cells;
            child[target] = candidates & ~bit(v);
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
            refine(g_, child);
            path.push_back(v);
            const int r = visit(child, path);
            path.pop_back();
            explored |= bit(v);
            if (r >= 0 && r < depth) {
                return r;
            }
        }
        return -1;
    }

    const MaskGraph& g_;
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<std::vector<int>> generators_;
};

} // namespace

CanonicalLabelling canonical_labelling(const MaskGraph& g) {
    return Searcher(g).run();
}

CanonicalForm canonical_form(const MaskGraph& g) {
    return canonical_labelling(g).form;
}

CanonicalForm canonical_form(const Graph& g) {
    return canonical_form(MaskGraph(g));
}

Graph canonical_graph(const Graph& g) {
    const auto lab = canonical_labelling(MaskGraph(g));
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < lab.order.size(); ++i) {
        perm[static_cast<std::size_t>(lab.order[i])] = static_cast<int>(i);
    }
    return relabel(g, perm);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace mforge
