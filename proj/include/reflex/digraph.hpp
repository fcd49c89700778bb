#ifndef REFLEX_DIGRAPH_HPP
#define REFLEX_DIGRAPH_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reflex/exterior.hpp"
#include "reflex/reflection.hpp"

namespace reflex {

using Arrow = std::pair<std::size_t, std::size_t>;

/// Finite digraph without loops or multiple arrows. Vertices are generator
/// indices; labels are used for display only.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::vector<std::size_t> vertices, std::set<Arrow> arrows, std::map<std::size_t, std::string> labels = {})
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)), labels_(std::move(labels)) {
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw InputError("digraph: repeated vertex");
        for (const auto& [a, b] : arrows_) {
            if (a == b) throw InputError("digraph: loops are not allowed");
            if (!has_vertex(a) || !has_vertex(b)) throw InputError("digraph: arrow endpoint outside vertex set");
        }
    }

    const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }
    const std::set<Arrow>& arrows() const noexcept { return arrows_; }
    bool has_vertex(std::size_t v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
    bool has_arrow(std::size_t from, std::size_t to) const { return arrows_.count({from, to}) > 0; }
    bool adjacent(std::size_t a, std::size_t b) const { return has_arrow(a, b) || has_arrow(b, a); }

    std::string label(std::size_t v) const {
        auto it = labels_.find(v);
        return it != labels_.end() ? it->second : std::to_string(v);
    }

    /// G(J): vertices J, arrows of G with both ends in J.
    Digraph sub_digraph(const std::vector<std::size_t>& subset) const {
        std::set<Arrow> arrows;
        for (const auto& a : arrows_)
            if (std::find(subset.begin(), subset.end(), a.first) != subset.end() &&
                std::find(subset.begin(), subset.end(), a.second) != subset.end())
                arrows.insert(a);
        for (auto v : subset)
            if (!has_vertex(v)) throw InputError("sub_digraph: vertex not in digraph");
        return Digraph(subset, std::move(arrows), labels_);
    }

    /// Undirected neighbours of v, ascending.
    std::vector<std::size_t> neighbours(std::size_t v) const {
        std::vector<std::size_t> out;
        for (auto w : vertices_)
            if (w != v && adjacent(v, w)) out.push_back(w);
        return out;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<std::size_t> vertices_;
    std::set<Arrow> arrows_;
    std::map<std::size_t, std::string> labels_;
};

namespace detail {

inline std::set<std::size_t> reach(const Digraph& g, std::size_t start, bool forward, bool backward) {
    std::set<std::size_t> seen{start};
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto w : g.vertices()) {
            if (seen.count(w)) continue;
            if ((forward && g.has_arrow(v, w)) || (backward && g.has_arrow(w, v))) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace detail

/// Connected after forgetting arrow directions. The empty digraph is not connected.
inline bool is_weakly_connected(const Digraph& g) {
    if (g.vertices().empty()) return false;
    return detail::reach(g, g.vertices().front(), true, true).size() == g.vertices().size();
}

inline bool is_strongly_connected(const Digraph& g) {
    if (g.vertices().empty()) return false;
    const auto v = g.vertices().front();
    return detail::reach(g, v, true, false).size() == g.vertices().size() &&
           detail::reach(g, v, false, true).size() == g.vertices().size();
}

/// Arrow i -> j iff s_j moves alpha_i, for i, j in `subset`.
template <ExactField F>
Digraph associated_digraph(const ReflectionRep<F>& rep, std::vector<std::size_t> subset) {
    if (subset.empty()) throw InputError("associated_digraph needs a nonempty index set");
    std::map<std::size_t, std::string> labels;
    for (auto v : subset) {
        if (v >= rep.size()) throw InputError("associated_digraph: generator index out of range");
        labels[v] = rep.generator(v).name;
    }
    std::set<Arrow> arrows;
    for (auto i : subset)
        for (auto j : subset)
            if (i != j && !interaction_coefficient(rep, i, j).is_zero()) arrows.insert({i, j});
    return Digraph(std::move(subset), std::move(arrows), std::move(labels));
}

template <ExactField F>
Digraph associated_digraph(const ReflectionRep<F>& rep) {
    std::vector<std::size_t> all(rep.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return associated_digraph(rep, std::move(all));
}

template <ExactField F>
struct BasisSubsetResult {
    bool found = false;
    std::vector<std::size_t> subset;             // ascending
    std::vector<Vector<F>> invariant_subspace;   // span of alpha_J when growth stalls
};

/// Greedy growth of a weakly connected subset whose reflection vectors form
/// a basis. Stalling exhibits span{alpha_J} as a proper invariant subspace.
template <ExactField F>
BasisSubsetResult<F> connected_basis_subset(const ReflectionRep<F>& rep) {
    const std::size_t n = rep.dim();
    BasisSubsetResult<F> out;
    std::vector<std::size_t> subset{0};  // every alpha is nonzero
    std::vector<Vector<F>> span{rep.generator(0).alpha};
    while (subset.size() < n) {
        bool grown = false;
        for (auto j : subset) {
            for (std::size_t i0 = 0; i0 < rep.size() && !grown; ++i0) {
                const auto moved = rep.generator(i0).matrix * rep.generator(j).alpha;
                if (in_span(span, moved)) continue;
                subset.push_back(i0);
                span.push_back(rep.generator(i0).alpha);
                grown = true;
            }
            if (grown) break;
        }
        if (!grown) {
            std::sort(subset.begin(), subset.end());
            out.subset = std::move(subset);
            out.invariant_subspace = canonical_basis(span, n);
            return out;
        }
        std::sort(subset.begin(), subset.end());
    }
    out.found = true;
    out.subset = std::move(subset);
    return out;
}

// ---- moves ---------------------------------------------------------------

struct Move {
    Subset from;
    Arrow arrow;
    Subset to;
    bool forward = true;  // false: move-back (J is reached from `to` by a forward move)

    friend bool operator==(const Move&, const Move&) = default;
};

/// Forward move of vertex i to j along i -> j: (J \ {i}) ∪ {j}.
inline Subset apply_move(const Digraph& g, const Subset& from, Arrow arrow) {
    const auto [i, j] = arrow;
    if (!g.has_arrow(i, j)) throw InputError("apply_move: arrow not in digraph");
    if (std::find(from.begin(), from.end(), i) == from.end()) throw InputError("apply_move: tail not in subset");
    if (std::find(from.begin(), from.end(), j) != from.end())
        throw InputError("apply_move: head already in subset, cardinality would drop");
    Subset out;
    for (auto v : from)
        if (v != i) out.push_back(v);
    out.push_back(j);
    std::sort(out.begin(), out.end());
    return out;
}

/// Reverse of a forward move along i -> j: (J \ {j}) ∪ {i}.
inline Subset apply_move_back(const Digraph& g, const Subset& from, Arrow arrow) {
    const auto [i, j] = arrow;
    if (!g.has_arrow(i, j)) throw InputError("apply_move_back: arrow not in digraph");
    if (std::find(from.begin(), from.end(), j) == from.end()) throw InputError("apply_move_back: head not in subset");
    if (std::find(from.begin(), from.end(), i) != from.end())
        throw InputError("apply_move_back: tail already in subset, cardinality would drop");
    Subset out;
    for (auto v : from)
        if (v != j) out.push_back(v);
    out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

inline Subset replay(const Digraph& g, Subset start, const std::vector<Move>& moves) {
    for (const auto& m : moves) {
        if (m.from != start) throw InputError("replay: move does not start at the current subset");
        start = m.forward ? apply_move(g, start, m.arrow) : apply_move_back(g, start, m.arrow);
        if (start != m.to) throw InputError("replay: move lands on an unexpected subset");
    }
    return start;
}

/// Shortest sequence of moves turning `from` into `to` (BFS over equal-size subsets).
inline std::vector<Move> move_sequence(const Digraph& g, Subset from, Subset to) {
    if (from.size() != to.size()) throw InputError("move_sequence: subsets differ in size");
    if (!is_weakly_connected(g)) throw InputError("move_sequence: digraph is not weakly connected");
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    for (const auto* s : {&from, &to})
        for (auto v : *s)
            if (!g.has_vertex(v)) throw InputError("move_sequence: vertex not in digraph");
    if (from == to) return {};

    std::map<Subset, Move> parent;
    std::set<Subset> seen{from};
    std::deque<Subset> queue{from};
    while (!queue.empty()) {
        Subset cur = queue.front();
        queue.pop_front();
        std::vector<Move> next;
        for (const auto& a : g.arrows()) {
            const bool has_tail = std::find(cur.begin(), cur.end(), a.first) != cur.end();
            const bool has_head = std::find(cur.begin(), cur.end(), a.second) != cur.end();
            if (has_tail && !has_head) next.push_back({cur, a, apply_move(g, cur, a), true});
            if (has_head && !has_tail) next.push_back({cur, a, apply_move_back(g, cur, a), false});
        }
        for (auto& m : next) {
            if (seen.count(m.to)) continue;
            seen.insert(m.to);
            parent[m.to] = m;
            if (m.to == to) {
                std::vector<Move> path;
                Subset s = to;
                while (s != from) {
                    path.push_back(parent.at(s));
                    s = path.back().from;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(m.to);
        }
    }
    throw InputError("move_sequence: target unreachable");  // impossible for weakly connected digraphs
}

/// Graphviz description; vertices ascending, arrows lexicographic.
inline std::string to_dot(const Digraph& g) {
    std::string out = "digraph G {\n";
    for (auto v : g.vertices()) out += "  \"" + g.label(v) + "\";\n";
    for (const auto& [a, b] : g.arrows()) out += "  \"" + g.label(a) + "\" -> \"" + g.label(b) + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace reflex

#endif
