#include "subcount/pattern.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "subcount/errors.hpp"

namespace subcount {

bool Pattern::is_star() const {
    if (k < 3) return false;
    std::vector<unsigned> deg(k, 0);
    for (auto [u, v] : edges) ++deg[u], ++deg[v];
    unsigned centers = 0, leaves = 0;
    for (unsigned d : deg) {
        if (d == k - 1) ++centers;
        else if (d == 1) ++leaves;
    }
    return centers == 1 && leaves == k - 1;
}

Vertex Pattern::star_center() const {
    std::vector<unsigned> deg(k, 0);
    for (auto [u, v] : edges) ++deg[u], ++deg[v];
    return static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
}

Pattern make_pattern(std::uint32_t k, std::vector<Edge> edges, std::string name) {
    if (k < 2) throw UnsupportedError("pattern needs at least 2 vertices");
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    // from_edges rejects self-loops, duplicates, and out-of-range endpoints
    UndirectedGraph g = UndirectedGraph::from_edges(k, edges);

    std::vector<char> seen(k, 0);
    std::vector<Vertex> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (Vertex w : g.neighbors(queue[head]))
            if (!seen[w]) seen[w] = 1, queue.push_back(w);
    if (queue.size() != k) throw UnsupportedError("pattern \"" + name + "\" must be connected");

    return Pattern{k, std::move(edges), std::move(name)};
}

Pattern pattern_path(std::uint32_t k) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return make_pattern(k, std::move(e), "path" + std::to_string(k));
}

Pattern pattern_cycle(std::uint32_t k) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, k - 1);
    return make_pattern(k, std::move(e), "C" + std::to_string(k));
}

Pattern pattern_clique(std::uint32_t k) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return make_pattern(k, std::move(e), "K" + std::to_string(k));
}

Pattern pattern_star(std::uint32_t leaves) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return make_pattern(leaves + 1, std::move(e), std::to_string(leaves) + "-star");
}

Pattern pattern_tailed_c7() {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < 7; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, 6);
    e.emplace_back(0, 7);
    return make_pattern(8, std::move(e), "C7-tailed");
}

Pattern pattern_from_edge_list_text(const std::string& text, std::string name) {
    UndirectedGraph g = parse_edge_list(text);
    return make_pattern(g.vertex_count(), g.edges(), std::move(name));
}

Pattern pattern_from_file(const std::string& path) {
    UndirectedGraph g = load_edge_list(path);
    return make_pattern(g.vertex_count(), g.edges(), path);
}

namespace {

Pattern pat(std::uint32_t k, std::string name, std::vector<Edge> edges) {
    return make_pattern(k, std::move(edges), std::move(name));
}

std::vector<Pattern> build_catalog3() {
    return {
        pat(3, "path3", {{0, 1}, {1, 2}}),
        pat(3, "triangle", {{0, 1}, {0, 2}, {1, 2}}),
    };
}

std::vector<Pattern> build_catalog4() {
    return {
        pat(4, "3-star", {{0, 1}, {0, 2}, {0, 3}}),
        pat(4, "path4", {{0, 1}, {1, 2}, {2, 3}}),
        pat(4, "C4", {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
        pat(4, "paw", {{0, 1}, {0, 2}, {1, 2}, {2, 3}}),
        pat(4, "diamond", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),
        pat(4, "K4", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
    };
}

std::vector<Pattern> build_catalog5() {
    return {
        // trees
        pat(5, "4-star", {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
        pat(5, "fork", {{0, 1}, {1, 2}, {2, 3}, {1, 4}}),
        pat(5, "path5", {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
        // one cycle
        pat(5, "C5", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}),
        pat(5, "banner", {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}}),
        pat(5, "bull", {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}),
        pat(5, "cricket", {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}}),
        pat(5, "tadpole", {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}),
        // two cycles
        pat(5, "bowtie", {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}),
        pat(5, "dart", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}}),
        pat(5, "house", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}}),
        pat(5, "K23", {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}),
        pat(5, "kite", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}}),
        // seven edges
        pat(5, "3-book", {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}),
        pat(5, "gem", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}),
        pat(5, "K23e", {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}),
        pat(5, "tailed-K4", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}}),
        // eight and up
        pat(5, "K5-P3", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {3, 4}}),
        pat(5, "W4", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}}),
        pat(5, "K5-e", {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}),
        pat(5, "K5",
            {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
    };
}

const std::vector<Pattern>& extras() {
    static const std::vector<Pattern> list = [] {
        std::vector<Pattern> v;
        for (std::uint32_t k = 6; k <= 12; ++k) v.push_back(pattern_cycle(k));
        v.push_back(pattern_tailed_c7());
        v.push_back(pattern_clique(6));
        return v;
    }();
    return list;
}

}  // namespace

const std::vector<Pattern>& catalog(std::uint32_t k) {
    static const std::vector<Pattern> c3 = build_catalog3();
    static const std::vector<Pattern> c4 = build_catalog4();
    static const std::vector<Pattern> c5 = build_catalog5();
    switch (k) {
        case 3: return c3;
        case 4: return c4;
        case 5: return c5;
        default: throw UnsupportedError("catalog supports k in {3,4,5}, got " + std::to_string(k));
    }
}

const Pattern& named_pattern(const std::string& name) {
    for (std::uint32_t k : {3u, 4u, 5u})
        for (const Pattern& p : catalog(k))
            if (p.name == name) return p;
    for (const Pattern& p : extras())
        if (p.name == name) return p;
    throw UnsupportedError("unknown pattern \"" + name + "\"");
}

std::vector<std::string> named_pattern_names() {
    std::vector<std::string> out;
    for (std::uint32_t k : {3u, 4u, 5u})
        for (const Pattern& p : catalog(k)) out.push_back(p.name);
    for (const Pattern& p : extras()) out.push_back(p.name);
    return out;
}

std::vector<Edge> PatternOrientation::arcs() const {
    std::vector<Edge> out;
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            if (dag.edge(i, j)) out.emplace_back(i, j);
    return out;
}

std::string PatternOrientation::describe_arcs() const {
    std::ostringstream os;
    bool first = true;
    for (auto [u, v] : arcs()) {
        if (!first) os << ", ";
        os << u << "->" << v;
        first = false;
    }
    return os.str();
}

Drts largest_drts(const TinyGraph& dag) {
    const unsigned k = dag.k;
    std::array<unsigned, 16> in_deg{};
    for (unsigned u = 0; u < k; ++u)
        for (unsigned v = 0; v < k; ++v)
            if (dag.edge(u, v)) ++in_deg[v];

    Drts best;
    std::array<std::uint8_t, 8> best_sig{};
    for (unsigned s = 0; s < k; ++s) {
        if (in_deg[s] != 0) continue;
        Drts cur;
        std::uint16_t visited = std::uint16_t(1u << s);
        cur.vertex[0] = static_cast<std::uint8_t>(s);
        cur.size = 1;
        for (unsigned head = 0; head < cur.size; ++head) {
            unsigned u = cur.vertex[head];
            for (unsigned w = 0; w < k; ++w) {
                if (!dag.edge(u, w) || (visited & (1u << w))) continue;
                visited |= std::uint16_t(1u << w);
                cur.vertex[cur.size] = static_cast<std::uint8_t>(w);
                cur.parent[cur.size] = static_cast<std::uint8_t>(head);
                ++cur.size;
            }
        }
        std::array<std::uint8_t, 8> sig{};
        for (unsigned i = 1; i < cur.size; ++i) sig[i] = cur.parent[i];
        bool better = cur.size > best.size;
        if (cur.size == best.size) {
            if (sig < best_sig) better = true;
            else if (sig == best_sig && std::lexicographical_compare(
                                            cur.vertex.begin(), cur.vertex.begin() + cur.size,
                                            best.vertex.begin(), best.vertex.begin() + best.size))
                better = true;
        }
        if (better) {
            best = cur;
            best_sig = sig;
        }
    }
    return best;
}

std::uint64_t automorphism_count(const TinyGraph& dag) {
    return automorphism_count_directed(dag);
}

namespace {

// Fills plan/applicability fields of an orientation whose dag, drts, and
// remainder members are already set.
void attach_plan(const Pattern& h, PatternOrientation& o) {
    if (h.is_star()) {
        Vertex c = h.star_center();
        unsigned in_edges = 0;
        for (unsigned u = 0; u < o.k; ++u)
            if (o.dag.edge(u, c)) ++in_edges;
        o.plan = CompletionPlan{PlanKind::star_closed_form, 0, 0,
                                static_cast<std::uint8_t>(in_edges)};
        o.applicable = true;
        return;
    }

    std::array<std::uint8_t, 8> pos_of{};
    std::array<bool, 8> in_tree{};
    for (unsigned i = 0; i < o.drts.size; ++i) {
        pos_of[o.drts.vertex[i]] = static_cast<std::uint8_t>(i);
        in_tree[o.drts.vertex[i]] = true;
    }
    auto tree_mask_of = [&](unsigned v) {
        std::uint8_t mask = 0;
        for (unsigned w = 0; w < o.k; ++w)
            if (o.dag.edge(v, w) && in_tree[w]) mask |= std::uint8_t(1u << pos_of[w]);
        return mask;
    };

    if (o.remainder_size > 2) {
        for (unsigned v = 0; v < o.k; ++v) {
            if (in_tree[v]) continue;
            unsigned in_deg = 0;
            for (unsigned u = 0; u < o.k; ++u)
                if (o.dag.edge(u, v)) ++in_deg;
            if (in_deg >= 2) o.remainder_in_in_wedge = true;
        }
        o.applicable = false;
        return;
    }

    if (o.remainder_size == 0) {
        o.plan = CompletionPlan{PlanKind::full, 0, 0, 0};
        return;
    }

    if (o.remainder_size == 1) {
        std::uint8_t mask = tree_mask_of(o.remainder[0]);
        if (std::popcount(mask) > 4) {
            o.applicable = false;
            return;
        }
        o.plan = CompletionPlan{PlanKind::one_vertex, mask, 0, 0};
        return;
    }

    unsigned a = o.remainder[0], b = o.remainder[1];
    bool ab = o.dag.edge(a, b), ba = o.dag.edge(b, a);
    if (ba) std::swap(a, b);
    std::uint8_t mask_a = tree_mask_of(a), mask_b = tree_mask_of(b);
    o.remainder[0] = static_cast<std::uint8_t>(a);
    o.remainder[1] = static_cast<std::uint8_t>(b);
    if (ab || ba) {
        unsigned union_sz = std::popcount(std::uint8_t(mask_a | mask_b));
        if (std::popcount(mask_a) > 3 || union_sz > 3 || union_sz == 0) {
            o.applicable = false;
            return;
        }
        o.plan = CompletionPlan{PlanKind::two_adjacent, mask_a, mask_b, 0};
    } else {
        if (std::popcount(mask_a) > 4 || std::popcount(mask_b) > 4 ||
            std::popcount(std::uint8_t(mask_a | mask_b)) > 4) {
            o.applicable = false;
            return;
        }
        o.plan = CompletionPlan{PlanKind::two_independent, mask_a, mask_b, 0};
    }
}

}  // namespace

std::vector<PatternOrientation> acyclic_orientations(const Pattern& h) {
    const unsigned k = h.k;
    if (k > 8) throw UnsupportedError("orientation classes support patterns with at most 8 vertices");

    // Every acyclic orientation is induced by some total order, so sweeping
    // all k! orders finds each labeled DAG at least once.
    std::set<std::uint64_t> masks;
    std::array<unsigned, 8> perm{};
    std::iota(perm.begin(), perm.begin() + k, 0u);
    std::array<unsigned, 8> rank{};
    do {
        for (unsigned i = 0; i < k; ++i) rank[perm[i]] = i;
        std::uint64_t mask = 0;
        for (auto [u, v] : h.edges) {
            if (rank[u] < rank[v]) mask |= 1ull << (u * 8 + v);
            else mask |= 1ull << (v * 8 + u);
        }
        masks.insert(mask);
    } while (std::next_permutation(perm.begin(), perm.begin() + k));

    std::map<unsigned __int128, PatternOrientation> classes;
    for (std::uint64_t mask : masks) {
        TinyGraph dag;
        dag.k = k;
        for (unsigned u = 0; u < k; ++u)
            for (unsigned v = 0; v < k; ++v)
                if (mask & (1ull << (u * 8 + v))) dag.add_arc(u, v);
        CanonicalForm canon = canonical_form_directed(dag);
        if (classes.contains(canon.code)) continue;

        PatternOrientation o;
        o.k = static_cast<std::uint8_t>(k);
        o.dag = dag;
        o.iso_code = canon.code;
        o.aut = canon.automorphisms;
        o.drts = largest_drts(dag);

        std::array<bool, 8> in_tree{};
        std::array<std::uint8_t, 8> pos_of{};
        for (unsigned i = 0; i < o.drts.size; ++i) {
            in_tree[o.drts.vertex[i]] = true;
            pos_of[o.drts.vertex[i]] = static_cast<std::uint8_t>(i);
        }
        for (unsigned v = 0; v < k; ++v)
            if (!in_tree[v] && o.remainder_size < 2)
                o.remainder[o.remainder_size++] = static_cast<std::uint8_t>(v);
            else if (!in_tree[v])
                ++o.remainder_size;

        for (unsigned u = 0; u < k; ++u)
            for (unsigned v = 0; v < k; ++v) {
                if (!dag.edge(u, v) || !in_tree[u] || !in_tree[v]) continue;
                unsigned pu = pos_of[u], pv = pos_of[v];
                if (pv > 0 && o.drts.parent[pv] == pu) continue;  // tree arc
                o.chords.emplace_back(static_cast<std::uint8_t>(pu), static_cast<std::uint8_t>(pv));
            }

        attach_plan(h, o);
        classes.emplace(canon.code, std::move(o));
    }

    std::vector<PatternOrientation> out;
    out.reserve(classes.size());
    for (auto& [code, o] : classes) out.push_back(std::move(o));
    return out;
}

CompletionPlan build_completion_plan(const Pattern& h, const PatternOrientation& o) {
    if (o.applicable) return o.plan;
    throw EngineInapplicableError(
        h.name, o.describe_arcs(), o.remainder_size, o.remainder_in_in_wedge,
        "pattern \"" + h.name + "\" has an acyclic orientation the engine cannot complete: arcs [" +
            o.describe_arcs() + "] leave " + std::to_string(o.remainder_size) +
            " vertices outside the largest directed rooted tree" +
            (o.remainder_in_in_wedge ? " (remainder contains an in-in wedge)" : ""));
}

}  // namespace subcount
