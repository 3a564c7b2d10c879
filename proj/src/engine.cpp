#include "subcount/engine.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>

#include "subcount/errors.hpp"

namespace subcount {

namespace {

BigInt bigint_from_u128(unsigned __int128 v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | static_cast<std::uint64_t>(v);
}

// Collects the graph vertices assigned to the tree positions in `mask`.
inline unsigned gather(const TreeMatch& tm, std::uint8_t mask, Vertex* out) {
    unsigned n = 0;
    while (mask) {
        unsigned p = static_cast<unsigned>(std::countr_zero(mask));
        out[n++] = tm.img[p];
        mask &= std::uint8_t(mask - 1);
    }
    return n;
}

inline bool subset_of_out(const HashIndex& idx, const Vertex* s, unsigned n, Vertex w) {
    for (unsigned i = 0; i < n; ++i)
        if (!idx.contains_edge(w, s[i])) return false;
    return true;
}

template <typename Visitor>
void for_each_tree_match(const OrientedGraph& g, const Drts& drts, std::span<const Edge> edges,
                         Visitor&& visit) {
    const unsigned r = drts.size;
    TreeMatch tm;
    tm.size = static_cast<std::uint8_t>(r);

    struct Cursor {
        const Vertex* it;
        const Vertex* end;
    };
    std::array<Cursor, 8> cur{};

    for (auto [u, v] : edges) {
        tm.img[0] = u;
        tm.img[1] = v;
        if (r == 2) {
            visit(tm);
            continue;
        }
        unsigned level = 2;
        auto span0 = g.out_neighbors(tm.img[drts.parent[2]]);
        cur[2] = {span0.data(), span0.data() + span0.size()};
        while (true) {
            if (cur[level].it == cur[level].end) {
                if (level == 2) break;
                --level;
                continue;
            }
            Vertex w = *cur[level].it++;
            bool used = false;
            for (unsigned i = 0; i < level; ++i) used |= (tm.img[i] == w);
            if (used) continue;
            tm.img[level] = w;
            if (level == r - 1) {
                visit(tm);
            } else {
                ++level;
                auto sp = g.out_neighbors(tm.img[drts.parent[level]]);
                cur[level] = {sp.data(), sp.data() + sp.size()};
            }
        }
    }
}

}  // namespace

void enumerate_tree_matches(const OrientedGraph& g, const Drts& drts,
                            const std::function<void(const TreeMatch&)>& visit) {
    for_each_tree_match(g, drts, g.edges(), visit);
}

bool validate_match(const TreeMatch& tm, const PatternOrientation& o, const HashIndex& idx) {
    for (auto [pa, pb] : o.chords)
        if (!idx.contains_edge(tm.img[pa], tm.img[pb])) return false;
    return true;
}

unsigned __int128 count_completions(const TreeMatch& tm, const PatternOrientation& o,
                                    const HashIndex& idx, const OrientedGraph& g) {
    Vertex si[4], sj[4], su[8];
    const unsigned r = tm.size;

    switch (o.plan.kind) {
        case PlanKind::one_vertex: {
            unsigned ni = gather(tm, o.plan.s_first, si);
            std::uint64_t total = idx.common_out_count(VertexSetKey::make(si, ni));
            std::uint64_t coll = 0;
            for (unsigned t = 0; t < r; ++t)
                if (subset_of_out(idx, si, ni, tm.img[t])) ++coll;
            if (total < coll) throw InternalInvariantError("one-vertex completion went negative");
            return total - coll;
        }

        case PlanKind::two_independent: {
            unsigned ni = gather(tm, o.plan.s_first, si);
            unsigned nj = gather(tm, o.plan.s_second, sj);
            unsigned nu = gather(tm, std::uint8_t(o.plan.s_first | o.plan.s_second), su);
            auto fresh = [&](const Vertex* s, unsigned n) {
                std::uint64_t total = idx.common_out_count(VertexSetKey::make(s, n));
                std::uint64_t coll = 0;
                for (unsigned t = 0; t < r; ++t)
                    if (subset_of_out(idx, s, n, tm.img[t])) ++coll;
                if (total < coll)
                    throw InternalInvariantError("two-vertex completion went negative");
                return total - coll;
            };
            unsigned __int128 a = fresh(si, ni);
            unsigned __int128 b = fresh(sj, nj);
            unsigned __int128 both = fresh(su, nu);
            unsigned __int128 pairs = a * b;
            if (pairs < both)
                throw InternalInvariantError("independent-pair completion went negative");
            return pairs - both;
        }

        case PlanKind::two_adjacent: {
            unsigned ni = gather(tm, o.plan.s_first, si);
            unsigned nj = gather(tm, o.plan.s_second, sj);
            std::uint64_t total =
                idx.edge_pair_count(VertexSetKey::make(si, ni), VertexSetKey::make(sj, nj));
            // Remove edges colliding with the tree image in either endpoint:
            // tail collisions by scanning the tail's out-neighbors, fresh-tail
            // head collisions through HM2 on S_i plus the head.
            std::uint64_t coll = 0;
            for (unsigned t = 0; t < r; ++t) {
                Vertex w = tm.img[t];
                if (!subset_of_out(idx, si, ni, w)) continue;
                for (Vertex x : g.out_neighbors(w))
                    if (subset_of_out(idx, sj, nj, x)) ++coll;
            }
            for (unsigned t = 0; t < r; ++t) {
                Vertex x = tm.img[t];
                if (!subset_of_out(idx, sj, nj, x)) continue;
                unsigned nix = ni;
                bool present = false;
                for (unsigned i = 0; i < ni; ++i) present |= (si[i] == x);
                Vertex key[5];
                for (unsigned i = 0; i < ni; ++i) key[i] = si[i];
                if (!present) key[nix++] = x;
                std::uint64_t tails = idx.common_out_count(VertexSetKey::make(key, nix));
                std::uint64_t tail_coll = 0;
                for (unsigned t2 = 0; t2 < r; ++t2)
                    if (subset_of_out(idx, key, nix, tm.img[t2])) ++tail_coll;
                if (tails < tail_coll)
                    throw InternalInvariantError("adjacent-pair correction went negative");
                coll += tails - tail_coll;
            }
            if (total < coll) throw InternalInvariantError("adjacent-pair completion went negative");
            return total - coll;
        }

        case PlanKind::full:
        case PlanKind::star_closed_form:
            throw InternalInvariantError("count_completions called without a completion plan");
    }
    return 0;
}

namespace {

BigInt count_class_range(const OrientedGraph& g, const HashIndex& idx,
                         const PatternOrientation& o, std::span<const Edge> edges) {
    unsigned __int128 acc = 0;
    const bool full = o.plan.kind == PlanKind::full;
    for_each_tree_match(g, o.drts, edges, [&](const TreeMatch& tm) {
        if (!validate_match(tm, o, idx)) return;
        if (full)
            acc += 1;
        else
            acc += count_completions(tm, o, idx, g);
    });
    return bigint_from_u128(acc);
}

BigInt count_class(const OrientedGraph& g, const HashIndex& idx, const PatternOrientation& o,
                   int threads) {
    auto edges = g.edges();
    if (threads <= 1 || edges.size() < 1024) return count_class_range(g, idx, o, edges);

    const std::size_t nchunk = static_cast<std::size_t>(threads);
    std::vector<BigInt> part(nchunk);
    std::vector<std::thread> pool;
    pool.reserve(nchunk);
    for (std::size_t c = 0; c < nchunk; ++c) {
        std::size_t lo = edges.size() * c / nchunk;
        std::size_t hi = edges.size() * (c + 1) / nchunk;
        pool.emplace_back([&, lo, hi, c] {
            part[c] = count_class_range(g, idx, o, edges.subspan(lo, hi - lo));
        });
    }
    for (auto& t : pool) t.join();
    BigInt sum = 0;
    for (const BigInt& p : part) sum += p;
    return sum;
}

BigInt star_class_distinct(const OrientedGraph& g, unsigned k, unsigned in_edges) {
    const unsigned out_edges = k - 1 - in_edges;
    BigInt sum = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        sum += binomial(g.in_degree(u), in_edges) * binomial(g.out_degree(u), out_edges);
    return sum;
}

}  // namespace

PatternPrep prepare_pattern(const Pattern& h) {
    PatternPrep prep;
    prep.pattern = h;
    prep.classes = acyclic_orientations(h);
    for (const PatternOrientation& o : prep.classes) {
        build_completion_plan(h, o);  // throws when not applicable
        switch (o.plan.kind) {
            case PlanKind::one_vertex:
            case PlanKind::two_independent:
                prep.needs_hm2 = true;
                break;
            case PlanKind::two_adjacent:
                prep.needs_hm2 = true;
                prep.needs_hm3 = true;
                break;
            default:
                break;
        }
    }
    return prep;
}

CountReport count_pattern_oriented(const OrientedGraph& og, const HashIndex& idx,
                                   const PatternPrep& prep, int threads) {
    auto start = std::chrono::steady_clock::now();
    CountReport rep;
    rep.pattern = prep.pattern.name;
    rep.k = prep.pattern.k;
    rep.kappa = og.max_out_degree();
    rep.n = og.vertex_count();
    rep.m = og.edge_count();
    rep.threads = threads;
    rep.total = 0;

    for (const PatternOrientation& o : prep.classes) {
        ClassCount cc;
        cc.iso_code = o.iso_code;
        cc.aut = o.aut;
        if (o.plan.kind == PlanKind::star_closed_form) {
            cc.distinct = star_class_distinct(og, prep.pattern.k, o.plan.star_in_edges);
            cc.raw = cc.distinct * o.aut;
        } else {
            cc.raw = count_class(og, idx, o, threads);
            if (cc.raw % o.aut != 0)
                throw InternalInvariantError("class total " + cc.raw.str() +
                                             " not divisible by automorphism count " +
                                             std::to_string(o.aut));
            cc.distinct = cc.raw / o.aut;
        }
        rep.total += cc.distinct;
        rep.classes.push_back(std::move(cc));
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

CountReport count_pattern(const UndirectedGraph& g, const Pattern& h, int threads) {
    auto start = std::chrono::steady_clock::now();
    PatternPrep prep = prepare_pattern(h);
    DegeneracyOrdering ord = degeneracy_ordering(g);
    OrientedGraph og = orient(g, ord.order);
    HashIndex idx(og, prep.needs_hm2, prep.needs_hm3);
    CountReport rep = count_pattern_oriented(og, idx, prep, threads);
    rep.kappa = ord.degeneracy;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

CountReport count_pattern_with_ordering(const UndirectedGraph& g, const Pattern& h,
                                        std::span<const Vertex> order, int threads) {
    PatternPrep prep = prepare_pattern(h);
    OrientedGraph og = orient(g, order);
    HashIndex idx(og, prep.needs_hm2, prep.needs_hm3);
    return count_pattern_oriented(og, idx, prep, threads);
}

std::vector<CountReport> count_all(const UndirectedGraph& g, std::uint32_t k, int threads) {
    const std::vector<Pattern>& cat = catalog(k);
    std::vector<PatternPrep> preps;
    preps.reserve(cat.size());
    bool need2 = false, need3 = false;
    for (const Pattern& p : cat) {
        preps.push_back(prepare_pattern(p));
        need2 |= preps.back().needs_hm2;
        need3 |= preps.back().needs_hm3;
    }

    DegeneracyOrdering ord = degeneracy_ordering(g);
    OrientedGraph og = orient(g, ord.order);
    HashIndex idx(og, need2, need3);

    std::vector<CountReport> out;
    out.reserve(preps.size());
    for (const PatternPrep& prep : preps) {
        out.push_back(count_pattern_oriented(og, idx, prep, threads));
        out.back().kappa = ord.degeneracy;
    }

    // Star counts have an orientation-free closed form; disagreement means
    // an index or enumeration bug.
    for (std::size_t i = 0; i < cat.size(); ++i) {
        if (!cat[i].is_star()) continue;
        BigInt expect = 0;
        for (Vertex u = 0; u < g.vertex_count(); ++u) expect += binomial(g.degree(u), k - 1);
        if (out[i].total != expect)
            throw InternalInvariantError("star count " + out[i].total.str() +
                                         " disagrees with closed form " + expect.str());
    }
    return out;
}

std::string to_hex(unsigned __int128 v) {
    if (v == 0) return "0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    while (v) {
        s.push_back(digits[static_cast<unsigned>(v & 0xf)]);
        v >>= 4;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace subcount
