#include "subcount/hash_index.hpp"

#include <algorithm>

#include "subcount/errors.hpp"

namespace subcount {

VertexSetKey VertexSetKey::make(const Vertex* v, unsigned n) {
    std::array<std::uint64_t, 4> s{};
    for (unsigned i = 0; i < n; ++i) s[i] = static_cast<std::uint64_t>(v[i]) + 1;
    std::sort(s.begin(), s.begin() + n);
    return VertexSetKey{s[0] | (s[1] << 32), s[2] | (s[3] << 32)};
}

unsigned VertexSetKey::size() const {
    unsigned n = 0;
    for (std::uint64_t w : {lo & 0xffffffffu, lo >> 32, hi & 0xffffffffu, hi >> 32})
        if (w) ++n;
    return n;
}

HashIndex::HashIndex(const OrientedGraph& g, bool need_hm2, bool need_hm3) {
    build_hm1(g);
    if (need_hm2) build_hm2(g);
    if (need_hm3) build_hm3(g);
}

void HashIndex::build_hm1(const OrientedGraph& g) {
    hm1_.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) hm1_.insert((static_cast<std::uint64_t>(u) << 32) | v);
}

void HashIndex::build_hm2(const OrientedGraph& g) {
    has_hm2_ = true;
    // Each S with 1 <= |S| <= 4 and S subset of N+(u) is charged to the edge
    // (u,v) whose head v is the earliest-ranked member of S, so it is
    // counted exactly once per u.
    Vertex later[64];
    Vertex key[4];
    for (auto [u, v] : g.edges()) {
        unsigned nl = 0;
        for (Vertex w : g.out_neighbors(u))
            if (g.rank(w) > g.rank(v)) later[nl++] = w;
        key[0] = v;
        ++hm2_[VertexSetKey::make(key, 1)];
        for (unsigned a = 0; a < nl; ++a) {
            key[1] = later[a];
            ++hm2_[VertexSetKey::make(key, 2)];
            for (unsigned b = a + 1; b < nl; ++b) {
                key[2] = later[b];
                ++hm2_[VertexSetKey::make(key, 3)];
                for (unsigned c = b + 1; c < nl; ++c) {
                    key[3] = later[c];
                    ++hm2_[VertexSetKey::make(key, 4)];
                }
            }
        }
    }
}

void HashIndex::build_hm3(const OrientedGraph& g) {
    has_hm3_ = true;
    // For each edge (u,v), every admissible (S1,S2) with S1 subset of N+(u)
    // and S2 subset of N+(v) is incremented once. S2 splits into B, drawn
    // from N+(v) \ S1 and bounded by |S1| + |B| <= 3, and A, any subset of
    // S1 intersect N+(v); membership of S1 members in N+(v) comes from HM1.
    std::vector<Vertex> s1(3), b_pool, a_pool;
    Vertex s2[6];
    for (auto [u, v] : g.edges()) {
        auto outs = g.out_neighbors(u);
        const unsigned du = static_cast<unsigned>(outs.size());

        auto emit_for_s1 = [&](unsigned n1) {
            VertexSetKey k1 = VertexSetKey::make(s1.data(), n1);
            a_pool.clear();
            b_pool.clear();
            for (unsigned i = 0; i < n1; ++i)
                if (contains_edge(v, s1[i])) a_pool.push_back(s1[i]);
            for (Vertex w : g.out_neighbors(v)) {
                bool in_s1 = false;
                for (unsigned i = 0; i < n1; ++i) in_s1 |= (s1[i] == w);
                if (!in_s1) b_pool.push_back(w);
            }
            const unsigned max_b = 3 - n1;
            const unsigned nb = static_cast<unsigned>(b_pool.size());
            const unsigned na = static_cast<unsigned>(a_pool.size());

            auto emit_b = [&](const Vertex* bsel, unsigned cb) {
                if (n1 + cb == 0) return;
                for (std::uint32_t am = 0; am < (1u << na); ++am) {
                    unsigned n2 = 0;
                    for (unsigned i = 0; i < cb; ++i) s2[n2++] = bsel[i];
                    for (unsigned i = 0; i < na; ++i)
                        if (am & (1u << i)) s2[n2++] = a_pool[i];
                    ++hm3_[SetPairKey{k1, VertexSetKey::make(s2, n2)}];
                }
            };

            Vertex bsel[3];
            emit_b(bsel, 0);
            if (max_b >= 1)
                for (unsigned i = 0; i < nb; ++i) {
                    bsel[0] = b_pool[i];
                    emit_b(bsel, 1);
                    if (max_b >= 2)
                        for (unsigned j = i + 1; j < nb; ++j) {
                            bsel[1] = b_pool[j];
                            emit_b(bsel, 2);
                            if (max_b >= 3)
                                for (unsigned l = j + 1; l < nb; ++l) {
                                    bsel[2] = b_pool[l];
                                    emit_b(bsel, 3);
                                }
                        }
                }
        };

        emit_for_s1(0);
        for (unsigned a = 0; a < du; ++a) {
            s1[0] = outs[a];
            emit_for_s1(1);
            for (unsigned b = a + 1; b < du; ++b) {
                s1[1] = outs[b];
                emit_for_s1(2);
                for (unsigned c = b + 1; c < du; ++c) {
                    s1[2] = outs[c];
                    emit_for_s1(3);
                }
            }
        }
    }
}

}  // namespace subcount
