#include "subcount/reduction.hpp"

#include <ostream>

#include "subcount/engine.hpp"
#include "subcount/errors.hpp"
#include "subcount/oracle.hpp"

namespace subcount {

GadgetGraph build_gadget(const UndirectedGraph& g, std::uint32_t k) {
    if (k < 6) throw UnsupportedError("gadget construction needs k >= 6, got " + std::to_string(k));
    const std::uint32_t len = k / 3;
    const bool split = (k % 3) != 0;

    GadgetGraph gg;
    gg.k = k;
    gg.source_n = g.vertex_count();

    Vertex next = g.vertex_count();
    std::vector<Edge> out_edges;

    auto add_path = [&](Vertex u, Vertex v, std::uint32_t inner, char tag) {
        Vertex prev = u;
        for (std::uint32_t t = 1; t <= inner; ++t) {
            Vertex w = next++;
            gg.provenance.push_back({w, u, v, tag, t});
            out_edges.emplace_back(prev, w);
            prev = w;
        }
        out_edges.emplace_back(prev, v);
    };

    for (auto [u, v] : g.edges()) {  // lexicographic, u < v
        add_path(u, v, len - 1, 'V');
        if (split) add_path(u, v, len, 'U');
    }

    gg.graph = UndirectedGraph::from_edges(next, out_edges);
    gg.witness_ordering.reserve(next);
    for (Vertex w = g.vertex_count(); w < next; ++w) gg.witness_ordering.push_back(w);
    for (Vertex w = 0; w < g.vertex_count(); ++w) gg.witness_ordering.push_back(w);
    return gg;
}

void write_provenance(const GadgetGraph& gg, std::ostream& out) {
    for (const auto& p : gg.provenance)
        out << p.gadget_vertex << ' ' << p.source_u << ' ' << p.source_v << ' ' << p.path_tag
            << ' ' << p.index << '\n';
}

CountRelationReport verify_count_relation(const UndirectedGraph& g, std::uint32_t k) {
    if (k < 6) throw UnsupportedError("count relation holds for k >= 6");
    if (k == 8) throw UnsupportedError("k = 8 has no count relation; use verify_tailed_c7");

    CountRelationReport rep;
    rep.k = k;
    rep.triangles = count_pattern(g, named_pattern("triangle")).total;
    GadgetGraph gg = build_gadget(g, k);
    rep.cycle_count = oracle_count(gg.graph, pattern_cycle(k));
    rep.expected = (k % 3 == 0) ? rep.triangles : 3 * rep.triangles;
    rep.pass = (rep.cycle_count == rep.expected);
    return rep;
}

TailedC7Report verify_tailed_c7(const UndirectedGraph& g) {
    TailedC7Report rep;
    rep.triangles = count_pattern(g, named_pattern("triangle")).total;
    GadgetGraph gg = build_gadget(g, 8);
    rep.tailed_c7_count = oracle_count(gg.graph, pattern_tailed_c7());
    rep.pass = ((rep.triangles > 0) == (rep.tailed_c7_count > 0));
    return rep;
}

}  // namespace subcount
