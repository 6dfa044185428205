#include "purepairs/pair_search.hpp"

#include "purepairs/oracles.hpp"

namespace purepairs {

namespace {

bool separates(const Graph& g, VertexSet host, VertexSet cut, VertexSet p, VertexSet q) {
    VertexSet reach = component_of(g, host.minus(cut), p.lowest());
    // p is connected, so reachability from its lowest vertex covers it
    return !reach.intersects(q);
}

}  // namespace

VertexSet minimal_cutset(const Graph& g, VertexSet host, VertexSet p, VertexSet q) {
    if (!p.subset_of(host) || !q.subset_of(host))
        throw InvalidInput("minimal_cutset: sides must lie inside the host");
    if (!is_connected(g, p)) throw InvalidInput("minimal_cutset: p must be connected");
    VertexSet cut = neighbourhood_of_set(g, p) & host.minus(p);
    if (!separates(g, host, cut, p, q))
        throw std::logic_error("minimal_cutset: seed separator does not separate");
    bool removed = true;
    while (removed) {
        removed = false;
        for (std::uint64_t m = cut.bits(); m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (separates(g, host, cut.without(v), p, q)) {
                cut.remove(v);
                removed = true;
            }
        }
    }
    return cut;
}

StabilizedPair stabilize_anticomplete_pair(const Graph& g, VertexSet host, VertexSet p0,
                                           VertexSet q0) {
    if (p0.empty() || q0.empty()) throw InvalidInput("stabilize: empty side");
    if (!p0.subset_of(host) || !q0.subset_of(host))
        throw InvalidInput("stabilize: sides must lie inside the host");
    if (!is_anticomplete_between(g, p0, q0) || p0.intersects(q0))
        throw InvalidInput("stabilize: sides not anticomplete");
    VertexSet p = component_of(g, host.minus(neighbourhood_of_set(g, q0) | q0), p0.lowest());
    VertexSet q = component_of(g, host.minus(neighbourhood_of_set(g, p) | p), q0.lowest());
    while (true) {
        // grow to mutual-component fixpoint
        while (true) {
            VertexSet p2 = component_of(g, host.minus(neighbourhood_of_set(g, q) | q), p.lowest());
            VertexSet q2 =
                component_of(g, host.minus(neighbourhood_of_set(g, p2) | p2), q.lowest());
            if (p2 == p && q2 == q) break;
            p = p2;
            q = q2;
        }
        VertexSet cut = minimal_cutset(g, host, p, q);
        auto comps = components(g, host.minus(cut));
        VertexSet cp, cq, cmax;
        int chi_max = -1;
        for (const auto& c : comps) {
            if (c.intersects(p)) cp = c;
            if (c.intersects(q)) cq = c;
            int chi = chromatic_number(g, c);
            if (chi > chi_max) {
                chi_max = chi;
                cmax = c;
            }
        }
        int chi_cp = chromatic_number(g, cp);
        int chi_cq = chromatic_number(g, cq);
        if (chi_max > std::max(chi_cp, chi_cq)) {
            // strict improvement: pair the best component with the better old side
            VertexSet other = chi_cp >= chi_cq ? cp : cq;
            p = cmax;
            q = other;
            continue;
        }
        VertexSet np = chi_cp >= chi_cq ? cp : cq;
        VertexSet nq = chi_cp >= chi_cq ? cq : cp;
        if (np == p && nq == q) return {p, q, cut};
        p = np;
        q = nq;
    }
}

}  // namespace purepairs
