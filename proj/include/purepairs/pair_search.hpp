#pragma once

#include "purepairs/graph.hpp"

namespace purepairs {

struct StabilizedPair {
    VertexSet p, q;   // anticomplete, connected, full components of host minus cutset
    VertexSet cutset; // minimal; every cut vertex has a neighbour in both p and q
};

// Local search over anticomplete pairs inside the connected host set:
// grow p and q to components of host \ N[other side], take a minimal cutset,
// and while some other component of host \ cutset has strictly larger chi,
// replace the pair. At the fixpoint p is a maximum-chi component of
// host \ cutset and chi(p) >= chi(q); chi(p) never drops below its initial
// value. Realises "chi(P) + chi(Q) maximal" selections through local
// improvement moves only; the cutset arguments need nothing stronger.
StabilizedPair stabilize_anticomplete_pair(const Graph& g, VertexSet host, VertexSet p0,
                                           VertexSet q0);

// Minimal (p,q)-separator inside host, seeded from N(p): every vertex kept has
// a neighbour in both sides' components.
VertexSet minimal_cutset(const Graph& g, VertexSet host, VertexSet p, VertexSet q);

}  // namespace purepairs
