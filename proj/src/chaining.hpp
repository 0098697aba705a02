#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath::detail {

/**
 * Reusable forward-chaining state. fit() sizes the arrays for one graph;
 * every query rolls its own marks back before returning, so the scratch
 * can be reused across many queries without re-fitting.
 */
struct ChainingScratch {
    std::vector<int> remaining;      // arc -> tails not yet reached
    std::vector<char> reached;       // vertex -> mark
    std::vector<char> is_target;     // vertex -> mark, only during a query
    std::vector<int> queue;          // reached vertices in discovery order
    std::vector<int> touched_arcs;   // arcs whose counters moved

    void fit(const DirectedHypergraph& d) {
        remaining.resize(static_cast<std::size_t>(d.arc_count()));
        for (int a = 0; a < d.arc_count(); ++a)
            remaining[static_cast<std::size_t>(a)] = static_cast<int>(d.arc(a).tails.size());
        reached.assign(static_cast<std::size_t>(d.vertex_count()), 0);
        is_target.assign(static_cast<std::size_t>(d.vertex_count()), 0);
        queue.clear();
        touched_arcs.clear();
    }
};

/**
 * Forward chaining: a head fires once every tail of one of its arcs is
 * reached. Returns true when all targets end up reached from the sources,
 * using only the arcs accepted by `alive`. Stops as soon as the last
 * target falls. The scratch must have been fit() to `d`.
 */
template <class AliveFn>
bool reaches(const DirectedHypergraph& d, std::span<const int> sources,
             std::span<const int> targets, AliveFn&& alive, ChainingScratch& s) {
    auto& q = s.queue;
    q.clear();
    s.touched_arcs.clear();

    int waiting = 0;
    for (int v : targets) {
        if (!s.is_target[static_cast<std::size_t>(v)]) {
            s.is_target[static_cast<std::size_t>(v)] = 1;
            ++waiting;
        }
    }
    for (int v : sources) {
        if (!s.reached[static_cast<std::size_t>(v)]) {
            s.reached[static_cast<std::size_t>(v)] = 1;
            q.push_back(v);
            if (s.is_target[static_cast<std::size_t>(v)]) --waiting;
        }
    }

    std::size_t head = 0;
    while (head < q.size() && waiting > 0) {
        int v = q[head++];
        for (ArcId a : d.arcs_with_tail(v)) {
            if (!alive(a)) continue;
            s.touched_arcs.push_back(a);
            if (--s.remaining[static_cast<std::size_t>(a)] == 0) {
                for (int h : d.arc(a).heads) {
                    if (s.reached[static_cast<std::size_t>(h)]) continue;
                    s.reached[static_cast<std::size_t>(h)] = 1;
                    q.push_back(h);
                    if (s.is_target[static_cast<std::size_t>(h)]) --waiting;
                }
            }
        }
    }

    for (ArcId a : s.touched_arcs)
        s.remaining[static_cast<std::size_t>(a)] = static_cast<int>(d.arc(a).tails.size());
    for (int v : q) s.reached[static_cast<std::size_t>(v)] = 0;
    for (int v : targets) s.is_target[static_cast<std::size_t>(v)] = 0;
    return waiting == 0;
}

/// Full least fixpoint from the sources over all arcs, as sorted vertex
/// indexes. Same rollback discipline as reaches().
inline std::vector<int> closure(const DirectedHypergraph& d, std::span<const int> sources,
                                ChainingScratch& s) {
    auto& q = s.queue;
    q.clear();
    s.touched_arcs.clear();

    for (int v : sources) {
        if (!s.reached[static_cast<std::size_t>(v)]) {
            s.reached[static_cast<std::size_t>(v)] = 1;
            q.push_back(v);
        }
    }
    std::size_t head = 0;
    while (head < q.size()) {
        int v = q[head++];
        for (ArcId a : d.arcs_with_tail(v)) {
            s.touched_arcs.push_back(a);
            if (--s.remaining[static_cast<std::size_t>(a)] == 0) {
                for (int h : d.arc(a).heads) {
                    if (!s.reached[static_cast<std::size_t>(h)]) {
                        s.reached[static_cast<std::size_t>(h)] = 1;
                        q.push_back(h);
                    }
                }
            }
        }
    }

    std::vector<int> out = q;
    std::sort(out.begin(), out.end());
    for (ArcId a : s.touched_arcs)
        s.remaining[static_cast<std::size_t>(a)] = static_cast<int>(d.arc(a).tails.size());
    for (int v : q) s.reached[static_cast<std::size_t>(v)] = 0;
    return out;
}

}  // namespace hyperpath::detail
