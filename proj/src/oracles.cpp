#include "hyperpath/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "chaining.hpp"

namespace hyperpath {
namespace {

using Mask = std::uint64_t;

int scan_limit(int cap) { return cap < 63 ? cap : 63; }

/// Next mask with the same popcount, ascending.
Mask next_same_popcount(Mask v) {
    Mask c = v & (~v + 1);
    Mask r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

/**
 * Minimal satisfying subsets of a monotone predicate. Subsets are visited
 * in ascending-cardinality order; anything containing an already-found set
 * is skipped, so whatever satisfies the predicate is minimal by
 * construction. Free bit b of a candidate maps to bit positions[b] of the
 * full mask; `base` holds bits forced into every candidate.
 *
 * Two subsets of equal size never contain one another, which is what lets
 * one cardinality class be swept in parallel against a fixed found-list.
 * The sweep records verdicts per index and appends them in order, so the
 * result does not depend on the thread count.
 */
template <class Pred>
std::vector<Mask> minimal_upward_sets(int free_bits, const std::vector<int>& positions, Mask base,
                                      bool parallel, Pred&& pred) {
    (void)parallel;
    std::vector<Mask> found;
    auto scatter = [&positions, base](Mask fm) {
        Mask full = base;
        while (fm) {
            int b = std::countr_zero(fm);
            fm &= fm - 1;
            full |= Mask{1} << positions[static_cast<std::size_t>(b)];
        }
        return full;
    };
    auto dominated = [&found](Mask full) {
        for (Mask f : found)
            if ((f & full) == f) return true;
        return false;
    };

    constexpr std::size_t kSegment = std::size_t{1} << 20;
    std::vector<Mask> buffer;
    std::vector<char> keep;

    for (int k = 0; k <= free_bits; ++k) {
        const Mask limit = Mask{1} << free_bits;
        Mask fm = (k == 0) ? 0 : ((Mask{1} << k) - 1);
        bool exhausted = false;
        while (!exhausted) {
            buffer.clear();
            while (buffer.size() < kSegment) {
                buffer.push_back(fm);
                if (k == 0) {
                    exhausted = true;
                    break;
                }
                fm = next_same_popcount(fm);
                if (fm >= limit) {
                    exhausted = true;
                    break;
                }
            }

            keep.assign(buffer.size(), 0);
            const long long n = static_cast<long long>(buffer.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (parallel && n >= 4096)
#endif
            for (long long i = 0; i < n; ++i) {
                Mask full = scatter(buffer[static_cast<std::size_t>(i)]);
                if (!dominated(full) && pred(full)) keep[static_cast<std::size_t>(i)] = 1;
            }
            for (long long i = 0; i < n; ++i)
                if (keep[static_cast<std::size_t>(i)])
                    found.push_back(scatter(buffer[static_cast<std::size_t>(i)]));
        }
    }
    return found;
}

struct MaskArc {
    Mask tails = 0;
    Mask heads = 0;
    Mask all = 0;
};

std::vector<MaskArc> mask_arcs(const DirectedHypergraph& d) {
    std::vector<MaskArc> out;
    out.reserve(d.arcs().size());
    for (const Hyperarc& a : d.arcs()) {
        MaskArc m;
        for (int v : a.tails) m.tails |= Mask{1} << v;
        for (int v : a.heads) m.heads |= Mask{1} << v;
        m.all = m.tails | m.heads;
        out.push_back(m);
    }
    return out;
}

/// Fixpoint reachability over the vertex-induced restriction to `allowed`.
bool mask_reaches(const std::vector<MaskArc>& arcs, Mask allowed, Mask sources, Mask goals) {
    Mask reached = sources & allowed;
    if ((goals & ~reached) == 0) return true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const MaskArc& a : arcs) {
            if ((a.all & ~allowed) != 0) continue;
            if ((a.tails & ~reached) != 0) continue;
            if ((a.heads & ~reached) == 0) continue;
            reached |= a.heads;
            grew = true;
            if ((goals & ~reached) == 0) return true;
        }
    }
    return false;
}

template <class T>
void canonicalize(std::vector<std::vector<T>>& family) {
    std::sort(family.begin(), family.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

std::vector<std::vector<VertexId>> name_sets(const DirectedHypergraph& d, const std::vector<Mask>& masks) {
    std::vector<std::vector<VertexId>> out;
    out.reserve(masks.size());
    for (Mask m : masks) {
        std::vector<VertexId> set;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            set.push_back(d.vertex_name(v));
        }
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
    }
    canonicalize(out);
    return out;
}

std::vector<int> non_terminal_positions(int nv, int si, int ti) {
    std::vector<int> positions;
    positions.reserve(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        if (v != si && v != ti) positions.push_back(v);
    return positions;
}

void require_within_cap(int size, int cap, const char* what) {
    if (size > scan_limit(cap))
        throw CapExceeded(std::string(what) + " count " + std::to_string(size) +
                          " exceeds the oracle cap " + std::to_string(scan_limit(cap)));
}

std::vector<std::vector<ArcId>> hyperpaths_core(const DirectedHypergraph& d,
                                                const std::vector<VertexId>& sources,
                                                const std::vector<VertexId>& targets, int cap,
                                                bool parallel) {
    if (sources.empty()) throw EmptySourceSet("source set is empty");
    require_within_cap(d.arc_count(), cap, "arc");
    const std::vector<int> src = d.indices_of(sources);
    const std::vector<int> tgt = d.indices_of(targets);

    std::vector<int> positions(static_cast<std::size_t>(d.arc_count()));
    std::iota(positions.begin(), positions.end(), 0);
    auto pred = [&d, &src, &tgt](Mask mask) {
        thread_local detail::ChainingScratch scratch;
        scratch.fit(d);
        return detail::reaches(
            d, src, tgt, [mask](ArcId a) { return ((mask >> a) & 1) != 0; }, scratch);
    };
    std::vector<Mask> masks = minimal_upward_sets(d.arc_count(), positions, 0, parallel, pred);

    std::vector<std::vector<ArcId>> out;
    out.reserve(masks.size());
    for (Mask m : masks) {
        std::vector<ArcId> set;
        while (m) {
            set.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        out.push_back(std::move(set));
    }
    canonicalize(out);
    return out;
}

std::vector<std::vector<VertexId>> induced_core(const DirectedHypergraph& d, const VertexId& s,
                                                const VertexId& t, int cap, bool parallel) {
    require_within_cap(d.vertex_count(), cap, "vertex");
    const int si = d.index_of(s);
    const int ti = d.index_of(t);
    const std::vector<MaskArc> arcs = mask_arcs(d);

    const Mask base = (Mask{1} << si) | (Mask{1} << ti);
    const std::vector<int> positions = non_terminal_positions(d.vertex_count(), si, ti);
    auto pred = [&arcs, si, ti](Mask u) {
        return mask_reaches(arcs, u, Mask{1} << si, Mask{1} << ti);
    };
    return name_sets(d, minimal_upward_sets(static_cast<int>(positions.size()), positions, base,
                                            parallel, pred));
}

std::vector<std::vector<VertexId>> separators_core(const DirectedHypergraph& d, const VertexId& s,
                                                   const VertexId& t, int cap, bool parallel) {
    require_within_cap(d.vertex_count(), cap, "vertex");
    const int si = d.index_of(s);
    const int ti = d.index_of(t);
    if (si == ti) return {};
    const std::vector<MaskArc> arcs = mask_arcs(d);

    const int nv = d.vertex_count();
    const Mask all = (Mask{1} << nv) - 1;
    const std::vector<int> positions = non_terminal_positions(nv, si, ti);
    auto pred = [&arcs, all, si, ti](Mask x) {
        return !mask_reaches(arcs, all & ~x, Mask{1} << si, Mask{1} << ti);
    };
    return name_sets(d, minimal_upward_sets(static_cast<int>(positions.size()), positions, 0,
                                            parallel, pred));
}

std::vector<std::vector<VertexId>> transversals_core(const UndirectedHypergraph& h, int cap,
                                                     bool parallel) {
    require_within_cap(h.vertex_count(), cap, "vertex");
    std::vector<Mask> edge_masks;
    edge_masks.reserve(h.edges().size());
    for (const auto& e : h.edges()) {
        Mask m = 0;
        for (int v : e) m |= Mask{1} << v;
        edge_masks.push_back(m);
    }

    std::vector<int> positions(static_cast<std::size_t>(h.vertex_count()));
    std::iota(positions.begin(), positions.end(), 0);
    auto pred = [&edge_masks](Mask u) {
        for (Mask e : edge_masks)
            if ((e & u) == 0) return false;
        return true;
    };
    std::vector<Mask> masks = minimal_upward_sets(h.vertex_count(), positions, 0, parallel, pred);

    std::vector<std::vector<VertexId>> out;
    out.reserve(masks.size());
    for (Mask m : masks) {
        std::vector<VertexId> set;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            set.push_back(h.vertex_name(v));
        }
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
    }
    canonicalize(out);
    return out;
}

}  // namespace

std::vector<std::vector<ArcId>> oracle_hyperpaths(const DirectedHypergraph& d,
                                                  const std::vector<VertexId>& sources,
                                                  const std::vector<VertexId>& targets, int cap) {
    return hyperpaths_core(d, sources, targets, cap, true);
}

std::vector<std::vector<VertexId>> oracle_induced_hyperpaths(const DirectedHypergraph& d,
                                                             const VertexId& s, const VertexId& t,
                                                             int cap) {
    return induced_core(d, s, t, cap, true);
}

std::vector<std::vector<VertexId>> oracle_minimal_separators(const DirectedHypergraph& d,
                                                             const VertexId& s, const VertexId& t,
                                                             int cap) {
    return separators_core(d, s, t, cap, true);
}

std::vector<std::vector<VertexId>> oracle_minimal_transversals(const UndirectedHypergraph& h,
                                                               int cap) {
    return transversals_core(h, cap, true);
}

namespace serial {

std::vector<std::vector<ArcId>> oracle_hyperpaths(const DirectedHypergraph& d,
                                                  const std::vector<VertexId>& sources,
                                                  const std::vector<VertexId>& targets, int cap) {
    return hyperpaths_core(d, sources, targets, cap, false);
}

std::vector<std::vector<VertexId>> oracle_induced_hyperpaths(const DirectedHypergraph& d,
                                                             const VertexId& s, const VertexId& t,
                                                             int cap) {
    return induced_core(d, s, t, cap, false);
}

std::vector<std::vector<VertexId>> oracle_minimal_separators(const DirectedHypergraph& d,
                                                             const VertexId& s, const VertexId& t,
                                                             int cap) {
    return separators_core(d, s, t, cap, false);
}

std::vector<std::vector<VertexId>> oracle_minimal_transversals(const UndirectedHypergraph& h,
                                                               int cap) {
    return transversals_core(h, cap, false);
}

}  // namespace serial

}  // namespace hyperpath
