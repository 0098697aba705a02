#include "hyperpath/connectivity.hpp"

#include <algorithm>
#include <cassert>

#include "chaining.hpp"

namespace hyperpath {

namespace {

thread_local detail::ChainingScratch tl_scratch;

std::vector<int> source_indices(const DirectedHypergraph& d, const std::vector<VertexId>& sources) {
    if (sources.empty()) throw EmptySourceSet("source set is empty");
    return d.indices_of(sources);
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Firing order on index-form inputs; ids must be sorted and unique.
LayerOrder layered_order_indices(const DirectedHypergraph& d, const std::vector<int>& src,
                                 const std::vector<ArcId>& ids) {
    std::vector<char> covered(static_cast<std::size_t>(d.vertex_count()), 0);
    for (int v : src) covered[static_cast<std::size_t>(v)] = 1;

    LayerOrder lo;
    std::vector<char> fired(ids.size(), 0);
    std::size_t placed = 0;
    while (placed < ids.size()) {
        bool progress = false;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (fired[i]) continue;
            const Hyperarc& a = d.arc(ids[i]);
            bool ready = true;
            for (int v : a.tails)
                if (!covered[static_cast<std::size_t>(v)]) { ready = false; break; }
            if (!ready) continue;
            fired[i] = 1;
            ++placed;
            lo.order.push_back(ids[i]);
            for (int h : a.heads) covered[static_cast<std::size_t>(h)] = 1;
            progress = true;
            break;  // restart at the lowest id
        }
        if (!progress) break;
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (!fired[i]) lo.unplaced.push_back(ids[i]);
    lo.ok = lo.unplaced.empty();
    return lo;
}

}  // namespace

std::vector<VertexId> b_connected_set(const DirectedHypergraph& d, const std::vector<VertexId>& sources) {
    std::vector<int> src = source_indices(d, sources);
    tl_scratch.fit(d);
    std::vector<int> vs = detail::closure(d, src, tl_scratch);
    std::vector<VertexId> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(d.vertex_name(v));
    return out;
}

bool is_b_connected(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                    const std::vector<VertexId>& targets) {
    std::vector<int> src = source_indices(d, sources);
    std::vector<int> tgt = d.indices_of(targets);
    tl_scratch.fit(d);
    return detail::reaches(d, src, tgt, [](ArcId) { return true; }, tl_scratch);
}

std::optional<Hyperpath> find_minimal_hyperpath(const DirectedHypergraph& d,
                                                const std::vector<VertexId>& sources,
                                                const std::vector<VertexId>& targets,
                                                std::uint64_t* check_counter) {
    if (classify(d) != HypergraphClass::B)
        throw NotBHypergraph("minimal hyperpath search needs singleton heads");
    std::vector<int> src = source_indices(d, sources);
    std::vector<int> tgt = minus(d.indices_of(targets), src);
    if (tgt.empty()) return Hyperpath{};

    tl_scratch.fit(d);
    std::vector<char> alive(static_cast<std::size_t>(d.arc_count()), 1);
    auto connected = [&]() {
        if (check_counter) ++*check_counter;
        return detail::reaches(d, src, tgt,
                               [&alive](ArcId a) { return alive[static_cast<std::size_t>(a)] != 0; },
                               tl_scratch);
    };

    if (!connected()) return std::nullopt;
    for (ArcId a = d.arc_count() - 1; a >= 0; --a) {
        alive[static_cast<std::size_t>(a)] = 0;
        if (!connected()) alive[static_cast<std::size_t>(a)] = 1;
    }

    Hyperpath p;
    for (ArcId a = 0; a < d.arc_count(); ++a)
        if (alive[static_cast<std::size_t>(a)]) p.arc_ids.push_back(a);

    LayerOrder lo = layered_order_indices(d, src, p.arc_ids);
    assert(lo.ok);
    // The final fired arc always produces a target; the branching step
    // downstream relies on it.
    assert(lo.order.empty() ||
           std::binary_search(tgt.begin(), tgt.end(), d.arc(lo.order.back()).heads.front()));
    p.ordering = std::move(lo.order);
    return p;
}

LayerOrder layered_order(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                         const std::vector<ArcId>& arc_ids) {
    std::vector<int> src = source_indices(d, sources);
    std::vector<ArcId> ids = arc_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (ArcId id : ids) d.arc(id);  // range check
    return layered_order_indices(d, src, ids);
}

PathCheck check_hyperpath(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                          const std::vector<VertexId>& targets, const std::vector<ArcId>& arc_ids) {
    if (classify(d) != HypergraphClass::B)
        throw NotBHypergraph("hyperpath checking needs singleton heads");
    std::vector<int> src = source_indices(d, sources);
    std::vector<int> tgt = d.indices_of(targets);

    std::vector<ArcId> ids = arc_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (ArcId id : ids) d.arc(id);

    PathCheck pc;
    LayerOrder lo = layered_order_indices(d, src, ids);
    if (!lo.ok) {
        pc.verdict = PathVerdict::NotLayerable;
        pc.unplaced = std::move(lo.unplaced);
        return pc;
    }

    std::vector<int> head_count(static_cast<std::size_t>(d.vertex_count()), 0);
    std::vector<char> in_span(static_cast<std::size_t>(d.vertex_count()), 0);
    std::vector<char> tails_some(static_cast<std::size_t>(d.vertex_count()), 0);
    for (ArcId id : ids) {
        const Hyperarc& a = d.arc(id);
        for (int v : a.tails) {
            in_span[static_cast<std::size_t>(v)] = 1;
            tails_some[static_cast<std::size_t>(v)] = 1;
        }
        for (int v : a.heads) {
            in_span[static_cast<std::size_t>(v)] = 1;
            ++head_count[static_cast<std::size_t>(v)];
        }
    }

    auto is_src = [&src](int v) { return std::binary_search(src.begin(), src.end(), v); };
    auto is_tgt = [&tgt](int v) { return std::binary_search(tgt.begin(), tgt.end(), v); };

    for (int v = 0; v < d.vertex_count(); ++v) {
        if (!in_span[static_cast<std::size_t>(v)]) continue;
        int expect = is_src(v) ? 0 : 1;
        if (head_count[static_cast<std::size_t>(v)] != expect) {
            pc.verdict = PathVerdict::HeadCountViolation;
            pc.vertex = d.vertex_name(v);
            return pc;
        }
    }
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (!in_span[static_cast<std::size_t>(v)]) continue;
        if (is_src(v) || is_tgt(v)) continue;
        if (!tails_some[static_cast<std::size_t>(v)]) {
            pc.verdict = PathVerdict::UncoveredVertex;
            pc.vertex = d.vertex_name(v);
            return pc;
        }
    }
    for (int v : tgt) {
        if (is_src(v)) continue;
        if (head_count[static_cast<std::size_t>(v)] == 0) {
            pc.verdict = PathVerdict::TargetNotCovered;
            pc.vertex = d.vertex_name(v);
            return pc;
        }
    }
    return pc;
}

bool verify_hyperpath(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                      const std::vector<VertexId>& targets, const std::vector<ArcId>& arc_ids) {
    return check_hyperpath(d, sources, targets, arc_ids).ok();
}

}  // namespace hyperpath
