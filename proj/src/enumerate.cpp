#include "hyperpath/enumerate.hpp"

#include <algorithm>
#include <utility>

#include "hyperpath/connectivity.hpp"

namespace hyperpath {

namespace {

std::vector<VertexId> sorted_names(std::vector<VertexId> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

std::vector<VertexId> names_minus(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct Frame {
    DirectedHypergraph graph;
    std::vector<VertexId> targets;  // sorted, disjoint from the sources
    std::vector<ArcId> to_root;     // local arc id -> arc id of the input graph
};

Frame without_arc(const Frame& f, ArcId ak) {
    Frame g;
    std::vector<Hyperarc> arcs;
    arcs.reserve(f.graph.arcs().size() - 1);
    g.to_root.reserve(f.to_root.size() - 1);
    for (ArcId id = 0; id < f.graph.arc_count(); ++id) {
        if (id == ak) continue;
        arcs.push_back(f.graph.arc(id));
        g.to_root.push_back(f.to_root[static_cast<std::size_t>(id)]);
    }
    g.graph = DirectedHypergraph::from_parts(f.graph.vertex_names(), std::move(arcs));
    g.targets = f.targets;
    return g;
}

struct Walker {
    const std::vector<VertexId>& sources;
    const InstrumentedSink& sink;
    EnumerationStats stats;
    std::uint64_t checks_at_last_output = 0;
    bool stopped = false;

    void emit(std::vector<ArcId> ids, std::uint64_t depth) {
        std::sort(ids.begin(), ids.end());
        EmissionInfo info;
        info.index = stats.solutions_emitted;
        info.checks_since_last = stats.connectivity_checks - checks_at_last_output;
        info.depth = depth;
        stats.max_checks_between_outputs =
            std::max(stats.max_checks_between_outputs, info.checks_since_last);
        checks_at_last_output = stats.connectivity_checks;
        ++stats.solutions_emitted;
        if (!sink(ids, info)) stopped = true;
    }

    void walk(const Frame& f, std::vector<ArcId>& picked, std::uint64_t depth) {
        if (stopped) return;
        ++stats.recursion_nodes;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (f.targets.empty()) {
            emit(picked, depth);
            return;
        }
        auto path = find_minimal_hyperpath(f.graph, sources, f.targets, &stats.connectivity_checks);
        if (!path) return;
        const ArcId ak = path->ordering.back();

        walk(without_arc(f, ak), picked, depth + 1);
        if (stopped) return;

        ContractionResult c = contract(f.graph, sources, f.targets, ak);
        Frame inc;
        inc.graph = std::move(c.graph);
        inc.targets = std::move(c.targets);
        inc.to_root.reserve(c.arc_origin.size());
        for (ArcId parent : c.arc_origin)
            inc.to_root.push_back(f.to_root[static_cast<std::size_t>(parent)]);

        picked.push_back(f.to_root[static_cast<std::size_t>(ak)]);
        walk(inc, picked, depth + 1);
        picked.pop_back();
    }
};

}  // namespace

ContractionResult contract(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                           const std::vector<VertexId>& targets, ArcId ak) {
    if (classify(d) != HypergraphClass::B)
        throw NotBHypergraph("contraction needs singleton heads");
    const Hyperarc& committed = d.arc(ak);
    const int hk = committed.heads.front();
    const std::vector<int> src = d.indices_of(sources);
    if (std::binary_search(src.begin(), src.end(), hk))
        throw HeadInSources("arc " + std::to_string(ak) + " heads the source vertex '" +
                            d.vertex_name(hk) + "'");
    for (const VertexId& t : targets) d.index_of(t);

    // Child vertex set: everything but the committed head.
    std::vector<int> new_index(static_cast<std::size_t>(d.vertex_count()), -1);
    std::vector<VertexId> names;
    names.reserve(static_cast<std::size_t>(d.vertex_count()) - 1);
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (v == hk) continue;
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
        names.push_back(d.vertex_name(v));
    }

    ContractionResult r;
    std::vector<Hyperarc> arcs;
    for (ArcId id = 0; id < d.arc_count(); ++id) {
        const Hyperarc& a = d.arc(id);
        if (a.heads.front() == hk) continue;

        std::vector<int> tails;
        if (std::binary_search(a.tails.begin(), a.tails.end(), hk)) {
            tails.reserve(a.tails.size() + committed.tails.size());
            for (int v : a.tails)
                if (v != hk) tails.push_back(v);
            tails.insert(tails.end(), committed.tails.begin(), committed.tails.end());
            std::sort(tails.begin(), tails.end());
            tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
            if (std::binary_search(tails.begin(), tails.end(), a.heads.front())) continue;
        } else {
            tails = a.tails;
        }

        Hyperarc b;
        b.tails.reserve(tails.size());
        for (int v : tails) b.tails.push_back(new_index[static_cast<std::size_t>(v)]);
        b.heads.push_back(new_index[static_cast<std::size_t>(a.heads.front())]);
        arcs.push_back(std::move(b));
        r.arc_origin.push_back(id);
    }
    r.graph = DirectedHypergraph::from_parts(std::move(names), std::move(arcs));

    // New targets: the old ones plus the committed tails, minus sources and
    // the removed head.
    std::vector<VertexId> raw = targets;
    for (int v : committed.tails) raw.push_back(d.vertex_name(v));
    std::vector<VertexId> drop = sources;
    drop.push_back(d.vertex_name(hk));
    r.targets = names_minus(sorted_names(std::move(raw)), sorted_names(std::move(drop)));
    return r;
}

EnumerationStats enum_hyperpaths(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                                 const std::vector<VertexId>& targets, const InstrumentedSink& sink) {
    if (classify(d) != HypergraphClass::B)
        throw NotBHypergraph("hyperpath enumeration needs singleton heads");
    if (sources.empty()) throw EmptySourceSet("source set is empty");
    const std::vector<int> src = d.indices_of(sources);
    for (const VertexId& t : targets) d.index_of(t);

    // Arcs heading into a source are dead weight: the head is reached from
    // the start, so no minimal hyperpath keeps them. Drop them once here.
    Frame root;
    std::vector<Hyperarc> arcs;
    for (ArcId id = 0; id < d.arc_count(); ++id) {
        const Hyperarc& a = d.arc(id);
        if (std::binary_search(src.begin(), src.end(), a.heads.front())) continue;
        arcs.push_back(a);
        root.to_root.push_back(id);
    }
    root.graph = DirectedHypergraph::from_parts(d.vertex_names(), std::move(arcs));
    root.targets = names_minus(sorted_names(targets), sorted_names(sources));

    Walker w{sources, sink, {}, 0, false};
    std::vector<ArcId> picked;
    w.walk(root, picked, 0);
    w.stats.max_checks_between_outputs = std::max(
        w.stats.max_checks_between_outputs, w.stats.connectivity_checks - w.checks_at_last_output);
    return w.stats;
}

EnumerationStats enum_hyperpaths(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                                 const std::vector<VertexId>& targets, const HyperpathSink& sink) {
    InstrumentedSink wrapped = [&sink](const std::vector<ArcId>& ids, const EmissionInfo&) {
        return sink(ids);
    };
    return enum_hyperpaths(d, sources, targets, wrapped);
}

EnumerationStats enum_two_terminal(const DirectedHypergraph& d, const VertexId& s, const VertexId& t,
                                   const HyperpathSink& sink) {
    return enum_hyperpaths(d, std::vector<VertexId>{s}, std::vector<VertexId>{t}, sink);
}

}  // namespace hyperpath
