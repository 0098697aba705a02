#include "hyperpath/hypergraph.hpp"

#include <algorithm>

namespace hyperpath {

namespace {

void require_valid_name(const VertexId& name) {
    if (name.empty()) throw InvalidVertexId("vertex name is empty");
    if (name == "->") throw InvalidVertexId("'->' is reserved and cannot name a vertex");
    for (unsigned char c : name) {
        if (c <= ' ' || c == '#')
            throw InvalidVertexId("vertex name '" + name + "' contains whitespace or '#'");
    }
}

std::vector<int> sorted_unique(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace

DirectedHypergraph DirectedHypergraph::build(const std::vector<VertexId>& vertices,
                                             const std::vector<ArcSpec>& arcs) {
    DirectedHypergraph d;
    d.names_.reserve(vertices.size());
    for (const auto& name : vertices) {
        require_valid_name(name);
        auto [it, fresh] = d.index_.emplace(name, static_cast<int>(d.names_.size()));
        (void)it;
        if (!fresh) throw InvalidVertexId("duplicate vertex '" + name + "'");
        d.names_.push_back(name);
    }

    auto side = [&d](const std::vector<VertexId>& names, const char* which) {
        std::vector<int> out;
        out.reserve(names.size());
        for (const auto& name : names) {
            auto it = d.index_.find(name);
            if (it == d.index_.end()) throw UnknownVertex("unknown vertex '" + name + "'");
            out.push_back(it->second);
        }
        out = sorted_unique(std::move(out));
        if (out.empty()) throw EmptySide(std::string(which) + " side of an arc is empty");
        return out;
    };

    d.arcs_.reserve(arcs.size());
    for (const auto& spec : arcs) {
        Hyperarc a{side(spec.tails, "tail"), side(spec.heads, "head")};
        std::vector<int> overlap;
        std::set_intersection(a.tails.begin(), a.tails.end(), a.heads.begin(), a.heads.end(),
                              std::back_inserter(overlap));
        if (!overlap.empty())
            throw DisjointnessViolation("vertex '" + d.names_[static_cast<std::size_t>(overlap.front())] +
                                        "' appears on both sides of an arc");
        d.arcs_.push_back(std::move(a));
    }
    d.finish();
    return d;
}

DirectedHypergraph DirectedHypergraph::from_parts(std::vector<VertexId> vertex_names,
                                                  std::vector<Hyperarc> arcs) {
    DirectedHypergraph d;
    d.names_ = std::move(vertex_names);
    for (int v = 0; v < static_cast<int>(d.names_.size()); ++v)
        d.index_.emplace(d.names_[static_cast<std::size_t>(v)], v);
    d.arcs_ = std::move(arcs);
    d.finish();
    return d;
}

void DirectedHypergraph::finish() {
    tail_index_.assign(names_.size(), {});
    endpoints_ = 0;
    for (int id = 0; id < static_cast<int>(arcs_.size()); ++id) {
        const Hyperarc& a = arcs_[static_cast<std::size_t>(id)];
        endpoints_ += static_cast<long long>(a.tails.size() + a.heads.size());
        for (int v : a.tails) tail_index_[static_cast<std::size_t>(v)].push_back(id);
    }
}

std::optional<int> DirectedHypergraph::find_vertex(const VertexId& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int DirectedHypergraph::index_of(const VertexId& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownVertex("unknown vertex '" + name + "'");
    return it->second;
}

std::vector<int> DirectedHypergraph::indices_of(const std::vector<VertexId>& names) const {
    std::vector<int> out;
    out.reserve(names.size());
    for (const auto& name : names) out.push_back(index_of(name));
    return sorted_unique(std::move(out));
}

const Hyperarc& DirectedHypergraph::arc(ArcId id) const {
    if (id < 0 || id >= arc_count())
        throw UnknownArcId("arc id " + std::to_string(id) + " out of range [0, " +
                           std::to_string(arc_count()) + ")");
    return arcs_[static_cast<std::size_t>(id)];
}

HypergraphClass classify(const DirectedHypergraph& d) {
    bool all_b = true;
    bool all_bf = true;
    for (const Hyperarc& a : d.arcs()) {
        if (a.heads.size() != 1) all_b = false;
        if (a.heads.size() != 1 && a.tails.size() != 1) all_bf = false;
    }
    if (all_b) return HypergraphClass::B;
    if (all_bf) return HypergraphClass::BF;
    return HypergraphClass::General;
}

SubhypergraphResult edge_induced_subhypergraph(const DirectedHypergraph& d,
                                               const std::vector<ArcId>& arc_ids) {
    std::vector<ArcId> ids = sorted_unique(arc_ids);
    for (ArcId id : ids) d.arc(id);  // range check

    std::vector<char> in_span(static_cast<std::size_t>(d.vertex_count()), 0);
    for (ArcId id : ids) {
        const Hyperarc& a = d.arc(id);
        for (int v : a.tails) in_span[static_cast<std::size_t>(v)] = 1;
        for (int v : a.heads) in_span[static_cast<std::size_t>(v)] = 1;
    }

    SubhypergraphResult r;
    std::vector<int> new_index(static_cast<std::size_t>(d.vertex_count()), -1);
    std::vector<VertexId> names;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (!in_span[static_cast<std::size_t>(v)]) continue;
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
        names.push_back(d.vertex_name(v));
        r.vertex_origin.push_back(v);
    }

    std::vector<Hyperarc> arcs;
    arcs.reserve(ids.size());
    for (ArcId id : ids) {
        const Hyperarc& a = d.arc(id);
        Hyperarc b;
        for (int v : a.tails) b.tails.push_back(new_index[static_cast<std::size_t>(v)]);
        for (int v : a.heads) b.heads.push_back(new_index[static_cast<std::size_t>(v)]);
        arcs.push_back(std::move(b));
        r.arc_origin.push_back(id);
    }
    r.graph = DirectedHypergraph::from_parts(std::move(names), std::move(arcs));
    return r;
}

SubhypergraphResult vertex_induced_subhypergraph(const DirectedHypergraph& d,
                                                 const std::vector<VertexId>& vertices) {
    std::vector<int> keep = d.indices_of(vertices);

    std::vector<int> new_index(static_cast<std::size_t>(d.vertex_count()), -1);
    std::vector<VertexId> names;
    SubhypergraphResult r;
    for (int v : keep) {
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
        names.push_back(d.vertex_name(v));
        r.vertex_origin.push_back(v);
    }

    auto inside = [&new_index](const std::vector<int>& side) {
        for (int v : side)
            if (new_index[static_cast<std::size_t>(v)] < 0) return false;
        return true;
    };

    std::vector<Hyperarc> arcs;
    for (ArcId id = 0; id < d.arc_count(); ++id) {
        const Hyperarc& a = d.arc(id);
        if (!inside(a.tails) || !inside(a.heads)) continue;
        Hyperarc b;
        for (int v : a.tails) b.tails.push_back(new_index[static_cast<std::size_t>(v)]);
        for (int v : a.heads) b.heads.push_back(new_index[static_cast<std::size_t>(v)]);
        arcs.push_back(std::move(b));
        r.arc_origin.push_back(id);
    }
    r.graph = DirectedHypergraph::from_parts(std::move(names), std::move(arcs));
    return r;
}

UndirectedHypergraph::UndirectedHypergraph(std::vector<VertexId> vertices,
                                           const std::vector<std::vector<VertexId>>& edges) {
    for (const auto& name : vertices) {
        require_valid_name(name);
        auto [it, fresh] = index_.emplace(name, static_cast<int>(names_.size()));
        (void)it;
        if (!fresh) throw InvalidVertexId("duplicate vertex '" + name + "'");
        names_.push_back(name);
    }
    incidence_.assign(names_.size(), {});
    for (const auto& edge : edges) {
        std::vector<int> e;
        e.reserve(edge.size());
        for (const auto& name : edge) {
            auto it = index_.find(name);
            if (it == index_.end()) throw UnknownVertex("unknown vertex '" + name + "'");
            e.push_back(it->second);
        }
        e = sorted_unique(std::move(e));
        if (e.empty()) throw EmptyEdge("hyperedge is empty");
        int id = static_cast<int>(edges_.size());
        for (int v : e) incidence_[static_cast<std::size_t>(v)].push_back(id);
        edges_.push_back(std::move(e));
    }
    names_.shrink_to_fit();
}

UndirectedHypergraph UndirectedHypergraph::from_edges(const std::vector<std::vector<VertexId>>& edges) {
    std::vector<VertexId> vertices;
    std::unordered_map<VertexId, int> seen;
    for (const auto& edge : edges) {
        for (const auto& name : edge) {
            if (seen.emplace(name, 0).second) vertices.push_back(name);
        }
    }
    return UndirectedHypergraph(std::move(vertices), edges);
}

std::optional<int> UndirectedHypergraph::find_vertex(const VertexId& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int UndirectedHypergraph::index_of(const VertexId& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownVertex("unknown vertex '" + name + "'");
    return it->second;
}

}  // namespace hyperpath
