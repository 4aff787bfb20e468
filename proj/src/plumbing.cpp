#include "wrt/plumbing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace wrt {

std::size_t PlumbingGraph::index_of(std::int64_t id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return i;
    throw std::invalid_argument("plumbing: unknown vertex id " + std::to_string(id));
}

std::size_t PlumbingGraph::degree(std::size_t idx) const {
    std::int64_t id = vertices[idx].id;
    std::size_t d = 0;
    for (const auto& e : edges)
        if (e.first == id || e.second == id) ++d;
    return d;
}

std::int64_t PlumbingGraph::fresh_id() const {
    std::int64_t m = 0;
    for (const auto& v : vertices) m = std::max(m, v.id + 1);
    return m;
}

void PlumbingGraph::validate() const {
    std::set<std::int64_t> ids;
    for (const auto& v : vertices)
        if (!ids.insert(v.id).second)
            throw std::invalid_argument("plumbing: duplicate vertex id");
    // union-find acyclicity
    std::map<std::int64_t, std::int64_t> parent;
    for (auto id : ids) parent[id] = id;
    std::function<std::int64_t(std::int64_t)> find = [&](std::int64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) {
        if (!ids.count(e.first) || !ids.count(e.second))
            throw std::invalid_argument("plumbing: edge references unknown id");
        if (e.first == e.second) throw std::invalid_argument("plumbing: self-loop");
        std::int64_t a = find(e.first), b = find(e.second);
        if (a == b) throw std::invalid_argument("plumbing: graph has a cycle (not a forest)");
        parent[a] = b;
    }
}

LinkingData linking_matrix(const PlumbingGraph& g) {
    g.validate();
    const std::size_t m = g.vertices.size();
    IntMat b(m, m);
    for (std::size_t i = 0; i < m; ++i) b.at(i, i) = g.vertices[i].framing;
    for (const auto& e : g.edges) {
        std::size_t i = g.index_of(e.first), j = g.index_of(e.second);
        b.at(i, j) = 1;
        b.at(j, i) = 1;
    }
    LinkingData out;
    out.matrix = b;
    out.m = m;
    auto sig = symmetric_signature(b);
    out.signature = sig.signature;
    out.b1 = sig.nullity;
    out.torsion_order = 1;
    for (const auto& d : smith_normal_form(b).diagonal)
        if (d != 0) out.torsion_order *= d;
    return out;
}

PlumbingGraph stabilize(const PlumbingGraph& g, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("stabilize: sign must be +-1");
    PlumbingGraph r = g;
    r.vertices.push_back({g.fresh_id(), sign});
    return r;
}

PlumbingGraph blow_down(const PlumbingGraph& g, std::int64_t vertex_id) {
    std::size_t idx = g.index_of(vertex_id);
    std::int64_t eps = g.vertices[idx].framing;
    if (eps != 1 && eps != -1)
        throw std::invalid_argument("blow_down: framing must be +-1");
    std::vector<std::int64_t> nbrs;
    for (const auto& e : g.edges) {
        if (e.first == vertex_id) nbrs.push_back(e.second);
        if (e.second == vertex_id) nbrs.push_back(e.first);
    }
    if (nbrs.size() > 2)
        throw std::invalid_argument("blow_down: degree must be <= 2");

    PlumbingGraph r;
    for (const auto& v : g.vertices) {
        if (v.id == vertex_id) continue;
        auto nv = v;
        if (std::find(nbrs.begin(), nbrs.end(), v.id) != nbrs.end()) nv.framing -= eps;
        r.vertices.push_back(nv);
    }
    for (const auto& e : g.edges)
        if (e.first != vertex_id && e.second != vertex_id) r.edges.push_back(e);
    if (nbrs.size() == 2) r.edges.emplace_back(nbrs[0], nbrs[1]); // forest: never already adjacent
    r.validate();
    return r;
}

std::vector<std::int64_t> negative_continued_fraction(std::uint64_t p, std::uint64_t q) {
    if (q == 0 || q > p) throw std::invalid_argument("continued fraction needs 0 < q <= p");
    std::vector<std::int64_t> out;
    // p/q = b - 1/(p'/q') with b = ceil(p/q), p' = q, q' = b*q - p
    std::uint64_t a = p, b = q;
    while (b != 0) {
        std::uint64_t c = (a + b - 1) / b; // ceil
        out.push_back(static_cast<std::int64_t>(c));
        std::uint64_t nb = c * b - a;
        a = b;
        b = nb;
    }
    return out;
}

PlumbingGraph lens_graph(std::uint64_t p, std::uint64_t q) {
    if (p == 0 || q == 0 || std::gcd(p, q) != 1 || (q > p))
        throw std::invalid_argument("lens_graph: need p >= q >= 1 with gcd(p,q) = 1");
    PlumbingGraph g;
    auto bs = negative_continued_fraction(p, q);
    for (std::size_t i = 0; i < bs.size(); ++i) {
        g.vertices.push_back({static_cast<std::int64_t>(i), bs[i]});
        if (i) g.edges.emplace_back(static_cast<std::int64_t>(i - 1), static_cast<std::int64_t>(i));
    }
    return g;
}

PlumbingGraph seifert_graph(std::int64_t e0,
                            const std::vector<std::pair<std::uint64_t, std::uint64_t>>& fibers) {
    PlumbingGraph g;
    g.vertices.push_back({0, e0});
    std::int64_t next = 1;
    for (const auto& [alpha, beta] : fibers) {
        if (alpha < 2 || beta == 0 || beta >= alpha || std::gcd(alpha, beta) != 1)
            throw std::invalid_argument("seifert_graph: fiber needs alpha >= 2, 0 < beta < alpha, coprime");
        std::int64_t prev = 0;
        for (auto b : negative_continued_fraction(alpha, beta)) {
            g.vertices.push_back({next, b});
            g.edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return g;
}

PlumbingGraph poincare_sphere() {
    // E8 as a star: center 0; legs of lengths 1, 2, 4; all framings -2
    PlumbingGraph g;
    for (std::int64_t i = 0; i < 8; ++i) g.vertices.push_back({i, -2});
    g.edges = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}};
    return g;
}

std::string plumbing_to_json(const PlumbingGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices)
        j["vertices"].push_back({{"id", v.id}, {"framing", v.framing}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({e.first, e.second});
    return j.dump(2);
}

PlumbingGraph plumbing_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PlumbingGraph g;
    for (const auto& v : j.at("vertices"))
        g.vertices.push_back({v.at("id").get<std::int64_t>(), v.at("framing").get<std::int64_t>()});
    for (const auto& e : j.at("edges"))
        g.edges.emplace_back(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>());
    g.validate();
    return g;
}

} // namespace wrt
