#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrt/intmat.hpp"

namespace wrt {

// Framed-link surgery presentation as a framing-weighted forest. Vertices
// are unknots, edges are Hopf links.
struct PlumbingGraph {
    struct Vertex {
        std::int64_t id;
        std::int64_t framing;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;

    std::size_t index_of(std::int64_t id) const; // throws if absent
    std::size_t degree(std::size_t idx) const;
    std::int64_t fresh_id() const;
    void validate() const; // forest, unique ids, edges well-formed
};

struct LinkingData {
    IntMat matrix;
    int signature;
    std::size_t m;            // component count
    std::size_t b1;           // nullity
    mpz_class torsion_order;  // |det of the nondegenerate part|
};

LinkingData linking_matrix(const PlumbingGraph& g);

// Kirby stabilization: disjoint unknot with framing +-1.
PlumbingGraph stabilize(const PlumbingGraph& g, int sign);

// Neumann blow-down of a (+-1)-framed vertex of degree <= 2.
PlumbingGraph blow_down(const PlumbingGraph& g, std::int64_t vertex_id);

// Chain from the negative continued fraction p/q = b1 - 1/(b2 - ...).
PlumbingGraph lens_graph(std::uint64_t p, std::uint64_t q);

// Star-shaped plumbing: center e0, one positive-NCF leg per exceptional
// fiber (alpha, beta).
PlumbingGraph seifert_graph(std::int64_t e0,
                            const std::vector<std::pair<std::uint64_t, std::uint64_t>>& fibers);

// E8 plumbing (all framings -2).
PlumbingGraph poincare_sphere();

std::vector<std::int64_t> negative_continued_fraction(std::uint64_t p, std::uint64_t q);

// Documented JSON format: {"vertices":[{"id":..,"framing":..}],"edges":[[a,b],...]}
std::string plumbing_to_json(const PlumbingGraph& g);
PlumbingGraph plumbing_from_json(const std::string& text);

} // namespace wrt
