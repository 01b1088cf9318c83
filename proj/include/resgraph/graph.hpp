#pragma once

// Weighted dual graphs of resolutions of normal surface singularities.
//
// Conventions: a vertex is an exceptional curve E with self-intersection
// E^2 = -weight (weights stored positive) and the listed genus. An edge is
// a transverse intersection point of two curves; a double edge means the
// curves meet twice. Self-loops are not representable; a nodal curve must
// be given as its semistable model (a cycle of at least two curves).

#include "resgraph/linalg.hpp"
#include "resgraph/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace resgraph {

struct Vertex {
    std::string id;
    int weight = 2; // -E^2
    int genus = 0;

    bool operator==(const Vertex&) const = default;
};

class DualGraph {
public:
    // MinimalResolution enforces weight >= 2 on genus-0 vertices (no
    // (-1)-curves). AllowAnyCurves drops that floor; fibration bookkeeping
    // needs configurations that do contain (-1)-curves.
    enum class Check { MinimalResolution, AllowAnyCurves };

    DualGraph(std::vector<Vertex> vertices,
              const std::vector<std::pair<std::string, std::string>>& edges,
              Check check = Check::MinimalResolution);

    Eigen::Index size() const { return static_cast<Eigen::Index>(verts_.size()); }
    const Vertex& vertex(Eigen::Index i) const { return verts_[static_cast<size_t>(i)]; }
    const std::vector<Vertex>& vertices() const { return verts_; }

    // Edge list by vertex index, i < j, one entry per intersection point.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int multiplicity(Eigen::Index i, Eigen::Index j) const;
    int valence(Eigen::Index i) const; // counts multiplicity
    Eigen::Index index_of(const std::string& id) const; // -1 when absent

    bool operator==(const DualGraph&) const = default;

private:
    std::vector<Vertex> verts_;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::string, Eigen::Index> index_;
};

// M_ii = -weight_i, M_ij = number of intersection points of E_i and E_j.
Eigen::MatrixXi intersection_matrix(const DualGraph& g);
RMatrix intersection_matrix_q(const DualGraph& g);

// Negative-definiteness of the intersection form (Mumford contractibility).
Definiteness is_negative_definite(const DualGraph& g);

// Structural shape of a graph, used to key closed-form invariants.
// Equality is modulo the evident symmetries: chain and forked-chain
// reversal, cycle rotation and reflection, star arm order.
struct GraphShape {
    enum class Kind { Chain, Cycle, Star, ForkedChain, EllipticVertex, Other };

    Kind kind = Kind::Other;
    std::vector<int> weights;            // chain or cycle weights, fork spine,
                                         // elliptic vertex weight
    int center = 0;                      // star center weight
    std::vector<std::vector<int>> arms;  // star arms, center-adjacent entry first

    static GraphShape chain(std::vector<int> w);
    static GraphShape cycle(std::vector<int> w);
    static GraphShape star(int center, std::vector<std::vector<int>> arms);
    static GraphShape forked_chain(std::vector<int> spine);
    static GraphShape elliptic_vertex(int weight);
    static GraphShape other();

    bool operator==(const GraphShape& o) const;
    std::string str() const;

private:
    GraphShape canonical() const;
};

GraphShape recognize_shape(const DualGraph& g);

// Builders. Vertex ids are v0, v1, ... in construction order.
DualGraph chain_graph(const std::vector<int>& weights);
DualGraph cycle_graph(const std::vector<int>& weights);
DualGraph star_graph(int center_weight, const std::vector<std::vector<int>>& arms);
// [n1,...,ns] spine with two (-2) tips attached at each end of the spine.
DualGraph fork_graph(const std::vector<int>& spine);
DualGraph elliptic_vertex_graph(int weight);
DualGraph build_graph(const GraphShape& shape);

// Arithmetic genus p_a(Z) = 1 + (Z.(Z+K))/2 for an integral cycle Z > 0,
// with K.E_i = 2 genus_i - 2 + weight_i by adjunction.
Int arithmetic_genus(const DualGraph& g, const RVector& z);

} // namespace resgraph
