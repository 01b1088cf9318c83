#include "resgraph/graph.hpp"
#include "resgraph/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace resgraph {

DualGraph::DualGraph(std::vector<Vertex> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges,
                     Check check)
    : verts_(std::move(vertices)) {
    if (verts_.empty()) throw GraphError("graph has no vertices");

    for (size_t i = 0; i < verts_.size(); ++i) {
        const Vertex& v = verts_[i];
        if (v.id.empty()) throw GraphError("vertex with empty id");
        if (!index_.emplace(v.id, static_cast<Eigen::Index>(i)).second)
            throw GraphError("duplicate vertex id '" + v.id + "'");
        if (v.genus < 0) throw GraphError("vertex '" + v.id + "' has negative genus");
        const int floor = (v.genus == 0 && check == Check::MinimalResolution) ? 2 : 1;
        if (v.weight < floor)
            throw GraphError("vertex '" + v.id + "' has weight " + std::to_string(v.weight) +
                             (floor == 2 ? " but a genus-0 curve on a minimal resolution needs weight >= 2"
                                         : " but weights must be >= 1"));
    }

    for (const auto& [a, b] : edges) {
        const Eigen::Index i = index_of(a), j = index_of(b);
        if (i < 0) throw GraphError("edge endpoint '" + a + "' is not a vertex");
        if (j < 0) throw GraphError("edge endpoint '" + b + "' is not a vertex");
        if (i == j) throw GraphError("self-loop on '" + a + "'; model a nodal curve as a cycle of curves");
        edges_.emplace_back(static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j)));
    }
    for (size_t i = 0; i < verts_.size(); ++i)
        for (size_t j = i + 1; j < verts_.size(); ++j)
            if (multiplicity(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) > 2)
                throw GraphError("curves '" + verts_[i].id + "' and '" + verts_[j].id +
                                 "' meet more than twice");

    // Connectivity.
    std::vector<char> seen(verts_.size(), 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    while (!bfs.empty()) {
        const int u = bfs.front();
        bfs.pop();
        for (const auto& [i, j] : edges_) {
            const int w = (i == u) ? j : (j == u) ? i : -1;
            if (w >= 0 && !seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                bfs.push(w);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw GraphError("graph is not connected");
}

int DualGraph::multiplicity(Eigen::Index i, Eigen::Index j) const {
    int m = 0;
    for (const auto& [a, b] : edges_)
        if ((a == i && b == j) || (a == j && b == i)) ++m;
    return m;
}

int DualGraph::valence(Eigen::Index i) const {
    int v = 0;
    for (const auto& [a, b] : edges_)
        if (a == i || b == i) ++v;
    return v;
}

Eigen::Index DualGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

Eigen::MatrixXi intersection_matrix(const DualGraph& g) {
    const Eigen::Index n = g.size();
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = -g.vertex(i).weight;
    for (const auto& [i, j] : g.edges()) {
        m(i, j) += 1;
        m(j, i) += 1;
    }
    return m;
}

RMatrix intersection_matrix_q(const DualGraph& g) {
    return intersection_matrix(g).cast<Rational>();
}

Definiteness is_negative_definite(const DualGraph& g) {
    return negative_definiteness(intersection_matrix_q(g));
}

// ---------------------------------------------------------------------------
// Shapes

GraphShape GraphShape::chain(std::vector<int> w) {
    GraphShape s;
    s.kind = Kind::Chain;
    s.weights = std::move(w);
    return s;
}

GraphShape GraphShape::cycle(std::vector<int> w) {
    GraphShape s;
    s.kind = Kind::Cycle;
    s.weights = std::move(w);
    return s;
}

GraphShape GraphShape::star(int center, std::vector<std::vector<int>> arms) {
    GraphShape s;
    s.kind = Kind::Star;
    s.center = center;
    s.arms = std::move(arms);
    return s;
}

GraphShape GraphShape::forked_chain(std::vector<int> spine) {
    GraphShape s;
    s.kind = Kind::ForkedChain;
    s.weights = std::move(spine);
    return s;
}

GraphShape GraphShape::elliptic_vertex(int weight) {
    GraphShape s;
    s.kind = Kind::EllipticVertex;
    s.weights = {weight};
    return s;
}

GraphShape GraphShape::other() { return GraphShape{}; }

namespace {

std::vector<int> min_of_reversal(std::vector<int> w) {
    std::vector<int> r(w.rbegin(), w.rend());
    return std::min(w, r);
}

std::vector<int> min_cyclic(const std::vector<int>& w) {
    std::vector<int> best = w;
    std::vector<int> cur = w;
    for (int pass = 0; pass < 2; ++pass) {
        for (size_t k = 0; k < cur.size(); ++k) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            best = std::min(best, cur);
        }
        std::reverse(cur.begin(), cur.end());
    }
    return best;
}

} // namespace

GraphShape GraphShape::canonical() const {
    GraphShape c = *this;
    switch (kind) {
        case Kind::Chain:
        case Kind::ForkedChain: c.weights = min_of_reversal(weights); break;
        case Kind::Cycle: c.weights = min_cyclic(weights); break;
        case Kind::Star: std::sort(c.arms.begin(), c.arms.end()); break;
        default: break;
    }
    return c;
}

bool GraphShape::operator==(const GraphShape& o) const {
    if (kind != o.kind) return false;
    const GraphShape a = canonical(), b = o.canonical();
    return a.weights == b.weights && a.center == b.center && a.arms == b.arms;
}

std::string GraphShape::str() const {
    std::ostringstream os;
    auto list = [&os](const std::vector<int>& w) {
        os << '[';
        for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
        os << ']';
    };
    switch (kind) {
        case Kind::Chain: list(weights); break;
        case Kind::Cycle:
            os << "cycle";
            list(weights);
            break;
        case Kind::Star:
            os << '[' << center << ';';
            for (size_t i = 0; i < arms.size(); ++i) {
                if (i) os << ',';
                list(arms[i]);
            }
            os << ']';
            break;
        case Kind::ForkedChain:
            os << '[';
            for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
            os << ";[2]^4]";
            break;
        case Kind::EllipticVertex: os << "elliptic(" << weights.at(0) << ")"; break;
        case Kind::Other: os << "other"; break;
    }
    return os.str();
}

namespace {

// Walks away from `from` through valence-<=2 vertices, collecting weights.
std::vector<int> walk_arm(const DualGraph& g, Eigen::Index from, Eigen::Index first) {
    std::vector<int> w;
    Eigen::Index prev = from, cur = first;
    for (;;) {
        w.push_back(g.vertex(cur).weight);
        Eigen::Index next = -1;
        for (const auto& [a, b] : g.edges()) {
            const Eigen::Index other = (a == cur) ? b : (b == cur) ? static_cast<Eigen::Index>(a) : -1;
            if (other >= 0 && other != prev) { next = other; break; }
        }
        if (next < 0) return w;
        prev = cur;
        cur = next;
    }
}

} // namespace

GraphShape recognize_shape(const DualGraph& g) {
    const Eigen::Index n = g.size();

    if (n == 1) {
        const Vertex& v = g.vertex(0);
        if (v.genus == 1) return GraphShape::elliptic_vertex(v.weight);
        if (v.genus == 0) return GraphShape::chain({v.weight});
        return GraphShape::other();
    }
    for (Eigen::Index i = 0; i < n; ++i)
        if (g.vertex(i).genus != 0) return GraphShape::other();

    const size_t edge_count = g.edges().size();

    bool has_double = false;
    for (Eigen::Index i = 0; i < n && !has_double; ++i)
        for (Eigen::Index j = i + 1; j < n && !has_double; ++j)
            if (g.multiplicity(i, j) == 2) has_double = true;
    if (has_double) {
        if (n == 2 && edge_count == 2)
            return GraphShape::cycle({g.vertex(0).weight, g.vertex(1).weight});
        return GraphShape::other();
    }

    if (edge_count == static_cast<size_t>(n)) {
        // Connected with as many edges as vertices: a single circuit iff
        // every valence is 2.
        for (Eigen::Index i = 0; i < n; ++i)
            if (g.valence(i) != 2) return GraphShape::other();
        std::vector<int> w;
        Eigen::Index prev = -1, cur = 0;
        // Deterministic orientation: leave vertex 0 toward its
        // smaller-indexed neighbour.
        Eigen::Index start_next = n;
        for (const auto& [a, b] : g.edges()) {
            if (a == 0) start_next = std::min(start_next, static_cast<Eigen::Index>(b));
            if (b == 0) start_next = std::min(start_next, static_cast<Eigen::Index>(a));
        }
        for (Eigen::Index step = 0; step < n; ++step) {
            w.push_back(g.vertex(cur).weight);
            Eigen::Index next = -1;
            if (step == 0) next = start_next;
            else
                for (const auto& [a, b] : g.edges()) {
                    const Eigen::Index other =
                        (a == cur) ? b : (b == cur) ? static_cast<Eigen::Index>(a) : -1;
                    if (other >= 0 && other != prev) { next = other; break; }
                }
            prev = cur;
            cur = next;
        }
        return GraphShape::cycle(std::move(w));
    }

    if (edge_count != static_cast<size_t>(n) - 1) return GraphShape::other();

    // Tree from here on.
    std::vector<Eigen::Index> branch, leaves;
    for (Eigen::Index i = 0; i < n; ++i) {
        const int v = g.valence(i);
        if (v >= 3) branch.push_back(i);
        if (v == 1) leaves.push_back(i);
    }

    if (branch.empty()) {
        // Plain chain; orient from the lower-indexed endpoint.
        const Eigen::Index e0 = std::min(leaves[0], leaves[1]);
        std::vector<int> w{g.vertex(e0).weight};
        Eigen::Index first = -1;
        for (const auto& [a, b] : g.edges()) {
            if (a == e0) { first = b; break; }
            if (b == e0) { first = a; break; }
        }
        auto rest = walk_arm(g, e0, first);
        w.insert(w.end(), rest.begin(), rest.end());
        return GraphShape::chain(std::move(w));
    }

    auto leaf_neighbours = [&](Eigen::Index c) {
        std::vector<Eigen::Index> out;
        for (const auto& [a, b] : g.edges()) {
            if (a == c && g.valence(b) == 1) out.push_back(b);
            if (b == c && g.valence(a) == 1) out.push_back(a);
        }
        return out;
    };
    auto all_weight_two = [&](const std::vector<Eigen::Index>& vs) {
        return std::all_of(vs.begin(), vs.end(),
                           [&](Eigen::Index v) { return g.vertex(v).weight == 2; });
    };

    // Forked chain, one-vertex spine: a single valence-4 centre whose
    // neighbours are four (-2) leaves.
    if (branch.size() == 1 && g.valence(branch[0]) == 4 && n == 5) {
        const auto tips = leaf_neighbours(branch[0]);
        if (tips.size() == 4 && all_weight_two(tips))
            return GraphShape::forked_chain({g.vertex(branch[0]).weight});
    }

    // Forked chain, longer spine: two valence-3 branch vertices, each
    // carrying two (-2) leaves, joined by a path.
    if (branch.size() == 2 && leaves.size() == 4 &&
        g.valence(branch[0]) == 3 && g.valence(branch[1]) == 3) {
        const auto ta = leaf_neighbours(branch[0]), tb = leaf_neighbours(branch[1]);
        if (ta.size() == 2 && tb.size() == 2 && all_weight_two(ta) && all_weight_two(tb)) {
            const Eigen::Index a = std::min(branch[0], branch[1]);
            const Eigen::Index b = a == branch[0] ? branch[1] : branch[0];
            // Step off `a` toward the spine: the unique non-leaf neighbour.
            std::vector<int> spine{g.vertex(a).weight};
            if (a == b) return GraphShape::other();
            Eigen::Index first = -1;
            for (const auto& [x, y] : g.edges()) {
                const Eigen::Index other =
                    (x == a) ? y : (y == a) ? static_cast<Eigen::Index>(x) : -1;
                if (other >= 0 && g.valence(other) != 1) { first = other; break; }
            }
            if (first >= 0) {
                Eigen::Index prev = a, cur = first;
                bool ok = true;
                while (cur != b) {
                    if (g.valence(cur) != 2) { ok = false; break; }
                    spine.push_back(g.vertex(cur).weight);
                    Eigen::Index next = -1;
                    for (const auto& [x, y] : g.edges()) {
                        const Eigen::Index other =
                            (x == cur) ? y : (y == cur) ? static_cast<Eigen::Index>(x) : -1;
                        if (other >= 0 && other != prev) { next = other; break; }
                    }
                    if (next < 0) { ok = false; break; }
                    prev = cur;
                    cur = next;
                }
                if (ok) {
                    spine.push_back(g.vertex(b).weight);
                    if (spine.size() + 4 == static_cast<size_t>(n))
                        return GraphShape::forked_chain(std::move(spine));
                }
            }
        }
    }

    if (branch.size() == 1) {
        const Eigen::Index c = branch[0];
        std::vector<std::vector<int>> arms;
        for (const auto& [a, b] : g.edges()) {
            if (a == c) arms.push_back(walk_arm(g, c, b));
            else if (b == c) arms.push_back(walk_arm(g, c, a));
        }
        return GraphShape::star(g.vertex(c).weight, std::move(arms));
    }

    return GraphShape::other();
}

// ---------------------------------------------------------------------------
// Builders

namespace {

std::string auto_id(size_t k) { return "v" + std::to_string(k); }

} // namespace

DualGraph chain_graph(const std::vector<int>& weights) {
    if (weights.empty()) throw GraphError("chain needs at least one weight");
    std::vector<Vertex> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (size_t i = 0; i < weights.size(); ++i) {
        vs.push_back({auto_id(i), weights[i], 0});
        if (i) es.emplace_back(auto_id(i - 1), auto_id(i));
    }
    return DualGraph(std::move(vs), es);
}

DualGraph cycle_graph(const std::vector<int>& weights) {
    if (weights.size() < 2) throw GraphError("cycle needs at least two weights");
    std::vector<Vertex> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (size_t i = 0; i < weights.size(); ++i) {
        vs.push_back({auto_id(i), weights[i], 0});
        if (i) es.emplace_back(auto_id(i - 1), auto_id(i));
    }
    es.emplace_back(auto_id(weights.size() - 1), auto_id(0));
    return DualGraph(std::move(vs), es);
}

DualGraph star_graph(int center_weight, const std::vector<std::vector<int>>& arms) {
    if (arms.empty()) throw GraphError("star needs at least one arm");
    std::vector<Vertex> vs{{auto_id(0), center_weight, 0}};
    std::vector<std::pair<std::string, std::string>> es;
    size_t k = 1;
    for (const auto& arm : arms) {
        if (arm.empty()) throw GraphError("star arm must not be empty");
        std::string prev = auto_id(0);
        for (int w : arm) {
            vs.push_back({auto_id(k), w, 0});
            es.emplace_back(prev, auto_id(k));
            prev = auto_id(k++);
        }
    }
    return DualGraph(std::move(vs), es);
}

DualGraph fork_graph(const std::vector<int>& spine) {
    if (spine.empty()) throw GraphError("fork needs a nonempty spine");
    std::vector<Vertex> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (size_t i = 0; i < spine.size(); ++i) {
        vs.push_back({auto_id(i), spine[i], 0});
        if (i) es.emplace_back(auto_id(i - 1), auto_id(i));
    }
    size_t k = spine.size();
    for (int t = 0; t < 2; ++t) {
        vs.push_back({auto_id(k), 2, 0});
        es.emplace_back(auto_id(0), auto_id(k++));
    }
    for (int t = 0; t < 2; ++t) {
        vs.push_back({auto_id(k), 2, 0});
        es.emplace_back(auto_id(spine.size() - 1), auto_id(k++));
    }
    return DualGraph(std::move(vs), es);
}

DualGraph elliptic_vertex_graph(int weight) {
    return DualGraph({{auto_id(0), weight, 1}}, {});
}

DualGraph build_graph(const GraphShape& shape) {
    switch (shape.kind) {
        case GraphShape::Kind::Chain: return chain_graph(shape.weights);
        case GraphShape::Kind::Cycle: return cycle_graph(shape.weights);
        case GraphShape::Kind::Star: return star_graph(shape.center, shape.arms);
        case GraphShape::Kind::ForkedChain: return fork_graph(shape.weights);
        case GraphShape::Kind::EllipticVertex: return elliptic_vertex_graph(shape.weights.at(0));
        case GraphShape::Kind::Other: break;
    }
    throw ShapeMismatch("cannot build a graph from an unstructured shape");
}

Int arithmetic_genus(const DualGraph& g, const RVector& z) {
    if (z.size() != g.size()) throw DomainError("cycle length does not match graph");
    bool nonzero = false;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        if (!is_integer(z(i)) || z(i) < 0)
            throw DomainError("arithmetic genus needs an effective integral cycle");
        if (z(i) > 0) nonzero = true;
    }
    if (!nonzero) throw DomainError("arithmetic genus of the zero cycle is undefined");

    const RMatrix m = intersection_matrix_q(g);
    Rational zz = (z.transpose() * m * z)(0, 0);
    Rational zk = 0;
    for (Eigen::Index i = 0; i < z.size(); ++i)
        zk += z(i) * Rational(2 * g.vertex(i).genus - 2 + g.vertex(i).weight);
    const Rational pa = 1 + (zz + zk) / 2;
    if (!is_integer(pa)) throw std::logic_error("arithmetic genus came out non-integral");
    return numerator(pa);
}

} // namespace resgraph
