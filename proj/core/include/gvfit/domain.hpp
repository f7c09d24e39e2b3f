#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gvfit {

enum class DomainKind { path, grid4, grid8, graph };

/// Thrown by build_graph_domain when the edge list does not connect every
/// vertex. Reconstructions assume a single connected component, so
/// disconnected inputs are rejected at construction time.
class DisconnectedDomainError : public std::runtime_error {
public:
    explicit DisconnectedDomainError(int unreachable_vertex)
        : std::runtime_error("domain is disconnected: vertex " +
                             std::to_string(unreachable_vertex) +
                             " is unreachable from vertex 0"),
          unreachable_vertex_(unreachable_vertex) {}

    int unreachable_vertex() const noexcept { return unreachable_vertex_; }

private:
    int unreachable_vertex_;
};

/// A finite connected domain: dense integer vertex ids with symmetric,
/// irreflexive adjacency. Grids are row-major (id = y * width + x).
/// Immutable after construction; safe to share across threads.
class Domain {
public:
    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    const std::vector<std::vector<int>>& adjacency() const noexcept { return adjacency_; }

    DomainKind kind() const noexcept { return kind_; }

    bool is_grid() const noexcept {
        return kind_ == DomainKind::grid4 || kind_ == DomainKind::grid8;
    }

    /// Grid width/height; 1 for non-grid kinds (a path is n x 1).
    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    /// Paths and grids embed in the integer lattice; general graphs do not.
    bool has_coordinates() const noexcept { return kind_ != DomainKind::graph; }

    /// Lattice coordinate of a vertex: (v, 0) on a path, (x, y) on a grid.
    std::pair<int, int> coordinate(int v) const {
        check_vertex(v);
        if (!has_coordinates())
            throw std::invalid_argument("graph domains have no lattice coordinates");
        if (kind_ == DomainKind::path) return {v, 0};
        return {v % width_, v / width_};
    }

    std::size_t edge_count() const noexcept {
        std::size_t deg_sum = 0;
        for (const auto& nbrs : adjacency_) deg_sum += nbrs.size();
        return deg_sum / 2;
    }

private:
    Domain(DomainKind kind, std::vector<std::vector<int>> adjacency, int width, int height)
        : kind_(kind), adjacency_(std::move(adjacency)), width_(width), height_(height) {}

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " is outside the domain (size " +
                                        std::to_string(vertex_count()) + ")");
    }

    DomainKind kind_;
    std::vector<std::vector<int>> adjacency_;
    int width_;
    int height_;

    friend Domain build_path_domain(int n);
    friend Domain build_grid_domain(int width, int height, int adjacency);
    friend Domain build_graph_domain(int vertex_count,
                                     const std::vector<std::pair<int, int>>& edges);
};

/// Path 0 - 1 - ... - (n-1). n >= 1.
Domain build_path_domain(int n);

/// Row-major width x height grid with 4- or 8-adjacency.
Domain build_grid_domain(int width, int height, int adjacency);

/// General graph from an edge list. The adjacency is symmetrized and
/// deduplicated; self-loops are rejected, and so are disconnected graphs.
Domain build_graph_domain(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// Shortest-path distance in edge count (unweighted hops).
int geodesic_distance(const Domain& dom, int u, int v);

/// For every vertex, the hop distance to the nearest source.
std::vector<int> multi_source_distances(const Domain& dom, const std::vector<int>& sources);

/// Strictly increasing level values A_1..A_n. Level indices are 1-based.
class LevelSequence {
public:
    explicit LevelSequence(std::vector<double> levels);

    int size() const noexcept { return static_cast<int>(levels_.size()); }

    double value(int index1) const {
        if (index1 < 1 || index1 > size())
            throw std::invalid_argument("level index " + std::to_string(index1) +
                                        " is outside 1.." + std::to_string(size()));
        return levels_[static_cast<std::size_t>(index1 - 1)];
    }

    const std::vector<double>& levels() const noexcept { return levels_; }

private:
    std::vector<double> levels_;
};

struct Sample {
    int vertex;
    double value;
};

/// Guiding points: distinct vertices with values every reconstruction must
/// reproduce. Values are reals for the Lipschitz extensions and 1-based level
/// indices for gradually varied fill.
class SampleSet {
public:
    SampleSet(std::vector<Sample> entries, const Domain& dom);

    const std::vector<Sample>& entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }

private:
    std::vector<Sample> entries_;
};

/// A total function on a domain, one value per vertex id. When
/// is_level_indexed is set the values are whole 1-based indices into a
/// LevelSequence rather than level values themselves.
struct ScalarField {
    std::vector<double> values;
    bool is_level_indexed = false;
};

}  // namespace gvfit
