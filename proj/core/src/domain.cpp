#include "gvfit/domain.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace gvfit {

namespace {

// Plain queue BFS; distances in hops, -1 while unvisited.
std::vector<int> bfs_from(const std::vector<std::vector<int>>& adjacency,
                          const std::vector<int>& sources) {
    std::vector<int> dist(adjacency.size(), -1);
    std::deque<int> queue;
    for (int s : sources) {
        if (dist[s] == -1) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adjacency[u]) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

Domain build_path_domain(int n) {
    if (n < 1) throw std::invalid_argument("path domain needs at least one vertex");
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
    for (int v = 0; v + 1 < n; ++v) {
        adjacency[v].push_back(v + 1);
        adjacency[v + 1].push_back(v);
    }
    return Domain(DomainKind::path, std::move(adjacency), n, 1);
}

Domain build_grid_domain(int width, int height, int adjacency_kind) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    if (adjacency_kind != 4 && adjacency_kind != 8)
        throw std::invalid_argument("grid adjacency must be 4 or 8");

    const bool diagonals = adjacency_kind == 8;
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(width) * height);
    auto id = [width](int x, int y) { return y * width + x; };
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    if (!diagonals && dx != 0 && dy != 0) continue;
                    int nx = x + dx, ny = y + dy;
                    if (nx < 0 || nx >= width || ny < 0 || ny >= height) continue;
                    adjacency[id(x, y)].push_back(id(nx, ny));
                }
            }
            std::sort(adjacency[id(x, y)].begin(), adjacency[id(x, y)].end());
        }
    }
    return Domain(diagonals ? DomainKind::grid8 : DomainKind::grid4,
                  std::move(adjacency), width, height);
}

Domain build_graph_domain(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 1)
        throw std::invalid_argument("graph domain needs at least one vertex");

    std::vector<std::unordered_set<int>> nbr_sets(static_cast<std::size_t>(vertex_count));
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
            throw std::invalid_argument("edge endpoint outside 0.." +
                                        std::to_string(vertex_count - 1));
        if (a == b)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        nbr_sets[a].insert(b);
        nbr_sets[b].insert(a);
    }

    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) {
        adjacency[v].assign(nbr_sets[v].begin(), nbr_sets[v].end());
        std::sort(adjacency[v].begin(), adjacency[v].end());
    }

    std::vector<int> dist = bfs_from(adjacency, {0});
    for (int v = 0; v < vertex_count; ++v)
        if (dist[v] == -1) throw DisconnectedDomainError(v);

    return Domain(DomainKind::graph, std::move(adjacency), 1, 1);
}

int geodesic_distance(const Domain& dom, int u, int v) {
    dom.neighbors(u);  // range checks
    dom.neighbors(v);
    if (u == v) return 0;
    std::vector<int> dist = multi_source_distances(dom, {u});
    return dist[static_cast<std::size_t>(v)];
}

std::vector<int> multi_source_distances(const Domain& dom, const std::vector<int>& sources) {
    if (sources.empty())
        throw std::invalid_argument("multi_source_distances needs at least one source");
    for (int s : sources) dom.neighbors(s);  // range checks
    return bfs_from(dom.adjacency(), sources);
}

LevelSequence::LevelSequence(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.empty())
        throw std::invalid_argument("level sequence must not be empty");
    for (std::size_t i = 1; i < levels_.size(); ++i)
        if (!(levels_[i - 1] < levels_[i]))
            throw std::invalid_argument("level sequence must be strictly increasing");
}

SampleSet::SampleSet(std::vector<Sample> entries, const Domain& dom)
    : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("sample set must not be empty");
    std::unordered_set<int> seen;
    for (const Sample& s : entries_) {
        dom.neighbors(s.vertex);  // range check
        if (!seen.insert(s.vertex).second)
            throw std::invalid_argument("duplicate sample at vertex " +
                                        std::to_string(s.vertex));
    }
}

}  // namespace gvfit
