#include "qrwa/routing.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qrwa {

bool path_less(const Path& a, const Path& b) {
    if (a.length_km != b.length_km) return a.length_km < b.length_km;
    if (a.links.size() != b.links.size()) return a.links.size() < b.links.size();
    return a.links < b.links;
}

namespace {

struct PartialPath {
    double length = 0.0;
    std::vector<LinkId> links;
    std::vector<NodeId> nodes;  // visited nodes in order; back() is the tail
};

// Inverted path order for the min-queue.
struct PopsLater {
    bool operator()(const PartialPath& a, const PartialPath& b) const {
        if (a.length != b.length) return a.length > b.length;
        if (a.links.size() != b.links.size()) return a.links.size() > b.links.size();
        return a.links > b.links;
    }
};

void check_endpoints(const Topology& topo, NodeId s, NodeId d) {
    if (s < 0 || s >= topo.node_count() || d < 0 || d >= topo.node_count()) {
        throw std::invalid_argument("path endpoints outside the topology");
    }
    if (s == d) {
        throw std::invalid_argument("path endpoints must differ");
    }
}

// Best-first expansion of simple paths. Extending a path only grows its
// order key, so complete s->d paths pop in exactly the canonical order;
// stopping after max_paths yields the shortest ones.
std::vector<Path> enumerate_paths(const Topology& topo, NodeId s, NodeId d, std::size_t max_paths) {
    check_endpoints(topo, s, d);
    std::vector<Path> found;
    if (max_paths == 0) return found;

    std::priority_queue<PartialPath, std::vector<PartialPath>, PopsLater> frontier;
    frontier.push({0.0, {}, {s}});
    while (!frontier.empty()) {
        PartialPath cur = frontier.top();
        frontier.pop();
        const NodeId tail = cur.nodes.back();
        if (tail == d) {
            found.push_back(Path{std::move(cur.links), cur.length});
            if (found.size() == max_paths) break;
            continue;
        }
        for (LinkId lid : topo.out_links(tail)) {
            const Link& link = topo.link(lid);
            if (std::find(cur.nodes.begin(), cur.nodes.end(), link.target) != cur.nodes.end()) {
                continue;
            }
            PartialPath next = cur;
            next.length += link.length_km;
            next.links.push_back(lid);
            next.nodes.push_back(link.target);
            frontier.push(std::move(next));
        }
    }
    return found;
}

}  // namespace

std::vector<Path> k_shortest_paths(const Topology& topo, NodeId s, NodeId d, int k) {
    if (k <= 0) {
        throw std::invalid_argument("k must be positive");
    }
    return enumerate_paths(topo, s, d, static_cast<std::size_t>(k));
}

std::vector<Path> all_simple_paths(const Topology& topo, NodeId s, NodeId d, int cap) {
    if (cap <= 0) {
        throw std::invalid_argument("cap must be positive");
    }
    return enumerate_paths(topo, s, d, static_cast<std::size_t>(cap));
}

int shared_quantum_links(const Topology& topo, const Path& path,
                         std::span<const Lightpath> established) {
    std::vector<char> fiber_used(static_cast<std::size_t>(topo.fiber_count()), 0);
    bool any = false;
    for (const Lightpath& lp : established) {
        if (lp.band != Band::Quantum) continue;
        for (LinkId lid : lp.path.links) {
            fiber_used[static_cast<std::size_t>(topo.link(lid).fiber_id)] = 1;
            any = true;
        }
    }
    if (!any) return 0;
    int count = 0;
    for (LinkId lid : path.links) {
        count += fiber_used[static_cast<std::size_t>(topo.link(lid).fiber_id)];
    }
    return count;
}

double shared_length_km(const Topology& topo, const Path& classical_path, const Path& quantum_path) {
    double total = 0.0;
    for (LinkId qlid : quantum_path.links) {
        const Link& qlink = topo.link(qlid);
        for (LinkId clid : classical_path.links) {
            if (topo.link(clid).fiber_id == qlink.fiber_id) {
                total += qlink.length_km;
                break;
            }
        }
    }
    return total;
}

}  // namespace qrwa
