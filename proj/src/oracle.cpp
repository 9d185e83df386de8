#include "qrwa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrwa::oracle {

namespace {

void check_size(const Topology& topo) {
    if (topo.node_count() > kMaxOracleNodes) {
        throw std::invalid_argument("oracle size guard: more than " +
                                    std::to_string(kMaxOracleNodes) + " nodes");
    }
}

void walk(const Topology& topo, NodeId here, NodeId d, std::vector<char>& visited,
          std::vector<LinkId>& trail, double length, std::vector<Path>& out) {
    if (here == d) {
        out.push_back(Path{trail, length});
        return;
    }
    for (LinkId lid : topo.out_links(here)) {
        const Link& link = topo.link(lid);
        if (visited[static_cast<std::size_t>(link.target)]) continue;
        visited[static_cast<std::size_t>(link.target)] = 1;
        trail.push_back(lid);
        walk(topo, link.target, d, visited, trail, length + link.length_km, out);
        trail.pop_back();
        visited[static_cast<std::size_t>(link.target)] = 0;
    }
}

}  // namespace

std::vector<Path> brute_force_paths(const Topology& topo, NodeId s, NodeId d) {
    check_size(topo);
    if (s < 0 || s >= topo.node_count() || d < 0 || d >= topo.node_count() || s == d) {
        throw std::invalid_argument("bad endpoints for brute_force_paths");
    }
    std::vector<Path> out;
    std::vector<char> visited(static_cast<std::size_t>(topo.node_count()), 0);
    std::vector<LinkId> trail;
    visited[static_cast<std::size_t>(s)] = 1;
    walk(topo, s, d, visited, trail, 0.0, out);
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        if (a.length_km != b.length_km) return a.length_km < b.length_km;
        if (a.links.size() != b.links.size()) return a.links.size() < b.links.size();
        return a.links < b.links;
    });
    return out;
}

std::optional<int> brute_force_min_overlap(const Topology& topo, NodeId s, NodeId d,
                                           std::span<const Lightpath> established_quantum) {
    check_size(topo);
    std::optional<int> best;
    for (const Path& path : brute_force_paths(topo, s, d)) {
        bool has_wavelength = false;
        for (int index = 0; index < topo.w_classical() && !has_wavelength; ++index) {
            bool free_on_all = true;
            for (LinkId lid : path.links) {
                if (!topo.slot_free(lid, Band::Classical, index)) {
                    free_on_all = false;
                    break;
                }
            }
            has_wavelength = free_on_all;
        }
        if (!has_wavelength) continue;
        int overlap = 0;
        for (LinkId lid : path.links) {
            const int fiber = topo.link(lid).fiber_id;
            bool shared = false;
            for (const Lightpath& lp : established_quantum) {
                if (lp.band != Band::Quantum) continue;
                for (LinkId qlid : lp.path.links) {
                    if (topo.link(qlid).fiber_id == fiber) {
                        shared = true;
                        break;
                    }
                }
                if (shared) break;
            }
            overlap += shared ? 1 : 0;
        }
        if (!best || overlap < *best) best = overlap;
    }
    return best;
}

double independent_snr(const Topology& topo, const Path& quantum_path,
                       std::span<const Lightpath> lightpaths, const SnrParams& params) {
    if (quantum_path.links.empty()) {
        throw std::invalid_argument("independent_snr requires a non-empty quantum path");
    }
    double alpha = params.alpha;
    if (params.alpha_is_db) {
        alpha = alpha * std::numbers::ln10 / 10.0;
    }
    double noise = params.n_fiber;
    for (const Lightpath& lp : lightpaths) {
        if (lp.band != Band::Classical) continue;
        double shared_km = 0.0;
        for (LinkId qlid : quantum_path.links) {
            bool on_same_fiber = false;
            for (LinkId clid : lp.path.links) {
                if (topo.link(clid).fiber_id == topo.link(qlid).fiber_id) {
                    on_same_fiber = true;
                    break;
                }
            }
            if (on_same_fiber) shared_km += topo.link(qlid).length_km;
        }
        noise += params.n_shared * shared_km;
    }
    double route_km = 0.0;
    for (LinkId lid : quantum_path.links) route_km += topo.link(lid).length_km;
    return std::exp(-alpha * route_km) * params.p_tx / noise;
}

}  // namespace qrwa::oracle
