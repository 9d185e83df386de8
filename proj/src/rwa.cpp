#include "qrwa/rwa.hpp"

#include "qrwa/routing.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrwa {

const char* to_string(Policy policy) {
    switch (policy) {
        case Policy::SPFF: return "spff";
        case Policy::MQO: return "mqo";
        case Policy::QTD: return "qtd";
    }
    return "?";
}

const char* to_string(BlockReason reason) {
    switch (reason) {
        case BlockReason::NoQuantumResource: return "no-quantum-resource";
        case BlockReason::NoClassicalResource: return "no-classical-resource";
        case BlockReason::NewChannelSnr: return "new-channel-snr";
        case BlockReason::DegradesExistingSnr: return "degrades-existing-snr";
    }
    return "?";
}

const char* to_string(LightpathKind kind) {
    switch (kind) {
        case LightpathKind::QKCh: return "qkch";
        case LightpathKind::MBCh: return "mbch";
        case LightpathKind::TDCh: return "tdch";
        case LightpathKind::ClassicalStandalone: return "classical";
    }
    return "?";
}

std::optional<Policy> policy_from_string(std::string_view name) {
    if (name == "spff") return Policy::SPFF;
    if (name == "mqo") return Policy::MQO;
    if (name == "qtd") return Policy::QTD;
    return std::nullopt;
}

std::vector<Lightpath> NetworkState::quantum_lightpaths() const {
    std::vector<Lightpath> out;
    for (const Lightpath& lp : established) {
        if (lp.band == Band::Quantum) out.push_back(lp);
    }
    return out;
}

std::vector<Lightpath> NetworkState::classical_lightpaths() const {
    std::vector<Lightpath> out;
    for (const Lightpath& lp : established) {
        if (lp.band == Band::Classical) out.push_back(lp);
    }
    return out;
}

std::optional<int> first_fit(const Topology& topo, const Path& path, Band band) {
    if (path.empty()) {
        throw std::invalid_argument("first_fit requires a non-empty path");
    }
    const int pool = topo.pool_size(band);
    for (int index = 0; index < pool; ++index) {
        bool free_everywhere = true;
        for (LinkId lid : path.links) {
            if (!topo.slot_free(lid, band, index)) {
                free_everywhere = false;
                break;
            }
        }
        if (free_everywhere) return index;
    }
    return std::nullopt;
}

namespace {

std::optional<ChannelPlan> first_fit_over(const Topology& topo, const std::vector<Path>& candidates,
                                          Band band) {
    for (const Path& path : candidates) {
        if (auto wavelength = first_fit(topo, path, band)) {
            return ChannelPlan{path, *wavelength};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ChannelPlan> allocate_quantum(const Topology& topo, NodeId s, NodeId d, int k) {
    return first_fit_over(topo, k_shortest_paths(topo, s, d, k), Band::Quantum);
}

std::optional<ChannelPlan> allocate_classical_spff(const Topology& topo, NodeId s, NodeId d, int k) {
    return first_fit_over(topo, k_shortest_paths(topo, s, d, k), Band::Classical);
}

std::optional<ChannelPlan> allocate_classical_mqo(const Topology& topo, NodeId s, NodeId d,
                                                  std::span<const Lightpath> established_quantum,
                                                  int cap) {
    std::vector<Path> candidates = all_simple_paths(topo, s, d, cap);
    std::vector<int> overlap(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        overlap[i] = shared_quantum_links(topo, candidates[i], established_quantum);
    }
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    // candidates are already in canonical order; a stable sort on overlap
    // keeps it as the tie-break
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return overlap[a] < overlap[b]; });
    for (std::size_t i : order) {
        if (auto wavelength = first_fit(topo, candidates[i], Band::Classical)) {
            return ChannelPlan{candidates[i], *wavelength};
        }
    }
    return std::nullopt;
}

std::optional<ChannelPlan> allocate_classical_qtd(const Topology& topo, NodeId s, NodeId d,
                                                  std::span<const Lightpath> established_quantum,
                                                  int cap, bool try_all_disjoint) {
    std::vector<Path> disjoint;
    for (Path& path : all_simple_paths(topo, s, d, cap)) {
        if (shared_quantum_links(topo, path, established_quantum) == 0) {
            disjoint.push_back(std::move(path));
            if (!try_all_disjoint) break;  // only the shortest disjoint path is tried
        }
    }
    return first_fit_over(topo, disjoint, Band::Classical);
}

namespace {

struct ChannelSpec {
    LightpathKind kind;
    NodeId s;
    NodeId d;
};

Lightpath make_lightpath(int id, const ChannelSpec& spec, ChannelPlan plan) {
    return Lightpath{id,           spec.kind,              std::move(plan.path),
                     band_for(spec.kind), plan.wavelength, spec.s,
                     spec.d};
}

void occupy_path(Topology& topo, const Lightpath& lp) {
    for (LinkId lid : lp.path.links) {
        topo.occupy(lid, lp.band, lp.wavelength, lp.id);
    }
}

std::optional<ChannelPlan> plan_classical(const Topology& topo, NodeId s, NodeId d,
                                          const ServeOptions& options,
                                          std::span<const Lightpath> quantum_view) {
    switch (options.policy) {
        case Policy::SPFF:
            return allocate_classical_spff(topo, s, d, options.k);
        case Policy::MQO:
            return allocate_classical_mqo(topo, s, d, quantum_view, options.cap);
        case Policy::QTD:
            return allocate_classical_qtd(topo, s, d, quantum_view, options.cap,
                                          options.qtd_try_all_disjoint);
    }
    throw std::logic_error("unknown policy");
}

}  // namespace

ServeResult serve_request(NetworkState& net, const Request& request, const ServeOptions& options) {
    if (request.s == request.d) {
        throw std::invalid_argument("request endpoints must differ");
    }
    const int base_id = net.next_lightpath_id;
    std::vector<Lightpath> tentative;
    auto rollback = [&] {
        for (const Lightpath& lp : tentative) net.topology.release(lp.id);
    };

    // Quantum view seen by the classical policies: established quantum
    // lightpaths plus this request's own tentative QKCh.
    std::vector<Lightpath> quantum_view = net.quantum_lightpaths();

    std::vector<ChannelSpec> classical_channels;
    if (request.classical_standalone) {
        classical_channels.push_back({LightpathKind::ClassicalStandalone, request.s, request.d});
    } else {
        auto quantum_plan = allocate_quantum(net.topology, request.s, request.d, options.k);
        if (!quantum_plan) {
            return BlockReason::NoQuantumResource;
        }
        Lightpath qkch = make_lightpath(
            base_id, {LightpathKind::QKCh, request.s, request.d}, std::move(*quantum_plan));
        occupy_path(net.topology, qkch);
        if (options.own_qkch_in_quantum_view) quantum_view.push_back(qkch);
        tentative.push_back(std::move(qkch));

        classical_channels.push_back({LightpathKind::MBCh, request.s, request.d});
        classical_channels.push_back({LightpathKind::MBCh, request.d, request.s});
        classical_channels.push_back({LightpathKind::TDCh, request.s, request.d});
        if (options.tdch_bidirectional) {
            classical_channels.push_back({LightpathKind::TDCh, request.d, request.s});
        }
    }

    for (const ChannelSpec& spec : classical_channels) {
        auto plan = plan_classical(net.topology, spec.s, spec.d, options, quantum_view);
        if (!plan) {
            rollback();
            return BlockReason::NoClassicalResource;
        }
        Lightpath lp =
            make_lightpath(base_id + static_cast<int>(tentative.size()), spec, std::move(*plan));
        occupy_path(net.topology, lp);
        tentative.push_back(std::move(lp));
    }

    // Classical population after a hypothetical commit, for both SNR checks.
    std::vector<Lightpath> coexisting = net.established;
    for (const Lightpath& lp : tentative) {
        if (lp.band == Band::Classical) coexisting.push_back(lp);
    }

    if (!request.classical_standalone) {
        const double snr_new =
            compute_snr(net.topology, tentative.front().path, coexisting, options.snr);
        if (!admission_ok(snr_new, options.snr)) {
            rollback();
            return BlockReason::NewChannelSnr;
        }
    }
    for (const Lightpath& lp : net.established) {
        if (lp.kind != LightpathKind::QKCh) continue;
        if (!admission_ok(compute_snr(net.topology, lp.path, coexisting, options.snr),
                          options.snr)) {
            rollback();
            return BlockReason::DegradesExistingSnr;
        }
    }

    net.established.insert(net.established.end(), tentative.begin(), tentative.end());
    net.next_lightpath_id = base_id + static_cast<int>(tentative.size());
    return Connection{request, std::move(tentative)};
}

}  // namespace qrwa
