#pragma once

#include "qrwa/lightpath.hpp"
#include "qrwa/snr.hpp"
#include "qrwa/topology.hpp"
#include "qrwa/traffic.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace qrwa {

// Strategy for the classical channels of a request. The quantum channel
// always uses k-shortest-paths + first fit.
enum class Policy { SPFF, MQO, QTD };

enum class BlockReason {
    NoQuantumResource,    // no quantum wavelength on any candidate path
    NoClassicalResource,  // some classical channel found no wavelength
    NewChannelSnr,        // the new quantum channel misses the SNR threshold
    DegradesExistingSnr,  // an established quantum channel would drop below it
};
inline constexpr int kBlockReasonCount = 4;

const char* to_string(Policy policy);
const char* to_string(BlockReason reason);
std::optional<Policy> policy_from_string(std::string_view name);

// The lightpaths serving one accepted request. Quantum requests carry
// QKCh s->d, MBCh s->d, MBCh d->s, TDCh s->d (plus TDCh d->s when the
// bidirectional option is on); standalone classical requests carry one
// ClassicalStandalone lightpath.
struct Connection {
    Request request;
    std::vector<Lightpath> lightpaths;
};

struct ServeOptions {
    Policy policy = Policy::SPFF;
    int k = 3;    // KSP depth for quantum and SP-FF allocation
    int cap = 64; // candidate-route cap for MQO/QTD enumeration
    SnrParams snr{};
    // QTD normally considers only the single shortest fully-disjoint path;
    // this makes it iterate every disjoint candidate instead.
    bool qtd_try_all_disjoint = false;
    bool tdch_bidirectional = false;
    // Whether the request's own tentative QKCh counts as established when
    // MQO/QTD rank candidate routes for its classical channels.
    bool own_qkch_in_quantum_view = true;
};

// Mutable world of one simulation run: topology occupancy plus the
// established lightpaths. Strictly sequential use within a run.
struct NetworkState {
    explicit NetworkState(Topology topo) : topology(std::move(topo)) {}

    Topology topology;
    std::vector<Lightpath> established;
    int next_lightpath_id = 0;

    std::vector<Lightpath> quantum_lightpaths() const;
    std::vector<Lightpath> classical_lightpaths() const;
};

// A tentative (path, wavelength) selection; nothing is occupied yet.
struct ChannelPlan {
    Path path;
    int wavelength = 0;
};

// Smallest wavelength index free on every link of the path within the band's
// pool, or nullopt when no common free index exists. Pure query.
std::optional<int> first_fit(const Topology& topo, const Path& path, Band band);

// KSP + FF over the quantum pool: first of the k shortest paths with a free
// wavelength. Does not commit occupancy.
std::optional<ChannelPlan> allocate_quantum(const Topology& topo, NodeId s, NodeId d, int k);

// KSP + FF over the classical pool.
std::optional<ChannelPlan> allocate_classical_spff(const Topology& topo, NodeId s, NodeId d, int k);

// Minimum Quantum Overlap: candidate routes ordered by (shared quantum
// links, canonical path order); first with a free classical wavelength wins.
std::optional<ChannelPlan> allocate_classical_mqo(const Topology& topo, NodeId s, NodeId d,
                                                  std::span<const Lightpath> established_quantum,
                                                  int cap);

// Quantum Totally Disjoint: only routes sharing zero links with quantum
// lightpaths qualify; the shortest one is tried and the request is lost if
// it has no free wavelength (unless try_all_disjoint).
std::optional<ChannelPlan> allocate_classical_qtd(const Topology& topo, NodeId s, NodeId d,
                                                  std::span<const Lightpath> established_quantum,
                                                  int cap, bool try_all_disjoint = false);

using ServeResult = std::variant<Connection, BlockReason>;

// All-or-nothing request pipeline: allocate the QKCh, then the classical
// channels under the configured policy, then run both SNR admission checks.
// On any failure every tentatively occupied slot is released and the state
// is exactly as before the call; on success all lightpaths commit at once.
ServeResult serve_request(NetworkState& net, const Request& request, const ServeOptions& options);

}  // namespace qrwa
