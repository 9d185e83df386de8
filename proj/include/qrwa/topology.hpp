#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qrwa {

using NodeId = int;
using LinkId = int;

enum class Band { Quantum, Classical };

// One directed fiber link. The two directions of a physical fiber are two
// Links sharing a fiber_id; crosstalk accounting works at fiber level.
struct Link {
    LinkId id = 0;
    NodeId source = 0;
    NodeId target = 0;
    double length_km = 0.0;
    int fiber_id = 0;

    bool operator==(const Link&) const = default;
};

struct SlotRef {
    LinkId link = 0;
    Band band = Band::Quantum;
    int index = 0;

    bool operator==(const SlotRef&) const = default;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Double allocation of a wavelength slot. Allocation policies are expected to
// check availability first, so hitting this is a bug in the caller.
struct SlotOccupiedError : std::logic_error {
    using std::logic_error::logic_error;
};

// Network graph plus per-link wavelength occupancy. Each link carries two
// disjoint wavelength pools: w_quantum slots reserved for quantum channels
// and w_total - w_quantum slots for classical channels.
class Topology {
public:
    struct Fiber {
        NodeId u = 0;
        NodeId v = 0;
        double length_km = 0.0;
    };

    Topology(int node_count, const std::vector<Fiber>& fibers, int w_total, int w_quantum);

    // Text format: `nodes N`, `wavelengths W_T W_Q`, and one `link u v length_km`
    // line per bidirectional fiber. `#` starts a comment.
    static Topology parse(std::istream& in);
    static Topology parse(const std::string& text);
    static Topology load_file(const std::string& path);

    // Built-in 6-node network: ring 0-1-2-3-4-5-0 plus chord 0-3, every fiber
    // 10 km, 80 wavelengths per link of which 40 are reserved for quantum use.
    static Topology make_default();

    std::string save() const;

    int node_count() const { return node_count_; }
    const std::vector<Link>& links() const { return links_; }
    const Link& link(LinkId id) const { return links_.at(static_cast<std::size_t>(id)); }
    int fiber_count() const { return static_cast<int>(links_.size() / 2); }
    const std::vector<LinkId>& out_links(NodeId node) const;

    int w_total() const { return w_total_; }
    int w_quantum() const { return w_quantum_; }
    int w_classical() const { return w_total_ - w_quantum_; }
    int pool_size(Band band) const { return band == Band::Quantum ? w_quantum() : w_classical(); }

    bool slot_free(LinkId link, Band band, int index) const { return slot_holder(link, band, index) < 0; }
    // Holder id occupying the slot, or -1 when free.
    int slot_holder(LinkId link, Band band, int index) const;
    void occupy(LinkId link, Band band, int index, int holder);
    // Frees every slot held by `holder`; unknown holders are a no-op.
    void release(int holder);
    const std::vector<SlotRef>* slots_of(int holder) const;
    int occupied_slot_count() const { return occupied_; }

    bool operator==(const Topology&) const = default;

private:
    const std::vector<int>& pool(LinkId link, Band band) const;
    std::vector<int>& pool(LinkId link, Band band);
    void check_slot(LinkId link, Band band, int index) const;

    int node_count_ = 0;
    int w_total_ = 0;
    int w_quantum_ = 0;
    std::vector<Link> links_;
    std::vector<std::vector<LinkId>> out_links_;
    std::vector<std::vector<int>> quantum_holders_;
    std::vector<std::vector<int>> classical_holders_;
    std::unordered_map<int, std::vector<SlotRef>> by_holder_;
    int occupied_ = 0;
};

}  // namespace qrwa
