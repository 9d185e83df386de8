#include "qrwa/topology.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace qrwa {

namespace {

long parse_long(const std::string& token, const std::string& context) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected integer in " + context + ", got '" + token + "'");
    }
    if (pos != token.size()) {
        throw ParseError("expected integer in " + context + ", got '" + token + "'");
    }
    return value;
}

double parse_real(const std::string& token, const std::string& context) {
    std::size_t pos = 0;
    double value = 0;
    try {
        value = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected number in " + context + ", got '" + token + "'");
    }
    if (pos != token.size()) {
        throw ParseError("expected number in " + context + ", got '" + token + "'");
    }
    return value;
}

}  // namespace

Topology::Topology(int node_count, const std::vector<Fiber>& fibers, int w_total, int w_quantum)
    : node_count_(node_count), w_total_(w_total), w_quantum_(w_quantum) {
    if (node_count_ < 1) {
        throw ValidationError("node count must be at least 1");
    }
    if (!(0 < w_quantum_ && w_quantum_ < w_total_)) {
        throw ValidationError("wavelength split requires 0 < W_Q < W_T, got W_T=" +
                              std::to_string(w_total_) + " W_Q=" + std::to_string(w_quantum_));
    }
    links_.reserve(fibers.size() * 2);
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        const Fiber& f = fibers[i];
        const std::string where = "link " + std::to_string(i);
        if (f.u < 0 || f.u >= node_count_ || f.v < 0 || f.v >= node_count_) {
            throw ValidationError(where + " references a node outside 0.." +
                                  std::to_string(node_count_ - 1));
        }
        if (f.u == f.v) {
            throw ValidationError(where + " is a self-loop");
        }
        if (!(f.length_km > 0.0) || !std::isfinite(f.length_km)) {
            throw ValidationError(where + " has non-positive length");
        }
        const int fiber_id = static_cast<int>(i);
        links_.push_back({static_cast<LinkId>(links_.size()), f.u, f.v, f.length_km, fiber_id});
        links_.push_back({static_cast<LinkId>(links_.size()), f.v, f.u, f.length_km, fiber_id});
    }
    out_links_.resize(static_cast<std::size_t>(node_count_));
    for (const Link& l : links_) {
        out_links_[static_cast<std::size_t>(l.source)].push_back(l.id);
    }
    quantum_holders_.assign(links_.size(), std::vector<int>(static_cast<std::size_t>(w_quantum_), -1));
    classical_holders_.assign(links_.size(),
                              std::vector<int>(static_cast<std::size_t>(w_total_ - w_quantum_), -1));
}

Topology Topology::parse(std::istream& in) {
    std::optional<int> nodes;
    std::optional<int> w_total;
    std::optional<int> w_quantum;
    std::vector<Fiber> fibers;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) {
            continue;  // blank or comment-only line
        }
        const std::string where = "line " + std::to_string(line_no);
        std::vector<std::string> args;
        for (std::string tok; fields >> tok;) {
            args.push_back(tok);
        }
        if (keyword == "nodes") {
            if (nodes) throw ParseError(where + ": duplicate nodes line");
            if (args.size() != 1) throw ParseError(where + ": nodes takes one value");
            nodes = static_cast<int>(parse_long(args[0], where));
        } else if (keyword == "wavelengths") {
            if (w_total) throw ParseError(where + ": duplicate wavelengths line");
            if (args.size() != 2) throw ParseError(where + ": wavelengths takes W_T and W_Q");
            w_total = static_cast<int>(parse_long(args[0], where));
            w_quantum = static_cast<int>(parse_long(args[1], where));
        } else if (keyword == "link") {
            if (args.size() != 3) throw ParseError(where + ": link takes u v length_km");
            Fiber f;
            f.u = static_cast<NodeId>(parse_long(args[0], where));
            f.v = static_cast<NodeId>(parse_long(args[1], where));
            f.length_km = parse_real(args[2], where);
            fibers.push_back(f);
        } else {
            throw ParseError(where + ": unknown keyword '" + keyword + "'");
        }
    }
    if (!nodes) throw ParseError("missing nodes line");
    if (!w_total) throw ParseError("missing wavelengths line");
    return Topology(*nodes, fibers, *w_total, *w_quantum);
}

Topology Topology::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

Topology Topology::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open topology file: " + path);
    }
    return parse(in);
}

Topology Topology::make_default() {
    std::vector<Fiber> fibers;
    for (int i = 0; i < 6; ++i) {
        fibers.push_back({i, (i + 1) % 6, 10.0});
    }
    fibers.push_back({0, 3, 10.0});
    return Topology(6, fibers, 80, 40);
}

std::string Topology::save() const {
    std::ostringstream out;
    out << "nodes " << node_count_ << "\n";
    out << "wavelengths " << w_total_ << " " << w_quantum_ << "\n";
    for (std::size_t i = 0; i < links_.size(); i += 2) {
        const Link& l = links_[i];
        char len[64];
        std::snprintf(len, sizeof len, "%.17g", l.length_km);
        out << "link " << l.source << " " << l.target << " " << len << "\n";
    }
    return out.str();
}

const std::vector<LinkId>& Topology::out_links(NodeId node) const {
    return out_links_.at(static_cast<std::size_t>(node));
}

const std::vector<int>& Topology::pool(LinkId link, Band band) const {
    return band == Band::Quantum ? quantum_holders_.at(static_cast<std::size_t>(link))
                                 : classical_holders_.at(static_cast<std::size_t>(link));
}

std::vector<int>& Topology::pool(LinkId link, Band band) {
    return band == Band::Quantum ? quantum_holders_.at(static_cast<std::size_t>(link))
                                 : classical_holders_.at(static_cast<std::size_t>(link));
}

void Topology::check_slot(LinkId link, Band band, int index) const {
    if (link < 0 || static_cast<std::size_t>(link) >= links_.size()) {
        throw std::out_of_range("link id " + std::to_string(link) + " out of range");
    }
    if (index < 0 || index >= pool_size(band)) {
        throw std::out_of_range("wavelength index " + std::to_string(index) +
                                " outside pool of size " + std::to_string(pool_size(band)));
    }
}

int Topology::slot_holder(LinkId link, Band band, int index) const {
    check_slot(link, band, index);
    return pool(link, band)[static_cast<std::size_t>(index)];
}

void Topology::occupy(LinkId link, Band band, int index, int holder) {
    check_slot(link, band, index);
    if (holder < 0) {
        throw std::invalid_argument("holder ids must be non-negative");
    }
    int& slot = pool(link, band)[static_cast<std::size_t>(index)];
    if (slot >= 0) {
        throw SlotOccupiedError("slot (link " + std::to_string(link) + ", " +
                                (band == Band::Quantum ? "quantum" : "classical") + ", " +
                                std::to_string(index) + ") already held by " + std::to_string(slot));
    }
    slot = holder;
    by_holder_[holder].push_back({link, band, index});
    ++occupied_;
}

void Topology::release(int holder) {
    auto it = by_holder_.find(holder);
    if (it == by_holder_.end()) {
        return;
    }
    for (const SlotRef& ref : it->second) {
        pool(ref.link, ref.band)[static_cast<std::size_t>(ref.index)] = -1;
        --occupied_;
    }
    by_holder_.erase(it);
}

const std::vector<SlotRef>* Topology::slots_of(int holder) const {
    auto it = by_holder_.find(holder);
    return it == by_holder_.end() ? nullptr : &it->second;
}

}  // namespace qrwa
