#pragma once

#include "qrwa/topology.hpp"

#include <vector>

namespace qrwa {

// A loopless directed route. length_km is the sum of the link lengths.
struct Path {
    std::vector<LinkId> links;
    double length_km = 0.0;

    bool empty() const { return links.empty(); }
    int hops() const { return static_cast<int>(links.size()); }

    bool operator==(const Path&) const = default;
};

enum class LightpathKind {
    QKCh,                 // quantum key channel
    MBCh,                 // measuring-basis (classical discussion) channel
    TDCh,                 // traditional data channel
    ClassicalStandalone,  // classical demand not tied to a quantum request
};

constexpr Band band_for(LightpathKind kind) {
    return kind == LightpathKind::QKCh ? Band::Quantum : Band::Classical;
}

const char* to_string(LightpathKind kind);

// An established channel: route + band + wavelength, occupying that
// wavelength on every link of the route.
struct Lightpath {
    int id = 0;
    LightpathKind kind = LightpathKind::QKCh;
    Path path;
    Band band = Band::Quantum;
    int wavelength = 0;
    NodeId source = 0;
    NodeId destination = 0;

    bool operator==(const Lightpath&) const = default;
};

}  // namespace qrwa
