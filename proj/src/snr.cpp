#include "qrwa/snr.hpp"

#include "qrwa/routing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrwa {

double compute_snr(const Topology& topo, const Path& quantum_path,
                   std::span<const Lightpath> lightpaths, const SnrParams& params) {
    if (quantum_path.empty()) {
        throw std::invalid_argument("compute_snr requires a non-empty quantum path");
    }
    const double alpha =
        params.alpha_is_db ? params.alpha * std::numbers::ln10 / 10.0 : params.alpha;
    double noise = params.n_fiber;
    for (const Lightpath& lp : lightpaths) {
        if (lp.band != Band::Classical) continue;
        noise += params.n_shared * shared_length_km(topo, lp.path, quantum_path);
    }
    return std::exp(-alpha * quantum_path.length_km) * params.p_tx / noise;
}

double snr_to_db(double linear) {
    if (!(linear > 0.0)) {
        throw std::invalid_argument("snr_to_db requires a positive linear value");
    }
    return 10.0 * std::log10(linear);
}

double db_to_linear(double db) {
    return std::pow(10.0, db / 10.0);
}

bool admission_ok(double snr_linear, const SnrParams& params) {
    return snr_linear >= params.threshold_linear;
}

}  // namespace qrwa
