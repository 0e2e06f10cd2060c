#include "ddmol/measurement.hpp"

#include <cmath>

#include "ddmol/errors.hpp"
#include "ddmol/phase.hpp"

namespace ddmol {

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

// Level of basis state k for the pair: number of singlets among (i, j).
CurrentLevel level_of(const EncodedRegisterState& s, std::size_t k, std::size_t i, std::size_t j) {
    const int singlets = (s.bit(k, i) == Logical::S) + (s.bit(k, j) == Logical::S);
    return singlets == 0 ? CurrentLevel::Max : singlets == 1 ? CurrentLevel::Mid : CurrentLevel::Min;
}

// Samples index of `probs` by inverse CDF; the last non-zero entry absorbs rounding.
std::size_t sample(const double* probs, std::size_t count, double u) {
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t k = 0; k < count; ++k) {
        if (probs[k] <= 0.0) continue;
        last = k;
        acc += probs[k];
        if (u < acc) return k;
    }
    return last;
}

void check_neighbours_balanced(const EncodedRegisterState& s, const Topology& topology, std::size_t m,
                               std::size_t partner, const char* op) {
    for (auto nb : topology.neighbors(m)) {
        if (nb == partner || nb >= s.molecules()) continue;
        if (s.charge(nb) == ChargeSector::Shifted) {
            throw PhysicsError(std::string(op) + ": neighbour " + std::to_string(nb) + " of molecule " +
                               std::to_string(m) + " is in (0,2); neighbouring molecules must not be read or swept together");
        }
    }
}

} // namespace

std::string to_string(CurrentLevel level) {
    switch (level) {
    case CurrentLevel::Max: return "I_max";
    case CurrentLevel::Mid: return "I_mid";
    case CurrentLevel::Min: return "I_min";
    }
    return "?";
}

double QpcCurrents::value(CurrentLevel level) const {
    switch (level) {
    case CurrentLevel::Max: return max;
    case CurrentLevel::Mid: return mid;
    case CurrentLevel::Min: return min;
    }
    return mid;
}

std::string to_string(BellLabel label) {
    switch (label) {
    case BellLabel::PhiPlus: return "phi_plus";
    case BellLabel::PhiMinus: return "phi_minus";
    case BellLabel::PsiPlus: return "psi_plus";
    case BellLabel::PsiMinus: return "psi_minus";
    }
    return "?";
}

BellLabel bell_label_from_string(const std::string& s) {
    if (s == "phi_plus") return BellLabel::PhiPlus;
    if (s == "phi_minus") return BellLabel::PhiMinus;
    if (s == "psi_plus") return BellLabel::PsiPlus;
    if (s == "psi_minus") return BellLabel::PsiMinus;
    throw ConfigError("unknown Bell state label '" + s + "'");
}

std::string to_string(BellClass c) {
    switch (c) {
    case BellClass::TTOrPhiSector: return "TT_or_Phi_sector";
    case BellClass::SSOrPhiSector: return "SS_or_Phi_sector";
    case BellClass::PsiPlus: return "Psi_plus";
    case BellClass::PsiMinus: return "Psi_minus";
    }
    return "?";
}

EncodedRegisterState bell_state(BellLabel label) {
    // index: 0 = TT, 1 = TS, 2 = ST, 3 = SS
    std::vector<Complex> a(4, 0.0);
    switch (label) {
    case BellLabel::PhiPlus: a[0] = inv_sqrt2; a[3] = inv_sqrt2; break;
    case BellLabel::PhiMinus: a[0] = inv_sqrt2; a[3] = -inv_sqrt2; break;
    case BellLabel::PsiPlus: a[1] = inv_sqrt2; a[2] = inv_sqrt2; break;
    case BellLabel::PsiMinus: a[1] = inv_sqrt2; a[2] = -inv_sqrt2; break;
    }
    return EncodedRegisterState::from_amplitudes(std::move(a));
}

double BellDecomposition::norm_squared() const {
    double n = 0.0;
    for (const auto& v : p) n += std::norm(v);
    return n;
}

BellDecomposition decompose_bell(const EncodedRegisterState& state) {
    if (state.molecules() != 2) throw PhysicsError("decompose_bell: needs a two-molecule state");
    const auto a = state.amplitudes();
    BellDecomposition d;
    d.p[0] = inv_sqrt2 * (a[0] + a[3]);
    d.p[1] = inv_sqrt2 * (a[0] - a[3]);
    d.p[2] = inv_sqrt2 * (a[1] + a[2]);
    d.p[3] = inv_sqrt2 * (a[1] - a[2]);
    return d;
}

double singlet_probability(const EncodedRegisterState& state, std::size_t m) {
    if (m >= state.molecules()) throw PhysicsError("singlet_probability: molecule out of range");
    double p = 0.0;
    const auto bit = state.mask(m);
    for (std::size_t k = 0; k < state.dimension(); ++k) {
        if (k & bit) p += std::norm(state[k]);
    }
    return p;
}

std::array<double, 3> pair_level_probabilities(const EncodedRegisterState& state, std::size_t i,
                                               std::size_t j) {
    if (i >= state.molecules() || j >= state.molecules() || i == j) {
        throw PhysicsError("pair_level_probabilities: bad pair");
    }
    std::array<double, 3> p{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < state.dimension(); ++k) {
        p[static_cast<std::size_t>(level_of(state, k, i, j))] += std::norm(state[k]);
    }
    return p;
}

DetuningWaveform measurement_sweep(const MoleculeParams& params, const MeasurementSettings& settings) {
    double ramp = settings.ramp;
    if (ramp <= 0.0) {
        const auto window = sweep_rate_window(params, settings.safety_factor);
        if (window.empty()) throw PhysicsError("measurement_sweep: no valid sweep window");
        ramp = window.min_duration;
    }
    return DetuningWaveform::trapezoid(params, ramp, settings.read_duration);
}

SingleReading qpc_read_single(const EncodedRegisterState& state, const Topology& topology,
                              std::size_t m, RngStream& rng, const QpcCurrents& currents) {
    if (m >= state.molecules()) throw PhysicsError("qpc_read_single: molecule out of range");
    if (state.charge(m) == ChargeSector::Shifted) {
        throw PhysicsError("qpc_read_single: molecule " + std::to_string(m) + " is already in (0,2)");
    }
    check_neighbours_balanced(state, topology, m, m, "qpc_read_single");

    const double ps = singlet_probability(state, m);
    const double probs[2] = {1.0 - ps, ps};
    const bool singlet = sample(probs, 2, rng.uniform()) == 1;

    EncodedRegisterState post = state;
    const auto bit = post.mask(m);
    auto amps = post.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (static_cast<bool>(k & bit) != singlet) amps[k] = 0.0;
    }
    post.normalize();
    // a singlet moves to (0,2) during the read and is swept back afterwards
    return {singlet ? SpinOutcome::S : SpinOutcome::T, singlet ? currents.min : currents.max, post};
}

QpcReading qpc_read_pair(const EncodedRegisterState& state, const Topology& topology, std::size_t i,
                         std::size_t j, RngStream& rng, double accumulated_phase,
                         const QpcCurrents& currents) {
    if (i >= state.molecules() || j >= state.molecules()) throw PhysicsError("qpc_read_pair: molecule out of range");
    if (!topology.adjacent(i, j)) {
        throw PhysicsError("qpc_read_pair: molecules " + std::to_string(i) + " and " +
                           std::to_string(j) + " are not adjacent");
    }
    if (state.charge(i) != ChargeSector::Shifted || state.charge(j) != ChargeSector::Shifted) {
        throw PhysicsError("qpc_read_pair: both molecules must be swept to +Ec/2 first");
    }
    const auto probs = pair_level_probabilities(state, i, j);
    const auto level = static_cast<CurrentLevel>(sample(probs.data(), 3, rng.uniform()));

    EncodedRegisterState post = state;
    auto amps = post.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (level_of(post, k, i, j) != level) amps[k] = 0.0;
    }
    post.normalize();
    return {level, currents.value(level), std::move(post), accumulated_phase};
}

BellOutcome bell_measure(const EncodedRegisterState& state, const Topology& topology, std::size_t i,
                         std::size_t j, const LayoutGeometry& g, const MoleculeParams& params,
                         RngStream& rng, const MeasurementSettings& settings) {
    if (!topology.adjacent(i, j)) {
        throw PhysicsError("bell_measure: molecules " + std::to_string(i) + " and " + std::to_string(j) +
                           " are not adjacent");
    }
    if (state.charge(i) == ChargeSector::Shifted || state.charge(j) == ChargeSector::Shifted) {
        throw PhysicsError("bell_measure: pair must start in (1,1)");
    }
    check_neighbours_balanced(state, topology, i, j, "bell_measure");
    check_neighbours_balanced(state, topology, j, i, "bell_measure");

    const auto sweep = measurement_sweep(params, settings);
    const double phi = phase_from_waveform(sweep, sweep, g, params);

    // One sweep-read-return cycle; the sweep phase only touches |S~S~>.
    const auto read_cycle = [&](EncodedRegisterState s) {
        s.set_charge(i, ChargeSector::Shifted);
        s.set_charge(j, ChargeSector::Shifted);
        ising_phase(s, topology, i, j, phi);
        return qpc_read_pair(s, topology, i, j, rng, phi, settings.currents);
    };
    const auto back_to_11 = [&](EncodedRegisterState s) {
        s.set_charge(i, ChargeSector::Balanced);
        s.set_charge(j, ChargeSector::Balanced);
        return s;
    };

    QpcReading first = read_cycle(state);
    EncodedRegisterState current = back_to_11(first.post_state);
    if (first.level != CurrentLevel::Mid) {
        const auto cls = first.level == CurrentLevel::Max ? BellClass::TTOrPhiSector : BellClass::SSOrPhiSector;
        return {std::move(first), std::nullopt, cls, std::move(current)};
    }

    // Hadamards one molecule at a time, both in (1,1) throughout.
    apply_rotation(current, i, Rotation::hadamard());
    apply_rotation(current, j, Rotation::hadamard());
    QpcReading second = read_cycle(current);
    current = back_to_11(second.post_state);
    const auto cls = second.level == CurrentLevel::Mid ? BellClass::PsiMinus : BellClass::PsiPlus;
    return {std::move(first), std::move(second), cls, std::move(current)};
}

} // namespace ddmol
