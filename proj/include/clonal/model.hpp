#pragma once

// Domain types for the two-type (drug-sensitive / drug-resistant) branching
// model: parameters with their standing assumptions, per-clone records, and
// the outcome of a single simulated trajectory.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace clonal {

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// How the sensitive population evolves: a deterministic exponential decay
// n*exp(lambda0*t), or a birth-death process with rates r0/d0.
enum class SensitiveMode { Deterministic, Stochastic };

struct ModelParams {
    double r0 = 0;     // sensitive birth rate
    double d0 = 0;     // sensitive death rate
    double r1 = 0;     // resistant birth rate
    double d1 = 0;     // resistant death rate
    double mu = 0;     // mutation scale; per-cell rate is mu * n^-alpha
    double alpha = 0;  // mutation exponent, in (0,1)
    std::uint64_t n = 0;  // initial sensitive population
    double a = 1.0;       // recurrence threshold fraction: recur when Z1 > a*n
    SensitiveMode sensitive_mode = SensitiveMode::Deterministic;

    // Net growth rates, derived once by validate(); every formula uses these
    // rather than recomputing r - d inline.
    double lambda0 = 0;
    double lambda1 = 0;

    double mutation_rate_per_cell() const { return mu * std::pow(static_cast<double>(n), -alpha); }
    double threshold() const { return a * static_cast<double>(n); }
};

// Checks the standing assumptions and fills in the derived net growth rates.
// Each violated constraint gets its own error message.
inline ModelParams validate(ModelParams p) {
    if (p.r0 < 0 || p.d0 < 0) throw validation_error("invalid params: r0 and d0 must be >= 0");
    if (!(p.r1 > 0)) throw validation_error("invalid params: r1 must be > 0");
    if (p.d1 < 0) throw validation_error("invalid params: d1 must be >= 0");
    p.lambda0 = p.r0 - p.d0;
    p.lambda1 = p.r1 - p.d1;
    if (!(p.lambda0 < 0))
        throw validation_error("invalid params: lambda0 = r0 - d0 must be < 0 (sensitive cells decay)");
    if (!(p.lambda1 > 0))
        throw validation_error("invalid params: lambda1 = r1 - d1 must be > 0 (resistant clones grow)");
    if (!(p.alpha > 0 && p.alpha < 1))
        throw validation_error("invalid params: alpha must lie in (0,1)");
    if (!(p.mu > 0)) throw validation_error("invalid params: mu must be > 0");
    if (p.n < 1) throw validation_error("invalid params: n must be a positive integer");
    if (!(p.a > 0)) throw validation_error("invalid params: a must be > 0");
    return p;
}

// Mutation (new-clone) intensity at time t given z0 sensitive cells:
// z0 * mu * n^-alpha.  Without an explicit z0 the deterministic-mode value
// n*exp(lambda0*t) is used.
inline double mutation_intensity(const ModelParams& p, double t,
                                 std::optional<double> z0 = std::nullopt) {
    if (t < 0) throw std::invalid_argument("mutation_intensity: t must be >= 0");
    const double pop = z0 ? *z0 : static_cast<double>(p.n) * std::exp(p.lambda0 * t);
    if (pop < 0) throw std::invalid_argument("mutation_intensity: z0 must be >= 0");
    return pop * p.mutation_rate_per_cell();
}

// One resistant clone, founded by a single mutation.
struct CloneRecord {
    std::uint32_t id = 0;
    double birth_time = 0;
    std::uint64_t size = 0;
};

struct EventCounts {
    std::uint64_t sensitive_births = 0;
    std::uint64_t sensitive_deaths = 0;
    std::uint64_t mutations = 0;
    std::uint64_t resistant_births = 0;
    std::uint64_t resistant_deaths = 0;
};

// A single simulated run, frozen at its stop time.
struct TrajectoryOutcome {
    std::optional<double> recurrence_time;  // gamma_n(a); empty when censored
    double stop_time = 0;
    std::vector<CloneRecord> clone_records;
    std::uint64_t z1_final = 0;
    double z0_final = 0;  // real-valued in Deterministic mode, a count otherwise
    std::uint64_t seed = 0;  // per-run stream index under the ensemble master seed
    EventCounts events;

    bool censored() const { return !recurrence_time.has_value(); }
    // Clones generated by time t (birth times are nondecreasing in id).
    std::uint64_t clones_generated_by(double t) const {
        std::uint64_t k = 0;
        for (const auto& c : clone_records) {
            if (c.birth_time <= t) ++k;
            else break;
        }
        return k;
    }
};

struct WindowCount {
    double t1 = 0;
    double t2 = 0;
    std::uint64_t clones = 0;       // clones born in (t1, t2]
    std::uint64_t mutant_mass = 0;  // final sizes summed over those clones
};

// Diversity statistics of one outcome.
struct DiversitySummary {
    std::uint64_t num_clones_generated = 0;
    std::uint64_t num_clones_alive = 0;
    double simpson = 0;  // 0 for an empty population
    std::vector<WindowCount> window_counts;
};

}  // namespace clonal
