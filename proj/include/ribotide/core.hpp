#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Shared domain types for the uORF translation models: lattice geometry,
// model parameters, density profiles and the stationary solution vector.
//
// Site convention: physical codons occupy indices 0..n_star-1; index n_star
// is a ghost site with zero density, so profile arrays have n_star+1 entries.
// Index n1 is the start codon, n1+n2 the stop codon.

namespace ribotide {

struct UorfGeometry {
    int n1 = 0;      // codons before the start codon
    int n2 = 0;      // start to stop codon
    int n3 = 0;      // after the stop codon
    int n_star = 0;  // total, must equal n1+n2+n3

    int start() const { return n1; }
    int stop() const { return n1 + n2; }
};

// Builds a geometry with n_star derived from the segments, then validates.
UorfGeometry make_geometry(int n1, int n2, int n3);

// Returns g unchanged if all invariants hold (n_star = n1+n2+n3, n1 >= 1,
// n2 >= 2, n3 >= 0); throws std::invalid_argument naming the failed one.
UorfGeometry validate_geometry(const UorfGeometry& g);

struct ModelParams {
    double rho0 = 0.0;            // upstream density, in (0,1)
    double c = 0.0;               // conversion probability at the start codon, in (0,1)
    double v = 1.0;               // particle velocity, sites per unit time
    std::optional<double> c0{};   // scaled conversion rate c*n2, when supplied

    static ModelParams from_c0(double rho0, double c0, const UorfGeometry& g, double v = 1.0);
};

// Range checks; with a geometry also enforces c0 == c*n2 when c0 is set.
ModelParams validate_params(const ModelParams& p);
ModelParams validate_params(const ModelParams& p, const UorfGeometry& g);

// c0 if stored, otherwise c*n2.
double scaled_conversion(const ModelParams& p, const UorfGeometry& g);

// One-directional flows between neighbouring sites.
// Scanning particles are blocked by any occupancy of the next site,
// elongating particles only by other elongating particles.
inline double scanning_flow(double rho_s_n, double rho_next_total) {
    return rho_s_n * (1.0 - rho_next_total);
}
inline double elongating_flow(double rho_e_n, double rho_e_next) {
    return rho_e_n * (1.0 - rho_e_next);
}

struct DensityProfile {
    std::vector<double> rho_s;  // size n_star+1, rho_s[n_star] == 0
    std::vector<double> rho_e;  // size n_star+1, zero outside [n1, n1+n2)

    // Validating factory; throws std::invalid_argument on any bound or
    // support violation.
    static DensityProfile checked(std::vector<double> rho_s, std::vector<double> rho_e,
                                  const UorfGeometry& g);
};

void validate_profile(const DensityProfile& p, const UorfGeometry& g);

// All unknowns of the stationary system in the transformed variables.
// rho1[n1] is the total density at the start codon; rho2/j2 are indexed by
// m = n - n1, r_elong holds R_0..R_{n2} with R_{n2} == 0.
struct StationarySolution {
    std::vector<double> rho1;     // size n1+1
    std::vector<double> rho2;     // size n2+n3+1, terminal zero
    std::vector<double> r_elong;  // size n2+1, terminal zero
    double j1 = 0.0;
    std::vector<double> j2;       // size n2+n3
    double j_big2 = 0.0;
    double j3 = 0.0;
};

// Expands a stationary solution into a per-site profile (splitting the
// start-codon total by the matching conditions).
DensityProfile to_profile(const StationarySolution& s, const ModelParams& p,
                          const UorfGeometry& g);

enum class EngineTag { tasep, deterministic, limit };

std::string to_string(EngineTag tag);

struct FlowPoint {
    double rho0 = 0.0;
    double j3 = 0.0;
};

struct FlowCurve {
    std::vector<FlowPoint> points;  // rho0 strictly increasing
    EngineTag engine = EngineTag::deterministic;
};

// Throws unless rho0 values are strictly increasing.
void validate_curve(const FlowCurve& c);

}  // namespace ribotide
