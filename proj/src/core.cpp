#include "ribotide/core.hpp"

#include <cmath>
#include <stdexcept>

namespace ribotide {

UorfGeometry make_geometry(int n1, int n2, int n3) {
    return validate_geometry(UorfGeometry{n1, n2, n3, n1 + n2 + n3});
}

UorfGeometry validate_geometry(const UorfGeometry& g) {
    if (g.n1 < 1) throw std::invalid_argument("geometry: n1 must be >= 1, got " + std::to_string(g.n1));
    if (g.n2 < 2) throw std::invalid_argument("geometry: n2 must be >= 2, got " + std::to_string(g.n2));
    if (g.n3 < 0) throw std::invalid_argument("geometry: n3 must be >= 0, got " + std::to_string(g.n3));
    if (g.n_star != g.n1 + g.n2 + g.n3)
        throw std::invalid_argument("geometry: n_star mismatch, " + std::to_string(g.n_star) + " != " +
                                    std::to_string(g.n1) + "+" + std::to_string(g.n2) + "+" +
                                    std::to_string(g.n3));
    return g;
}

ModelParams ModelParams::from_c0(double rho0, double c0, const UorfGeometry& g, double v) {
    ModelParams p;
    p.rho0 = rho0;
    p.c = c0 / g.n2;
    p.c0 = c0;
    p.v = v;
    return p;
}

ModelParams validate_params(const ModelParams& p) {
    if (!(p.rho0 > 0.0 && p.rho0 < 1.0))
        throw std::invalid_argument("params: rho0 must lie in (0,1), got " + std::to_string(p.rho0));
    if (!(p.c > 0.0 && p.c < 1.0))
        throw std::invalid_argument("params: c must lie in (0,1), got " + std::to_string(p.c));
    if (!(p.v > 0.0))
        throw std::invalid_argument("params: v must be positive, got " + std::to_string(p.v));
    return p;
}

ModelParams validate_params(const ModelParams& p, const UorfGeometry& g) {
    validate_params(p);
    if (p.c0) {
        const double expect = p.c * g.n2;
        if (std::abs(*p.c0 - expect) > 1e-12 * std::max(1.0, expect))
            throw std::invalid_argument("params: c0 inconsistent with c*n2");
    }
    return p;
}

double scaled_conversion(const ModelParams& p, const UorfGeometry& g) {
    return p.c0 ? *p.c0 : p.c * g.n2;
}

DensityProfile DensityProfile::checked(std::vector<double> rho_s, std::vector<double> rho_e,
                                       const UorfGeometry& g) {
    DensityProfile p{std::move(rho_s), std::move(rho_e)};
    validate_profile(p, g);
    return p;
}

void validate_profile(const DensityProfile& p, const UorfGeometry& g) {
    const std::size_t want = static_cast<std::size_t>(g.n_star) + 1;
    if (p.rho_s.size() != want || p.rho_e.size() != want)
        throw std::invalid_argument("profile: arrays must have n_star+1 entries");
    for (int n = 0; n <= g.n_star; ++n) {
        const double s = p.rho_s[n], e = p.rho_e[n];
        if (!(s >= 0.0) || !(e >= 0.0) || !(s + e <= 1.0))
            throw std::invalid_argument("profile: density bounds violated at site " + std::to_string(n));
        if ((n < g.n1 || n >= g.stop()) && e != 0.0)
            throw std::invalid_argument("profile: elongating density outside [n1, n1+n2) at site " +
                                        std::to_string(n));
    }
    if (p.rho_s[g.n_star] != 0.0)
        throw std::invalid_argument("profile: ghost site n_star must be empty");
}

DensityProfile to_profile(const StationarySolution& s, const ModelParams& p, const UorfGeometry& g) {
    std::vector<double> rs(g.n_star + 1, 0.0), re(g.n_star + 1, 0.0);
    for (int n = 0; n < g.n1; ++n) rs[n] = s.rho1[n];
    // rho1[n1] is the start-codon total; the split lives in rho2[0], r_elong[0].
    (void)p;
    rs[g.n1] = s.rho2[0];
    re[g.n1] = s.r_elong[0];
    for (int m = 1; m <= g.n2 + g.n3; ++m) rs[g.n1 + m] = s.rho2[m];
    for (int m = 1; m < g.n2; ++m) re[g.n1 + m] = s.r_elong[m];
    return DensityProfile{std::move(rs), std::move(re)};
}

std::string to_string(EngineTag tag) {
    switch (tag) {
        case EngineTag::tasep: return "tasep";
        case EngineTag::deterministic: return "deterministic";
        case EngineTag::limit: return "limit";
    }
    return "?";
}

void validate_curve(const FlowCurve& c) {
    for (std::size_t i = 1; i < c.points.size(); ++i)
        if (!(c.points[i - 1].rho0 < c.points[i].rho0))
            throw std::invalid_argument("flow curve: rho0 values must be strictly increasing");
}

}  // namespace ribotide
