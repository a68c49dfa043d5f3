#pragma once

#include "hankel/multipoly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hankel {

/// Finite Blaschke product omega(z) = scale * e^{i rotation} * z *
/// prod_j (zero_j - z)/(1 - conj(zero_j) z). The leading z factor keeps
/// omega(0) = 0; every zero must lie strictly inside the unit disk.
struct BlaschkeSpec {
    double rotation = 0.0;
    std::vector<Complex> zeros;
    double scale = 1.0;
};

/// One admissible Schwarz coefficient tuple (c1..c4) with provenance.
struct SchwarzSample {
    std::array<Complex, 4> c{};
    std::string provenance;
    std::uint64_t seed = 0;
};

struct ProkhorovParams {
    double mu = 0.0;
    double nu = 0.0;
};

enum class ProkhorovRegion { D1, D2, Outside };

/// First four Taylor coefficients of the Blaschke product.
SchwarzSample blaschke_coefficients(const BlaschkeSpec& spec);

/// omega(z) evaluated directly from the product form (numerical oracle).
Complex blaschke_eval(const BlaschkeSpec& spec, Complex z);

struct SamplerConfig {
    int count = 100000;
    int max_degree = 4;
    double mix_probability = 0.15;
};

/// Deterministic stream of admissible samples for a fixed seed: Blaschke
/// products with zeros uniform in the disk of radius 0.95, rotations
/// uniform, scales uniform in [0.5, 1], plus convex mixes of earlier
/// samples with the given probability.
class SchwarzSampler {
public:
    SchwarzSampler(std::uint64_t seed, SamplerConfig config);

    bool has_next() const { return emitted_ < config_.count; }
    SchwarzSample next();

    /// Seed for an independent worker stream (worker-index derivation).
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t worker);

private:
    SamplerConfig config_;
    std::uint64_t seed_;
    std::uint64_t state_;
    int emitted_ = 0;
    std::vector<SchwarzSample> history_;

    double uniform01();
    SchwarzSample fresh_sample();
};

std::vector<SchwarzSample> sample_schwarz(std::uint64_t seed, const SamplerConfig& config);

/// Carlson residuals r2 = 1 - |c1|^2 - |c2| and
/// r4 = 1 - |c1|^2 - |c2|^2 - |c4|; nonnegative for true Schwarz tuples.
struct CarlsonResiduals {
    double r2;
    double r4;
};
CarlsonResiduals carlson_residuals(const SchwarzSample& s);

/// Exact membership test for the (mu, nu) parameter regions of the
/// |c3 + mu c1 c2 + nu c1^3| <= 1 estimate. D1 takes precedence on the
/// shared boundary |mu| = 1/2.
ProkhorovRegion region_membership(const ProkhorovParams& p);
ProkhorovRegion region_membership_exact(const BigRational& mu, const BigRational& nu);

/// 1 - |c3 + mu c1 c2 + nu c1^3|; requires (mu, nu) inside D1 or D2.
double prokhorov_margin(const SchwarzSample& s, const ProkhorovParams& p);

/// Fixed admissible (mu, nu) grid used by the lemma property suite;
/// includes (-2, 1) and (-2/19, 1).
std::vector<ProkhorovParams> prokhorov_grid();

/// Exact monomial witnesses omega = z, z^2, z^3 and the rational Blaschke
/// witness omega = z (z - 1/2)/(1 - z/2).
std::vector<SchwarzSample> fixed_witnesses();

}  // namespace hankel
