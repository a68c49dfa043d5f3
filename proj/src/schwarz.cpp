#include "hankel/schwarz.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hankel {

namespace {

constexpr double kZeroRadiusCap = 0.95;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Truncated coefficient list of one factor (alpha - z)/(1 - conj(alpha) z):
// alpha + (|alpha|^2 - 1)(z + conj(alpha) z^2 + conj(alpha)^2 z^3 + ...).
std::array<Complex, 4> factor_coeffs(Complex alpha) {
    const Complex bar = std::conj(alpha);
    const double defect = std::norm(alpha) - 1.0;
    std::array<Complex, 4> a{alpha, Complex(defect, 0.0), defect * bar, defect * bar * bar};
    return a;
}

std::array<Complex, 4> truncated_product(const std::array<Complex, 4>& a,
                                         const std::array<Complex, 4>& b) {
    std::array<Complex, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j) out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return out;
}

}  // namespace

SchwarzSample blaschke_coefficients(const BlaschkeSpec& spec) {
    if (!(spec.scale > 0.0 && spec.scale <= 1.0))
        throw std::invalid_argument("Blaschke scale must lie in (0, 1]");
    std::array<Complex, 4> prod{Complex(1.0, 0.0), {}, {}, {}};
    for (Complex zero : spec.zeros) {
        if (!(std::abs(zero) < 1.0))
            throw std::invalid_argument("Blaschke zero must lie strictly inside the unit disk");
        prod = truncated_product(prod, factor_coeffs(zero));
    }
    const Complex lead = spec.scale * std::polar(1.0, spec.rotation);
    SchwarzSample s;
    for (int k = 0; k < 4; ++k) s.c[static_cast<std::size_t>(k)] = lead * prod[static_cast<std::size_t>(k)];
    std::ostringstream os;
    os << "blaschke(zeros=" << spec.zeros.size() << ",scale=" << spec.scale << ")";
    s.provenance = os.str();
    return s;
}

Complex blaschke_eval(const BlaschkeSpec& spec, Complex z) {
    Complex w = spec.scale * std::polar(1.0, spec.rotation) * z;
    for (Complex zero : spec.zeros) w *= (zero - z) / (1.0 - std::conj(zero) * z);
    return w;
}

SchwarzSampler::SchwarzSampler(std::uint64_t seed, SamplerConfig config)
    : config_(config), seed_(seed), state_(seed ^ 0xA3C59AC2ED1090EFULL) {
    if (config_.count < 1) throw std::invalid_argument("sample count must be >= 1");
    if (config_.max_degree < 1 || config_.max_degree > 4)
        throw std::invalid_argument("max_degree must lie in 1..4");
}

double SchwarzSampler::uniform01() {
    return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
}

std::uint64_t SchwarzSampler::derive_seed(std::uint64_t seed, std::uint64_t worker) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (worker + 1));
    return splitmix64(s);
}

SchwarzSample SchwarzSampler::fresh_sample() {
    BlaschkeSpec spec;
    const int zeros = static_cast<int>(splitmix64(state_) % static_cast<std::uint64_t>(config_.max_degree));
    for (int i = 0; i < zeros; ++i) {
        const double r = kZeroRadiusCap * std::sqrt(uniform01());
        const double theta = 2.0 * std::numbers::pi * uniform01();
        spec.zeros.push_back(std::polar(r, theta));
    }
    spec.rotation = 2.0 * std::numbers::pi * uniform01();
    spec.scale = 0.5 + 0.5 * uniform01();
    return blaschke_coefficients(spec);
}

SchwarzSample SchwarzSampler::next() {
    if (!has_next()) throw std::logic_error("sampler exhausted");
    SchwarzSample s;
    if (history_.size() >= 2 && uniform01() < config_.mix_probability) {
        const std::size_t i = static_cast<std::size_t>(splitmix64(state_) % history_.size());
        const std::size_t j = static_cast<std::size_t>(splitmix64(state_) % history_.size());
        const double lambda = uniform01();
        const SchwarzSample& a = history_[i];
        const SchwarzSample& b = history_[j];
        for (int k = 0; k < 4; ++k)
            s.c[static_cast<std::size_t>(k)] =
                lambda * a.c[static_cast<std::size_t>(k)] + (1.0 - lambda) * b.c[static_cast<std::size_t>(k)];
        std::ostringstream os;
        os << "mix(lambda=" << lambda << ")";
        s.provenance = os.str();
    } else {
        s = fresh_sample();
    }
    s.seed = seed_;
    ++emitted_;
    if (history_.size() < 256)
        history_.push_back(s);
    else
        history_[static_cast<std::size_t>(emitted_) % 256] = s;
    return s;
}

std::vector<SchwarzSample> sample_schwarz(std::uint64_t seed, const SamplerConfig& config) {
    SchwarzSampler sampler(seed, config);
    std::vector<SchwarzSample> out;
    out.reserve(static_cast<std::size_t>(config.count));
    while (sampler.has_next()) out.push_back(sampler.next());
    return out;
}

CarlsonResiduals carlson_residuals(const SchwarzSample& s) {
    const double c1sq = std::norm(s.c[0]);
    const double c2abs = std::abs(s.c[1]);
    return {1.0 - c1sq - c2abs, 1.0 - c1sq - std::norm(s.c[1]) - std::abs(s.c[3])};
}

ProkhorovRegion region_membership_exact(const BigRational& mu, const BigRational& nu) {
    const BigRational abs_mu = mu < 0 ? BigRational(-mu) : mu;
    const BigRational half(1, 2);
    if (abs_mu <= half && BigRational(-1) <= nu && nu <= BigRational(1)) return ProkhorovRegion::D1;
    if (half <= abs_mu && abs_mu <= BigRational(2) && nu <= BigRational(1)) {
        const BigRational m1 = abs_mu + 1;
        const BigRational lower = BigRational(4, 27) * m1 * m1 * m1 - m1;
        if (lower <= nu) return ProkhorovRegion::D2;
    }
    return ProkhorovRegion::Outside;
}

ProkhorovRegion region_membership(const ProkhorovParams& p) {
    return region_membership_exact(rational_from_double(p.mu), rational_from_double(p.nu));
}

double prokhorov_margin(const SchwarzSample& s, const ProkhorovParams& p) {
    if (region_membership(p) == ProkhorovRegion::Outside)
        throw std::invalid_argument("(mu, nu) outside D1 and D2: the estimate makes no claim there");
    const Complex c1 = s.c[0], c2 = s.c[1], c3 = s.c[2];
    const Complex value = c3 + p.mu * c1 * c2 + p.nu * c1 * c1 * c1;
    return 1.0 - std::abs(value);
}

std::vector<ProkhorovParams> prokhorov_grid() {
    std::vector<ProkhorovParams> grid;
    for (double mu : {-0.5, -0.25, 0.0, 0.25, 0.5})
        for (double nu : {-1.0, 0.0, 1.0}) grid.push_back({mu, nu});
    // D2 lower boundary at |mu| = 1 is -22/27; -0.8125 is dyadic and inside.
    for (double mu : {-1.0, 1.0}) {
        grid.push_back({mu, 1.0});
        grid.push_back({mu, -0.8125});
    }
    for (double mu : {-1.5, 1.5}) {
        grid.push_back({mu, 1.0});
        grid.push_back({mu, 0.0});
    }
    grid.push_back({-2.0, 1.0});
    grid.push_back({2.0, 1.0});
    grid.push_back({-2.0 / 19.0, 1.0});
    return grid;
}

std::vector<SchwarzSample> fixed_witnesses() {
    std::vector<SchwarzSample> w(4);
    w[0].c = {Complex(1, 0), Complex(), Complex(), Complex()};
    w[0].provenance = "omega=z";
    w[1].c = {Complex(), Complex(1, 0), Complex(), Complex()};
    w[1].provenance = "omega=z^2";
    w[2].c = {Complex(), Complex(), Complex(1, 0), Complex()};
    w[2].provenance = "omega=z^3";
    w[3].c = {Complex(-0.5, 0), Complex(0.75, 0), Complex(0.375, 0), Complex(0.1875, 0)};
    w[3].provenance = "omega=z(z-1/2)/(1-z/2)";
    return w;
}

}  // namespace hankel
