#include "snlb/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "snlb/grid_io.hpp"

namespace snlb {

namespace {

GridFunction from_formula(const GridSpec& spec, auto&& fn) {
    std::vector<double> v(spec.total());
    for (std::size_t i3 = 0; i3 < spec.size[2]; ++i3)
        for (std::size_t i2 = 0; i2 < spec.size[1]; ++i2)
            for (std::size_t i1 = 0; i1 < spec.size[0]; ++i1)
                v[spec.flat(i1, i2, i3)] =
                    fn(spec.coord(0, i1), spec.coord(1, i2), spec.coord(2, i3));
    return GridFunction(spec, v);
}

}  // namespace

GridFunction make_mode(const GridSpec& spec, const std::array<long long, 3>& k, double phase) {
    const double w = 2.0 * std::numbers::pi / spec.length;
    for (int a = 0; a < spec.dim; ++a)
        if (std::llabs(k[a]) >= static_cast<long long>(spec.size[a]) / 2)
            throw std::invalid_argument("make_mode: mode at or above Nyquist");
    return from_formula(spec, [&](double x, double y, double z) {
        return std::cos(w * (k[0] * x + k[1] * y + k[2] * z) + phase);
    });
}

GridFunction make_random_band_limited(const GridSpec& spec, long long max_mode, std::uint64_t seed) {
    Rng rng(seed);
    GridFunction f(spec, FieldTag::Real);
    // random cosine modes with 1/(1+|k|) amplitudes; mean zero
    const double w = 2.0 * std::numbers::pi / spec.length;
    std::vector<std::array<long long, 3>> modes;
    for (long long k3 = (spec.dim > 2 ? -max_mode : 0); k3 <= (spec.dim > 2 ? max_mode : 0); ++k3)
        for (long long k2 = (spec.dim > 1 ? -max_mode : 0); k2 <= (spec.dim > 1 ? max_mode : 0); ++k2)
            for (long long k1 = -max_mode; k1 <= max_mode; ++k1) {
                if (k1 == 0 && k2 == 0 && k3 == 0) continue;
                if (k3 < 0 || (k3 == 0 && k2 < 0) || (k3 == 0 && k2 == 0 && k1 < 0)) continue;
                modes.push_back({k1, k2, k3});
            }
    std::vector<double> v(spec.total(), 0.0);
    for (const auto& k : modes) {
        const double norm = std::sqrt(static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]));
        const double amp = rng.symmetric() / (1.0 + norm);
        const double ph = 2.0 * std::numbers::pi * rng.uniform();
        for (std::size_t i3 = 0; i3 < spec.size[2]; ++i3)
            for (std::size_t i2 = 0; i2 < spec.size[1]; ++i2)
                for (std::size_t i1 = 0; i1 < spec.size[0]; ++i1)
                    v[spec.flat(i1, i2, i3)] +=
                        amp * std::cos(w * (k[0] * spec.coord(0, i1) + k[1] * spec.coord(1, i2) +
                                            k[2] * spec.coord(2, i3)) +
                                       ph);
    }
    return GridFunction(spec, v);
}

GridFunction make_smoothed_step(const GridSpec& spec, double delta) {
    return from_formula(spec, [&](double x, double, double) {
        return std::tanh(std::sin(2.0 * std::numbers::pi * x / spec.length) / delta);
    });
}

GridFunction make_ramp(const GridSpec& spec, int modes) {
    // band-limited triangular profile rising 0 -> 1 over half the box
    return from_formula(spec, [&](double x, double, double) {
        double v = 0.5;
        for (int k = 1; k <= modes; k += 2)
            v -= (4.0 / (std::numbers::pi * std::numbers::pi)) *
                 std::cos(2.0 * std::numbers::pi * k * x / spec.length) /
                 static_cast<double>(k * k);
        return v;
    });
}

GridFunction make_log_bump(const GridSpec& spec, double delta) {
    return from_formula(spec, [&](double x, double y, double z) {
        double s2 = 0.0;
        const double w = std::numbers::pi / spec.length;
        s2 += std::sin(w * x) * std::sin(w * x);
        if (spec.dim > 1) s2 += std::sin(w * y) * std::sin(w * y);
        if (spec.dim > 2) s2 += std::sin(w * z) * std::sin(w * z);
        return -0.5 * std::log(s2 + delta * delta);
    });
}

GridFunction make_weierstrass(const GridSpec& spec, double a, long long b, int terms) {
    long long top = 1;
    for (int k = 0; k < terms; ++k) top *= b;
    if (top >= static_cast<long long>(spec.size[0]) / 2)
        throw std::invalid_argument("make_weierstrass: highest mode at or above Nyquist");
    return from_formula(spec, [&](double x, double, double) {
        double v = 0.0;
        double amp = 1.0;
        double freq = 2.0 * std::numbers::pi / spec.length;
        for (int k = 0; k <= terms; ++k) {
            v += amp * std::cos(freq * x);
            amp *= a;
            freq *= static_cast<double>(b);
        }
        return v;
    });
}

CorpusEntry make_corpus_entry(const std::string& name, const GridSpec& spec, std::uint64_t seed) {
    auto starts_with = [&](const char* prefix) { return name.rfind(prefix, 0) == 0; };
    if (starts_with("mode:")) {
        const long long k = std::stoll(name.substr(5));
        std::array<long long, 3> kv = {k, 0, 0};
        if (spec.dim > 1) kv[1] = std::max<long long>(1, k / 2);
        return {name, make_mode(spec, kv)};
    }
    if (starts_with("random:"))
        return {name, make_random_band_limited(spec, std::stoll(name.substr(7)), seed)};
    if (name == "step") return {name, make_smoothed_step(spec)};
    if (name == "ramp") return {name, make_ramp(spec)};
    if (name == "logbump") return {name, make_log_bump(spec)};
    if (starts_with("weier:"))
        return {name, make_weierstrass(spec, 0.5, 2, std::stoi(name.substr(6)))};
    if (starts_with("file:")) return {name, read_raw(name.substr(5))};
    throw std::invalid_argument("make_corpus_entry: unknown corpus name " + name);
}

std::vector<CorpusEntry> builtin_corpus(const GridSpec& spec, std::uint64_t seed) {
    std::vector<std::string> names;
    if (spec.dim == 1)
        names = {"mode:1", "mode:4", "mode:16", "random:8", "random:32",
                 "step",   "ramp",   "logbump", "weier:6"};
    else
        names = {"mode:2", "mode:8", "random:6", "step", "logbump"};
    std::vector<CorpusEntry> out;
    std::uint64_t s = seed;
    for (const std::string& n : names) out.push_back(make_corpus_entry(n, spec, s++));
    return out;
}

}  // namespace snlb
