#pragma once

#include "obtusity/distributions.hpp"
#include "obtusity/geometry.hpp"
#include "obtusity/rng.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace obtusity::mc {

inline constexpr long long kChunkSize = 65536;

struct EstimateResult {
    long long n = 0;
    long long hits = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    double ci95_lo = 0.0;
    double ci95_hi = 0.0;
    uint64_t seed = 0;
    std::string target;
};

struct PairedDifference {
    long long n = 0;
    double mean_difference = 0.0;
    double std_error = 0.0;
    uint64_t seed = 0;
    std::string target_a;
    std::string target_b;
};

namespace detail {

inline int resolve_workers(int workers, long long chunks) {
    if (workers <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
    }
    return static_cast<int>(std::min<long long>(workers, std::max<long long>(chunks, 1)));
}

// Runs fn(stream, count) over all chunks and returns the elementwise sums of
// its integer pair. The reduction is over integers, so the result does not
// depend on how chunks are distributed over workers.
template <class ChunkFn>
std::pair<long long, long long> sum_over_chunks(long long n, uint64_t seed, int workers,
                                                ChunkFn&& fn) {
    if (n < 1) throw std::invalid_argument("sample count must be >= 1");
    const long long chunks = (n + kChunkSize - 1) / kChunkSize;
    const int nw = resolve_workers(workers, chunks);
    std::atomic<long long> next{0};
    std::atomic<long long> total_a{0};
    std::atomic<long long> total_b{0};
    auto work = [&]() {
        long long local_a = 0, local_b = 0;
        for (;;) {
            const long long c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunks) break;
            const long long count = std::min<long long>(kChunkSize, n - c * kChunkSize);
            UniformStream stream(chunk_seed(seed, static_cast<uint64_t>(c)));
            auto [a, b] = fn(stream, count);
            local_a += a;
            local_b += b;
        }
        total_a.fetch_add(local_a);
        total_b.fetch_add(local_b);
    };
    if (nw == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nw));
        for (int i = 0; i < nw; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return {total_a.load(), total_b.load()};
}

inline EstimateResult make_estimate(long long n, long long hits, uint64_t seed,
                                    std::string target) {
    EstimateResult r;
    r.n = n;
    r.hits = hits;
    r.seed = seed;
    r.target = std::move(target);
    r.estimate = static_cast<double>(hits) / static_cast<double>(n);
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(n));
    r.ci95_lo = r.estimate - 1.96 * r.std_error;
    r.ci95_hi = r.estimate + 1.96 * r.std_error;
    return r;
}

inline int site_uniforms(const geom::CubeConfiguration& config) {
    int c = 0;
    for (const auto& s : config.sites) c += s.dimension;
    return c;
}

struct BufferRng {
    const double* v;
    size_t i = 0;
    double operator()() { return v[i++]; }
};

}  // namespace detail

// Fraction of n i.i.d. triangles in the body that are obtuse.
inline EstimateResult estimate_body(const geom::Body& body, long long n, uint64_t seed,
                                    int workers = 0) {
    auto [hits, unused] = detail::sum_over_chunks(
        n, seed, workers, [&body](UniformStream& u, long long count) {
            long long h = 0;
            for (long long i = 0; i < count; ++i) {
                geom::Vec3 x = geom::sample_body(body, u);
                geom::Vec3 y = geom::sample_body(body, u);
                geom::Vec3 z = geom::sample_body(body, u);
                auto parts = geom::obtuse_parts(x, y, z);
                h += static_cast<long long>(parts[0] || parts[1] || parts[2]);
            }
            return std::pair<long long, long long>{h, 0};
        });
    (void)unused;
    return detail::make_estimate(n, hits, seed, "eta(" + std::string(geom::body_id(body.kind)) + ")");
}

// Obtusity probability of one configuration; counts only the requested vertex
// when obtuse_vertex (1..3) is given, otherwise the sum over all three. The
// sample stream is identical either way, so the three vertex estimates sum to
// the no-vertex estimate exactly.
inline EstimateResult estimate_configuration(const geom::CubeConfiguration& config,
                                             std::optional<int> obtuse_vertex, long long n,
                                             uint64_t seed, int workers = 0) {
    if (obtuse_vertex && (*obtuse_vertex < 1 || *obtuse_vertex > 3))
        throw std::invalid_argument("estimate_configuration: obtuse_vertex must be 1..3");
    const int want = obtuse_vertex ? *obtuse_vertex - 1 : -1;
    auto [hits, unused] = detail::sum_over_chunks(
        n, seed, workers, [&config, want](UniformStream& u, long long count) {
            long long h = 0;
            for (long long i = 0; i < count; ++i) {
                geom::Vec3 x = geom::sample_site(config.sites[0], u);
                geom::Vec3 y = geom::sample_site(config.sites[1], u);
                geom::Vec3 z = geom::sample_site(config.sites[2], u);
                auto parts = geom::obtuse_parts(x, y, z);
                if (want >= 0)
                    h += static_cast<long long>(parts[static_cast<size_t>(want)]);
                else
                    h += static_cast<long long>(parts[0]) + static_cast<long long>(parts[1]) +
                         static_cast<long long>(parts[2]);
            }
            return std::pair<long long, long long>{h, 0};
        });
    (void)unused;
    std::string target = "eta_" + config.label;
    if (obtuse_vertex) target += " vertex " + std::to_string(*obtuse_vertex);
    return detail::make_estimate(n, hits, seed, std::move(target));
}

struct SignedLaw {
    dist::Law law = dist::Law::Uniform01;
    int sign = +1;
};

// Parses "Lambda+Lambda-Omega" or "-Omega+U" into signed terms.
inline std::vector<SignedLaw> parse_signed_laws(std::string_view expr) {
    std::vector<SignedLaw> terms;
    int sign = +1;
    std::string name;
    auto flush = [&]() {
        if (name.empty()) throw std::invalid_argument("parse_signed_laws: empty term");
        terms.push_back({dist::parse_law(name), sign});
        name.clear();
    };
    for (char c : expr) {
        if (c == '+' || c == '-') {
            if (!name.empty())
                flush();
            else if (!terms.empty())
                throw std::invalid_argument("parse_signed_laws: dangling sign");
            sign = (c == '+') ? +1 : -1;
        } else if (c != ' ') {
            name.push_back(c);
        }
    }
    flush();
    return terms;
}

inline std::string signed_laws_name(const std::vector<SignedLaw>& terms) {
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].sign < 0)
            s += '-';
        else if (i > 0)
            s += '+';
        s += std::string(dist::law_name(terms[i].law));
    }
    return s;
}

// P(sum of signed auxiliary variables < 0) by sampling the constructive
// definitions of the auxiliary laws.
inline EstimateResult estimate_auxiliary_event(const std::vector<SignedLaw>& terms, long long n,
                                               uint64_t seed, int workers = 0) {
    if (terms.empty()) throw std::invalid_argument("estimate_auxiliary_event: no terms");
    std::vector<dist::AuxiliaryDistribution> dists;
    dists.reserve(terms.size());
    for (const auto& t : terms) dists.push_back(dist::auxiliary(t.law));
    auto [hits, unused] = detail::sum_over_chunks(
        n, seed, workers, [&terms, &dists](UniformStream& u, long long count) {
            long long h = 0;
            for (long long i = 0; i < count; ++i) {
                double s = 0.0;
                for (size_t k = 0; k < terms.size(); ++k)
                    s += terms[k].sign * dist::sample(dists[k], u);
                h += static_cast<long long>(s < 0.0);
            }
            return std::pair<long long, long long>{h, 0};
        });
    (void)unused;
    return detail::make_estimate(n, hits, seed, "P(" + signed_laws_name(terms) + "<0)");
}

// Shared-stream difference of two per-vertex configuration indicators. Both
// triples are built from the same uniform block, so distributionally equal
// pairs cancel sample by sample up to the genuinely different geometry.
inline PairedDifference paired_configurations(const geom::CubeConfiguration& config_a,
                                              int vertex_a,
                                              const geom::CubeConfiguration& config_b,
                                              int vertex_b, long long n, uint64_t seed,
                                              int workers = 0) {
    if (vertex_a < 1 || vertex_a > 3 || vertex_b < 1 || vertex_b > 3)
        throw std::invalid_argument("paired_configurations: vertex must be 1..3");
    const int na = detail::site_uniforms(config_a);
    const int nb = detail::site_uniforms(config_b);
    const int block = std::max(na, nb);
    auto [sum_d, sum_d2] = detail::sum_over_chunks(
        n, seed, workers,
        [&config_a, &config_b, vertex_a, vertex_b, block](UniformStream& u, long long count) {
            long long sd = 0, sd2 = 0;
            std::array<double, 16> buf{};
            for (long long i = 0; i < count; ++i) {
                for (int k = 0; k < block; ++k) buf[static_cast<size_t>(k)] = u();
                detail::BufferRng ra{buf.data()};
                geom::Vec3 xa = geom::sample_site(config_a.sites[0], ra);
                geom::Vec3 ya = geom::sample_site(config_a.sites[1], ra);
                geom::Vec3 za = geom::sample_site(config_a.sites[2], ra);
                detail::BufferRng rb{buf.data()};
                geom::Vec3 xb = geom::sample_site(config_b.sites[0], rb);
                geom::Vec3 yb = geom::sample_site(config_b.sites[1], rb);
                geom::Vec3 zb = geom::sample_site(config_b.sites[2], rb);
                int ia = geom::obtuse_parts(xa, ya, za)[static_cast<size_t>(vertex_a - 1)];
                int ib = geom::obtuse_parts(xb, yb, zb)[static_cast<size_t>(vertex_b - 1)];
                int d = ia - ib;
                sd += d;
                sd2 += d * d;
            }
            return std::pair<long long, long long>{sd, sd2};
        });
    PairedDifference r;
    r.n = n;
    r.seed = seed;
    r.target_a = config_a.label + " vertex " + std::to_string(vertex_a);
    r.target_b = config_b.label + " vertex " + std::to_string(vertex_b);
    r.mean_difference = static_cast<double>(sum_d) / static_cast<double>(n);
    double m2 = static_cast<double>(sum_d2) / static_cast<double>(n);
    double var = std::max(m2 - r.mean_difference * r.mean_difference, 0.0);
    r.std_error = std::sqrt(var / static_cast<double>(n));
    return r;
}

}  // namespace obtusity::mc
