// SPDX-License-Identifier: Apache-2.0
//
// ballcover: explicit coverings of finite-dimensional unit balls
// Copyright (C) 2026 The ballcover authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "ballcover/bounds.hpp"
#include "ballcover/coverings.hpp"
#include "ballcover/frames.hpp"
#include "ballcover/selftest.hpp"
#include "ballcover/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace ballcover;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr std::size_t kSamples = 10000;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& s) {
        if (!detail.empty()) detail += "; ";
        detail += s;
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        o.require(false, "runtime " + num(secs) + " s exceeds " + num(limit_seconds) + " s");
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d %-28s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
    std::fflush(stdout);
}

// Ball samples then sphere samples, 10^4 each.
std::array<PointSet, 2> sample_grid(std::size_t d, std::uint64_t seed) {
    const LpSpace s(d, 2.0);
    return {sample_ball(s, kSamples, split_seed(seed, 0)), sample_sphere(s, kSamples, split_seed(seed, 1))};
}

long double sq_dist(std::span<const double> a, std::span<const double> b) {
    long double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const long double t = static_cast<long double>(a[i]) - b[i];
        s += t * t;
    }
    return s;
}

long double min_sq_dist(const PointSet& centers, std::span<const double> x) {
    long double best = INFINITY;
    for (std::size_t j = 0; j < centers.size(); ++j) best = std::min(best, sq_dist(centers[j], x));
    return best;
}

// Columns of H packed into bit rows; <c_i, c_j> = n - 2 popcount(c_i xor c_j).
bool hadamard_gram_exact(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> bits(n * words, 0);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            if (h(r, c) < 0) bits[c * words + r / 64] |= std::uint64_t{1} << (r % 64);
        }
    }
    const auto& k = simd::active();
    const auto sn = static_cast<std::int64_t>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const auto pc = static_cast<std::int64_t>(k.xor_popcount(&bits[i * words], &bits[j * words], words));
            if (sn - 2 * pc != (i == j ? sn : 0)) return false;
        }
    }
    return true;
}

Outcome hadamard_exactness() {
    Outcome o;
    for (unsigned k = 0; k <= 12; ++k) o.require(hadamard_gram_exact(sylvester(k)), "H^T H != n I at k=" + std::to_string(k));
    const HadamardMatrix h = kronecker(sylvester(1), sylvester(2));
    std::vector<int> e(h.entries().begin(), h.entries().end());
    o.require(verify_hadamard(h.order(), e), "kronecker(H2, H4) rejected");
    if (o.ok) o.note("k=0..12 exact, H2 (x) H4 ok");
    return o;
}

Outcome etf_gram() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    std::normal_distribution<double> g;
    double worst_gram = 0;
    double worst_res = 0;
    for (std::size_t m : {2, 4, 8, 16, 32, 64, 128}) {
        const TightFrame f = etf_from_hadamard(hadamard_of_order(m));
        const std::vector<double> gm = gram_matrix(f);
        const double off = -1.0 / static_cast<double>(m - 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j) worst_gram = std::max(worst_gram, std::fabs(gm[i * m + j] - off));
            }
        }
        for (int t = 0; t < 100; ++t) {
            std::vector<double> x(f.dim);
            for (double& v : x) v = g(rng);
            worst_res = std::max(worst_res, verify_frame_identities(f, x).worst());
        }
    }
    o.require(worst_gram <= 1e-12, "off-diagonal error " + num(worst_gram));
    o.require(worst_res <= 1e-10, "frame residual " + num(worst_res));
    o.note("gram err " + num(worst_gram) + ", residual " + num(worst_res));
    return o;
}

Outcome simplex_dichotomy_check() {
    Outcome o;
    std::size_t violations = 0;
    for (std::size_t d : {1, 2, 4, 8, 16, 32, 64}) {
        const PointSet centers = simplex_cover_unit(d).covering.centers;
        const double a = 1.0 / (2.0 * static_cast<double>(d));
        const long double bound = 1.0L - 1.0L / (4.0L * d) + 1e-12L;
        for (const PointSet& pts : sample_grid(d, split_seed(kSeed, d))) {
            for (std::size_t i = 0; i < pts.size(); ++i) {
                bool fine = sq_dist(pts[i], centers[d]) <= bound;
                for (std::size_t k = 0; k < d && !fine; ++k) {
                    fine = pts[i][k] > a / 2 && sq_dist(pts[i], centers[k]) < 1.0L;
                }
                fine = fine && simplex_dichotomy(pts[i]).holds;
                violations += !fine;
            }
        }
    }
    o.require(violations == 0, std::to_string(violations) + " samples violate the dichotomy");
    if (o.ok) o.note("7 dims x 2e4 samples");
    return o;
}

Outcome shrunk_margin() {
    Outcome o;
    long double worst_excess = -INFINITY;
    double worst_adv = -INFINITY;
    for (std::size_t d : {2, 4, 8, 16, 32, 64}) {
        const BallCovering cov = simplex_cover_shrunk(d).covering;
        const long double a = 2.0L / (5.0L * d + 1.0L);
        const long double bound = 1.0L - a * a;
        for (const PointSet& pts : sample_grid(d, split_seed(kSeed, 100 + d))) {
            for (std::size_t i = 0; i < pts.size(); ++i) worst_excess = std::max(worst_excess, min_sq_dist(cov.centers, pts[i]) - bound);
        }
        const AdversarialResult adv = adversarial_search(cov, 50, 200, split_seed(kSeed, 200 + d));
        worst_adv = std::max(worst_adv, static_cast<double>(static_cast<long double>(adv.min_distance) * adv.min_distance - bound));
    }
    o.require(worst_excess <= 1e-12L, "sample excess " + num(static_cast<double>(worst_excess)));
    o.require(worst_adv <= 1e-9, "adversarial excess " + num(worst_adv));
    o.note("max excess: samples " + num(static_cast<double>(worst_excess)) + ", adversarial " + num(worst_adv));
    return o;
}

Outcome etf_cover_check() {
    Outcome o;
    long double worst = -INFINITY;
    for (std::size_t d : {1, 3, 7, 15, 31}) {
        const TightFrame f = etf_from_hadamard(hadamard_of_order(d + 1));
        PointSet centers(d);
        for (std::size_t j = 0; j < f.vectors.size(); ++j) {
            std::vector<double> c(f.vectors[j].begin(), f.vectors[j].end());
            for (double& v : c) v /= 8.0 * static_cast<double>(d);
            centers.push_back(c);
        }
        const long double bound = 1.0L - 1.0L / (64.0L * d * d);
        for (const PointSet& pts : sample_grid(d, split_seed(kSeed, 300 + d))) {
            for (std::size_t i = 0; i < pts.size(); ++i) worst = std::max(worst, min_sq_dist(centers, pts[i]) - bound);
        }
        // The library construction must agree with the frame-derived centers.
        o.require(etf_cover(d).covering.centers.size() == centers.size(), "center count d=" + std::to_string(d));
    }
    o.require(worst <= 1e-12L, "excess " + num(static_cast<double>(worst)));
    o.note("max excess " + num(static_cast<double>(worst)));
    return o;
}

Outcome l2_pipeline(std::size_t d, double mu, std::uint64_t seed) {
    Outcome o;
    const LpSpace s(d, 2.0);
    const Dictionary greedy = greedy_maximal_dictionary(s, mu, split_seed(seed, 0));
    const MaximalityResult m = certify_maximality(greedy, mu, 20000, split_seed(seed, 1));
    o.require(m.passed, "maximality not certified");
    o.require(coherence(m.dictionary) <= mu, "coherence above mu");
    const BallCovering cov = dictionary_cover_l2(m.dictionary, mu);
    o.require(std::fabs(cov.radius - std::sqrt(1.0 - mu * mu)) <= 1e-15, "radius");
    const CoverageReport rep = certify_sampling(cov, kSamples, kSamples, split_seed(seed, 2));
    o.require(rep.passed, "sampling margin " + num(rep.worst_margin));
    const AdversarialResult adv = adversarial_search(cov, 50, 200, split_seed(seed, 3));
    o.require(margin_passes(cov, adv.margin), "adversarial margin " + num(adv.margin));
    o.note("d=" + std::to_string(d) + " N=" + std::to_string(m.dictionary.size()) + " aug=" +
           std::to_string(m.augmentations) + " margins " + num(rep.worst_margin) + "/" + num(adv.margin));
    return o;
}

Outcome banach_pipeline() {
    Outcome o;
    const LpSpace s(8, 4.0);
    const double mu = 0.5;
    const SmoothnessMajorant w = smoothness_majorant_for(s);
    o.require(w.gamma == 2.0 && w.power == 2.0, "majorant is not 2u^2");
    const double a = solve_step_size(w, mu);
    o.require(std::fabs(a - 1.0 / 64) <= 1e-15, "a = " + num(a));
    const Dictionary greedy = greedy_maximal_dictionary(s, mu, split_seed(kSeed, 70));
    const MaximalityResult m = certify_maximality(greedy, mu, 20000, split_seed(kSeed, 71));
    o.require(m.passed, std::string("maximality not certified") +
                            (m.unrepairable ? " (counterexample not two-sided admissible)" : ""));
    const BallCovering cov = dictionary_cover_banach(m.dictionary, mu, w);
    o.require(std::fabs(cov.radius - (1.0 - 1.0 / 256)) <= 1e-15, "radius " + num(cov.radius));
    o.require(cov.radius >= 0.5 + a, "radius below 1/2 + a");
    const CoverageReport rep = certify_sampling(cov, kSamples, kSamples, split_seed(kSeed, 72));
    o.require(rep.passed, "sampling margin " + num(rep.worst_margin));
    const AdversarialResult adv = adversarial_search(cov, 50, 200, split_seed(kSeed, 73));
    o.require(margin_passes(cov, adv.margin), "adversarial margin " + num(adv.margin));
    o.note("N=" + std::to_string(m.dictionary.size()) + " aug=" + std::to_string(m.augmentations) +
           " coverage margins " + num(rep.worst_margin) + "/" + num(adv.margin));
    return o;
}

Outcome examples_5_6() {
    Outcome o;
    for (std::size_t d : {1, 4, 16, 64}) {
        const BallCovering cov = axis_cover(d).covering;
        const double dd = static_cast<double>(d);
        const double a = 1.0 / (4.0 * std::sqrt(dd));
        const double r = std::max(0.5 + a, std::sqrt(1.0 - 3.0 / (16.0 * dd)));
        o.require(std::fabs(cov.radius - r) <= 1e-15, "axis radius d=" + std::to_string(d));
        const CoverageReport rep = certify_sampling(cov, kSamples, kSamples, split_seed(kSeed, 400 + d));
        o.require(rep.passed, "axis d=" + std::to_string(d) + " margin " + num(rep.worst_margin));
    }
    const LpSpace l4(4, 4.0);
    const BallCovering basis = basis_cover(l4, 1.0, smoothness_majorant_for(l4));
    o.require(std::fabs(basis.radius - (1.0 - 1.0 / 1024)) <= 1e-15, "basis radius " + num(basis.radius));
    const CoverageReport rb = certify_sampling(basis, kSamples, kSamples, split_seed(kSeed, 500));
    o.require(rb.passed, "basis margin " + num(rb.worst_margin));

    const BallCovering a2 = axis_cover(2).covering;
    const BallCovering it = iterate_cover(a2, 2);
    o.require(it.size() == 16, "iterated count " + std::to_string(it.size()));
    o.require(it.radius == a2.radius * a2.radius, "iterated radius");
    const CoverageReport ri = certify_sampling(it, kSamples, kSamples, split_seed(kSeed, 501));
    o.require(ri.passed, "iterated margin " + num(ri.worst_margin));
    if (o.ok) o.note("axis, basis and iterated covers pass");
    return o;
}

Outcome selector_property() {
    Outcome o;
    std::mt19937_64 rng(split_seed(kSeed, 9));
    std::normal_distribution<double> g;
    std::size_t bad = 0;
    for (std::size_t n = 2; n <= 50; ++n) {
        std::vector<double> y(n);
        for (int t = 0; t < 10000; ++t) {
            long double s = 0;
            for (double& v : y) s += (v = g(rng));
            for (double& v : y) v -= static_cast<double>(s / n);
            const std::size_t k = zero_sum_select(y);
            long double nn = 0;
            for (double v : y) nn += static_cast<long double>(v) * v;
            bad += !(y[k] >= static_cast<double>(std::sqrt(nn) / (2.0L * (n - 1))));
        }
    }
    o.require(bad == 0, std::to_string(bad) + " selector violations");
    if (o.ok) o.note("490000 draws");
    return o;
}

Outcome witness_check() {
    Outcome o;
    double worst = INFINITY;
    double worst_hull = INFINITY;
    std::uint64_t stream = 0;
    for (std::size_t d : {2, 4, 8}) {
        for (double p : {2.0, 3.0, 1.5}) {
            const LpSpace s(d, p);
            for (int t = 0; t < 200; ++t) {
                const PointSet c = sample_ball(s, d, split_seed(kSeed ^ 0x5a5a, stream++));
                const WitnessResult w = uncovered_witness(s, c);
                o.require(std::fabs(norm(s, w.z) - 1.0) <= 1e-12, "witness not unit");
                for (std::size_t j = 0; j < d; ++j) worst = std::min(worst, distance(s, w.z, c[j]));
                if (p == 2.0) {
                    if (!w.hull_distance) {
                        o.require(false, "missing hull distance");
                    } else {
                        worst_hull = std::min(worst_hull, *w.hull_distance);
                    }
                }
            }
        }
    }
    o.require(worst >= 1.0 - 1e-9, "min distance " + num(worst));
    o.require(worst_hull >= 1.0 - 1e-9, "hull distance " + num(worst_hull));
    o.note("min distance " + num(worst) + ", hull " + num(worst_hull));
    return o;
}

Outcome linf_check() {
    Outcome o;
    std::mt19937_64 rng(split_seed(kSeed, 11));
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (std::size_t d = 1; d <= 12; ++d) {
        const LinfVertexReport r = linf_vertex_check(d, kSamples, 100, split_seed(kSeed, 600 + d));
        o.require(r.covering_ok && r.worst_margin > 0.0, "cover d=" + std::to_string(d));
        o.require(r.lower_bound_ok, "vertex separation d=" + std::to_string(d));
        std::vector<double> c(d);
        for (int t = 0; t < 100; ++t) {
            for (double& v : c) v = u(rng);
            int inside = 0;
            for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
                double m = 0;
                for (std::size_t k = 0; k < d; ++k) m = std::max(m, std::fabs(((mask >> k) & 1U ? 1.0 : -1.0) - c[k]));
                inside += m < 1.0;
            }
            o.require(inside <= 1, "two vertices in one ball d=" + std::to_string(d));
        }
    }
    if (o.ok) o.note("d=1..12");
    return o;
}

Outcome bounds_coherence() {
    Outcome o;
    for (int i = 1; i <= 50; ++i) {
        for (int j = 1; j <= 50; ++j) {
            const VolumetricBounds v = volumetric_bounds(static_cast<std::size_t>(i), j / 50.0);
            o.require(v.log_lower <= v.log_upper, "volumetric order at d=" + std::to_string(i));
        }
    }
    struct Point {
        long double gamma, q, mu;
    };
    std::vector<Point> grid;
    for (long double p : {1.5L, 2.0L, 4.0L, 8.0L}) {
        for (long double mu : {0.05L, 0.25L, 0.5L}) grid.push_back({p / 2, 2.0L, mu});
    }
    for (long double p : {1.5L, 2.0L}) {
        for (long double mu : {0.01L, 0.1L, 0.3L, 1.0L}) grid.push_back({1 / p, p, mu});
    }
    double worst = 0;
    for (const Point& g : grid) {
        long double want = std::pow(g.mu / (g.gamma * std::pow(2.0L, g.q + 2)), 1 / (g.q - 1));
        want = std::min(want, 1.0L);
        if (g.q == 2.0L) {
            // a = mu / (8p) with gamma = p/2
            const long double ex2 = g.mu / (16 * g.gamma);
            o.require(std::fabs(ex2 - want) <= 1e-15L * want, "closed forms disagree");
        }
        const double a = solve_step_size(SmoothnessMajorant(static_cast<double>(g.gamma), static_cast<double>(g.q)),
                                         static_cast<double>(g.mu));
        worst = std::max(worst, static_cast<double>(std::fabs(a - want) / want));
    }
    o.require(grid.size() == 20, "grid size");
    o.require(worst <= 1e-10, "relative error " + num(worst));
    o.note("step size rel err " + num(worst));
    return o;
}

std::string run_cli_selftest(const std::string& cli) {
    const std::string cmd = cli + " selftest --seed " + std::to_string(kSeed) + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + cli);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int st = pclose(pipe);
    if (st != 0) throw std::runtime_error("selftest exited with status " + std::to_string(st));
    return out;
}

Outcome reproducibility() {
    Outcome o;
    const std::string a = run_cli_selftest(BALLCOVER_CLI_PATH);
    const std::string b = run_cli_selftest(BALLCOVER_CLI_PATH);
    o.require(!a.empty(), "empty report");
    o.require(a == b, "reports differ");
    o.require(run_selftest(kSeed).text == run_selftest(kSeed).text, "in-process reports differ");
    o.note(std::to_string(a.size()) + " bytes identical");
    return o;
}

}  // namespace

int main() {
    std::printf("ballcover acceptance (kernels: %s)\n", std::string(simd::isa_name(simd::active().isa)).c_str());
    criterion(1, "hadamard exactness", 5, hadamard_exactness);
    criterion(2, "etf gram", 10, etf_gram);
    criterion(3, "simplex dichotomy", 60, simplex_dichotomy_check);
    criterion(4, "shrunk simplex margin", 0, shrunk_margin);
    criterion(5, "etf cover", 0, etf_cover_check);
    criterion(6, "l2 dictionary pipeline d=8", 120, [] { return l2_pipeline(8, 0.4, kSeed); });
    criterion(6, "l2 dictionary pipeline d=16", 120, [] { return l2_pipeline(16, 0.3, kSeed + 1); });
    criterion(7, "l4 dictionary pipeline", 0, banach_pipeline);
    criterion(8, "axis, basis, iteration", 0, examples_5_6);
    criterion(9, "zero-sum selector", 0, selector_property);
    criterion(10, "uncovered witness", 0, witness_check);
    criterion(11, "l_inf vertices", 0, linf_check);
    criterion(12, "bounds coherence", 0, bounds_coherence);
    criterion(13, "selftest reproducibility", 0, reproducibility);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
