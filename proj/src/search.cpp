#include "uncert/search.hpp"

#include "uncert/constructions.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace uncert {

namespace {

constexpr long kMinorEnumerationBudget = 1'000'000;
constexpr int kCoefficientRetries = 32;
constexpr Eigen::Index kExhaustiveDimCap = 12;
constexpr Eigen::Index kExhaustiveSupportCap = 6;

struct Candidate {
    long product;
    std::vector<Eigen::Index> support; // exact-policy support of x, sorted
    CVec x;
    long index;
};

// Smallest product wins; ties go to the lexicographically smallest support,
// then to the earliest candidate, so parallel evaluation reduces the same way.
bool better(const Candidate& a, const Candidate& b) {
    if (a.product != b.product) return a.product < b.product;
    if (a.support != b.support) return a.support < b.support;
    return a.index < b.index;
}

std::vector<Eigen::Index> exact_support(const CVec& x) {
    std::vector<Eigen::Index> s;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) > 0.0) s.push_back(i);
    }
    return s;
}

std::mt19937_64 candidate_rng(unsigned long long seed, long index) {
    std::seed_seq seq{static_cast<unsigned long long>(seed),
                      static_cast<unsigned long long>(index) + 0x9e3779b97f4a7c15ull};
    return std::mt19937_64(seq);
}

bool next_combination(std::vector<Eigen::Index>& c, Eigen::Index n) {
    const auto k = static_cast<Eigen::Index>(c.size());
    Eigen::Index i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<size_t>(i)];
    for (Eigen::Index j = i + 1; j < k; ++j) {
        c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
    return true;
}

std::vector<std::vector<Eigen::Index>> all_subsets(Eigen::Index n, Eigen::Index k) {
    std::vector<std::vector<Eigen::Index>> out;
    std::vector<Eigen::Index> c(static_cast<size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
    do {
        out.push_back(c);
    } while (next_combination(c, n));
    return out;
}

double binomial(Eigen::Index n, Eigen::Index k) {
    double r = 1.0;
    for (Eigen::Index i = 0; i < k; ++i) {
        r *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return r;
}

unsigned effective_threads(unsigned max_threads, long candidates) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned t = max_threads == 0 ? hw : std::min(max_threads, hw);
    return static_cast<unsigned>(
        std::clamp<long>(static_cast<long>(t), 1, std::max<long>(1, candidates)));
}

} // namespace

const char* strategy_name(SearchStrategy s) {
    switch (s) {
        case SearchStrategy::combs: return "combs";
        case SearchStrategy::exhaustive_supports: return "exhaustive_supports";
        case SearchStrategy::random_restarts: return "random_restarts";
    }
    return "?";
}

bool is_prime(Eigen::Index n) {
    if (n < 2) return false;
    for (Eigen::Index f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

SearchOutcome min_uncertainty_product(const FramePair& f_pair, const FramePair& g_pair,
                                      SearchStrategy strategy, long budget,
                                      unsigned long long seed, const SupportPolicy& policy,
                                      unsigned max_threads) {
    if (budget < 1) throw InputError("search budget must be >= 1");
    if (f_pair.ambient_dim() != g_pair.ambient_dim()) {
        throw InputError("search requires equal ambient dimensions");
    }
    if (!verify_reconstruction(f_pair).holds || !verify_reconstruction(g_pair).holds) {
        throw InputError("search requires reconstructing pairs");
    }
    const CoherencePair c = cross_coherence(f_pair, g_pair);
    if (c.c_f_omega == 0.0 || c.c_g_tau == 0.0) {
        throw DegenerateBoundError("cross-coherence is zero");
    }

    const Eigen::Index d = f_pair.ambient_dim();

    // Materialize the deterministic candidate list for the chosen strategy.
    std::vector<std::vector<Eigen::Index>> supports; // exhaustive candidates
    std::vector<std::pair<Eigen::Index, Eigen::Index>> combs; // (spacing, offset)
    long total = 0;
    switch (strategy) {
        case SearchStrategy::combs:
            for (Eigen::Index s = 1; s <= d; ++s) {
                if (d % s != 0) continue;
                for (Eigen::Index o = 0; o < s; ++o) combs.emplace_back(s, o);
            }
            total = static_cast<long>(combs.size());
            break;
        case SearchStrategy::exhaustive_supports: {
            if (d > kExhaustiveDimCap) {
                throw InputError("exhaustive_supports is capped at ambient dimension 12");
            }
            const Eigen::Index cap = std::min(d, kExhaustiveSupportCap);
            for (Eigen::Index k = 1; k <= cap; ++k) {
                auto sets = all_subsets(d, k);
                supports.insert(supports.end(), sets.begin(), sets.end());
            }
            total = static_cast<long>(supports.size());
            break;
        }
        case SearchStrategy::random_restarts:
            total = budget;
            break;
    }
    const long n_candidates = std::min(budget, total);
    if (n_candidates < 1) {
        throw GenerationError("search budget exhausted before any candidate");
    }

    auto evaluate = [&](long index) -> Candidate {
        CVec x;
        switch (strategy) {
            case SearchStrategy::combs: {
                const auto [s, o] = combs[static_cast<size_t>(index)];
                x = dirac_comb(d, s, o);
                break;
            }
            case SearchStrategy::exhaustive_supports: {
                const auto& set = supports[static_cast<size_t>(index)];
                auto rng = candidate_rng(seed, index);
                std::normal_distribution<double> n01(0.0, 1.0);
                Candidate best{};
                best.product = -1;
                for (int r = 0; r < kCoefficientRetries; ++r) {
                    CVec cand = CVec::Zero(d);
                    for (Eigen::Index i : set) {
                        cand[i] = std::complex<double>(n01(rng), n01(rng));
                    }
                    const long pf = support_count(analyze(f_pair, cand), policy);
                    const long pg = support_count(analyze(g_pair, cand), policy);
                    Candidate attempt{pf * pg, exact_support(cand), cand, index};
                    if (best.product < 0 || better(attempt, best)) best = attempt;
                }
                return best;
            }
            case SearchStrategy::random_restarts: {
                auto rng = candidate_rng(seed, index);
                std::normal_distribution<double> n01(0.0, 1.0);
                const Eigen::Index cap = std::min(d, kExhaustiveSupportCap);
                std::uniform_int_distribution<Eigen::Index> ksize(1, cap);
                const Eigen::Index k = ksize(rng);
                std::vector<Eigen::Index> idx(static_cast<size_t>(d));
                for (Eigen::Index i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;
                std::shuffle(idx.begin(), idx.end(), rng);
                x = CVec::Zero(d);
                for (Eigen::Index i = 0; i < k; ++i) {
                    x[idx[static_cast<size_t>(i)]] = std::complex<double>(n01(rng), n01(rng));
                }
                break;
            }
        }
        const long pf = support_count(analyze(f_pair, x), policy);
        const long pg = support_count(analyze(g_pair, x), policy);
        return Candidate{pf * pg, exact_support(x), x, index};
    };

    const unsigned threads = effective_threads(max_threads, n_candidates);
    std::vector<std::optional<Candidate>> best_per_thread(threads);
    auto worker = [&](unsigned t) {
        const long lo = n_candidates * static_cast<long>(t) / threads;
        const long hi = n_candidates * (static_cast<long>(t) + 1) / threads;
        std::optional<Candidate> best;
        for (long i = lo; i < hi; ++i) {
            Candidate cand = evaluate(i);
            if (!best || better(cand, *best)) best = std::move(cand);
        }
        best_per_thread[t] = std::move(best);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::optional<Candidate> best;
    for (auto& cand : best_per_thread) {
        if (cand && (!best || better(*cand, *best))) best = std::move(cand);
    }
    if (!best) {
        throw GenerationError("search budget exhausted before any candidate");
    }

    const double bound = 1.0 / (c.c_f_omega * c.c_g_tau);
    return SearchOutcome{best->x,
                         best->product,
                         bound,
                         static_cast<double>(best->product) <= bound * (1.0 + 1e-9),
                         n_candidates,
                         strategy};
}

namespace {

CMat unnormalized_dft(Eigen::Index n) {
    CMat w(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double t = static_cast<double>((j * k) % n) / static_cast<double>(n);
            const double angle = -2.0 * std::numbers::pi * t;
            w(j, k) = std::complex<double>(std::cos(angle), std::sin(angle));
        }
    }
    return w;
}

double singularity_threshold(Eigen::Index size) {
    double fact = 1.0;
    for (Eigen::Index i = 2; i <= size; ++i) fact *= static_cast<double>(i);
    return 1e-10 * std::sqrt(fact);
}

} // namespace

MinorReport tao_minor_check(Eigen::Index n, Eigen::Index max_size) {
    if (n < 1 || max_size < 1 || max_size > n) {
        throw InputError("tao_minor_check requires 1 <= max_size <= n");
    }
    const CMat w = unnormalized_dft(n);

    double total = 0.0;
    for (Eigen::Index k = 1; k <= max_size; ++k) {
        const double b = binomial(n, k);
        total += b * b;
    }
    const bool sampled = total > static_cast<double>(kMinorEnumerationBudget);

    MinorReport report;
    report.n = n;
    report.max_size_checked = max_size;
    report.singular_minor_found = false;
    report.min_abs_det_seen = std::numeric_limits<double>::infinity();
    report.sampled = sampled;
    report.minors_checked = 0;

    auto inspect = [&](const std::vector<Eigen::Index>& rows,
                       const std::vector<Eigen::Index>& cols) {
        const auto k = static_cast<Eigen::Index>(rows.size());
        CMat minor(k, k);
        for (Eigen::Index i = 0; i < k; ++i) {
            for (Eigen::Index j = 0; j < k; ++j) {
                minor(i, j) = w(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
            }
        }
        const double det = std::abs(minor.determinant());
        report.minors_checked++;
        report.min_abs_det_seen = std::min(report.min_abs_det_seen, det);
        if (det < singularity_threshold(k) && !report.singular_minor_found) {
            report.singular_minor_found = true;
            report.witness = std::make_pair(rows, cols);
        }
    };

    if (!sampled) {
        for (Eigen::Index k = 1; k <= max_size; ++k) {
            std::vector<Eigen::Index> rows(static_cast<size_t>(k));
            for (Eigen::Index i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = i;
            do {
                std::vector<Eigen::Index> cols(static_cast<size_t>(k));
                for (Eigen::Index i = 0; i < k; ++i) cols[static_cast<size_t>(i)] = i;
                do {
                    inspect(rows, cols);
                } while (next_combination(cols, n));
            } while (next_combination(rows, n));
        }
    } else {
        std::seed_seq seq{static_cast<unsigned long long>(n),
                          static_cast<unsigned long long>(max_size)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<Eigen::Index> ksize(1, max_size);
        std::vector<Eigen::Index> pool(static_cast<size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
        for (long s = 0; s < kMinorEnumerationBudget; ++s) {
            const Eigen::Index k = ksize(rng);
            std::vector<Eigen::Index> rows(pool), cols(pool);
            std::shuffle(rows.begin(), rows.end(), rng);
            std::shuffle(cols.begin(), cols.end(), rng);
            rows.resize(static_cast<size_t>(k));
            cols.resize(static_cast<size_t>(k));
            std::sort(rows.begin(), rows.end());
            std::sort(cols.begin(), cols.end());
            inspect(rows, cols);
        }
    }
    return report;
}

std::vector<SweepRow> tightness_sweep(const std::vector<Eigen::Index>& n_list,
                                      const std::vector<double>& p_grid,
                                      SearchStrategy strategy, unsigned long long seed,
                                      const SupportPolicy& policy) {
    if (n_list.empty() || p_grid.empty()) {
        throw InputError("tightness_sweep requires nonempty n_list and p_grid");
    }
    std::vector<SweepRow> rows;
    rows.reserve(n_list.size() * p_grid.size());
    for (Eigen::Index n : n_list) {
        if (n < 2) throw InputError("tightness_sweep requires all n >= 2");
        const FramePair id = identity_pair(n);
        const FramePair dft = dft_pair(n);
        const SearchOutcome outcome = min_uncertainty_product(
            id, dft, strategy, kMinorEnumerationBudget, seed, policy);
        const CoherencePair c = cross_coherence(id, dft);
        const double product = c.c_f_omega * c.c_g_tau;
        for (double p : p_grid) {
            const PExponent pe = PExponent::of(p);
            if (!pe.is_sub_one()) {
                throw RegimeError("tightness_sweep grid must lie in (0,1)");
            }
            const double bound = 1.0 / pow_p(product, p);
            rows.push_back(SweepRow{n, p, bound, outcome.min_product,
                                    static_cast<double>(outcome.min_product) / bound,
                                    is_prime(n)});
        }
    }
    return rows;
}

} // namespace uncert
