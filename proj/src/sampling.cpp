#include "shapalloc/sampling.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "shapalloc/errors.hpp"

namespace shapalloc {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) { return splitmix64(splitmix64(seed) ^ chunk); }

// Unbiased draw from [0, bound) by rejecting the top partial block. Spelled
// out because uniform_int_distribution differs between standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0;
  double carry = 0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

struct ChunkResult {
  std::vector<Rational> total;
  std::vector<CompensatedSum> squares;
  std::exception_ptr error;
};

void run_chunk(const CoalitionOracle& oracle, std::size_t n, const SamplingPlan& plan, std::uint64_t chunk,
               ChunkResult& out) {
  out.total.assign(n, Rational(0));
  out.squares.assign(n, CompensatedSum{});

  std::mt19937_64 rng(chunk_seed(plan.seed, chunk));
  std::vector<std::size_t> order(n);
  const std::uint64_t first = chunk * plan.chunk_size;
  const std::uint64_t last = std::min(plan.permutations, first + plan.chunk_size);

  Rational previous;
  Rational current;
  Rational marginal;
  for (std::uint64_t p = first; p < last; ++p) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = n; k > 1; --k) std::swap(order[k - 1], order[bounded(rng, k)]);

    Coalition prefix;
    previous = 0;
    try {
      for (const auto i : order) {
        prefix = prefix.with(i);
        current = oracle(prefix);
        marginal = current - previous;
        out.total[i] += marginal;
        const double m = to_double(marginal);
        out.squares[i].add(m * m);
        previous.swap(current);
      }
    } catch (const std::exception& e) {
      throw OracleError(p, e.what());
    } catch (...) {
      throw OracleError(p, "unknown exception");
    }
  }
}

}  // namespace

EstimateReport sample_shapley(const CoalitionOracle& oracle, const PlayerSet& players, const SamplingPlan& plan,
                              unsigned workers) {
  if (plan.permutations == 0) throw PlanError("sampling plan needs at least one permutation");
  if (plan.chunk_size == 0) throw PlanError("sampling plan chunk size must be at least 1");
  if (!oracle) throw PlanError("no coalition oracle given");

  const std::size_t n = players.size();
  const std::uint64_t chunks = (plan.permutations + plan.chunk_size - 1) / plan.chunk_size;
  std::vector<ChunkResult> results(chunks);

  const auto work = [&](std::uint64_t start, std::uint64_t stride) {
    for (std::uint64_t c = start; c < chunks; c += stride) {
      try {
        run_chunk(oracle, n, plan, c, results[c]);
      } catch (...) {
        results[c].error = std::current_exception();
      }
    }
  };

  const std::uint64_t threads = std::min<std::uint64_t>(std::max(workers, 1U), chunks);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::uint64_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  std::vector<Rational> total(n);
  std::vector<CompensatedSum> squares(n);
  for (const auto& r : results) {
    if (r.error) std::rethrow_exception(r.error);
    for (std::size_t i = 0; i < n; ++i) {
      total[i] += r.total[i];
      squares[i].add(r.squares[i].value());
    }
  }

  EstimateReport report{players, std::vector<Rational>(n), std::vector<double>(n), plan.permutations,
                        kSamplerGenerator};
  const Rational m(static_cast<long long>(plan.permutations));
  const double md = static_cast<double>(plan.permutations);
  for (std::size_t i = 0; i < n; ++i) {
    report.estimates[i] = total[i] / m;
    if (plan.permutations > 1) {
      const double mean = to_double(report.estimates[i]);
      const double variance = std::max(0.0, (squares[i].value() - md * mean * mean) / (md - 1));
      report.std_error[i] = std::sqrt(variance / md);
    }
  }
  return report;
}

CoalitionOracle table_oracle(const CharacteristicFunction& game) {
  return [&game](Coalition s) { return game.value(s); };
}

}  // namespace shapalloc
