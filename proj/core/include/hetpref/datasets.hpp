#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hetpref/link.hpp"
#include "hetpref/policy.hpp"
#include "hetpref/population.hpp"
#include "hetpref/reward_table.hpp"

namespace hetpref {

// One anonymous comparison: o = 1 iff y2 was preferred over y1.
struct AnonymousSample {
  std::uint32_t x = 0;
  std::uint32_t y1 = 0;
  std::uint32_t y2 = 0;
  std::uint8_t o = 0;

  friend bool operator==(const AnonymousSample&, const AnonymousSample&) = default;
};

// Two labels produced by the same (latent) annotator on the same triple.
struct PairedSample {
  AnonymousSample first;
  AnonymousSample second;

  friend bool operator==(const PairedSample&, const PairedSample&) = default;
};

// One label per user type for the same triple.
struct FullAnnotationSample {
  std::uint32_t x = 0;
  std::uint32_t y1 = 0;
  std::uint32_t y2 = 0;
  std::vector<std::uint8_t> o_vec;

  bool all_ones() const;
  bool all_zeros() const;

  friend bool operator==(const FullAnnotationSample&, const FullAnnotationSample&) = default;
};

struct Triple {
  std::uint32_t x = 0;
  std::uint32_t y1 = 0;
  std::uint32_t y2 = 0;
};

// Records plus an optional per-record weight (empty means unit weights).
// Weighted datasets carry enumerated outcome probabilities for
// exact-expectation training.
struct AnonymousDataset {
  std::vector<AnonymousSample> records;
  std::vector<double> weights;

  std::size_t size() const { return records.size(); }
  bool weighted() const { return !weights.empty(); }
  double weight(std::size_t i) const { return weighted() ? weights[i] : 1.0; }
  std::vector<Triple> triples() const;
};

struct PairedDataset {
  std::vector<PairedSample> records;
  std::size_t size() const { return records.size(); }
};

struct FullDataset {
  std::size_t num_types = 0;
  std::vector<FullAnnotationSample> records;
  std::vector<double> weights;

  std::size_t size() const { return records.size(); }
  bool weighted() const { return !weights.empty(); }
  double weight(std::size_t i) const { return weighted() ? weights[i] : 1.0; }
};

// Draw n triples: x ~ prompt_dist, (y1, y2) i.i.d. from response_dist,
// resampled until distinct. Deterministic given the seed.
std::vector<Triple> sample_triples(std::span<const double> prompt_dist,
                                   const SamplingDistribution& response_dist, std::size_t n,
                                   std::uint64_t seed);

// Draw x ~ prompt_dist, (y1, y2) i.i.d. from response_dist (resampled until
// distinct), u ~ pop, and o from the type-u preference probability.
// Deterministic given the seed.
AnonymousDataset sample_anonymous(const RewardTable& r, const UserPopulation& pop,
                                  const LinkFunction& link, std::span<const double> prompt_dist,
                                  const SamplingDistribution& response_dist, std::size_t n,
                                  std::uint64_t seed);

// As sample_anonymous, but each record fixes (x, y1, y2) and the annotator
// type once, then draws two conditionally independent labels.
PairedDataset sample_paired(const RewardTable& r, const UserPopulation& pop,
                            const LinkFunction& link, std::span<const double> prompt_dist,
                            const SamplingDistribution& response_dist, std::size_t n,
                            std::uint64_t seed);

// One independent label per type for each sampled triple.
FullDataset sample_full_vector(const RewardTable& r, const UserPopulation& pop,
                               const LinkFunction& link, std::span<const double> prompt_dist,
                               const SamplingDistribution& response_dist, std::size_t n,
                               std::uint64_t seed);

// Resamples the whole label vector until every type agrees, storing the agreed
// bit. Throws if any record exceeds attempt_cap resamples.
AnonymousDataset sample_full_consensus(const RewardTable& r, const UserPopulation& pop,
                                       const LinkFunction& link,
                                       std::span<const double> prompt_dist,
                                       const SamplingDistribution& response_dist, std::size_t n,
                                       std::uint64_t seed, std::size_t attempt_cap = 10000);

// Keeps unanimous records (label 1 for all-ones, 0 for all-zeros).
struct AgreementFiltered {
  AnonymousDataset data;
  std::size_t kept = 0;
  std::size_t total = 0;
  double usable_fraction() const {
    return total == 0 ? 0.0 : static_cast<double>(kept) / static_cast<double>(total);
  }
};

AgreementFiltered agreement_filter(const FullDataset& full);

enum class RelabelMode { stochastic, deterministic };

// Labels each triple from the averaged reward: stochastic draws
// o ~ Bernoulli(sigma(dr)), deterministic sets o = 1 iff dr > 0 (ties -> 0),
// where dr = rbar(x, y2) - rbar(x, y1).
AnonymousDataset relabel_with_reward(std::span<const Triple> pairs, const Grid& rbar,
                                     const LinkFunction& link, RelabelMode mode,
                                     std::uint64_t seed);

}  // namespace hetpref
