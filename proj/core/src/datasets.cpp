#include "hetpref/datasets.hpp"

#include <algorithm>
#include <stdexcept>

#include "hetpref/rng.hpp"

namespace hetpref {

bool FullAnnotationSample::all_ones() const {
  return std::all_of(o_vec.begin(), o_vec.end(), [](std::uint8_t b) { return b == 1; });
}

bool FullAnnotationSample::all_zeros() const {
  return std::all_of(o_vec.begin(), o_vec.end(), [](std::uint8_t b) { return b == 0; });
}

std::vector<Triple> AnonymousDataset::triples() const {
  std::vector<Triple> out;
  out.reserve(records.size());
  for (const auto& rec : records) out.push_back({rec.x, rec.y1, rec.y2});
  return out;
}

namespace {

struct TripleSampler {
  const RewardTable& r;
  const UserPopulation& pop;
  std::span<const double> prompt_dist;
  const SamplingDistribution& response_dist;

  void check() const;

  Triple draw_triple(Rng& rng) const;

  std::size_t draw_type(Rng& rng) const { return rng.categorical(pop.weights); }

  std::uint8_t draw_label(Rng& rng, const LinkFunction& link, const Triple& t,
                          std::size_t u) const {
    double p = link.value(r.at(t.x, t.y2, u) - r.at(t.x, t.y1, u));
    return rng.bernoulli(p) ? 1 : 0;
  }
};

void check_triple_dists(std::span<const double> prompt_dist,
                        const SamplingDistribution& response_dist) {
  response_dist.validate();
  if (prompt_dist.size() != response_dist.num_prompts()) {
    throw std::invalid_argument("sampler: prompt distribution size mismatch");
  }
  for (std::size_t x = 0; x < response_dist.num_prompts(); ++x) {
    std::size_t support = 0;
    for (double p : response_dist.row(x)) support += (p > 0.0);
    if (support < 2) {
      throw std::invalid_argument("sampler: response distribution needs two supported options");
    }
  }
}

Triple draw_triple_from(Rng& rng, std::span<const double> prompt_dist,
                        const SamplingDistribution& response_dist) {
  auto x = static_cast<std::uint32_t>(rng.categorical(prompt_dist));
  auto y1 = static_cast<std::uint32_t>(rng.categorical(response_dist.row(x)));
  auto y2 = y1;
  while (y2 == y1) {
    y2 = static_cast<std::uint32_t>(rng.categorical(response_dist.row(x)));
  }
  return {x, y1, y2};
}

void TripleSampler::check() const {
  pop.validate();
  check_triple_dists(prompt_dist, response_dist);
  if (response_dist.num_prompts() != r.num_prompts() ||
      response_dist.num_responses() != r.num_responses()) {
    throw std::invalid_argument("sampler: response distribution shape mismatch");
  }
  if (pop.size() != r.num_types()) {
    throw std::invalid_argument("sampler: population size mismatch");
  }
}

Triple TripleSampler::draw_triple(Rng& rng) const {
  return draw_triple_from(rng, prompt_dist, response_dist);
}

}  // namespace

std::vector<Triple> sample_triples(std::span<const double> prompt_dist,
                                   const SamplingDistribution& response_dist, std::size_t n,
                                   std::uint64_t seed) {
  check_triple_dists(prompt_dist, response_dist);
  Rng rng(seed);
  std::vector<Triple> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(draw_triple_from(rng, prompt_dist, response_dist));
  }
  return out;
}

AnonymousDataset sample_anonymous(const RewardTable& r, const UserPopulation& pop,
                                  const LinkFunction& link, std::span<const double> prompt_dist,
                                  const SamplingDistribution& response_dist, std::size_t n,
                                  std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_anonymous: n must be positive");
  TripleSampler sampler{r, pop, prompt_dist, response_dist};
  sampler.check();
  Rng rng(seed);
  AnonymousDataset out;
  out.records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Triple t = sampler.draw_triple(rng);
    std::size_t u = sampler.draw_type(rng);
    out.records.push_back({t.x, t.y1, t.y2, sampler.draw_label(rng, link, t, u)});
  }
  return out;
}

PairedDataset sample_paired(const RewardTable& r, const UserPopulation& pop,
                            const LinkFunction& link, std::span<const double> prompt_dist,
                            const SamplingDistribution& response_dist, std::size_t n,
                            std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_paired: n must be positive");
  TripleSampler sampler{r, pop, prompt_dist, response_dist};
  sampler.check();
  Rng rng(seed);
  PairedDataset out;
  out.records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Triple t = sampler.draw_triple(rng);
    std::size_t u = sampler.draw_type(rng);
    PairedSample rec;
    rec.first = {t.x, t.y1, t.y2, sampler.draw_label(rng, link, t, u)};
    rec.second = {t.x, t.y1, t.y2, sampler.draw_label(rng, link, t, u)};
    out.records.push_back(rec);
  }
  return out;
}

FullDataset sample_full_vector(const RewardTable& r, const UserPopulation& pop,
                               const LinkFunction& link, std::span<const double> prompt_dist,
                               const SamplingDistribution& response_dist, std::size_t n,
                               std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_full_vector: n must be positive");
  TripleSampler sampler{r, pop, prompt_dist, response_dist};
  sampler.check();
  Rng rng(seed);
  FullDataset out;
  out.num_types = pop.size();
  out.records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Triple t = sampler.draw_triple(rng);
    FullAnnotationSample rec;
    rec.x = t.x;
    rec.y1 = t.y1;
    rec.y2 = t.y2;
    rec.o_vec.resize(pop.size());
    for (std::size_t u = 0; u < pop.size(); ++u) {
      rec.o_vec[u] = sampler.draw_label(rng, link, t, u);
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

AnonymousDataset sample_full_consensus(const RewardTable& r, const UserPopulation& pop,
                                       const LinkFunction& link,
                                       std::span<const double> prompt_dist,
                                       const SamplingDistribution& response_dist, std::size_t n,
                                       std::uint64_t seed, std::size_t attempt_cap) {
  if (n == 0) throw std::invalid_argument("sample_full_consensus: n must be positive");
  TripleSampler sampler{r, pop, prompt_dist, response_dist};
  sampler.check();
  Rng rng(seed);
  AnonymousDataset out;
  out.records.reserve(n);
  std::vector<std::uint8_t> labels(pop.size());
  for (std::size_t i = 0; i < n; ++i) {
    Triple t = sampler.draw_triple(rng);
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt >= attempt_cap) {
        throw std::runtime_error("sample_full_consensus: attempt cap exceeded for a record");
      }
      for (std::size_t u = 0; u < pop.size(); ++u) {
        labels[u] = sampler.draw_label(rng, link, t, u);
      }
      bool all_one = std::all_of(labels.begin(), labels.end(), [](auto b) { return b == 1; });
      bool all_zero = std::all_of(labels.begin(), labels.end(), [](auto b) { return b == 0; });
      if (all_one || all_zero) {
        out.records.push_back({t.x, t.y1, t.y2, static_cast<std::uint8_t>(all_one ? 1 : 0)});
        break;
      }
    }
  }
  return out;
}

AgreementFiltered agreement_filter(const FullDataset& full) {
  AgreementFiltered out;
  out.total = full.size();
  for (std::size_t i = 0; i < full.records.size(); ++i) {
    const auto& rec = full.records[i];
    bool ones = rec.all_ones();
    if (!ones && !rec.all_zeros()) continue;
    out.data.records.push_back({rec.x, rec.y1, rec.y2, static_cast<std::uint8_t>(ones ? 1 : 0)});
    if (full.weighted()) out.data.weights.push_back(full.weight(i));
    ++out.kept;
  }
  return out;
}

AnonymousDataset relabel_with_reward(std::span<const Triple> pairs, const Grid& rbar,
                                     const LinkFunction& link, RelabelMode mode,
                                     std::uint64_t seed) {
  Rng rng(seed);
  AnonymousDataset out;
  out.records.reserve(pairs.size());
  for (const Triple& t : pairs) {
    if (t.x >= rbar.rows() || t.y1 >= rbar.cols() || t.y2 >= rbar.cols()) {
      throw std::out_of_range("relabel: triple outside reward table");
    }
    double dr = rbar(t.x, t.y2) - rbar(t.x, t.y1);
    std::uint8_t o = 0;
    if (mode == RelabelMode::stochastic) {
      o = rng.bernoulli(link.value(dr)) ? 1 : 0;
    } else {
      o = dr > 0.0 ? 1 : 0;
    }
    out.records.push_back({t.x, t.y1, t.y2, o});
  }
  return out;
}

}  // namespace hetpref
