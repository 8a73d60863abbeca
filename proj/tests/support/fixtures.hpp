#ifndef DOCSIM_TESTS_FIXTURES_HPP
#define DOCSIM_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "docsim/corpus.hpp"
#include "docsim/features.hpp"

namespace docsim::test {

/// The bundled 60-document, 3-label mini corpus (45 train + 15 test).
/// Deterministic; data/mini/{train,test}.jsonl are this generator's output
/// and a test keeps them in sync.
std::pair<Corpus, Corpus> make_mini_corpus();

/// ~500-doc synthetic corpora for trend checks. Classes draw from fully
/// disjoint word pools (every metric should classify perfectly), or from
/// class signatures buried in shared bursty noise with strongly varying
/// document lengths (magnitude-sensitive metrics degrade).
std::pair<Corpus, Corpus> make_disjoint_corpus(std::uint64_t seed);
std::pair<Corpus, Corpus> make_noisy_overlap_corpus(std::uint64_t seed);

/// Random sparse non-negative vector of the given dimension.
FeatureVector random_sparse_vector(std::mt19937_64& rng, int dim, double density = 0.3,
                                   bool allow_zero = false);

std::string corpus_to_jsonl(const Corpus& corpus);

}  // namespace docsim::test

#endif
