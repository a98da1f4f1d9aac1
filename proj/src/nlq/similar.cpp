#include "kgqa/nlq/similar.hpp"

namespace kgqa::nlq {

namespace {

DistanceMatrix build(std::span<const Nlq> questions, TagSet set, const Tagger& tagger, std::size_t threads) {
  std::vector<QuestionVector> vectors;
  vectors.reserve(questions.size());
  for (const auto& q : questions) {
    auto tagged = tag_tokens(q, set, tagger);
    vectors.push_back(vectorize(tagged, set, q.question_id));
  }
  return build_distance_matrix(vectors, threads);
}

}  // namespace

SimilarityIndex::SimilarityIndex(std::span<const Nlq> questions, TagSet set, const Tagger& tagger,
                                 std::size_t threads)
    : set_(set), matrix_(build(questions, set, tagger, threads)) {}

std::vector<Neighbor> SimilarityIndex::neighbors(const std::string& question_id, std::size_t k) const {
  return k_nearest(matrix_, question_id, k);
}

}  // namespace kgqa::nlq
