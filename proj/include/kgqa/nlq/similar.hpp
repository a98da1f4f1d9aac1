#pragma once

#include <span>
#include <string>
#include <vector>

#include "kgqa/nlq/tagger.hpp"
#include "kgqa/nlq/vectors.hpp"

namespace kgqa::nlq {

/// Tags, vectorizes and builds the pairwise distances for a question set
/// once; neighbour lookups are then cheap.
class SimilarityIndex {
 public:
  SimilarityIndex(std::span<const Nlq> questions, TagSet set, const Tagger& tagger, std::size_t threads = 0);

  /// At most `k` neighbours (fewer when the corpus is smaller). Throws
  /// Error("UnknownQuestion") and Error("InvalidArgument") for k = 0.
  std::vector<Neighbor> neighbors(const std::string& question_id, std::size_t k) const;

  TagSet tagset() const { return set_; }
  const DistanceMatrix& matrix() const { return matrix_; }

 private:
  TagSet set_;
  DistanceMatrix matrix_;
};

}  // namespace kgqa::nlq
