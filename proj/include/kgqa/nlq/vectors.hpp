#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgqa/nlq/tagger.hpp"

namespace kgqa::nlq {

/// Tag frequency vector of one question over a tag dictionary.
struct QuestionVector {
  std::string question_id;
  TagSet set = TagSet::UPOS;
  std::vector<std::int32_t> pos_freq;
};

/// Counts each token's tag. Throws Error("UnknownTag").
QuestionVector vectorize(std::span<const TaggedToken> tagged, TagSet set,
                         std::string question_id = {});

/// Euclidean distance. Throws Error("DimensionMismatch") when the
/// dictionaries or lengths differ.
double distance(const QuestionVector& p, const QuestionVector& q);

/// Pairwise distances, stored as the strict upper triangle.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<std::string> ids, std::vector<double> upper);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  double at(std::size_t i, std::size_t j) const;
  /// Throws Error("UnknownQuestion").
  std::size_t index_of(const std::string& id) const;
  /// Full n x n matrix, row-major.
  std::vector<double> row_major() const;

 private:
  std::vector<std::string> ids_;
  std::vector<double> upper_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Builds the matrix on `threads` workers (0 = hardware concurrency).
/// Throws DimensionMismatch, and DuplicateQuestionId for repeated ids.
DistanceMatrix build_distance_matrix(std::span<const QuestionVector> vectors,
                                     unsigned threads = 0);

struct Neighbor {
  std::string question_id;
  double distance = 0.0;
};

/// The k closest other questions, ascending by distance then id.
/// Throws UnknownQuestion, and InvalidArgument for k == 0.
std::vector<Neighbor> k_nearest(const DistanceMatrix& matrix, const std::string& question_id,
                                std::size_t k = 5);

}  // namespace kgqa::nlq
