#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "kgqa/nlq/vectors.hpp"

namespace kgqa::fixtures {

/// Random tag-count vectors; small counts make distance ties common.
inline std::vector<nlq::QuestionVector> random_vectors(std::mt19937& rng, std::size_t count,
                                                       nlq::TagSet set, int max_count = 4) {
  const auto dim = nlq::TagDictionary::get(set).size();
  std::uniform_int_distribution<int> value(0, max_count);
  std::vector<nlq::QuestionVector> out;
  for (std::size_t i = 0; i < count; ++i) {
    nlq::QuestionVector v{"q" + std::to_string(i), set, std::vector<std::int32_t>(dim)};
    for (auto& x : v.pos_freq) x = value(rng);
    out.push_back(std::move(v));
  }
  return out;
}

/// Plain floating-point euclidean distance, independent of the kernels.
inline double naive_distance(const nlq::QuestionVector& p, const nlq::QuestionVector& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.pos_freq.size(); ++i) {
    double d = static_cast<double>(p.pos_freq[i]) - static_cast<double>(q.pos_freq[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

/// Full sort of every other question by (distance, id), then the first k.
inline std::vector<nlq::Neighbor> sort_oracle(const std::vector<nlq::QuestionVector>& vs,
                                              std::size_t self, std::size_t k) {
  std::vector<nlq::Neighbor> all;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (j != self) all.push_back({vs[j].question_id, naive_distance(vs[self], vs[j])});
  }
  std::sort(all.begin(), all.end(), [](const nlq::Neighbor& a, const nlq::Neighbor& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.question_id < b.question_id;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

}  // namespace kgqa::fixtures
