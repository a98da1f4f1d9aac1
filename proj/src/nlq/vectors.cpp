#include "kgqa/nlq/vectors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "kgqa/error.hpp"
#include "kgqa/simd/distance.hpp"

namespace kgqa::nlq {

QuestionVector vectorize(std::span<const TaggedToken> tagged, TagSet set, std::string question_id) {
  const auto& dict = TagDictionary::get(set);
  QuestionVector v{std::move(question_id), set, std::vector<std::int32_t>(dict.size(), 0)};
  for (const auto& t : tagged) {
    auto idx = dict.index_of(t.tag);
    if (!idx) {
      throw Error("UnknownTag", "tag '" + t.tag + "' is not in the " +
                                    std::string(tagset_name(set)) + " dictionary");
    }
    ++v.pos_freq[*idx];
  }
  return v;
}

namespace {

void check_compatible(const QuestionVector& p, const QuestionVector& q) {
  if (p.set != q.set || p.pos_freq.size() != q.pos_freq.size()) {
    throw Error("DimensionMismatch", "vectors '" + p.question_id + "' and '" + q.question_id +
                                         "' use different tag dictionaries");
  }
}

std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

double distance(const QuestionVector& p, const QuestionVector& q) {
  check_compatible(p, q);
  return std::sqrt(simd::squared_distance(p.pos_freq.data(), q.pos_freq.data(), p.pos_freq.size()));
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> ids, std::vector<double> upper)
    : ids_(std::move(ids)), upper_(std::move(upper)) {
  const std::size_t n = ids_.size();
  if (upper_.size() != (n * (n - (n > 0 ? 1 : 0))) / 2) {
    throw Error("DimensionMismatch", "triangle size does not match question count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw Error("DuplicateQuestionId", "question id '" + ids_[i] + "' appears twice");
    }
  }
}

double DistanceMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  return upper_[tri_index(ids_.size(), i, j)];
}

std::size_t DistanceMatrix::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("UnknownQuestion", "unknown question '" + id + "'");
  return it->second;
}

std::vector<double> DistanceMatrix::row_major() const {
  const std::size_t n = size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = at(i, j);
  }
  return out;
}

DistanceMatrix build_distance_matrix(std::span<const QuestionVector> vectors, unsigned threads) {
  const std::size_t n = vectors.size();
  for (std::size_t i = 1; i < n; ++i) check_compatible(vectors[0], vectors[i]);
  std::vector<std::string> ids;
  for (const auto& v : vectors) ids.push_back(v.question_id);
  std::vector<double> upper(n > 1 ? n * (n - 1) / 2 : 0);

  const auto isa = simd::active_isa();
  const std::size_t dim = n > 0 ? vectors[0].pos_freq.size() : 0;
  std::atomic<std::size_t> next_row{0};
  auto work = [&] {
    for (std::size_t i = next_row++; i < n; i = next_row++) {
      const auto* a = vectors[i].pos_freq.data();
      double* out = upper.data() + (n > 0 ? tri_index(n, i, i + 1) : 0);
      for (std::size_t j = i + 1; j < n; ++j) {
        *out++ = std::sqrt(simd::squared_distance(isa, a, vectors[j].pos_freq.data(), dim));
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return DistanceMatrix(std::move(ids), std::move(upper));
}

std::vector<Neighbor> k_nearest(const DistanceMatrix& matrix, const std::string& question_id,
                                std::size_t k) {
  if (k == 0) throw Error("InvalidArgument", "k must be at least 1");
  const std::size_t self = matrix.index_of(question_id);
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    if (j != self) others.push_back(j);
  }
  auto closer = [&](std::size_t x, std::size_t y) {
    double dx = matrix.at(self, x), dy = matrix.at(self, y);
    if (dx != dy) return dx < dy;
    return matrix.ids()[x] < matrix.ids()[y];
  };
  const std::size_t take = std::min(k, others.size());
  std::partial_sort(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(take),
                    others.end(), closer);
  std::vector<Neighbor> out;
  for (std::size_t i = 0; i < take; ++i) {
    out.push_back({matrix.ids()[others[i]], matrix.at(self, others[i])});
  }
  return out;
}

}  // namespace kgqa::nlq
