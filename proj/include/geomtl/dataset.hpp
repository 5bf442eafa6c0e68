#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geomtl/matrix.hpp"
#include "geomtl/worldgen.hpp"

namespace geomtl {

// Interaction CSV: header line then one row per interaction,
// "user_id,title_id,territory,day,label". Strict on read.
void write_interactions_csv(const std::string& path, const std::vector<Interaction>& rows);
std::vector<Interaction> read_interactions_csv(const std::string& path);

// Embedding matrix as a binary array with a shape header:
// magic "GMTLEMB1", u64 rows, u64 cols, then rows*cols little-endian doubles.
void write_embeddings(const std::string& path, const Matrix& m);
Matrix read_embeddings(const std::string& path);

// Rows whose day equals `day`, original order preserved.
std::vector<Interaction> slice_by_day(const std::vector<Interaction>& rows, int32_t day);

// Summary counts used by headers and manifests.
struct InteractionStats {
  size_t rows = 0;
  size_t positives = 0;
  size_t negatives = 0;
  std::vector<size_t> positives_by_territory;
  int32_t day_min = 0;
  int32_t day_max = 0;
  size_t distinct_users = 0;
};
InteractionStats interaction_stats(const std::vector<Interaction>& rows, size_t n_territories);

}  // namespace geomtl
