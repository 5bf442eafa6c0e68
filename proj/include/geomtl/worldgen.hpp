#pragma once

#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "geomtl/matrix.hpp"
#include "geomtl/rng.hpp"

namespace geomtl {

// Generation parameters for the synthetic multi-territory universe.
struct DataConfig {
  size_t n_territories = 16;
  size_t num_groups = 4;
  std::vector<int32_t> group_map;  // territory -> group; empty = t % num_groups

  size_t population = 180000;      // total simulated user base
  size_t n_random_users = 30000;   // train sample drawn from everyone
  size_t n_active_upsample = 6000; // extra train sample drawn from active users
  size_t n_test_users = 25000;     // evaluation users, disjoint from train

  size_t n_titles = 200;
  size_t local_titles_per_territory = 7;
  size_t global_full_scope_count = 40;  // remaining globals get partial scopes
  size_t partial_scope_min = 6;
  size_t partial_scope_max = 12;

  size_t user_dim = 24;
  size_t title_dim = 16;

  double alpha = 3.0;            // negatives per positive, per territory-day
  size_t train_day_count = 7;    // train days are 0 .. train_day_count-1
  std::vector<int32_t> test_days = {7, 8, 9};

  // Per-territory positive-volume targets for the train set; must span at
  // least two orders of magnitude.
  std::vector<double> imbalance_profile = {18000, 15000, 8000, 8000, 4000, 4000, 1600, 1600,
                                           800,   800,   400,  400,  200,  200,  150,  150};

  // Ground-truth structure knobs.
  double signal_scale = 1.0;        // std of u.T_g(t) at user scale 1
  double group_gain_sigma = 0.7;    // lognormal spread of per-group gains
  double user_scale_sigma = 0.35;   // lognormal spread of user magnitudes
  double local_pop_sigma = 0.8;     // per-territory title popularity term
  double global_pop_mean = 0.4;     // global titles get a mean boost
  double global_pop_sigma = 0.4;
  double embed_noise_sigma = 0.25;  // observed embedding = latent + noise
  double min_transform_distance = 0.3;  // pairwise relative Frobenius floor

  // Group-level taste structure. Each group has a taste direction; user
  // latents mix it in with weight group_taste_weight, and local titles align
  // with their home group's taste (through that group's transform) with
  // weight local_title_alignment. This is what makes locally-popular titles
  // recognizable from the embeddings instead of being pure popularity noise.
  // Global titles get a weaker pull toward one of their scope groups, so each
  // has a real affinity audience and is merely prevalent everywhere else.
  double group_taste_weight = 0.5;       // in [0, 1): share of user latent
  double local_title_alignment = 0.8;    // in [0, 1): share of local-title latent
  double global_title_alignment = 0.6;   // in [0, 1): share of global-title latent

  void validate() const;
  // Effective group map (explicit or the t % num_groups default).
  std::vector<int32_t> effective_group_map() const;
};

struct TitleInfo {
  std::vector<int32_t> scope;  // territories where available, ascending
  bool is_global = false;      // scope spans >= 2 groups
  int32_t taste_group = -1;    // group whose taste the latent leans toward
};

struct Interaction {
  int32_t user_id;
  int32_t title_id;
  int32_t territory;
  int32_t day;
  int8_t label;
};

// The built universe: structure, ground-truth latents, observed embeddings,
// calibrated biases, and user activity flags.
struct World {
  DataConfig config;
  uint64_t seed = 0;

  std::vector<int32_t> group_map;              // territory -> group
  std::vector<int32_t> territory_user_count;   // population split
  std::vector<int32_t> territory_user_start;   // user ids are contiguous per territory
  std::vector<int32_t> user_territory;         // user -> territory

  std::vector<TitleInfo> titles;
  std::vector<std::vector<int32_t>> in_scope;  // territory -> ascending title ids

  std::vector<Matrix> transforms;   // per group: [user_dim x title_dim]
  Matrix group_taste;               // [G x user_dim], rows have norm sqrt(user_dim)
  Matrix user_latents;              // [population x user_dim]
  Matrix title_latents;             // [n_titles x title_dim]
  Matrix user_embs;                 // latents + isotropic noise
  Matrix title_embs;

  std::vector<double> global_pop;               // per-title additive term
  std::vector<std::vector<double>> local_pop;   // per title, aligned with scope
  std::vector<double> base_bias;                // per territory, calibrated
  std::vector<uint8_t> user_active;             // history-window activity flag

  // Per-group transformed title latents T_g . t, cached for fast scoring.
  std::vector<Matrix> transformed_titles;  // per group: [n_titles x user_dim]

  int32_t group_of(int32_t territory) const { return group_map[static_cast<size_t>(territory)]; }
  bool title_in_scope(int32_t title, int32_t territory) const;
  // Additive popularity term; throws ValidationError when out of scope.
  double local_pop_term(int32_t title, int32_t territory) const;
};

// Deterministic world construction; identical (config, seed) gives an
// identical world.
World build_world(const DataConfig& config, uint64_t seed);

// Ground-truth probability that `user` streams `title` (first time) on any
// one day:  sigmoid( u . T_g(t) + local_pop + global_pop + territory bias ).
double label_probability(const World& world, int32_t user_id, int32_t title_id);

// Train-user sample: n_random users drawn territory-proportionally from the
// whole population, then n_active more drawn from active users only,
// disjoint from the first draw. Result is ascending and has exactly
// n_random + n_active entries.
std::vector<int32_t> sample_users(const World& world, size_t n_random, size_t n_active,
                                  uint64_t stream_tag);

// Same proportional scheme over the population minus `exclude`.
std::vector<int32_t> sample_test_users(const World& world, size_t n,
                                       const std::vector<int32_t>& exclude, uint64_t stream_tag);

// Interactions for `users` over days [day_begin, day_end): positives via
// per-user deterministic streams with the first-time-only constraint, then
// round(alpha x positives) negatives per territory-day, drawn uniformly from
// in-scope never-positive (user, title) pairs. negative_salt separates the
// negative streams of different datasets; positive streams depend only on
// (world seed, user), so a user's positives agree across datasets.
// Output order is canonical: (territory, day, user, title).
std::vector<Interaction> generate_interactions(const World& world,
                                               const std::vector<int32_t>& users, int32_t day_begin,
                                               int32_t day_end, double alpha,
                                               uint64_t negative_salt);

struct DaySplit {
  std::vector<Interaction> train;        // train users, train days
  std::vector<Interaction> incremental;  // train users, test days (day-wise fine-tuning)
  std::map<int32_t, std::vector<Interaction>> test_by_day;  // test users only
};

// Routes combined interactions into train / incremental / per-test-day sets
// and validates the user-disjointness and day-range contracts.
DaySplit split_days(const std::vector<Interaction>& interactions, size_t train_day_count,
                    const std::vector<int32_t>& test_days,
                    const std::unordered_set<int32_t>& test_users);

}  // namespace geomtl
