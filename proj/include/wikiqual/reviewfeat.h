// Copyright 2026 The wikiqual Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIKIQUAL_REVIEWFEAT_H_
#define WIKIQUAL_REVIEWFEAT_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wikiqual/corpus.h"
#include "wikiqual/feature_vector.h"

namespace wikiqual {

inline constexpr int kOccasionalEditLimit = 4;  // fewer edits than this
inline constexpr double kRecentWindowDays = 90.0;
inline constexpr double kMostActiveShare = 0.05;

struct UserActivity {
  std::string user_key;
  UserKind kind = UserKind::kRegistered;  // kind of the user's first revision
  int64_t edit_count = 0;
  bool is_occasional() const { return edit_count < kOccasionalEditLimit; }
};

// Per-user edit counts, sorted by user key.
std::vector<UserActivity> UserActivities(const RevisionHistory& h);

// Number of non-blank lines of `now` that are not part of a longest common
// subsequence with `before`, divided by the non-blank lines of `now`.
double ModifiedLinesRate(std::string_view now, std::string_view before);

struct ReviewFlags {
  bool missing_snapshots = false;
};

// The 30 review features, in registry order. An empty history yields all
// zeros. Throws DataError if `now` precedes the last revision.
FeatureVector ReviewFeatures(const RevisionHistory& h, Timestamp now, ReviewFlags* flags = nullptr);

struct ProbReviewOptions {
  int max_iterations = 100;
  double tol = 1e-8;
};

struct ProbReviewScores {
  std::map<std::string, double> article_quality;
  std::map<std::string, double> user_authority;
  int iterations = 0;
  bool converged = false;
};

// Mutual reinforcement on the article/reviewer bipartite graph: article
// quality is the sum of its distinct reviewers' authority, reviewer
// authority the sum of the quality of the articles they edited; each vector
// is scaled to unit max-norm after every update.
ProbReviewScores ProbReview(const std::map<std::string, RevisionHistory>& histories,
                            const ProbReviewOptions& options = {});

}  // namespace wikiqual

#endif  // WIKIQUAL_REVIEWFEAT_H_
