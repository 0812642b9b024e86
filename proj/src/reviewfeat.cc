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

#include "wikiqual/reviewfeat.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "wikiqual/errors.h"
#include "wikiqual/text_util.h"

namespace wikiqual {

std::vector<UserActivity> UserActivities(const RevisionHistory& h) {
  std::map<std::string, UserActivity> users;
  for (const Revision& r : h.revisions) {
    auto [it, inserted] = users.try_emplace(r.user_key);
    if (inserted) {
      it->second.user_key = r.user_key;
      it->second.kind = r.user_kind;
    }
    ++it->second.edit_count;
  }
  std::vector<UserActivity> out;
  out.reserve(users.size());
  for (auto& [key, u] : users) out.push_back(std::move(u));
  return out;
}

namespace {

std::vector<std::string_view> NonBlankLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!Trim(line).empty()) lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

size_t LcsLength(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
  std::vector<size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

constexpr double kSecondsPerDay = 86400.0;

}  // namespace

double ModifiedLinesRate(std::string_view now, std::string_view before) {
  const auto cur = NonBlankLines(now);
  if (cur.empty()) return 0.0;
  const auto old = NonBlankLines(before);
  const size_t common = LcsLength(cur, old);
  return static_cast<double>(cur.size() - common) / static_cast<double>(cur.size());
}

FeatureVector ReviewFeatures(const RevisionHistory& h, Timestamp now, ReviewFlags* flags) {
  const auto& revs = h.revisions;
  if (!revs.empty() && now < revs.back().timestamp) {
    throw DataError("article " + h.article_id + ": reference time " + FormatRfc3339(now) +
                    " precedes the last revision " + FormatRfc3339(revs.back().timestamp));
  }
  const double reviews = static_cast<double>(revs.size());
  const double age =
      revs.empty() ? 0.0
                   : static_cast<double>((now - revs.front().timestamp).count()) / kSecondsPerDay;

  const std::vector<UserActivity> users = UserActivities(h);
  const double user_count = static_cast<double>(users.size());
  double registered_users = 0, anonymous_users = 0, occasional_users = 0;
  double registered_reviews = 0, anonymous_reviews = 0, occasional_reviews = 0;
  for (const UserActivity& u : users) {
    const double e = static_cast<double>(u.edit_count);
    if (u.kind == UserKind::kRegistered) {
      registered_users += 1;
      registered_reviews += e;
    } else {
      anonymous_users += 1;
      anonymous_reviews += e;
    }
    if (u.is_occasional()) {
      occasional_users += 1;
      occasional_reviews += e;
    }
  }

  const double per_user = SafeRatio(reviews, user_count);
  double stddev = 0.0;
  if (!users.empty()) {
    double sq = 0.0;
    for (const UserActivity& u : users) {
      const double d = static_cast<double>(u.edit_count) - per_user;
      sq += d * d;
    }
    stddev = std::sqrt(sq / user_count);
  }

  double reverts = 0;
  std::set<std::string> seen;
  for (const Revision& r : revs) {
    if (!seen.insert(r.content_hash).second) reverts += 1;
  }

  const Timestamp window_start =
      now - std::chrono::seconds(static_cast<int64_t>(kRecentWindowDays * kSecondsPerDay));
  double recent = 0;
  for (const Revision& r : revs) {
    if (r.timestamp >= window_start && r.timestamp <= now) recent += 1;
  }

  double most_active = 0;
  if (!users.empty()) {
    std::vector<const UserActivity*> ranked;
    for (const UserActivity& u : users) ranked.push_back(&u);
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto* a, const auto* b) {
      return a->edit_count > b->edit_count;  // users are already in key order
    });
    const size_t top = std::max<size_t>(
        1, static_cast<size_t>(std::ceil(kMostActiveShare * user_count - 1e-12)));
    for (size_t i = 0; i < top && i < ranked.size(); ++i) {
      most_active += static_cast<double>(ranked[i]->edit_count);
    }
  }

  double modified = 0.0;
  const bool have_snapshots = h.snapshot_text_now && h.snapshot_text_3mo;
  if (have_snapshots) modified = ModifiedLinesRate(*h.snapshot_text_now, *h.snapshot_text_3mo);
  if (flags) flags->missing_snapshots = !have_snapshots;

  FeatureVector fv;
  constexpr FeatureGroup g = FeatureGroup::kReview;
  fv.Add("age_days", g, age);
  fv.Add("age_per_review", g, SafeRatio(age, reviews));
  fv.Add("reviews_per_day", g, SafeRatio(reviews, age));
  fv.Add("reviews_per_user", g, per_user);
  fv.Add("reviews_per_user_stddev", g, stddev);
  fv.Add("discussion_count", g, static_cast<double>(h.discussion_count));
  fv.Add("review_count", g, reviews);
  fv.Add("user_count", g, user_count);
  fv.Add("registered_user_count", g, registered_users);
  fv.Add("anonymous_user_count", g, anonymous_users);
  fv.Add("occasional_user_count", g, occasional_users);
  fv.Add("registered_user_rate", g, SafeRatio(registered_users, user_count));
  fv.Add("anonymous_user_rate", g, SafeRatio(anonymous_users, user_count));
  fv.Add("occasional_user_rate", g, SafeRatio(occasional_users, user_count));
  fv.Add("registered_anonymous_user_ratio", g, SafeRatio(registered_users, anonymous_users));
  fv.Add("registered_review_count", g, registered_reviews);
  fv.Add("anonymous_review_count", g, anonymous_reviews);
  fv.Add("occasional_review_count", g, occasional_reviews);
  fv.Add("registered_review_rate", g, SafeRatio(registered_reviews, reviews));
  fv.Add("anonymous_review_rate", g, SafeRatio(anonymous_reviews, reviews));
  fv.Add("occasional_review_rate", g, SafeRatio(occasional_reviews, reviews));
  fv.Add("registered_anonymous_review_ratio", g, SafeRatio(registered_reviews, anonymous_reviews));
  fv.Add("revert_count", g, reverts);
  fv.Add("revert_review_ratio", g, SafeRatio(reverts, reviews));
  fv.Add("diversity", g, SafeRatio(user_count, reviews));
  fv.Add("modified_lines_rate", g, modified);
  fv.Add("last_3mo_review_count", g, recent);
  fv.Add("last_3mo_review_rate", g, SafeRatio(recent, reviews));
  fv.Add("most_active_review_count", g, most_active);
  fv.Add("most_active_review_rate", g, SafeRatio(most_active, reviews));
  return fv;
}

namespace {

void NormalizeMax(std::vector<double>* v) {
  double mx = 0.0;
  for (double x : *v) mx = std::max(mx, std::abs(x));
  if (mx > 0.0) {
    for (double& x : *v) x /= mx;
  }
}

}  // namespace

ProbReviewScores ProbReview(const std::map<std::string, RevisionHistory>& histories,
                            const ProbReviewOptions& options) {
  if (options.max_iterations < 1) throw UsageError("prob_review: max_iterations must be >= 1");
  if (!(options.tol > 0.0)) throw UsageError("prob_review: tol must be > 0");

  std::map<std::string, int> user_index;
  for (const auto& [id, h] : histories) {
    for (const Revision& r : h.revisions) user_index.emplace(r.user_key, 0);
  }
  int next = 0;
  for (auto& [key, idx] : user_index) idx = next++;

  const size_t na = histories.size();
  const size_t nu = user_index.size();
  std::vector<std::vector<int>> reviewers(na);
  std::vector<std::vector<int>> reviewed(nu);
  size_t a = 0;
  for (const auto& [id, h] : histories) {
    std::set<int> distinct;
    for (const Revision& r : h.revisions) distinct.insert(user_index.at(r.user_key));
    reviewers[a].assign(distinct.begin(), distinct.end());
    for (int u : distinct) reviewed[u].push_back(static_cast<int>(a));
    ++a;
  }

  std::vector<double> quality(na, 1.0), authority(nu, 1.0);
  std::vector<double> q2(na), a2(nu);
  ProbReviewScores out;
  for (int it = 1; it <= options.max_iterations; ++it) {
    for (size_t i = 0; i < na; ++i) {
      double s = 0.0;
      for (int u : reviewers[i]) s += authority[u];
      q2[i] = s;
    }
    NormalizeMax(&q2);
    for (size_t u = 0; u < nu; ++u) {
      double s = 0.0;
      for (int i : reviewed[u]) s += q2[i];
      a2[u] = s;
    }
    NormalizeMax(&a2);
    double change = 0.0;
    for (size_t i = 0; i < na; ++i) change = std::max(change, std::abs(q2[i] - quality[i]));
    for (size_t u = 0; u < nu; ++u) change = std::max(change, std::abs(a2[u] - authority[u]));
    quality.swap(q2);
    authority.swap(a2);
    out.iterations = it;
    if (change < options.tol) {
      out.converged = true;
      break;
    }
  }

  a = 0;
  for (const auto& [id, h] : histories) out.article_quality[id] = quality[a++];
  for (const auto& [key, idx] : user_index) out.user_authority[key] = authority[idx];
  return out;
}

}  // namespace wikiqual
