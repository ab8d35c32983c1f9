#include "socplan/abstraction.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace socplan {

FeatureSet feature_set(const FunctionGroup& group) {
  FeatureSet out;
  out.emplace(control_token(group.assignment.primary));
  for (auto kind : group.assignment.secondary) out.emplace(control_token(kind));
  out.emplace(relevance_token(group.relevance));
  return out;
}

int similarity(const FunctionGroup& a, const FunctionGroup& b) {
  const auto fa = feature_set(a);
  const auto fb = feature_set(b);
  int common = 0;
  for (const auto& token : fa) common += static_cast<int>(fb.count(token));
  return common;
}

Clustering suggest_categories(const Landscape& landscape, std::size_t k) {
  const std::size_t n = landscape.groups.size();
  if (k < 1 || k > n) {
    throw Error("invalid-k", "k must be between 1 and " + std::to_string(n) + ", got " + std::to_string(k));
  }

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(landscape.groups[i].id, i);

  std::vector<std::vector<int>> sim(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      sim[i][j] = sim[j][i] = similarity(landscape.groups[i], landscape.groups[j]);
    }
  }

  std::vector<std::vector<std::string>> clusters;
  clusters.reserve(n);
  for (const auto& g : landscape.groups) clusters.push_back({g.id});

  auto linkage_sum = [&](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    long long total = 0;
    for (const auto& x : a) {
      for (const auto& y : b) total += sim[index.at(x)][index.at(y)];
    }
    return total;
  };

  Clustering result;
  while (clusters.size() > k) {
    std::sort(clusters.begin(), clusters.end());
    // With clusters sorted, scanning (i < j) visits candidate pairs in
    // lexicographic order, so the first strict maximum wins ties.
    std::optional<Rational> best;
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        Rational average(linkage_sum(clusters[i], clusters[j]),
                         static_cast<long long>(clusters[i].size() * clusters[j].size()));
        if (!best || average > *best) {
          best = average;
          best_i = i;
          best_j = j;
        }
      }
    }
    result.trace.push_back({clusters[best_i], clusters[best_j], *best});
    std::vector<std::string> merged = clusters[best_i];
    merged.insert(merged.end(), clusters[best_j].begin(), clusters[best_j].end());
    std::sort(merged.begin(), merged.end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_j));
    clusters[best_i] = std::move(merged);
  }
  std::sort(clusters.begin(), clusters.end());
  result.parts = std::move(clusters);
  return result;
}

PartitionAgreement compare_partition(const Clustering& clustering, const Landscape& landscape) {
  PartitionAgreement out;
  out.stored_parts = landscape.categories.size();
  out.suggested_parts = clustering.parts.size();

  std::map<std::string, std::string> stored_of;
  for (const auto& c : landscape.categories) {
    for (const auto& m : c.members) stored_of[m] = c.id;
  }
  std::map<std::string, std::size_t> suggested_of;
  for (std::size_t p = 0; p < clustering.parts.size(); ++p) {
    for (const auto& m : clustering.parts[p]) suggested_of[m] = p;
  }

  for (const auto& part : clustering.parts) {
    std::vector<std::string> sources;
    for (const auto& m : part) {
      auto it = stored_of.find(m);
      const std::string source = it == stored_of.end() ? std::string("?") : it->second;
      if (std::find(sources.begin(), sources.end(), source) == sources.end()) sources.push_back(source);
    }
    std::sort(sources.begin(), sources.end());
    out.sources.push_back(sources);

    for (const auto& c : landscape.categories) {
      auto members = c.members;
      std::sort(members.begin(), members.end());
      if (members == part) ++out.exact_matches;
    }
  }

  std::vector<std::string> ids;
  for (const auto& g : landscape.groups) ids.push_back(g.id);
  long long agree = 0;
  long long pairs = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const bool same_stored = stored_of.count(ids[i]) && stored_of.count(ids[j]) &&
                               stored_of[ids[i]] == stored_of[ids[j]];
      const bool same_suggested = suggested_of.at(ids[i]) == suggested_of.at(ids[j]);
      agree += same_stored == same_suggested ? 1 : 0;
      ++pairs;
    }
  }
  out.rand_index = pairs == 0 ? Rational(1) : Rational(agree, pairs);
  return out;
}

std::vector<FunctionGroup> expand(const Category& category, const Landscape& landscape) {
  std::vector<FunctionGroup> out;
  out.reserve(category.members.size());
  for (const auto& id : category.members) {
    const auto* group = landscape.find_group(id);
    if (group == nullptr) {
      throw Error("unresolved-member", "category '" + category.id + "' references unknown group '" + id + "'");
    }
    out.push_back(*group);
  }
  return out;
}

}  // namespace socplan
