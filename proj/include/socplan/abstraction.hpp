#pragma once

#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "socplan/landscape.hpp"

namespace socplan {

using Rational = boost::rational<long long>;

// Control tokens plus the relevance token of one group. Positions
// (primary/secondary) are not part of the set.
using FeatureSet = std::set<std::string>;

FeatureSet feature_set(const FunctionGroup& group);

// Number of common features; symmetric.
int similarity(const FunctionGroup& a, const FunctionGroup& b);

struct MergeStep {
  std::vector<std::string> left;   // sorted member ids, left < right lexicographically
  std::vector<std::string> right;
  Rational average_similarity;

  bool operator==(const MergeStep&) const = default;
};

struct Clustering {
  // Each part holds sorted group ids; parts are sorted lexicographically.
  std::vector<std::vector<std::string>> parts;
  std::vector<MergeStep> trace;
};

// Deterministic average-linkage agglomeration down to k clusters. Ties on
// the average similarity go to the lexicographically smallest pair of
// sorted member-id lists. Throws Error("invalid-k") unless 1 <= k <= |groups|.
Clustering suggest_categories(const Landscape& landscape, std::size_t k);

struct PartitionAgreement {
  std::size_t exact_matches = 0;  // suggested parts identical to a stored category
  std::size_t stored_parts = 0;
  std::size_t suggested_parts = 0;
  Rational rand_index{0};  // fraction of group pairs on which both partitions agree
  // For each suggested part, the stored category ids its members come from.
  std::vector<std::vector<std::string>> sources;
};

PartitionAgreement compare_partition(const Clustering& clustering, const Landscape& landscape);

// Full member detail in member order. Throws Error("unresolved-member").
std::vector<FunctionGroup> expand(const Category& category, const Landscape& landscape);

}  // namespace socplan
