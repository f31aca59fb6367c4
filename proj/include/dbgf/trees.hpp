#pragma once

// In-trees of the De Bruijn graph rooted at the all-zero state and their
// relation to Hamiltonian tours.

#include <cstdint>
#include <string>
#include <vector>

#include "dbgf/core.hpp"
#include "dbgf/poly.hpp"

namespace dbgf {

inline constexpr int kMaxTreeEnumOrder = 4;
inline constexpr int kMaxOmegaOrder = 5;

/// Parent map of a spanning in-tree rooted at state 0. Each state s != 0
/// keeps one of its two successors (s >> 1) | (b << (n-1)); parent[0] is
/// unused and holds 0.
class InTree {
 public:
  InTree(int n, std::vector<std::uint32_t> parent);

  /// Builds the tree from one successor-choice bit per non-root state
  /// (bit s-1 of `choices` picks the top bit of the successor of s).
  static InTree from_choices(int n, std::uint64_t choices);

  int order() const noexcept { return n_; }
  std::uint32_t parent(std::uint32_t s) const { return parent_[s]; }
  const std::vector<std::uint32_t>& parents() const noexcept { return parent_; }
  std::size_t edge_count() const noexcept { return parent_.size() - 1; }

  /// Every parent is a graph successor and every state reaches 0.
  bool is_valid() const;
  /// Inverse of from_choices; needs n <= 6.
  std::uint64_t choice_key() const;

  friend bool operator==(const InTree&, const InTree&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> parent_;
};

struct HamiltonianRecord {
  FeedbackFunction function{2};
  std::vector<std::uint32_t> tour;      // states in visiting order, tour[0] = 0
  std::vector<std::uint32_t> position;  // order along the path 10..0 -> ... -> 0
  InTree tree{2, {0, 0, 0, 0}};
  std::vector<std::uint32_t> s_set;     // ascending

  /// Edge a -> b is consistent when the path visits a before b.
  bool consistent(std::uint32_t a, std::uint32_t b) const { return position[a] < position[b]; }
};

HamiltonianRecord intree_from_hamiltonian(const FeedbackFunction& f);

/// Trees obtained by switching the out-edge of each subset of S(H); subset
/// bit j switches s_set[j]. Index 0 is H's own tree.
std::vector<InTree> omega(const HamiltonianRecord& h);

/// Every in-tree of G_n rooted at 0, ascending by choice_key.
std::vector<InTree> enumerate_intrees(int n, unsigned workers = 0);

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Assertion> assertions;

  bool passed() const;
  void add(std::string name, bool pass, std::string detail);
};

struct PartitionReport {
  int n = 0;
  std::uint64_t intree_count = 0;       // |Lambda_n|
  std::uint64_t hamiltonian_count = 0;  // |H_n|
  std::uint64_t omega_size = 0;         // |Omega(H)| when uniform, else 0
  Report report;
};

PartitionReport verify_partition(int n, unsigned workers = 0);

/// Sum over all in-trees of y^(number of edges disagreeing with f).
IntPolynomial weighted_tree_sum(int n, const FeedbackFunction& f, unsigned workers = 0);

}  // namespace dbgf
