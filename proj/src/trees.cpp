#include "dbgf/trees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dbgf/oracle.hpp"
#include "dbgf/parallel.hpp"

namespace dbgf {

namespace {

std::string state_string(std::uint32_t s, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (s & (1u << i)) out[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return out;
}

std::string tree_string(const InTree& t) {
  std::ostringstream os;
  for (std::uint32_t s = 1; s < t.parents().size(); ++s) {
    os << (s > 1 ? " " : "") << state_string(s, t.order()) << "->" << state_string(t.parent(s), t.order());
  }
  return os.str();
}

std::uint64_t pow2_u64(std::uint64_t e) { return std::uint64_t{1} << e; }

}  // namespace

InTree::InTree(int n, std::vector<std::uint32_t> parent) : n_(n), parent_(std::move(parent)) {
  check_order(n);
  if (parent_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::domain, "parent map needs 2^n entries");
  }
}

InTree InTree::from_choices(int n, std::uint64_t choices) {
  const std::uint32_t states = 1u << n;
  std::vector<std::uint32_t> parent(states, 0);
  for (std::uint32_t s = 1; s < states; ++s) {
    const auto bit = static_cast<std::uint32_t>((choices >> (s - 1)) & 1u);
    parent[s] = (s >> 1) | (bit << (n - 1));
  }
  return InTree(n, std::move(parent));
}

std::uint64_t InTree::choice_key() const {
  if (n_ > 6) throw Error(ErrorKind::order_too_large, "choice keys need n <= 6");
  std::uint64_t key = 0;
  for (std::uint32_t s = 1; s < parent_.size(); ++s) {
    if (parent_[s] >> (n_ - 1)) key |= std::uint64_t{1} << (s - 1);
  }
  return key;
}

bool InTree::is_valid() const {
  const auto states = static_cast<std::uint32_t>(parent_.size());
  if (parent_[0] != 0) return false;
  for (std::uint32_t s = 1; s < states; ++s) {
    if ((parent_[s] & ((1u << (n_ - 1)) - 1)) != (s >> 1)) return false;
  }
  // 0 = unknown, 1 = on the current walk, 2 = reaches the root.
  std::vector<std::uint8_t> mark(states, 0);
  mark[0] = 2;
  std::vector<std::uint32_t> walk;
  for (std::uint32_t s = 1; s < states; ++s) {
    walk.clear();
    std::uint32_t v = s;
    while (mark[v] == 0) {
      mark[v] = 1;
      walk.push_back(v);
      v = parent_[v];
    }
    if (mark[v] == 1) return false;
    for (auto u : walk) mark[u] = 2;
  }
  return true;
}

HamiltonianRecord intree_from_hamiltonian(const FeedbackFunction& f) {
  if (!is_debruijn(f)) {
    throw Error(ErrorKind::not_debruijn, "function 0x" + f.to_hex() + " does not generate a De Bruijn sequence");
  }
  const int n = f.order();
  const std::uint32_t states = 1u << n;
  HamiltonianRecord h;
  h.function = f;
  h.tour.reserve(states);
  h.position.assign(states, 0);
  std::vector<std::uint32_t> parent(states, 0);
  std::uint32_t s = 0;
  for (std::uint32_t i = 0; i < states; ++i) {
    h.tour.push_back(s);
    // Dropping the edge 0 -> 10..0 turns the tour into a path that starts
    // at 10..0 and ends at the root.
    h.position[s] = (i + states - 1) % states;
    const std::uint32_t next = step_raw(f, s);
    if (s != 0) parent[s] = next;
    s = next;
  }
  h.tree = InTree(n, std::move(parent));
  for (std::uint32_t x = 2; x < states; ++x) {
    if (h.position[x] < h.position[x ^ 1u]) h.s_set.push_back(x);
  }
  return h;
}

std::vector<InTree> omega(const HamiltonianRecord& h) {
  const int n = h.function.order();
  if (n > kMaxOmegaOrder) {
    throw Error(ErrorKind::order_too_large, "omega needs n <= " + std::to_string(kMaxOmegaOrder));
  }
  const std::uint32_t top = 1u << (n - 1);
  const std::uint64_t subsets = pow2_u64(h.s_set.size());
  std::vector<InTree> out;
  out.reserve(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::uint32_t> parent = h.tree.parents();
    for (std::size_t j = 0; j < h.s_set.size(); ++j) {
      if (mask & (std::uint64_t{1} << j)) parent[h.s_set[j]] ^= top;
    }
    out.emplace_back(n, std::move(parent));
  }
  return out;
}

std::vector<InTree> enumerate_intrees(int n, unsigned workers) {
  check_order(n, kMaxTreeEnumOrder);
  const std::uint64_t candidates = pow2_u64(pow2_u64(static_cast<std::uint64_t>(n)) - 1);
  auto parts = map_chunks(candidates, workers, [n](std::uint64_t begin, std::uint64_t end) {
    std::vector<InTree> found;
    for (std::uint64_t c = begin; c < end; ++c) {
      InTree t = InTree::from_choices(n, c);
      if (t.is_valid()) found.push_back(std::move(t));
    }
    return found;
  });
  std::vector<InTree> out;
  for (auto& part : parts) {
    for (auto& t : part) out.push_back(std::move(t));
  }
  return out;
}

bool Report::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

void Report::add(std::string name, bool pass, std::string detail) {
  assertions.push_back(Assertion{std::move(name), pass, std::move(detail)});
}

PartitionReport verify_partition(int n, unsigned workers) {
  check_order(n, kMaxTreeEnumOrder);
  PartitionReport out;
  out.n = n;
  const auto un = static_cast<std::uint64_t>(n);
  const std::uint64_t expect_h = pow2_u64(pow2_u64(un - 1) - un);
  const std::uint64_t expect_lambda = pow2_u64(pow2_u64(un) - un - 1);
  const std::uint64_t expect_s = pow2_u64(un - 1) - 1;
  const std::uint64_t expect_omega = pow2_u64(expect_s);
  const std::uint32_t states = 1u << n;
  const std::uint32_t top = 1u << (n - 1);

  const auto functions = enumerate_debruijn_functions(n, workers);
  const auto all_trees = enumerate_intrees(n, workers);
  out.hamiltonian_count = functions.size();
  out.intree_count = all_trees.size();

  std::string s_fail, omega_size_fail, intree_fail, fixed_fail, disjoint_fail;
  std::map<std::uint64_t, std::size_t> owner;  // tree key -> index of its H
  bool uniform = true;
  for (std::size_t hi = 0; hi < functions.size(); ++hi) {
    const HamiltonianRecord h = intree_from_hamiltonian(functions[hi]);
    const std::string hname = "H[0x" + functions[hi].to_hex() + "]";

    if (s_fail.empty()) {
      bool ok = h.s_set.size() == expect_s;
      for (std::uint32_t x = 1; x < top && ok; ++x) {
        const bool has0 = std::binary_search(h.s_set.begin(), h.s_set.end(), x << 1);
        const bool has1 = std::binary_search(h.s_set.begin(), h.s_set.end(), (x << 1) | 1u);
        ok = has0 != has1;
      }
      if (!ok) s_fail = hname + " has |S(H)| = " + std::to_string(h.s_set.size());
    }

    const auto trees = omega(h);
    if (trees.size() != expect_omega) {
      uniform = false;
      if (omega_size_fail.empty()) omega_size_fail = hname + " has |Omega(H)| = " + std::to_string(trees.size());
    }
    for (const auto& t : trees) {
      if (intree_fail.empty()) {
        bool ok = t.is_valid() && t.edge_count() == states - 1;
        for (std::uint32_t s = 1; s < states && ok; ++s) ok = h.consistent(s, t.parent(s));
        if (!ok) intree_fail = hname + " produced " + tree_string(t);
      }
      if (fixed_fail.empty()) {
        for (auto xa : h.s_set) {
          const std::uint32_t other = xa ^ 1u;
          const std::uint32_t expected = h.tree.parent(xa) ^ top;
          if (t.parent(other) != expected || h.tree.parent(other) != expected) {
            fixed_fail = hname + " loses the edge " + state_string(other, n) + "->" + state_string(expected, n) +
                         " in " + tree_string(t);
            break;
          }
        }
      }
      const auto [it, inserted] = owner.emplace(t.choice_key(), hi);
      if (!inserted && disjoint_fail.empty()) {
        disjoint_fail = tree_string(t) + " lies in Omega of H[0x" + functions[it->second].to_hex() + "] and " + hname;
      }
    }
  }
  out.omega_size = uniform ? expect_omega : 0;

  std::set<std::uint64_t> all_keys;
  for (const auto& t : all_trees) all_keys.insert(t.choice_key());
  std::string union_fail;
  if (all_keys.size() != owner.size()) {
    union_fail = "union has " + std::to_string(owner.size()) + " trees, Lambda_n has " + std::to_string(all_keys.size());
  } else {
    for (const auto& [key, hi] : owner) {
      if (!all_keys.count(key)) {
        union_fail = tree_string(InTree::from_choices(n, key)) + " is not an in-tree";
        break;
      }
    }
  }

  auto count_detail = [](std::uint64_t got, std::uint64_t want) {
    return std::to_string(got) + " (expected " + std::to_string(want) + ")";
  };
  Report& r = out.report;
  r.add("hamiltonian_count", out.hamiltonian_count == expect_h, count_detail(out.hamiltonian_count, expect_h));
  r.add("intree_count", out.intree_count == expect_lambda, count_detail(out.intree_count, expect_lambda));
  r.add("s_set_size", s_fail.empty(), s_fail.empty() ? "all " + std::to_string(expect_s) : s_fail);
  r.add("omega_size", omega_size_fail.empty(),
        omega_size_fail.empty() ? "all " + std::to_string(expect_omega) : omega_size_fail);
  r.add("omega_consistent_intrees", intree_fail.empty(), intree_fail.empty() ? "ok" : intree_fail);
  r.add("fixed_edge", fixed_fail.empty(), fixed_fail.empty() ? "ok" : fixed_fail);
  r.add("omega_disjoint", disjoint_fail.empty(), disjoint_fail.empty() ? "ok" : disjoint_fail);
  r.add("union_is_all_intrees", union_fail.empty(),
        union_fail.empty() ? std::to_string(owner.size()) + " trees" : union_fail);
  return out;
}

IntPolynomial weighted_tree_sum(int n, const FeedbackFunction& f, unsigned workers) {
  check_order(n, kMaxTreeEnumOrder);
  if (f.order() != n) throw Error(ErrorKind::order_mismatch, "function order differs from n");
  const std::uint32_t states = 1u << n;
  std::vector<std::uint64_t> hist(states, 0);
  for (const auto& t : enumerate_intrees(n, workers)) {
    std::size_t off = 0;
    for (std::uint32_t s = 1; s < states; ++s) off += t.parent(s) != step_raw(f, s);
    ++hist[off];
  }
  std::vector<BigInt> coeffs;
  for (auto c : hist) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(coeffs));
}

}  // namespace dbgf
