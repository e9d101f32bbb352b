#include "ordaut/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ordaut/errors.hpp"

namespace ordaut {

bool AdditionChain::is_valid() const {
  if (elements.empty() || elements.front() != 1) return false;
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i] <= elements[i - 1]) return false;
    bool found = false;
    for (std::size_t a = 0; a < i && !found; ++a)
      for (std::size_t b = a; b < i && !found; ++b) found = elements[a] + elements[b] == elements[i];
    if (!found) return false;
  }
  return true;
}

namespace {

bool extend_chain(std::vector<std::uint64_t>& chain, std::size_t length, std::uint64_t n) {
  const std::uint64_t last = chain.back();
  if (chain.size() == length) return last == n;
  const std::size_t remaining = length - chain.size();
  // Each further element at most doubles the largest one.
  if (remaining < 64 && (last << remaining) < n) return false;

  std::vector<std::uint64_t> next;
  for (std::size_t a = 0; a < chain.size(); ++a)
    for (std::size_t b = a; b < chain.size(); ++b) {
      std::uint64_t s = chain[a] + chain[b];
      if (s > last && s <= n) next.push_back(s);
    }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  if (remaining == 1) next.erase(std::remove_if(next.begin(), next.end(), [&](auto s) { return s != n; }), next.end());

  for (std::uint64_t s : next) {
    chain.push_back(s);
    if (extend_chain(chain, length, n)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

AdditionChain shortest_addition_chain(std::uint64_t n) {
  if (n == 0) throw PreconditionError("addition chains start at 1");
  std::size_t length = 1;
  while ((std::uint64_t{1} << (length - 1)) < n) ++length;
  for (;; ++length) {
    std::vector<std::uint64_t> chain{1};
    if (extend_chain(chain, length, n)) return AdditionChain{std::move(chain)};
  }
}

namespace {

// Bottom-up search over acyclic CPAs with sinks c_0 .. c_k numbered first. Each
// node carries the labels of the sinks its words reach, in lexicographic word
// order; a node's sequence is the concatenation of its children's.
//
// Restrictions that keep a minimal automaton reachable: nodes appear in
// nondecreasing word count (a topological order), and no two nodes share a
// sequence (one could replace the other, saving a state).
class OrderedCpaSearch {
 public:
  OrderedCpaSearch(std::span<const std::uint64_t> counts, std::size_t states)
      : counts_(counts.begin(), counts.end()),
        sinks_(counts.size()),
        states_(states),
        total_(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0})) {}

  bool run() {
    nodes_.clear();
    for (std::size_t i = 0; i < sinks_; ++i)
      nodes_.push_back(Node{kNoState, kNoState, {static_cast<std::uint8_t>(i)}});
    if (states_ == sinks_) return sinks_ == 1 && total_ == 1;
    return place(sinks_);
  }

  OrderedCpa result() const {
    // Breadth-first renumbering from the root.
    const StateId root = static_cast<StateId>(states_ - 1);
    std::vector<StateId> id(states_, kNoState), order{root};
    id[root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Node& n = nodes_[order[head]];
      if (n.zero == kNoState) continue;
      for (StateId t : {n.zero, n.one})
        if (id[t] == kNoState) {
          id[t] = static_cast<StateId>(order.size());
          order.push_back(t);
        }
    }
    OrderedCpa out;
    out.states = states_;
    out.witness = Dfa(states_, 0);
    for (StateId v = 0; v < states_; ++v) {
      const Node& n = nodes_[v];
      if (n.zero == kNoState) {
        out.witness.set_final(id[v]);
      } else {
        out.witness.set_transition(id[v], Letter::zero, id[n.zero]);
        out.witness.set_transition(id[v], Letter::one, id[n.one]);
      }
    }
    for (std::size_t i = 0; i < sinks_; ++i) out.final_order.push_back(id[i]);
    return out;
  }

 private:
  struct Node {
    StateId zero, one;
    std::vector<std::uint8_t> labels;
  };

  bool place(std::size_t i) {
    if (i == states_) return accepts();
    const bool is_root = i + 1 == states_;
    const std::size_t floor = i > sinks_ ? nodes_[i - 1].labels.size() : 0;
    const std::size_t remaining = states_ - 1 - i;

    for (StateId z = 0; z < i; ++z) {
      for (StateId o = 0; o < i; ++o) {
        const auto& lz = nodes_[z].labels;
        const auto& lo = nodes_[o].labels;
        const std::size_t len = lz.size() + lo.size();
        if (len < floor) continue;
        if (is_root ? len != total_ : len >= total_) continue;
        if (!is_root && remaining < 63 && (std::uint64_t{len} << remaining) < total_) continue;

        std::vector<std::uint8_t> labels(lz);
        labels.insert(labels.end(), lo.begin(), lo.end());
        if (z > o) {
          // Swapped children with the same sequence were already tried.
          std::vector<std::uint8_t> swapped(lo);
          swapped.insert(swapped.end(), lz.begin(), lz.end());
          if (swapped == labels) continue;
        }
        bool duplicate = false;
        for (std::size_t j = sinks_; j < i && !duplicate; ++j) duplicate = nodes_[j].labels == labels;
        if (duplicate) continue;

        nodes_.push_back(Node{z, o, std::move(labels)});
        if (place(i + 1)) return true;
        nodes_.pop_back();
      }
    }
    return false;
  }

  bool accepts() const {
    // Every node reachable from the root.
    std::vector<char> seen(states_, 0);
    std::vector<StateId> todo{static_cast<StateId>(states_ - 1)};
    seen[states_ - 1] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
      const Node& n = nodes_[todo.back()];
      todo.pop_back();
      if (n.zero == kNoState) continue;
      for (StateId t : {n.zero, n.one})
        if (!seen[t]) {
          seen[t] = 1;
          ++reached;
          todo.push_back(t);
        }
    }
    if (reached != states_) return false;

    // A word to c_i counts for L_i iff every later word reaches some c_j, j >= i.
    std::vector<std::uint64_t> got(sinks_, 0);
    std::size_t later_min = std::numeric_limits<std::size_t>::max();
    const auto& labels = nodes_.back().labels;
    for (std::size_t p = labels.size(); p-- > 0;) {
      if (later_min >= labels[p]) ++got[labels[p]];
      later_min = std::min<std::size_t>(later_min, labels[p]);
    }
    return got == counts_;
  }

  std::vector<std::uint64_t> counts_;
  std::size_t sinks_;
  std::size_t states_;
  std::uint64_t total_;
  std::vector<Node> nodes_;
};

}  // namespace

OrderedCpa min_ordered_cpa(std::span<const std::uint64_t> counts, std::size_t max_states) {
  if (counts.empty()) throw PreconditionError("need at least one word count");
  if (std::find(counts.begin(), counts.end(), 0) != counts.end())
    throw PreconditionError("word counts must be positive");
  if (counts.size() > 255) throw SearchBoundExceeded("too many final states");
  std::uint64_t total = 0;
  for (auto m : counts) {
    if (m > (std::uint64_t{1} << 62) - total) throw SearchBoundExceeded("word counts too large");
    total += m;
  }
  for (std::size_t n = counts.size(); n <= max_states; ++n) {
    // n states give at most 2^(n-1) words.
    if (n - 1 < 63 && (std::uint64_t{1} << (n - 1)) < total) continue;
    OrderedCpaSearch search(counts, n);
    if (search.run()) return search.result();
  }
  throw SearchBoundExceeded("no automaton with at most " + std::to_string(max_states) + " states");
}

std::size_t min_size(const Cnf& alpha, std::size_t max_states) {
  if (alpha.is_zero()) throw PreconditionError("the ordinal 0 has no automaton");
  std::vector<std::uint64_t> counts;
  for (const Term& t : alpha.terms()) {
    if (t.coefficient > std::numeric_limits<std::uint64_t>::max())
      throw SearchBoundExceeded("coefficient too large for exhaustive search");
    counts.push_back(static_cast<std::uint64_t>(t.coefficient));
  }
  const std::size_t k = counts.size() - 1;
  return alpha.degree() - k + min_ordered_cpa(counts, max_states).states;
}

namespace {

class CpaEnumerator {
 public:
  CpaEnumerator(std::size_t states, const std::function<void(const Dfa&)>& visit)
      : a_(states, 0), states_(states), visit_(visit) {}

  void run() { expand(0, 1); }

 private:
  // States are numbered in breadth-first discovery order: state i's targets
  // are existing states or the next fresh id `discovered`.
  void expand(StateId i, std::size_t discovered) {
    if (i == discovered) {
      if (discovered == states_ && is_trim(a_)) visit_(a_);
      return;
    }
    a_.set_final(i);
    expand(i + 1, discovered);
    a_.set_final(i, false);

    for (StateId z = 0; z <= discovered && z < states_; ++z) {
      const std::size_t after_zero = discovered + (z == discovered ? 1 : 0);
      for (StateId o = 0; o <= after_zero && o < states_; ++o) {
        const std::size_t after_one = after_zero + (o == after_zero ? 1 : 0);
        a_.set_transition(i, Letter::zero, z);
        a_.set_transition(i, Letter::one, o);
        expand(i + 1, after_one);
      }
    }
    a_.clear_transition(i, Letter::zero);
    a_.clear_transition(i, Letter::one);
  }

  Dfa a_;
  std::size_t states_;
  const std::function<void(const Dfa&)>& visit_;
};

}  // namespace

void for_each_cpa(std::size_t states, const std::function<void(const Dfa&)>& visit) {
  if (states == 0) return;
  CpaEnumerator(states, visit).run();
}

}  // namespace ordaut
