#include "ordaut/condensation.hpp"

#include <algorithm>

namespace ordaut {

namespace {

// Iterative Tarjan. Emits components in reverse topological order.
std::vector<std::vector<StateId>> tarjan(const Dfa& a) {
  const std::size_t n = a.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<StateId> stack;
  std::vector<std::vector<StateId>> out;
  std::size_t counter = 0;

  struct Frame {
    StateId state;
    int next_letter;
  };
  std::vector<Frame> frames;

  for (StateId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_letter < 2) {
        StateId t = a.next(f.state, static_cast<Letter>(f.next_letter++));
        if (t == kNoState) continue;
        if (index[t] == kUnvisited) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = 1;
          frames.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.state] = std::min(low[f.state], index[t]);
        }
        continue;
      }
      StateId q = f.state;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().state] = std::min(low[frames.back().state], low[q]);
      if (low[q] == index[q]) {
        std::vector<StateId> comp;
        StateId m;
        do {
          m = stack.back();
          stack.pop_back();
          on_stack[m] = 0;
          comp.push_back(m);
        } while (m != q);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

Condensation condense(const Dfa& a) {
  auto sccs = tarjan(a);
  std::reverse(sccs.begin(), sccs.end());

  Condensation c;
  c.component_of.assign(a.size(), 0);
  c.components.resize(sccs.size());
  for (std::size_t i = 0; i < sccs.size(); ++i) {
    for (StateId q : sccs[i]) c.component_of[q] = i;
    c.topological_order.push_back(i);
  }
  for (std::size_t i = 0; i < sccs.size(); ++i) {
    Component& comp = c.components[i];
    comp.members = std::move(sccs[i]);
    if (comp.members.size() > 1) {
      comp.nontrivial = true;
    } else {
      StateId q = comp.members.front();
      comp.nontrivial = a.next(q, Letter::zero) == q || a.next(q, Letter::one) == q;
      comp.final_singleton = !comp.nontrivial && a.is_final(q);
    }
  }

  // below[i]: longest nontrivial chain strictly below component i.
  std::vector<std::size_t> below(c.components.size(), 0);
  for (std::size_t i = c.components.size(); i-- > 0;) {
    Component& comp = c.components[i];
    std::size_t best = 0;
    for (StateId q : comp.members) {
      for (Letter l : kLetters) {
        StateId t = a.next(q, l);
        if (t == kNoState) continue;
        std::size_t j = c.component_of[t];
        if (j == i) continue;
        const Component& succ = c.components[j];
        best = std::max(best, succ.nontrivial ? succ.height : below[j]);
      }
    }
    below[i] = best;
    if (comp.nontrivial) {
      comp.height = best + 1;
      c.max_height = std::max(c.max_height, comp.height);
    }
  }
  return c;
}

}  // namespace ordaut
