#include "mct/chain.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mct/error.hpp"

namespace mct::chain {

namespace {

using Pmf = std::vector<std::pair<double, double>>;

// Differences of lattice values pick up rounding noise; snap them to 1e-9.
double canonical(double v) {
  const double r = std::round(v * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

Pmf entry_pmf(const Distribution& d, const char* name) {
  if (!has_finite_support(d) && !d.is<Geometric>())
    throw Error(Errc::InvalidModel, std::string("entry ") + name + " (" + describe(d) +
                                        ") does not have finite or truncatable discrete support");
  return discrete_pmf(d);
}

// Law of max(a, y + b) for independent a, b.
std::map<double, double> max_shifted(const Pmf& a, const Pmf& b, double y) {
  std::map<double, double> out;
  for (const auto& [va, pa] : a)
    for (const auto& [vb, pb] : b) out[canonical(std::max(va, y + vb))] += pa * pb;
  return out;
}

// Iterative Tarjan; returns the component id of every node.
std::vector<std::size_t> strongly_connected(const std::vector<std::vector<std::size_t>>& adj,
                                            std::size_t& count) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next = 0;
  count = 0;
  struct Frame {
    std::size_t node;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[f.node].size()) {
        const std::size_t w = adj[f.node][f.edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const std::size_t v = f.node;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

DifferenceChain build_chain(const MatrixModel& m, std::size_t max_states) {
  const Pmf alpha = entry_pmf(m.a11, "a11");
  const Pmf beta = entry_pmf(m.a12, "a12");
  const Pmf gamma = entry_pmf(m.a21, "a21");
  const Pmf delta = entry_pmf(m.a22, "a22");

  // Breadth-first closure of Y from Y(0) = 0 under
  //   X = max(alpha, Y + beta),  Y' = max(gamma, Y + delta) - X.
  std::map<double, std::size_t> index{{0.0, 0}};
  std::vector<double> states{0.0};
  std::vector<std::map<double, double>> rows;
  std::vector<double> increment;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double y = states[i];
    const auto x = max_shifted(alpha, beta, y);
    const auto v = max_shifted(gamma, delta, y);
    double ex = 0.0;
    for (const auto& [value, p] : x) ex += value * p;
    increment.push_back(ex);
    std::map<double, double> row;
    for (const auto& [xv, px] : x)
      for (const auto& [vv, pv] : v) {
        const double p = px * pv;
        if (p == 0.0) continue;
        const double next = canonical(vv - xv);
        row[next] += p;
        if (index.emplace(next, states.size()).second) {
          states.push_back(next);
          if (states.size() > max_states)
            throw Error(Errc::SupportExplosion,
                        "more than " + std::to_string(max_states) + " reachable states");
        }
      }
    rows.push_back(std::move(row));
  }

  // Reorder ascending; std::map iteration is already sorted.
  DifferenceChain ch;
  const std::size_t n = states.size();
  std::vector<std::size_t> rank(n);
  std::size_t r = 0;
  for (auto& [value, i] : index) {
    rank[i] = r++;
    ch.support.push_back(value);
  }
  ch.transition = DenseMatrix(n, n);
  ch.increment_mean.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    ch.increment_mean[rank[i]] = increment[i];
    for (const auto& [next, p] : rows[i]) ch.transition(rank[i], rank[index.at(next)]) += p;
  }
  return ch;
}

std::vector<double> stationary(const DifferenceChain& ch) {
  const std::size_t n = ch.support.size();
  if (n == 0) throw Error(Errc::InvalidArgument, "empty chain");
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (ch.transition(i, j) > 0.0) adj[i].push_back(j);

  std::size_t count = 0;
  const auto comp = strongly_connected(adj, count);
  std::vector<bool> closed(count, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : adj[i])
      if (comp[j] != comp[i]) closed[comp[i]] = false;
  const auto closed_count = static_cast<std::size_t>(std::count(closed.begin(), closed.end(), true));
  if (closed_count != 1)
    throw Error(Errc::SingularMatrix,
                "chain has " + std::to_string(closed_count) + " closed classes; expected one");
  const auto cls = static_cast<std::size_t>(std::find(closed.begin(), closed.end(), true) - closed.begin());

  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < n; ++i)
    if (comp[i] == cls) members.push_back(i);
  const std::size_t k = members.size();

  // pi (P - I) = 0 on the closed class; the first equation becomes sum(pi) = 1.
  DenseMatrix a(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      a(r, c) = ch.transition(members[c], members[r]) - (r == c ? 1.0 : 0.0);
  for (std::size_t c = 0; c < k; ++c) a(0, c) = 1.0;
  std::vector<double> rhs(k, 0.0);
  rhs[0] = 1.0;
  const auto pi_closed = solve_linear(a, rhs);

  std::vector<double> pi(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) pi[members[i]] = pi_closed[i];
  return pi;
}

Rate lambda_discrete(const MatrixModel& m) {
  const auto ch = build_chain(m);
  const auto pi = stationary(ch);
  double lambda = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) lambda += pi[i] * ch.increment_mean[i];
  return {lambda};
}

}  // namespace mct::chain
