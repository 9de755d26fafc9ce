// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// Small directed-graph helpers: strongly connected components and
// reachability on adjacency lists.

#ifndef SHIFTCAT_DETAIL_GRAPH_HPP_
#define SHIFTCAT_DETAIL_GRAPH_HPP_

#include <algorithm>  // for min
#include <cstddef>    // for size_t
#include <limits>     // for numeric_limits
#include <utility>    // for pair
#include <vector>     // for vector

namespace shiftcat::detail {

  using Adjacency = std::vector<std::vector<std::size_t>>;

  struct Components {
    // id[v] is the component of v; components are numbered in order of
    // their least vertex.
    std::vector<std::size_t> id;
    std::size_t              count = 0;
  };

  // Iterative Tarjan.
  inline Components strongly_connected_components(Adjacency const& adj) {
    constexpr std::size_t    undefined = std::numeric_limits<std::size_t>::max();
    std::size_t const        n         = adj.size();
    std::vector<std::size_t> index(n, undefined), low(n, 0), raw(n, undefined);
    std::vector<bool>        on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    std::size_t                                      next = 0, ncomp = 0;

    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] != undefined) {
        continue;
      }
      frames.emplace_back(root, 0);
      while (!frames.empty()) {
        auto& [v, pos] = frames.back();
        if (pos == 0 && index[v] == undefined) {
          index[v] = low[v] = next++;
          stack.push_back(v);
          on_stack[v] = true;
        }
        if (pos < adj[v].size()) {
          std::size_t w = adj[v][pos++];
          if (index[w] == undefined) {
            frames.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            raw[w]      = ncomp;
          } while (w != v);
          ++ncomp;
        }
        std::size_t done = v;
        frames.pop_back();
        if (!frames.empty()) {
          std::size_t parent = frames.back().first;
          low[parent]        = std::min(low[parent], low[done]);
        }
      }
    }

    Components               result;
    std::vector<std::size_t> renumber(ncomp, undefined);
    result.id.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (renumber[raw[v]] == undefined) {
        renumber[raw[v]] = result.count++;
      }
      result.id[v] = renumber[raw[v]];
    }
    return result;
  }

  // Vertices reachable from the given sources (sources included).
  inline std::vector<bool> reachable(Adjacency const&                adj,
                                     std::vector<std::size_t> const& sources) {
    std::vector<bool>        seen(adj.size(), false);
    std::vector<std::size_t> todo;
    for (auto s : sources) {
      if (!seen[s]) {
        seen[s] = true;
        todo.push_back(s);
      }
    }
    while (!todo.empty()) {
      std::size_t v = todo.back();
      todo.pop_back();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          todo.push_back(w);
        }
      }
    }
    return seen;
  }

  // Transitive-reflexive closure of the condensation: reach[c][d] is true
  // when component d is reachable from component c.
  inline std::vector<std::vector<bool>> component_reachability(
      Adjacency const&  adj,
      Components const& comps) {
    Adjacency cadj(comps.count);
    for (std::size_t v = 0; v < adj.size(); ++v) {
      for (auto w : adj[v]) {
        if (comps.id[v] != comps.id[w]) {
          cadj[comps.id[v]].push_back(comps.id[w]);
        }
      }
    }
    std::vector<std::vector<bool>> reach(comps.count);
    for (std::size_t c = 0; c < comps.count; ++c) {
      reach[c] = reachable(cadj, {c});
    }
    return reach;
  }

}  // namespace shiftcat::detail

#endif  // SHIFTCAT_DETAIL_GRAPH_HPP_
