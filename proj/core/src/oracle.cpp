#include "triclub/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace triclub::oracle {

namespace {

using Mask = std::uint32_t;

struct Bits {
  int n = 0;
  std::vector<Mask> adj;
};

Bits to_bits(int n, const EdgeList& edges) {
  if (n < 0 || n > max_vertices) throw std::invalid_argument("oracle: vertex count outside [0, max_vertices]");
  Bits b{n, std::vector<Mask>(static_cast<std::size_t>(n), 0)};
  for (auto [u, w] : edges) {
    if (u < 0 || w < 0 || u >= n || w >= n) throw std::invalid_argument("oracle: edge endpoint out of range");
    if (u == w) continue;
    b.adj[static_cast<std::size_t>(u)] |= Mask{1} << w;
    b.adj[static_cast<std::size_t>(w)] |= Mask{1} << u;
  }
  return b;
}

/// Every pair of vertices of `set` is joined by a path of length <= 2 using
/// `adj` (already restricted to the set).
bool diameter_two(const std::vector<Mask>& adj, Mask set) {
  for (Mask rest = set; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    Mask reach = (Mask{1} << v) | adj[static_cast<std::size_t>(v)];
    for (Mask nb = adj[static_cast<std::size_t>(v)]; nb; nb &= nb - 1)
      reach |= adj[static_cast<std::size_t>(std::countr_zero(nb))];
    if ((reach & set) != set) return false;
  }
  return true;
}

std::vector<Mask> restrict_to(const Bits& b, Mask set) {
  std::vector<Mask> adj(static_cast<std::size_t>(b.n), 0);
  for (Mask rest = set; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    adj[static_cast<std::size_t>(v)] = b.adj[static_cast<std::size_t>(v)] & set;
  }
  return adj;
}

bool check(const Bits& b, Mask set, int ell, Kind kind, EdgeList* witness) {
  const int size = std::popcount(set);
  if (size == 0) return true;
  if (size == 1) return ell == 0;
  auto adj = restrict_to(b, set);

  if (kind == Kind::vertex) {
    if (!diameter_two(adj, set)) return false;
    for (Mask rest = set; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      int twice = 0;
      for (Mask nb = adj[v]; nb; nb &= nb - 1)
        twice += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(nb))] & adj[v]);
      if (twice / 2 < ell) return false;
    }
    return true;
  }

  // Edge peel: drop edges in fewer than ell triangles until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < b.n; ++u) {
      for (Mask nb = adj[static_cast<std::size_t>(u)]; nb; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        if (w < u) continue;
        if (std::popcount(adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(w)]) < ell) {
          adj[static_cast<std::size_t>(u)] &= ~(Mask{1} << w);
          adj[static_cast<std::size_t>(w)] &= ~(Mask{1} << u);
          changed = true;
        }
      }
    }
  }
  if (!diameter_two(adj, set)) return false;
  if (witness) {
    witness->clear();
    for (int u = 0; u < b.n; ++u)
      for (Mask nb = adj[static_cast<std::size_t>(u)]; nb; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        if (u < w) witness->emplace_back(u, w);
      }
  }
  return true;
}

Result make_result(const Bits& b, Mask set, int ell, Kind kind) {
  Result r;
  r.size = std::popcount(set);
  for (Mask rest = set; rest; rest &= rest - 1) r.vertices.push_back(std::countr_zero(rest));
  if (kind == Kind::edge) check(b, set, ell, kind, &r.witness_edges);
  return r;
}

/// Searches sizes from n down to `min_size`, each size in increasing mask
/// order, for a valid superset of `required`.
std::optional<Result> search(const Bits& b, int ell, Kind kind, Mask required, int min_size) {
  const int free_count = b.n - std::popcount(required);
  const Mask universe = b.n == 32 ? ~Mask{0} : (Mask{1} << b.n) - 1;
  const Mask free_bits = universe & ~required;
  std::vector<int> free_ids;
  for (Mask rest = free_bits; rest; rest &= rest - 1) free_ids.push_back(std::countr_zero(rest));

  for (int extra = free_count; extra >= 0; --extra) {
    const int size = extra + std::popcount(required);
    if (size < min_size) break;
    // Gosper's hack over combinations of the free vertices.
    std::uint64_t combo = extra == 0 ? 0 : (std::uint64_t{1} << extra) - 1;
    const std::uint64_t limit = std::uint64_t{1} << free_count;
    while (combo < limit) {
      Mask set = required;
      for (std::uint64_t c = combo; c; c &= c - 1) set |= Mask{1} << free_ids[static_cast<std::size_t>(std::countr_zero(c))];
      if (check(b, set, ell, kind, nullptr)) return make_result(b, set, ell, kind);
      if (combo == 0) break;
      const std::uint64_t low = combo & (~combo + 1);
      const std::uint64_t ripple = combo + low;
      combo = (((ripple ^ combo) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_triangle_two_club(int n, const EdgeList& edges, const std::vector<int>& subset, int ell, Kind kind,
                          EdgeList* witness) {
  const auto b = to_bits(n, edges);
  Mask set = 0;
  for (int v : subset) {
    if (v < 0 || v >= n) throw std::invalid_argument("oracle: subset vertex out of range");
    set |= Mask{1} << v;
  }
  if (witness) witness->clear();
  return check(b, set, ell, kind, witness);
}

Result brute_force_opt(int n, const EdgeList& edges, int ell, Kind kind) {
  if (ell < 0) throw std::invalid_argument("oracle: ell must be non-negative");
  const auto b = to_bits(n, edges);
  auto found = search(b, ell, kind, 0, 1);
  return found ? std::move(*found) : Result{};
}

std::optional<Result> brute_force_constrained(int n, const EdgeList& edges, int ell, Kind kind,
                                              const std::vector<int>& must_contain, int k) {
  if (ell < 0) throw std::invalid_argument("oracle: ell must be non-negative");
  const auto b = to_bits(n, edges);
  Mask required = 0;
  for (int v : must_contain) {
    if (v < 0 || v >= n) throw std::invalid_argument("oracle: required vertex out of range");
    required |= Mask{1} << v;
  }
  return search(b, ell, kind, required, std::max(k + 1, 1));
}

}  // namespace triclub::oracle
