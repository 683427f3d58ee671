#include "halin/embedding.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace halin {

namespace {

int pendant_vertex(int ell, int i) { return ell + 1 + i; }  // p_i, i = 1..ell

}  // namespace

EmbeddedGraph build_halin(const ParamTuple& params, TreeStrategy tree) {
  params.require_strict();
  const int k = params.k();

  // Run lengths of consecutive same-direction pendants, alternating
  // up/down starting "up".
  std::vector<int> runs;
  if (k == 1) {
    runs.push_back(params.m[0] - 1);
  } else {
    runs.push_back(params.m[0]);
    for (int i = 1; i < k - 1; ++i) runs.push_back(params.m[i] + 1);
    runs.push_back(params.m[k - 1]);
  }
  int ell = 0;
  for (int r : runs) ell += r;

  EmbeddedGraph g;
  g.ell = ell;
  g.num_vertices = 2 * ell + 2;
  g.vertex_roles.assign(g.num_vertices, VertexRole::kLeaf);
  for (int i = 1; i <= ell; ++i) g.vertex_roles[i] = VertexRole::kSpine;

  std::vector<std::uint8_t> up(ell + 1, 0);  // up[i] for leg i = 1..ell
  {
    int i = 1;
    for (std::size_t r = 0; r < runs.size(); ++r)
      for (int j = 0; j < runs[r]; ++j) up[i++] = (r % 2 == 0);
  }

  auto add_edge = [&](int u, int v, EdgeRole role) {
    g.edges.push_back({u, v, role});
    return static_cast<int>(g.edges.size()) - 1;
  };
  std::vector<int> spine(ell + 1), pend(ell + 1, -1);
  for (int i = 0; i <= ell; ++i) spine[i] = add_edge(i, i + 1, EdgeRole::kSpine);
  for (int i = 1; i <= ell; ++i)
    pend[i] = add_edge(i, pendant_vertex(ell, i), EdgeRole::kPendant);

  // Outer cycle: s_0, up leaves left to right, s_{ell+1}, down leaves right
  // to left.
  std::vector<int> cyc_nodes;
  cyc_nodes.push_back(0);
  for (int i = 1; i <= ell; ++i)
    if (up[i]) cyc_nodes.push_back(pendant_vertex(ell, i));
  cyc_nodes.push_back(ell + 1);
  for (int i = ell; i >= 1; --i)
    if (!up[i]) cyc_nodes.push_back(pendant_vertex(ell, i));

  // Per cycle vertex: the cycle edge arriving at it and the one leaving it.
  std::vector<int> cyc_in(g.num_vertices, -1), cyc_out(g.num_vertices, -1);
  const int nc = static_cast<int>(cyc_nodes.size());
  for (int j = 0; j < nc; ++j) {
    int u = cyc_nodes[j], v = cyc_nodes[(j + 1) % nc];
    int eid = add_edge(u, v, EdgeRole::kCycle);
    cyc_out[u] = eid;
    cyc_in[v] = eid;
  }

  // Reference rotation of the defining plane drawing.
  g.rotation.assign(g.num_vertices, {-1, -1, -1});
  g.rotation[0] = {spine[0], cyc_out[0], cyc_in[0]};
  g.rotation[ell + 1] = {cyc_in[ell + 1], spine[ell], cyc_out[ell + 1]};
  for (int i = 1; i <= ell; ++i) {
    const int p = pendant_vertex(ell, i);
    if (up[i]) {
      g.rotation[i] = {spine[i], pend[i], spine[i - 1]};
      g.rotation[p] = {cyc_out[p], cyc_in[p], pend[i]};
    } else {
      g.rotation[i] = {spine[i], spine[i - 1], pend[i]};
      g.rotation[p] = {cyc_in[p], pend[i], cyc_out[p]};
    }
  }

  // Spanning tree: breadth-first from s_0, or depth-first from s_{ell+1}.
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
  for (int eid = 0; eid < g.num_edges(); ++eid) {
    adj[g.edges[eid].u].emplace_back(g.edges[eid].v, eid);
    adj[g.edges[eid].v].emplace_back(g.edges[eid].u, eid);
  }
  const bool dfs = tree == TreeStrategy::kDfsFromBack;
  const int root = dfs ? ell + 1 : 0;
  std::vector<std::uint8_t> seen(g.num_vertices, 0);
  seen[root] = 1;
  g.in_tree.assign(g.num_edges(), 0);
  std::deque<int> frontier{root};
  while (!frontier.empty()) {
    int x;
    if (dfs) {
      x = frontier.back();
      frontier.pop_back();
    } else {
      x = frontier.front();
      frontier.pop_front();
    }
    for (auto [y, eid] : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        g.in_tree[eid] = 1;
        frontier.push_back(y);
      }
    }
  }
  for (int eid = 0; eid < g.num_edges(); ++eid)
    if (!g.in_tree[eid]) g.cotree.push_back(eid);
  if (g.betti() != params.k() + static_cast<int>(params.sum()))
    throw std::logic_error("co-tree size does not match k + sum(m)");
  return g;
}

namespace {

// Per-graph dart tables: succ[f][side][dart] is the next dart of the face
// walk when the head vertex has rotation bit f and the carried side is
// `side` (0 picks the next edge in the rotation, 1 the previous one).  A
// dart is a directed edge 2*eid + d; its head is v for d = 0, u for d = 1.
struct DartTables {
  explicit DartTables(const EmbeddedGraph& g) {
    const int ne = g.num_edges();
    ndarts = 2 * ne;
    head.resize(ndarts);
    for (int e = 0; e < ne; ++e) {
      head[2 * e + 0] = g.edges[e].v;
      head[2 * e + 1] = g.edges[e].u;
    }
    for (int f = 0; f < 2; ++f)
      for (int s = 0; s < 2; ++s) succ[f][s].resize(ndarts);
    for (int dart = 0; dart < ndarts; ++dart) {
      const int e = dart >> 1;
      const int h = head[dart];
      std::array<int, 3> order = g.rotation[h];
      int j = 0;
      while (order[j] != e) ++j;
      for (int f = 0; f < 2; ++f) {
        std::array<int, 3> rot = order;
        if (f) std::reverse(rot.begin(), rot.end());
        int jj = 0;
        while (rot[jj] != e) ++jj;
        for (int s = 0; s < 2; ++s) {
          const int next_e = rot[(jj + (s == 0 ? 1 : 2)) % 3];
          const int d2 = g.edges[next_e].u == h ? 0 : 1;  // leaves the head vertex
          succ[f][s][dart] = 2 * next_e + d2;
        }
      }
    }
  }

  int ndarts;
  std::vector<int> head;
  std::vector<int> succ[2][2];
};

// Count face orbits for one system, using successor tables already resolved
// for the per-vertex rotation bits.  States are 2*dart + side.
int count_faces(const std::vector<int>& succ_side0, const std::vector<int>& succ_side1,
                const std::vector<std::uint8_t>& twist, std::vector<std::uint64_t>& seen) {
  const int nstates = 2 * static_cast<int>(succ_side0.size());
  std::fill(seen.begin(), seen.end(), 0);
  int orbits = 0;
  for (int s0 = 0; s0 < nstates; ++s0) {
    if ((seen[s0 >> 6] >> (s0 & 63)) & 1u) continue;
    ++orbits;
    int st = s0;
    while (!((seen[st >> 6] >> (st & 63)) & 1u)) {
      seen[st >> 6] |= std::uint64_t{1} << (st & 63);
      const int dart = st >> 1;
      const int side = (st & 1) ^ twist[dart >> 1];
      const int next_dart = side == 0 ? succ_side0[dart] : succ_side1[dart];
      st = 2 * next_dart + side;
    }
  }
  if (orbits % 2 != 0) throw std::logic_error("face orbit count must be even");
  return orbits / 2;
}

}  // namespace

int trace_faces(const EmbeddedGraph& g, const RotationSystem& rs) {
  if (static_cast<int>(rs.flip.size()) != g.num_vertices ||
      static_cast<int>(rs.twist.size()) != g.num_edges())
    throw std::invalid_argument("rotation system does not match the graph");
  DartTables tab(g);
  std::vector<int> s0(tab.ndarts), s1(tab.ndarts);
  for (int dart = 0; dart < tab.ndarts; ++dart) {
    const int f = rs.flip[tab.head[dart]] & 1;
    s0[dart] = tab.succ[f][0][dart];
    s1[dart] = tab.succ[f][1][dart];
  }
  std::vector<std::uint64_t> seen((2 * tab.ndarts + 63) / 64);
  return count_faces(s0, s1, rs.twist, seen);
}

int euler_genus_of(const EmbeddedGraph& g, const RotationSystem& rs) {
  const int genus = 2 - g.num_vertices + g.num_edges() - trace_faces(g, rs);
  if (genus < 0 || genus > g.betti())
    throw std::logic_error("Euler genus " + std::to_string(genus) +
                           " outside [0, " + std::to_string(g.betti()) + "]");
  return genus;
}

GenusPoly embedding_distribution(const ParamTuple& params, const EmbedOptions& options) {
  const EmbeddedGraph g = build_halin(params, options.tree);
  const int nv = g.num_vertices;
  const int beta = g.betti();
  const int bits = nv + beta;
  if (bits > options.budget_bits)
    throw BudgetError("embedding enumeration for tuple (" + params.to_string() + ") needs " +
                      std::to_string(bits) + " system bits (|V|+beta); budget is " +
                      std::to_string(options.budget_bits) + " bits");

  const DartTables tab(g);
  const std::uint64_t total = std::uint64_t{1} << bits;
  const int workers = std::max(1, options.threads);
  std::vector<std::vector<std::uint64_t>> hists(workers,
                                                std::vector<std::uint64_t>(beta + 1, 0));

  // System index c: high nv bits = per-vertex rotation bits, low beta bits =
  // twists of the co-tree edges.  Contiguous ranges per worker; exact
  // histogram merge makes the result independent of the partition.
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& hist) {
    std::vector<int> s0(tab.ndarts), s1(tab.ndarts);
    std::vector<std::uint8_t> twist(g.num_edges(), 0);
    std::vector<std::uint64_t> seen((2 * tab.ndarts + 63) / 64);
    std::uint64_t cur_flips = ~std::uint64_t{0};
    for (std::uint64_t c = lo; c < hi; ++c) {
      const std::uint64_t flips = c >> beta;
      if (flips != cur_flips) {
        cur_flips = flips;
        for (int dart = 0; dart < tab.ndarts; ++dart) {
          const int f = static_cast<int>((flips >> tab.head[dart]) & 1u);
          s0[dart] = tab.succ[f][0][dart];
          s1[dart] = tab.succ[f][1][dart];
        }
      }
      const std::uint64_t tbits = c & ((std::uint64_t{1} << beta) - 1);
      for (int j = 0; j < beta; ++j) twist[g.cotree[j]] = (tbits >> j) & 1u;
      const int faces = count_faces(s0, s1, twist, seen);
      const int genus = 2 - nv + g.num_edges() - faces;
      if (genus < 0 || genus > beta)
        throw std::logic_error("Euler genus outside [0, beta] during enumeration");
      hist[genus]++;
    }
  };

  if (workers == 1) {
    run_range(0, total, hists[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      std::uint64_t hi = lo + total / workers + (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
      pool.emplace_back(run_range, lo, hi, std::ref(hists[w]));
    }
    for (auto& t : pool) t.join();
  }

  std::vector<BigInt> coeffs(beta + 1);
  for (int w = 0; w < workers; ++w)
    for (int r = 0; r <= beta; ++r) coeffs[r] += hists[w][r];
  return GenusPoly(std::move(coeffs));
}

std::string graph_json(const EmbeddedGraph& g) {
  nlohmann::json out;
  out["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.num_vertices; ++v)
    out["vertices"].push_back(
        {{"id", v}, {"role", g.vertex_roles[v] == VertexRole::kSpine ? "spine" : "leaf"}});
  out["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges) {
    const char* role = e.role == EdgeRole::kSpine     ? "spine"
                       : e.role == EdgeRole::kPendant ? "pendant"
                                                      : "cycle";
    out["edges"].push_back({{"u", e.u}, {"v", e.v}, {"role", role}});
  }
  return out.dump();
}

}  // namespace halin
