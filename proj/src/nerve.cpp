#include "twocat/nerve.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace twocat {

const SimplexLayout& layout(int p) {
  static std::map<int, SimplexLayout> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  SimplexLayout L;
  L.p = p;
  const int n = p + 1;
  L.edge_ix.assign(n * n, -1);
  L.tri_ix.assign(n * n * n, -1);
  int k = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) L.edge_ix[i * n + j] = k++;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) L.tri_ix[(i * n + j) * n + l] = k++;
  L.size = k;
  return cache.emplace(p, std::move(L)).first->second;
}

int simplex_edge(const TwoCategory& D, const Simplex& x, int p, int a, int b) {
  if (a == b) return D.id1(x[a]);
  return x[layout(p).edge(a, b)];
}

int simplex_tri(const TwoCategory& D, const Simplex& x, int p, int a, int b, int c) {
  if (a == b || b == c) return D.id2(simplex_edge(D, x, p, a, c));
  return x[layout(p).tri(a, b, c)];
}

Simplex pull_simplex(const TwoCategory& D, const Simplex& x, int p, const std::vector<int>& phi) {
  const int m = int(phi.size()) - 1;
  const SimplexLayout& L = layout(m);
  Simplex y(L.size);
  for (int i = 0; i <= m; ++i) y[i] = x[phi[i]];
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      y[L.edge(i, j)] = simplex_edge(D, x, p, phi[i], phi[j]);
      for (int k = j + 1; k <= m; ++k) y[L.tri(i, j, k)] = simplex_tri(D, x, p, phi[i], phi[j], phi[k]);
    }
  return y;
}

namespace {

bool tetra_ok(const TwoCategory& D, const SimplexLayout& L, const Simplex& x, int a, int b, int c, int d) {
  const int lhs = D.vcompose(D.whisker_l(x[L.edge(c, d)], x[L.tri(a, b, c)]), x[L.tri(a, c, d)]);
  const int rhs = D.vcompose(D.whisker_r(x[L.tri(b, c, d)], x[L.edge(a, b)]), x[L.tri(a, b, d)]);
  return lhs == rhs;
}

}  // namespace

void enumerate_simplices(const TwoCategory& D, int p, const std::vector<int>* fixed,
                         const std::function<void(const Simplex&)>& out) {
  const SimplexLayout& L = layout(p);
  Simplex x(L.size, -1);
  // Slot order: vertex k, then edges (i,k) for i descending, each followed
  // by the triangles (i,j,k), j ascending. Tetrahedron (a,b,c,d) is checked
  // at its last triangle (a,c,d).
  struct Slot {
    int kind, i, j, k;
  };
  std::vector<Slot> order;
  for (int k = 0; k <= p; ++k) {
    order.push_back({0, k, 0, 0});
    for (int i = k - 1; i >= 0; --i) {
      order.push_back({1, i, k, 0});
      for (int j = i + 1; j < k; ++j) order.push_back({2, i, j, k});
    }
  }
  const int n = int(order.size());
  auto pinned = [&](int slot) { return fixed ? (*fixed)[slot] : -1; };

  std::function<void(int)> rec = [&](int s) {
    if (s == n) {
      out(x);
      return;
    }
    const Slot& o = order[s];
    if (o.kind == 0) {
      const int v = pinned(o.i);
      if (v >= 0) {
        if (v >= D.num_objects()) return;
        x[o.i] = v;
        rec(s + 1);
      } else {
        for (int y = 0; y < D.num_objects(); ++y) {
          x[o.i] = y;
          rec(s + 1);
        }
      }
      x[o.i] = -1;
      return;
    }
    if (o.kind == 1) {
      const int slot = L.edge(o.i, o.j);
      const int v = pinned(slot);
      const auto& hom = D.hom(x[o.i], x[o.j]);
      if (v >= 0) {
        if (v >= D.num_one_cells() || D.one(v).src != x[o.i] || D.one(v).tgt != x[o.j]) return;
        x[slot] = v;
        rec(s + 1);
      } else {
        for (int f : hom) {
          x[slot] = f;
          rec(s + 1);
        }
      }
      x[slot] = -1;
      return;
    }
    const int slot = L.tri(o.i, o.j, o.k);
    const int src = x[L.edge(o.i, o.k)];
    const int tgt = D.compose(x[L.edge(o.j, o.k)], x[L.edge(o.i, o.j)]);
    auto try_cell = [&](int c) {
      x[slot] = c;
      for (int b = o.i + 1; b < o.j; ++b)
        if (!tetra_ok(D, L, x, o.i, b, o.j, o.k)) return;
      rec(s + 1);
    };
    const int v = pinned(slot);
    if (v >= 0) {
      if (v < D.num_two_cells() && D.two(v).src == src && D.two(v).tgt == tgt) try_cell(v);
    } else {
      for (int c : D.hom2(src, tgt)) try_cell(c);
    }
    x[slot] = -1;
  };
  rec(0);
}

std::vector<Simplex> enumerate_simplices(const TwoCategory& D, int p) {
  std::vector<Simplex> r;
  enumerate_simplices(D, p, nullptr, [&](const Simplex& x) { r.push_back(x); });
  return r;
}

bool is_simplex(const TwoCategory& D, int p, const Simplex& x) {
  const SimplexLayout& L = layout(p);
  if (int(x.size()) != L.size) return false;
  bool found = false;
  enumerate_simplices(D, p, &x, [&](const Simplex&) { found = true; });
  return found;
}

namespace {

bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  return std::includes(fine.begin(), fine.end(), coarse.begin(), coarse.end());
}

std::string path_name(const std::vector<int>& v) {
  if (v.size() == 1) return "1_" + std::to_string(v[0]);
  std::string s;
  for (int i : v) {
    if (!s.empty() && v.back() > 9) s += '.';
    s += std::to_string(i);
  }
  return s;
}

struct OrientalData {
  std::vector<std::vector<int>> paths;
  std::map<std::vector<int>, int> path_ix;
  std::map<std::pair<int, int>, int> cell2;
};

std::map<const TwoCategory*, OrientalData>& oriental_registry() {
  static std::map<const TwoCategory*, OrientalData> r;
  return r;
}
std::mutex registry_mu;

}  // namespace

TwoCatPtr materialize_oriental(int p, int bound) {
  if (p < 0 || p > bound) throw OrientalError("oriental dimension " + std::to_string(p) + " exceeds bound " +
                                              std::to_string(bound));
  static std::map<int, TwoCatPtr> cache;
  {
    std::lock_guard<std::mutex> lock(registry_mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  OrientalData od;
  TwoCategoryBuilder b;
  for (int i = 0; i <= p; ++i) b.add_object(std::to_string(i));
  for (int i = 0; i <= p; ++i)
    for (int j = i; j <= p; ++j) {
      std::vector<std::vector<int>> here;
      const int inner = std::max(0, j - i - 1);
      for (int mask = 0; mask < (1 << inner); ++mask) {
        if (i == j && mask) break;
        std::vector<int> v{i};
        for (int t = 0; t < inner; ++t)
          if (mask >> t & 1) v.push_back(i + 1 + t);
        if (j != i) v.push_back(j);
        here.push_back(v);
      }
      std::sort(here.begin(), here.end(), [](const auto& a, const auto& c) {
        return a.size() != c.size() ? a.size() < c.size() : a < c;
      });
      for (auto& v : here) {
        od.path_ix[v] = b.add_one_cell(path_name(v), i, j);
        od.paths.push_back(v);
      }
    }
  const int n1 = int(od.paths.size());
  for (int f = 0; f < n1; ++f) {
    const int id = b.add_two_cell("1_" + b.one(f).id, f, f);
    od.cell2[{f, f}] = id;
    for (int g = 0; g < n1; ++g)
      if (g != f && b.one(g).src == b.one(f).src && b.one(g).tgt == b.one(f).tgt && refines(od.paths[g], od.paths[f]))
        od.cell2[{f, g}] = b.add_two_cell(b.one(f).id + "⇒" + b.one(g).id, f, g);
  }
  for (int i = 0; i <= p; ++i) b.set_id1(i, od.path_ix.at({i}));
  for (int f = 0; f < n1; ++f) b.set_id2(f, od.cell2.at({f, f}));
  auto cat_path = [&](int g, int f) {
    std::vector<int> v = od.paths[f];
    v.insert(v.end(), od.paths[g].begin() + 1, od.paths[g].end());
    return od.path_ix.at(v);
  };
  auto lookup2 = [&](int s, int t) { return od.cell2.at({s, t}); };
  b.fill(cat_path, [&](int q, int a) { return lookup2(b.two(a).src, b.two(q).tgt); },
         [&](int k, int a) { return lookup2(cat_path(k, b.two(a).src), cat_path(k, b.two(a).tgt)); },
         [&](int a, int h) { return lookup2(cat_path(b.two(a).src, h), cat_path(b.two(a).tgt, h)); });
  auto c = std::make_shared<TwoCategory>(b.finish());
  c->construction = "oriental O(" + std::to_string(p) + ")";
  std::lock_guard<std::mutex> lock(registry_mu);
  oriental_registry()[c.get()] = std::move(od);
  cache[p] = c;
  return c;
}

std::vector<int> oriental_path(const TwoCategory& Op, int f) {
  std::lock_guard<std::mutex> lock(registry_mu);
  return oriental_registry().at(&Op).paths[f];
}

TwoFunctor oriental_map(TwoCatPtr Oq, TwoCatPtr Op, const std::vector<int>& phi) {
  std::lock_guard<std::mutex> lock(registry_mu);
  const OrientalData &A = oriental_registry().at(Oq.get()), &B = oriental_registry().at(Op.get());
  TwoFunctor F;
  F.source = Oq;
  F.target = Op;
  for (int i = 0; i < Oq->num_objects(); ++i) F.on0.push_back(phi[i]);
  for (auto& v : A.paths) {
    std::vector<int> w;
    for (int i : v)
      if (w.empty() || w.back() != phi[i]) w.push_back(phi[i]);
    F.on1.push_back(B.path_ix.at(w));
  }
  for (int a = 0; a < Oq->num_two_cells(); ++a)
    F.on2.push_back(B.cell2.at({F.on1[Oq->two(a).src], F.on1[Oq->two(a).tgt]}));
  return F;
}

TwoFunctor simplex_functor(TwoCatPtr Op, TwoCatPtr Dp, const Simplex& x) {
  const TwoCategory& D = *Dp;
  const int p = Op->num_objects() - 1;
  TwoFunctor F;
  F.source = Op;
  F.target = Dp;
  for (int i = 0; i <= p; ++i) F.on0.push_back(x[i]);
  std::vector<std::vector<int>> paths;
  for (int f = 0; f < Op->num_one_cells(); ++f) paths.push_back(oriental_path(*Op, f));
  for (auto& v : paths) {
    int c = D.id1(x[v[0]]);
    for (std::size_t t = 1; t < v.size(); ++t) c = D.compose(simplex_edge(D, x, p, v[t - 1], v[t]), c);
    F.on1.push_back(c);
  }
  // Insert the missing vertices of the finer path left to right; each step
  // whiskers one triangle by the already fixed prefix and suffix.
  for (int a = 0; a < Op->num_two_cells(); ++a) {
    std::vector<int> cur = paths[Op->two(a).src];
    const std::vector<int>& fine = paths[Op->two(a).tgt];
    int cell = D.id2(F.on1[Op->two(a).src]);
    for (int v : fine) {
      if (std::binary_search(cur.begin(), cur.end(), v)) continue;
      auto pos = std::upper_bound(cur.begin(), cur.end(), v);
      const int lo = *(pos - 1), hi = *pos;
      int prefix = D.id1(x[cur[0]]);
      for (auto it = cur.begin(); *it != lo; ++it) prefix = D.compose(simplex_edge(D, x, p, *it, *(it + 1)), prefix);
      int suffix = D.id1(x[hi]);
      for (auto it = pos; it + 1 != cur.end(); ++it) suffix = D.compose(simplex_edge(D, x, p, *it, *(it + 1)), suffix);
      const int step = D.whisker_r(D.whisker_l(suffix, simplex_tri(D, x, p, lo, v, hi)), prefix);
      cell = D.vcompose(step, cell);
      cur.insert(pos, v);
    }
    F.on2.push_back(cell);
  }
  return F;
}

void TruncSimplicialSet::mark_degenerate() {
  degenerate.assign(N + 1, {});
  for (int n = 0; n <= N; ++n) {
    degenerate[n].assign(count[n], 0);
    if (n == 0) continue;
    for (int x = 0; x < count[n]; ++x)
      for (int i = 0; i < n && !degenerate[n][x]; ++i)
        if (degen[n - 1][i][face[n][i][x]] == x) degenerate[n][x] = 1;
  }
}

std::string check_simplicial_identities(const TruncSimplicialSet& X) {
  auto d = [&](int n, int i, int x) { return X.face[n][i][x]; };
  auto s = [&](int n, int i, int x) { return X.degen[n][i][x]; };
  auto fail = [](const std::string& what, int n, int x) {
    return what + " at level " + std::to_string(n) + " simplex " + std::to_string(x);
  };
  for (int n = 2; n <= X.N; ++n)
    for (int x = 0; x < X.count[n]; ++x)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x))) return fail("d_i d_j", n, x);
  for (int n = 0; n + 1 <= X.N; ++n)
    for (int x = 0; x < X.count[n]; ++x)
      for (int j = 0; j <= n; ++j) {
        const int y = s(n, j, x);
        for (int i = 0; i <= n + 1; ++i) {
          const int z = d(n + 1, i, y);
          if (i == j || i == j + 1) {
            if (z != x) return fail("d_j s_j", n, x);
          } else if (i < j) {
            if (z != s(n - 1, j - 1, d(n, i, x))) return fail("d_i s_j", n, x);
          } else if (z != s(n - 1, j, d(n, i - 1, x))) {
            return fail("d_i s_j", n, x);
          }
        }
        if (n + 2 <= X.N)
          for (int i = 0; i <= j; ++i)
            if (s(n + 1, i, y) != s(n + 1, j + 1, s(n, i, x))) return fail("s_i s_j", n, x);
      }
  return {};
}

Nerve nerve(TwoCatPtr Dp, int N) {
  const TwoCategory& D = *Dp;
  Nerve r;
  r.cat = Dp;
  r.N = N;
  r.simplices.resize(N + 1);
  r.index.resize(N + 1);
  for (int p = 0; p <= N; ++p) {
    enumerate_simplices(D, p, nullptr, [&](const Simplex& x) {
      r.index[p][x] = int(r.simplices[p].size());
      r.simplices[p].push_back(x);
    });
  }
  TruncSimplicialSet& X = r.sset;
  X.N = N;
  for (int p = 0; p <= N; ++p) X.count.push_back(int(r.simplices[p].size()));
  X.face.resize(N + 1);
  X.degen.resize(N + 1);
  for (int p = 1; p <= N; ++p) {
    X.face[p].assign(p + 1, std::vector<int>(X.count[p]));
    for (int i = 0; i <= p; ++i) {
      std::vector<int> phi;
      for (int k = 0; k <= p; ++k)
        if (k != i) phi.push_back(k);
      for (int x = 0; x < X.count[p]; ++x) X.face[p][i][x] = r.find(p - 1, pull_simplex(D, r.simplices[p][x], p, phi));
    }
  }
  for (int p = 0; p + 1 <= N; ++p) {
    X.degen[p].assign(p + 1, std::vector<int>(X.count[p]));
    for (int i = 0; i <= p; ++i) {
      std::vector<int> phi;
      for (int k = 0; k <= p + 1; ++k) phi.push_back(k <= i ? k : k - 1);
      for (int x = 0; x < X.count[p]; ++x) X.degen[p][i][x] = r.find(p + 1, pull_simplex(D, r.simplices[p][x], p, phi));
    }
  }
  X.mark_degenerate();
  return r;
}

std::vector<std::vector<int>> nerve_map(const Nerve& A, const Nerve& B, const NormalPseudofunctor& F) {
  const TwoCategory& D = F.tgt();
  const TwoFunctor& m = F.maps;
  std::vector<std::vector<int>> r(A.N + 1);
  for (int p = 0; p <= std::min(A.N, B.N); ++p) {
    const SimplexLayout& L = layout(p);
    for (const Simplex& x : A.simplices[p]) {
      Simplex y(L.size);
      for (int i = 0; i <= p; ++i) y[i] = m.on0[x[i]];
      for (int i = 0; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
          y[L.edge(i, j)] = m.on1[x[L.edge(i, j)]];
          for (int k = j + 1; k <= p; ++k) {
            const int c = F.F2(x[L.edge(j, k)], x[L.edge(i, j)]);
            y[L.tri(i, j, k)] = D.vcompose(D.inverse2(c), m.on2[x[L.tri(i, j, k)]]);
          }
        }
      const int ix = B.find(p, y);
      if (ix < 0) throw AxiomError("nerve-map", "image of a simplex is not a simplex");
      r[p].push_back(ix);
    }
  }
  return r;
}

std::string simplex_name(const TwoCategory& D, int p, const Simplex& x) {
  const SimplexLayout& L = layout(p);
  std::vector<std::string> parts;
  for (int i = 0; i <= p; ++i) parts.push_back(D.object(x[i]));
  for (int i = 0; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) parts.push_back(D.one(x[L.edge(i, j)]).id);
  for (int i = 0; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j)
      for (int k = j + 1; k <= p; ++k) parts.push_back(D.two(x[L.tri(i, j, k)]).id);
  return bracket(parts);
}

}  // namespace twocat
