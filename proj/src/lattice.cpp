#include "twocat/lattice.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace twocat {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = int(rows.size()), c = r ? int(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix c(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

bool IntMatrix::operator==(const IntMatrix& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::columns(int from, int to) const {
  IntMatrix c(rows_, to - from);
  for (int i = 0; i < rows_; ++i)
    for (int j = from; j < to; ++j) c(i, j - from) = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::rows_range(int from, int to) const {
  IntMatrix c(to - from, cols_);
  for (int i = from; i < to; ++i)
    for (int j = 0; j < cols_; ++j) c(i - from, j) = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hcat shape mismatch");
  IntMatrix c(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
  }
  return c;
}

IntMatrix IntMatrix::vcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vcat shape mismatch");
  IntMatrix c(a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) c(a.rows_ + i, j) = b(i, j);
  return c;
}

std::vector<Int> IntMatrix::column(int j) const {
  std::vector<Int> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  std::vector<Int> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::string IntMatrix::str() const {
  std::ostringstream o;
  o << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) o << ',';
    o << '[';
    for (int j = 0; j < cols_; ++j) o << (j ? "," : "") << (*this)(i, j).get_str();
    o << ']';
  }
  o << ']';
  return o.str();
}

namespace {

// Dense elimination state; transforms are optional.
struct Smith {
  IntMatrix A, S, T, Si;
  bool track;
  int m, n;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(A(i, c), A(j, c));
    if (track) {
      for (int c = 0; c < m; ++c) std::swap(S(i, c), S(j, c));
      for (int r = 0; r < m; ++r) std::swap(Si(r, i), Si(r, j));
    }
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(A(r, i), A(r, j));
    if (track)
      for (int r = 0; r < n; ++r) std::swap(T(r, i), T(r, j));
  }
  // row_i += q·row_j
  void add_row(int i, int j, const Int& q) {
    for (int c = 0; c < n; ++c)
      if (A(j, c) != 0) A(i, c) += q * A(j, c);
    if (track) {
      for (int c = 0; c < m; ++c)
        if (S(j, c) != 0) S(i, c) += q * S(j, c);
      for (int r = 0; r < m; ++r)
        if (Si(r, i) != 0) Si(r, j) -= q * Si(r, i);
    }
  }
  // col_i += q·col_j
  void add_col(int i, int j, const Int& q) {
    for (int r = 0; r < m; ++r)
      if (A(r, j) != 0) A(r, i) += q * A(r, j);
    if (track)
      for (int r = 0; r < n; ++r)
        if (T(r, j) != 0) T(r, i) += q * T(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < n; ++c) A(i, c) = -A(i, c);
    if (track) {
      for (int c = 0; c < m; ++c) S(i, c) = -S(i, c);
      for (int r = 0; r < m; ++r) Si(r, i) = -Si(r, i);
    }
  }

  void run() {
    for (int t = 0; t < std::min(m, n); ++t) {
      for (;;) {
        int bi = -1, bj = -1;
        Int best;
        for (int i = t; i < m; ++i)
          for (int j = t; j < n; ++j)
            if (A(i, j) != 0 && (bi < 0 || abs(A(i, j)) < best)) {
              best = abs(A(i, j));
              bi = i, bj = j;
              if (best == 1) goto found;
            }
      found:
        if (bi < 0) return;
        swap_rows(t, bi);
        swap_cols(t, bj);
        bool clean = true;
        for (int i = t + 1; i < m; ++i)
          if (A(i, t) != 0) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
            add_row(i, t, -q);
            if (A(i, t) != 0) clean = false;
          }
        for (int j = t + 1; j < n; ++j)
          if (A(t, j) != 0) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
            add_col(j, t, -q);
            if (A(t, j) != 0) clean = false;
          }
        if (!clean) continue;
        int bad = -1;
        for (int i = t + 1; i < m && bad < 0; ++i)
          for (int j = t + 1; j < n; ++j)
            if (A(i, j) != 0 && !mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        add_row(t, bad, 1);
      }
      if (A(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M, bool transforms) {
  Smith s{M, {}, {}, {}, transforms, M.rows(), M.cols()};
  if (transforms) {
    s.S = IntMatrix::identity(s.m);
    s.Si = IntMatrix::identity(s.m);
    s.T = IntMatrix::identity(s.n);
  }
  s.run();
  SmithForm r;
  r.D = s.A;
  r.S = std::move(s.S);
  r.T = std::move(s.T);
  r.Sinv = std::move(s.Si);
  for (int t = 0; t < std::min(s.m, s.n); ++t)
    if (r.D(t, t) != 0) r.diag.push_back(r.D(t, t));
  r.rank = int(r.diag.size());
  return r;
}

void SparseIntMatrix::add(int i, int j, long v) {
  auto& r = entries[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second == 0) r.erase(it);
  } else if (v != 0) {
    r.insert(it, {j, v});
  }
}

IntMatrix SparseIntMatrix::dense() const {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (auto& [j, v] : entries[i]) m(i, j) = v;
  return m;
}

std::vector<Int> invariant_factors(const IntMatrix& M) {
  SparseIntMatrix s(M.rows(), M.cols());
  bool small = true;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (M(i, j) != 0) {
        if (!M(i, j).fits_slong_p()) small = false;
        else s.entries[i].push_back({j, M(i, j).get_si()});
      }
  if (!small) return smith_normal_form(M, false).diag;
  return invariant_factors(s);
}

std::vector<Int> invariant_factors(const SparseIntMatrix& M) {
  const int m = M.rows, n = M.cols;
  using Row = std::vector<std::pair<int, Int>>;
  std::vector<Row> rows(m);
  std::vector<std::vector<int>> colrows(n);
  for (int i = 0; i < m; ++i)
    for (auto& [j, v] : M.entries[i]) {
      rows[i].push_back({j, Int(v)});
      colrows[j].push_back(i);
    }
  std::vector<char> row_dead(m, 0), col_dead(n, 0);
  using Item = std::pair<std::size_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (int i = 0; i < m; ++i)
    if (!rows[i].empty()) pq.push({rows[i].size(), i});
  int units = 0;
  auto find_in = [](const Row& r, int c) -> const Int* {
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, int v) { return e.first < v; });
    return it != r.end() && it->first == c ? &it->second : nullptr;
  };
  while (!pq.empty()) {
    auto [sz, r] = pq.top();
    pq.pop();
    if (row_dead[r] || sz != rows[r].size() || rows[r].empty()) continue;
    int pc = -1;
    std::size_t best = 0;
    for (auto& [c, v] : rows[r])
      if (abs(v) == 1 && (pc < 0 || colrows[c].size() < best)) pc = c, best = colrows[c].size();
    if (pc < 0) continue;
    const Int piv = *find_in(rows[r], pc);
    std::vector<int> others;
    for (int k : colrows[pc])
      if (k != r && !row_dead[k] && find_in(rows[k], pc)) others.push_back(k);
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());
    for (int k : others) {
      const Int q = *find_in(rows[k], pc) * piv;  // piv = ±1
      Row merged;
      merged.reserve(rows[k].size() + rows[r].size());
      auto a = rows[k].begin(), b = rows[r].begin();
      while (a != rows[k].end() || b != rows[r].end()) {
        if (b == rows[r].end() || (a != rows[k].end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == rows[k].end() || b->first < a->first) {
          merged.push_back({b->first, -q * b->second});
          colrows[b->first].push_back(k);
          ++b;
        } else {
          Int v = a->second - q * b->second;
          if (v != 0) merged.push_back({a->first, v});
          ++a, ++b;
        }
      }
      rows[k].swap(merged);
      if (!rows[k].empty()) pq.push({rows[k].size(), k});
    }
    row_dead[r] = 1;
    col_dead[pc] = 1;
    ++units;
    // Column operations clear the rest of row r without touching other rows.
    rows[r].clear();
  }
  std::vector<int> live_rows, live_cols(n, -1);
  int nc = 0;
  for (int j = 0; j < n; ++j)
    if (!col_dead[j]) live_cols[j] = nc++;
  for (int i = 0; i < m; ++i)
    if (!row_dead[i] && !rows[i].empty()) live_rows.push_back(i);
  IntMatrix rest(int(live_rows.size()), nc);
  for (int t = 0; t < int(live_rows.size()); ++t)
    for (auto& [c, v] : rows[live_rows[t]]) rest(t, live_cols[c]) = v;
  std::vector<Int> out(units, Int(1));
  for (auto& d : smith_normal_form(rest, false).diag) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

int rank(const IntMatrix& M) { return int(invariant_factors(M).size()); }
int rank(const SparseIntMatrix& M) { return int(invariant_factors(M).size()); }

IntMatrix kernel_basis(const IntMatrix& M) {
  SmithForm f = smith_normal_form(M);
  return f.T.columns(f.rank, M.cols());
}

std::string FGAbGroup::str() const {
  if (trivial()) return "0";
  std::string s;
  if (rank == 1) s = "Z";
  else if (rank > 1) s = "Z^" + std::to_string(rank);
  for (auto& t : torsion) s += (s.empty() ? "" : " ⊕ ") + std::string("Z/") + t.get_str();
  return s;
}

FGAbGroup group_from_factors(int generators, const std::vector<Int>& factors) {
  FGAbGroup g;
  g.rank = generators - int(factors.size());
  for (auto& d : factors)
    if (d != 1) g.torsion.push_back(d);
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

FGAbGroup cokernel(const IntMatrix& rel, int gens) {
  if (rel.cols() == 0 || gens == 0) return group_from_factors(gens, {});
  return group_from_factors(gens, invariant_factors(rel));
}

FGAbGroup direct_sum(const FGAbGroup& a, const FGAbGroup& b) {
  // Recombine via the presentation diag(torsion of both).
  const int n = int(a.torsion.size() + b.torsion.size());
  IntMatrix d(n, n);
  int k = 0;
  for (auto& t : a.torsion) d(k, k) = t, ++k;
  for (auto& t : b.torsion) d(k, k) = t, ++k;
  FGAbGroup g = cokernel(d, n);
  g.rank = a.rank + b.rank;
  return g;
}

std::vector<Int> Subquotient::coords(const std::vector<Int>& v) const {
  const std::vector<Int> sv = bS_.apply(v);
  const int k = int(bdiag_.size());
  std::vector<Int> c(k);
  for (int i = 0; i < int(sv.size()); ++i) {
    if (i < k) {
      if (!mpz_divisible_p(sv[i].get_mpz_t(), bdiag_[i].get_mpz_t()))
        throw std::domain_error("vector outside the sublattice");
      mpz_divexact(c[i].get_mpz_t(), sv[i].get_mpz_t(), bdiag_[i].get_mpz_t());
    } else if (sv[i] != 0) {
      throw std::domain_error("vector outside the sublattice");
    }
  }
  return c;
}

std::vector<Int> Subquotient::canonical(const std::vector<Int>& v) const {
  const std::vector<Int> y = snf_S.apply(coords(v));
  std::vector<Int> r;
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    Int c = y[kept_[t]];
    if (orders[t] != 0) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), orders[t].get_mpz_t());
    r.push_back(c);
  }
  return r;
}

Subquotient subquotient(const IntMatrix& Bgens, const IntMatrix& Agens, int ambient) {
  Subquotient q;
  q.ambient = ambient;
  IntMatrix B = Bgens.cols() ? Bgens : IntMatrix(ambient, 0);
  SmithForm fb = smith_normal_form(B);
  q.bS_ = fb.S;
  q.bdiag_ = fb.diag;
  const int k = fb.rank;
  q.basis = (B * fb.T).columns(0, k);
  q.relations = IntMatrix(k, Agens.cols());
  for (int j = 0; j < Agens.cols(); ++j) {
    auto c = q.coords(Agens.column(j));
    for (int i = 0; i < k; ++i) q.relations(i, j) = c[i];
  }
  SmithForm fr = smith_normal_form(q.relations);
  q.snf_S = fr.S;
  for (int i = 0; i < k; ++i) {
    const Int d = i < fr.rank ? fr.diag[i] : Int(0);
    if (d == 1) continue;
    q.kept_.push_back(i);
    q.orders.push_back(d);
  }
  q.group = group_from_factors(k, fr.diag);
  q.generators = IntMatrix(ambient, int(q.kept_.size()));
  for (std::size_t t = 0; t < q.kept_.size(); ++t) {
    // basis · S'^{-1} e_i
    std::vector<Int> c = fr.Sinv.column(q.kept_[t]);
    auto v = q.basis.apply(c);
    for (int i = 0; i < ambient; ++i) q.generators(i, int(t)) = v[i];
  }
  return q;
}

IntMatrix induced_map(const Subquotient& from, const Subquotient& to, const IntMatrix& C) {
  const int a = from.generators.cols(), b = int(to.orders.size());
  IntMatrix M(b, a);
  for (int j = 0; j < a; ++j) {
    auto img = to.canonical(C.apply(from.generators.column(j)));
    for (int i = 0; i < b; ++i) M(i, j) = img[i];
  }
  return M;
}

bool induced_is_iso(const Subquotient& from, const Subquotient& to, const IntMatrix& M) {
  const int a = int(from.orders.size()), b = int(to.orders.size());
  IntMatrix Rt(b, b), Rf(a, a);
  for (int i = 0; i < b; ++i) Rt(i, i) = to.orders[i];
  for (int i = 0; i < a; ++i) Rf(i, i) = from.orders[i];
  if (!cokernel(IntMatrix::hcat(M.cols() ? M : IntMatrix(b, 0), Rt), b).trivial()) return false;
  if (a == 0) return true;
  IntMatrix negRt = Rt;
  for (int i = 0; i < b; ++i) negRt(i, i) = -negRt(i, i);
  IntMatrix K = kernel_basis(IntMatrix::hcat(M, negRt)).rows_range(0, a);
  return subquotient(K, Rf, a).group.trivial();
}

}  // namespace twocat
