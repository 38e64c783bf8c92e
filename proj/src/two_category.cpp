#include "twocat/two_category.hpp"

#include <sstream>

namespace twocat {

AxiomError::AxiomError(std::string axiom, std::string detail)
    : std::runtime_error(axiom + ": " + detail), axiom_(std::move(axiom)), detail_(std::move(detail)) {}

void PairTable::reset(std::size_t rows, std::size_t cols) {
  rows_ = rows;
  cols_ = cols;
  sparse_.clear();
  data_.clear();
  dense_ = rows * cols <= (std::size_t(1) << 22);
  if (dense_) data_.assign(rows * cols, -1);
}

int PairTable::get(int a, int b) const {
  if (a < 0 || b < 0 || std::size_t(a) >= rows_ || std::size_t(b) >= cols_) return -1;
  if (dense_) return data_[std::size_t(a) * cols_ + std::size_t(b)];
  auto it = sparse_.find(pair_key(a, b));
  return it == sparse_.end() ? -1 : it->second;
}

void PairTable::set(int a, int b, int v) {
  if (dense_)
    data_[std::size_t(a) * cols_ + std::size_t(b)] = v;
  else
    sparse_[pair_key(a, b)] = v;
}

int TwoCategory::compose(int g, int f) const {
  if (ones_[g].src != ones_[f].tgt) return -1;
  return comp1_.get(g, f);
}

int TwoCategory::vcompose(int b, int a) const {
  if (twos_[b].src != twos_[a].tgt) return -1;
  return vcomp_.get(b, a);
}

int TwoCategory::whisker_l(int k, int a) const {
  if (ones_[k].src != tgt0(a)) return -1;
  return wl_.get(k, a);
}

int TwoCategory::whisker_r(int a, int h) const {
  if (src0(a) != ones_[h].tgt) return -1;
  return wr_.get(a, h);
}

int TwoCategory::hcompose(int b, int a) const {
  int x = whisker_r(b, twos_[a].tgt);
  int y = whisker_l(twos_[b].src, a);
  if (x < 0 || y < 0) return -1;
  return vcompose(x, y);
}

static const std::vector<int> kEmpty;

const std::vector<int>& TwoCategory::hom(int x, int y) const {
  return hom_[std::size_t(x) * objects_.size() + std::size_t(y)];
}

const std::vector<int>& TwoCategory::hom2(int f, int g) const {
  auto it = hom2_.find(pair_key(f, g));
  return it == hom2_.end() ? kEmpty : it->second;
}

int TwoCategory::find_object(std::string_view id) const {
  auto it = obj_ix_.find(std::string(id));
  return it == obj_ix_.end() ? -1 : it->second;
}
int TwoCategory::find_one(std::string_view id) const {
  auto it = one_ix_.find(std::string(id));
  return it == one_ix_.end() ? -1 : it->second;
}
int TwoCategory::find_two(std::string_view id) const {
  auto it = two_ix_.find(std::string(id));
  return it == two_ix_.end() ? -1 : it->second;
}

void TwoCategory::index() {
  const std::size_t n0 = objects_.size();
  hom_.assign(n0 * n0, {});
  out1_.assign(n0, {});
  in1_.assign(n0, {});
  from2_.assign(ones_.size(), {});
  into2_.assign(ones_.size(), {});
  hom2_.clear();
  obj_ix_.clear();
  one_ix_.clear();
  two_ix_.clear();
  for (int x = 0; x < int(n0); ++x) obj_ix_[objects_[x]] = x;
  for (int f = 0; f < int(ones_.size()); ++f) {
    one_ix_[ones_[f].id] = f;
    hom_[std::size_t(ones_[f].src) * n0 + std::size_t(ones_[f].tgt)].push_back(f);
    out1_[ones_[f].src].push_back(f);
    in1_[ones_[f].tgt].push_back(f);
  }
  for (int a = 0; a < int(twos_.size()); ++a) {
    two_ix_[twos_[a].id] = a;
    hom2_[pair_key(twos_[a].src, twos_[a].tgt)].push_back(a);
    from2_[twos_[a].src].push_back(a);
    into2_[twos_[a].tgt].push_back(a);
  }
  inv2_.assign(twos_.size(), -1);
  for (int a = 0; a < int(twos_.size()); ++a) {
    if (inv2_[a] >= 0) continue;
    const int f = twos_[a].src, g = twos_[a].tgt;
    for (int b : hom2(g, f)) {
      if (vcomp_.get(b, a) == id2_[f] && vcomp_.get(a, b) == id2_[g]) {
        inv2_[a] = b;
        inv2_[b] = a;
        break;
      }
    }
  }
}

// ---------------------------------------------------------------- builder

int TwoCategoryBuilder::add_object(std::string id) {
  if (tables_ready_) throw std::logic_error("cells added after tables");
  c_.objects_.push_back(std::move(id));
  c_.id1_.push_back(-1);
  return int(c_.objects_.size()) - 1;
}

int TwoCategoryBuilder::add_one_cell(std::string id, int src, int tgt) {
  if (tables_ready_) throw std::logic_error("cells added after tables");
  if (src < 0 || tgt < 0 || src >= num_objects() || tgt >= num_objects())
    throw InputError("1-cell " + id + " has dangling endpoint");
  c_.ones_.push_back({std::move(id), src, tgt});
  c_.id2_.push_back(-1);
  return int(c_.ones_.size()) - 1;
}

int TwoCategoryBuilder::add_two_cell(std::string id, int src, int tgt) {
  if (tables_ready_) throw std::logic_error("cells added after tables");
  if (src < 0 || tgt < 0 || src >= num_one_cells() || tgt >= num_one_cells())
    throw InputError("2-cell " + id + " has dangling boundary");
  if (c_.ones_[src].src != c_.ones_[tgt].src || c_.ones_[src].tgt != c_.ones_[tgt].tgt)
    throw AxiomError("typing", "2-cell " + id + " between non-parallel 1-cells " + c_.ones_[src].id +
                                   ", " + c_.ones_[tgt].id);
  c_.twos_.push_back({std::move(id), src, tgt});
  return int(c_.twos_.size()) - 1;
}

void TwoCategoryBuilder::set_id1(int x, int f) {
  if (c_.ones_[f].src != x || c_.ones_[f].tgt != x)
    throw AxiomError("typing", "identity 1-cell " + c_.ones_[f].id + " is not an endomorphism of " +
                                   c_.objects_[x]);
  if (c_.id1_[x] >= 0 && c_.id1_[x] != f)
    throw InputError("object " + c_.objects_[x] + " has two identity 1-cells");
  c_.id1_[x] = f;
}

void TwoCategoryBuilder::set_id2(int f, int a) {
  if (c_.twos_[a].src != f || c_.twos_[a].tgt != f)
    throw AxiomError("typing", "identity 2-cell " + c_.twos_[a].id + " is not an endomorphism of " +
                                   c_.ones_[f].id);
  if (c_.id2_[f] >= 0 && c_.id2_[f] != a)
    throw InputError("1-cell " + c_.ones_[f].id + " has two identity 2-cells");
  c_.id2_[f] = a;
}

void TwoCategoryBuilder::ensure_tables() {
  if (tables_ready_) return;
  const std::size_t n1 = c_.ones_.size(), n2 = c_.twos_.size();
  c_.comp1_.reset(n1, n1);
  c_.vcomp_.reset(n2, n2);
  c_.wl_.reset(n1, n2);
  c_.wr_.reset(n2, n1);
  tables_ready_ = true;
}

void TwoCategoryBuilder::set_compose(int g, int f, int r) {
  ensure_tables();
  const auto &G = c_.ones_[g], &F = c_.ones_[f], &R = c_.ones_[r];
  if (G.src != F.tgt)
    throw AxiomError("typing", "comp1 entry for non-composable " + G.id + " after " + F.id);
  if (R.src != F.src || R.tgt != G.tgt)
    throw AxiomError("typing", "comp1(" + G.id + ", " + F.id + ") = " + R.id + " has wrong endpoints");
  c_.comp1_.set(g, f, r);
}

void TwoCategoryBuilder::set_vcompose(int b, int a, int r) {
  ensure_tables();
  const auto &B = c_.twos_[b], &A = c_.twos_[a], &R = c_.twos_[r];
  if (B.src != A.tgt)
    throw AxiomError("typing", "vcomp entry for non-composable " + B.id + " after " + A.id);
  if (R.src != A.src || R.tgt != B.tgt)
    throw AxiomError("typing", "vcomp(" + B.id + ", " + A.id + ") = " + R.id + " has wrong boundary");
  c_.vcomp_.set(b, a, r);
}

void TwoCategoryBuilder::set_whisker_l(int k, int a, int r) {
  ensure_tables();
  const auto& K = c_.ones_[k];
  const auto &A = c_.twos_[a], &R = c_.twos_[r];
  if (K.src != c_.ones_[A.src].tgt)
    throw AxiomError("typing", "whisk_l entry for non-composable " + K.id + " and " + A.id);
  int s = c_.comp1_.get(k, A.src), t = c_.comp1_.get(k, A.tgt);
  if (s >= 0 && t >= 0 && (R.src != s || R.tgt != t))
    throw AxiomError("typing", "whisk_l(" + K.id + ", " + A.id + ") = " + R.id + " has wrong boundary");
  c_.wl_.set(k, a, r);
}

void TwoCategoryBuilder::set_whisker_r(int a, int h, int r) {
  ensure_tables();
  const auto& H = c_.ones_[h];
  const auto &A = c_.twos_[a], &R = c_.twos_[r];
  if (c_.ones_[A.src].src != H.tgt)
    throw AxiomError("typing", "whisk_r entry for non-composable " + A.id + " and " + H.id);
  int s = c_.comp1_.get(A.src, h), t = c_.comp1_.get(A.tgt, h);
  if (s >= 0 && t >= 0 && (R.src != s || R.tgt != t))
    throw AxiomError("typing", "whisk_r(" + A.id + ", " + H.id + ") = " + R.id + " has wrong boundary");
  c_.wr_.set(a, h, r);
}

void TwoCategoryBuilder::fill(const std::function<int(int, int)>& comp1,
                              const std::function<int(int, int)>& vcomp,
                              const std::function<int(int, int)>& wl,
                              const std::function<int(int, int)>& wr) {
  ensure_tables();
  const int n0 = num_objects(), n1 = num_one_cells(), n2 = num_two_cells();
  std::vector<std::vector<int>> out(n0), from2(n1);
  for (int f = 0; f < n1; ++f) out[c_.ones_[f].src].push_back(f);
  for (int a = 0; a < n2; ++a) from2[c_.twos_[a].src].push_back(a);
  for (int f = 0; f < n1; ++f)
    for (int g : out[c_.ones_[f].tgt]) set_compose(g, f, comp1(g, f));
  for (int a = 0; a < n2; ++a)
    for (int b : from2[c_.twos_[a].tgt]) set_vcompose(b, a, vcomp(b, a));
  for (int a = 0; a < n2; ++a) {
    const int y = c_.ones_[c_.twos_[a].src].tgt, x = c_.ones_[c_.twos_[a].src].src;
    for (int k : out[y]) set_whisker_l(k, a, wl(k, a));
    for (int h = 0; h < n1; ++h)
      if (c_.ones_[h].tgt == x) set_whisker_r(a, h, wr(a, h));
  }
}

TwoCategory TwoCategoryBuilder::finish() {
  ensure_tables();
  for (int x = 0; x < num_objects(); ++x)
    if (c_.id1_[x] < 0) throw InputError("object " + c_.objects_[x] + " has no identity 1-cell");
  for (int f = 0; f < num_one_cells(); ++f)
    if (c_.id2_[f] < 0) throw InputError("1-cell " + c_.ones_[f].id + " has no identity 2-cell");
  {
    std::unordered_map<std::string, int> seen;
    for (auto& o : c_.objects_)
      if (!seen.emplace(o, 0).second) throw InputError("duplicate object id " + o);
    seen.clear();
    for (auto& f : c_.ones_)
      if (!seen.emplace(f.id, 0).second) throw InputError("duplicate 1-cell id " + f.id);
    seen.clear();
    for (auto& a : c_.twos_)
      if (!seen.emplace(a.id, 0).second) throw InputError("duplicate 2-cell id " + a.id);
  }
  // totality
  const int n0 = num_objects(), n1 = num_one_cells(), n2 = num_two_cells();
  std::vector<std::vector<int>> out(n0), from2(n1);
  for (int f = 0; f < n1; ++f) out[c_.ones_[f].src].push_back(f);
  for (int a = 0; a < n2; ++a) from2[c_.twos_[a].src].push_back(a);
  for (int f = 0; f < n1; ++f)
    for (int g : out[c_.ones_[f].tgt])
      if (c_.comp1_.get(g, f) < 0)
        throw AxiomError("totality", "partial table comp1: missing " + c_.ones_[g].id + " after " +
                                         c_.ones_[f].id);
  for (int a = 0; a < n2; ++a)
    for (int b : from2[c_.twos_[a].tgt])
      if (c_.vcomp_.get(b, a) < 0)
        throw AxiomError("totality", "partial table vcomp: missing " + c_.twos_[b].id + " after " +
                                         c_.twos_[a].id);
  for (int a = 0; a < n2; ++a) {
    const int x = c_.ones_[c_.twos_[a].src].src, y = c_.ones_[c_.twos_[a].src].tgt;
    for (int k : out[y])
      if (c_.wl_.get(k, a) < 0)
        throw AxiomError("totality", "partial table whisk_l: missing " + c_.ones_[k].id + " on " +
                                         c_.twos_[a].id);
    for (int h = 0; h < n1; ++h)
      if (c_.ones_[h].tgt == x && c_.wr_.get(a, h) < 0)
        throw AxiomError("totality", "partial table whisk_r: missing " + c_.twos_[a].id + " by " +
                                         c_.ones_[h].id);
  }
  // whisker typing deferred until comp1 is known to be total
  for (int a = 0; a < n2; ++a) {
    const int x = c_.ones_[c_.twos_[a].src].src, y = c_.ones_[c_.twos_[a].src].tgt;
    for (int k : out[y]) set_whisker_l(k, a, c_.wl_.get(k, a));
    for (int h = 0; h < n1; ++h)
      if (c_.ones_[h].tgt == x) set_whisker_r(a, h, c_.wr_.get(a, h));
  }
  c_.index();
  TwoCategory out_c = std::move(c_);
  c_ = TwoCategory();
  tables_ready_ = false;
  return out_c;
}

// ------------------------------------------------------------- validation

std::string describe_one(const TwoCategory& c, int f) {
  const auto& F = c.one(f);
  return F.id + ": " + c.object(F.src) + "→" + c.object(F.tgt);
}

std::string describe_two(const TwoCategory& c, int a) {
  const auto& A = c.two(a);
  return A.id + ": " + c.one(A.src).id + "⇒" + c.one(A.tgt).id;
}

namespace {

[[noreturn]] void fail(const std::string& axiom, const std::string& detail) {
  throw AxiomError(axiom, detail);
}

std::string tup(std::initializer_list<std::string> xs) {
  std::string s = "(";
  bool first = true;
  for (auto& x : xs) {
    if (!first) s += ", ";
    s += x;
    first = false;
  }
  return s + ")";
}

}  // namespace

void validate(const TwoCategory& c) {
  const int n0 = c.num_objects(), n1 = c.num_one_cells(), n2 = c.num_two_cells();
  (void)n0;
  auto one = [&](int f) { return c.one(f).id; };
  auto two = [&](int a) { return c.two(a).id; };

  // hom-categories
  for (int a = 0; a < n2; ++a) {
    const int f = c.two(a).src, g = c.two(a).tgt;
    if (c.vcompose(a, c.id2(f)) != a || c.vcompose(c.id2(g), a) != a)
      fail("vcomp-unit", "identity 2-cell is not a unit for " + two(a));
  }
  for (int a = 0; a < n2; ++a)
    for (int b : c.two_from(c.two(a).tgt)) {
      const int ba = c.vcompose(b, a);
      for (int d : c.two_from(c.two(b).tgt))
        if (c.vcompose(d, ba) != c.vcompose(c.vcompose(d, b), a))
          fail("vcomp-associativity", tup({two(d), two(b), two(a)}));
    }
  // comp1
  for (int f = 0; f < n1; ++f) {
    const auto& F = c.one(f);
    if (c.compose(f, c.id1(F.src)) != f || c.compose(c.id1(F.tgt), f) != f)
      fail("comp1-unit", "identity 1-cell is not a unit for " + one(f));
  }
  for (int f = 0; f < n1; ++f)
    for (int g : c.out_one(c.one(f).tgt)) {
      const int gf = c.compose(g, f);
      for (int h : c.out_one(c.one(g).tgt))
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          fail("comp1-associativity", tup({one(h), one(g), one(f)}));
    }
  // whiskering
  for (int a = 0; a < n2; ++a) {
    const int x = c.src0(a), y = c.tgt0(a);
    if (c.whisker_l(c.id1(y), a) != a) fail("whisker-identity", "1 ∗ " + two(a) + " ≠ " + two(a));
    if (c.whisker_r(a, c.id1(x)) != a) fail("whisker-identity", two(a) + " ∗ 1 ≠ " + two(a));
  }
  for (int f = 0; f < n1; ++f) {
    const int idf = c.id2(f);
    for (int k : c.out_one(c.one(f).tgt))
      if (c.whisker_l(k, idf) != c.id2(c.compose(k, f)))
        fail("whisker-of-identity", one(k) + " ∗ 1_" + one(f));
    for (int h : c.in_one(c.one(f).src))
      if (c.whisker_r(idf, h) != c.id2(c.compose(f, h)))
        fail("whisker-of-identity", "1_" + one(f) + " ∗ " + one(h));
  }
  for (int a = 0; a < n2; ++a) {
    const int x = c.src0(a), y = c.tgt0(a);
    for (int b : c.two_from(c.two(a).tgt)) {
      const int ba = c.vcompose(b, a);
      for (int k : c.out_one(y))
        if (c.whisker_l(k, ba) != c.vcompose(c.whisker_l(k, b), c.whisker_l(k, a)))
          fail("whisk_l-functoriality", tup({one(k), two(b), two(a)}));
      for (int h : c.in_one(x))
        if (c.whisker_r(ba, h) != c.vcompose(c.whisker_r(b, h), c.whisker_r(a, h)))
          fail("whisk_r-functoriality", tup({two(b), two(a), one(h)}));
    }
  }
  for (int a = 0; a < n2; ++a) {
    const int x = c.src0(a), y = c.tgt0(a);
    for (int k : c.out_one(y)) {
      const int ka = c.whisker_l(k, a);
      for (int k2 : c.out_one(c.one(k).tgt))
        if (c.whisker_l(k2, ka) != c.whisker_l(c.compose(k2, k), a))
          fail("whisk_l-composition", tup({one(k2), one(k), two(a)}));
      for (int h : c.in_one(x))
        if (c.whisker_r(ka, h) != c.whisker_l(k, c.whisker_r(a, h)))
          fail("whisker-bimodule", tup({one(k), two(a), one(h)}));
    }
    for (int h : c.in_one(x)) {
      const int ah = c.whisker_r(a, h);
      for (int h2 : c.in_one(c.one(h).src))
        if (c.whisker_r(ah, h2) != c.whisker_r(a, c.compose(h, h2)))
          fail("whisk_r-composition", tup({two(a), one(h), one(h2)}));
    }
  }
  // interchange: α in hom(x,y), β in hom(y,z)
  for (int a = 0; a < n2; ++a) {
    const int y = c.tgt0(a);
    const int f = c.two(a).src, g = c.two(a).tgt;
    for (int f2 : c.out_one(y))
      for (int b : c.two_from(f2)) {
        const int g2 = c.two(b).tgt;
        const int lhs = c.vcompose(c.whisker_r(b, g), c.whisker_l(f2, a));
        const int rhs = c.vcompose(c.whisker_l(g2, a), c.whisker_r(b, f));
        if (lhs != rhs) fail("interchange", tup({two(b), two(a)}));
      }
  }
}

// ------------------------------------------------------------------ duals

TwoCategory op_dual(const TwoCategory& c) {
  TwoCategoryBuilder b;
  for (int x = 0; x < c.num_objects(); ++x) b.add_object(c.object(x));
  for (int f = 0; f < c.num_one_cells(); ++f) b.add_one_cell(c.one(f).id, c.one(f).tgt, c.one(f).src);
  for (int a = 0; a < c.num_two_cells(); ++a) b.add_two_cell(c.two(a).id, c.two(a).src, c.two(a).tgt);
  for (int x = 0; x < c.num_objects(); ++x) b.set_id1(x, c.id1(x));
  for (int f = 0; f < c.num_one_cells(); ++f) b.set_id2(f, c.id2(f));
  b.fill([&](int g, int f) { return c.compose(f, g); }, [&](int q, int p) { return c.vcompose(q, p); },
         [&](int k, int a) { return c.whisker_r(a, k); }, [&](int a, int h) { return c.whisker_l(h, a); });
  TwoCategory r = b.finish();
  r.construction = "op";
  return r;
}

TwoCategory co_dual(const TwoCategory& c) {
  TwoCategoryBuilder b;
  for (int x = 0; x < c.num_objects(); ++x) b.add_object(c.object(x));
  for (int f = 0; f < c.num_one_cells(); ++f) b.add_one_cell(c.one(f).id, c.one(f).src, c.one(f).tgt);
  for (int a = 0; a < c.num_two_cells(); ++a) b.add_two_cell(c.two(a).id, c.two(a).tgt, c.two(a).src);
  for (int x = 0; x < c.num_objects(); ++x) b.set_id1(x, c.id1(x));
  for (int f = 0; f < c.num_one_cells(); ++f) b.set_id2(f, c.id2(f));
  b.fill([&](int g, int f) { return c.compose(g, f); }, [&](int q, int p) { return c.vcompose(p, q); },
         [&](int k, int a) { return c.whisker_l(k, a); }, [&](int a, int h) { return c.whisker_r(a, h); });
  TwoCategory r = b.finish();
  r.construction = "co";
  return r;
}

TwoCategory coop_dual(const TwoCategory& c) {
  TwoCategory r = co_dual(op_dual(c));
  r.construction = "coop";
  return r;
}

bool identical(const TwoCategory& a, const TwoCategory& b) {
  if (a.num_objects() != b.num_objects() || a.num_one_cells() != b.num_one_cells() ||
      a.num_two_cells() != b.num_two_cells())
    return false;
  for (int x = 0; x < a.num_objects(); ++x)
    if (a.object(x) != b.object(x) || a.id1(x) != b.id1(x)) return false;
  for (int f = 0; f < a.num_one_cells(); ++f) {
    const auto &F = a.one(f), &G = b.one(f);
    if (F.id != G.id || F.src != G.src || F.tgt != G.tgt || a.id2(f) != b.id2(f)) return false;
  }
  for (int p = 0; p < a.num_two_cells(); ++p) {
    const auto &P = a.two(p), &Q = b.two(p);
    if (P.id != Q.id || P.src != Q.src || P.tgt != Q.tgt) return false;
  }
  for (int f = 0; f < a.num_one_cells(); ++f)
    for (int g : a.out_one(a.one(f).tgt))
      if (a.compose(g, f) != b.compose(g, f)) return false;
  for (int p = 0; p < a.num_two_cells(); ++p) {
    for (int q : a.two_from(a.two(p).tgt))
      if (a.vcompose(q, p) != b.vcompose(q, p)) return false;
    for (int k : a.out_one(a.tgt0(p)))
      if (a.whisker_l(k, p) != b.whisker_l(k, p)) return false;
    for (int h : a.in_one(a.src0(p)))
      if (a.whisker_r(p, h) != b.whisker_r(p, h)) return false;
  }
  return true;
}

}  // namespace twocat
