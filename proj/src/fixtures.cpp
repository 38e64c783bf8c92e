#include "twocat/fixtures.hpp"

namespace twocat {

TwoCategory discrete(const std::vector<std::string>& objects) {
  TwoCategoryBuilder b;
  for (auto& o : objects) b.add_object(o);
  for (int x = 0; x < int(objects.size()); ++x) b.add_one_cell("1_" + objects[x], x, x);
  for (int x = 0; x < int(objects.size()); ++x) b.add_two_cell("1_1_" + objects[x], x, x);
  for (int x = 0; x < int(objects.size()); ++x) {
    b.set_id1(x, x);
    b.set_id2(x, x);
  }
  b.fill([](int g, int) { return g; }, [](int q, int) { return q; }, [](int, int a) { return a; },
         [](int a, int) { return a; });
  return b.finish();
}

TwoCategory one_object_monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& mul) {
  TwoCategoryBuilder b;
  b.add_object("*");
  b.add_one_cell("1_*", 0, 0);
  for (auto& e : elements) b.add_two_cell(e, 0, 0);
  b.set_id1(0, 0);
  b.set_id2(0, 0);
  b.fill([](int, int) { return 0; }, [&](int q, int p) { return mul[q][p]; }, [](int, int a) { return a; },
         [](int a, int) { return a; });
  return b.finish();
}

TwoCategory linear_order(int n) {
  TwoCategoryBuilder b;
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<int>> cell(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      cell[i][j] = b.add_one_cell(i == j ? "1_" + std::to_string(i) : std::to_string(i) + std::to_string(j), i, j);
  for (int f = 0; f < b.num_one_cells(); ++f) b.add_two_cell("1_" + b.one(f).id, f, f);
  for (int i = 0; i <= n; ++i) b.set_id1(i, cell[i][i]);
  for (int f = 0; f < b.num_one_cells(); ++f) b.set_id2(f, f);
  b.fill([&](int g, int f) { return cell[b.one(f).src][b.one(g).tgt]; }, [](int q, int) { return q; },
         [&](int k, int a) { return cell[b.one(a).src][b.one(k).tgt]; },
         [&](int a, int h) { return cell[b.one(h).src][b.one(a).tgt]; });
  return b.finish();
}

TwoCatPtr fix_T() {
  auto c = std::make_shared<TwoCategory>(discrete({"*"}));
  c->construction = "FIX_T";
  return c;
}

TwoCatPtr fix_I() {
  auto c = std::make_shared<TwoCategory>(linear_order(1));
  c->construction = "FIX_I";
  return c;
}

TwoCatPtr fix_G2() {
  auto c = std::make_shared<TwoCategory>(one_object_monoid({"0", "1"}, {{0, 1}, {1, 0}}));
  c->construction = "FIX_G2";
  return c;
}

TwoCatPtr fix_G2sat() {
  auto c = std::make_shared<TwoCategory>(one_object_monoid({"0", "1"}, {{0, 1}, {1, 1}}));
  c->construction = "FIX_G2sat";
  return c;
}

TwoCatPtr fix_C2() {
  auto c = std::make_shared<TwoCategory>(discrete({"0", "1"}));
  c->construction = "FIX_C2";
  return c;
}

TwoCatPtr fix_M2() {
  auto c = std::make_shared<TwoCategory>(discrete({"0", "1"}));
  c->construction = "FIX_M2";
  return c;
}

Product fix_prod(TwoCatPtr A, TwoCatPtr B) {
  const int a0 = A->num_objects(), b0 = B->num_objects();
  const int a1 = A->num_one_cells(), b1 = B->num_one_cells();
  const int a2 = A->num_two_cells(), b2 = B->num_two_cells();
  TwoCategoryBuilder b;
  auto nm = [](const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; };
  for (int i = 0; i < a0; ++i)
    for (int j = 0; j < b0; ++j) b.add_object(nm(A->object(i), B->object(j)));
  for (int i = 0; i < a1; ++i)
    for (int j = 0; j < b1; ++j)
      b.add_one_cell(nm(A->one(i).id, B->one(j).id), A->one(i).src * b0 + B->one(j).src,
                     A->one(i).tgt * b0 + B->one(j).tgt);
  for (int i = 0; i < a2; ++i)
    for (int j = 0; j < b2; ++j)
      b.add_two_cell(nm(A->two(i).id, B->two(j).id), A->two(i).src * b1 + B->two(j).src,
                     A->two(i).tgt * b1 + B->two(j).tgt);
  for (int i = 0; i < a0; ++i)
    for (int j = 0; j < b0; ++j) b.set_id1(i * b0 + j, A->id1(i) * b1 + B->id1(j));
  for (int i = 0; i < a1; ++i)
    for (int j = 0; j < b1; ++j) b.set_id2(i * b1 + j, A->id2(i) * b2 + B->id2(j));
  b.fill([&](int g, int f) { return A->compose(g / b1, f / b1) * b1 + B->compose(g % b1, f % b1); },
         [&](int q, int p) { return A->vcompose(q / b2, p / b2) * b2 + B->vcompose(q % b2, p % b2); },
         [&](int k, int p) { return A->whisker_l(k / b1, p / b2) * b2 + B->whisker_l(k % b1, p % b2); },
         [&](int p, int h) { return A->whisker_r(p / b2, h / b1) * b2 + B->whisker_r(p % b2, h % b1); });
  Product r;
  auto c = std::make_shared<TwoCategory>(b.finish());
  c->construction = "product";
  r.cat = c;
  r.pr1.source = r.pr2.source = c;
  r.pr1.target = A;
  r.pr2.target = B;
  for (int i = 0; i < a0 * b0; ++i) {
    r.pr1.on0.push_back(i / b0);
    r.pr2.on0.push_back(i % b0);
  }
  for (int i = 0; i < a1 * b1; ++i) {
    r.pr1.on1.push_back(i / b1);
    r.pr2.on1.push_back(i % b1);
  }
  for (int i = 0; i < a2 * b2; ++i) {
    r.pr1.on2.push_back(i / b2);
    r.pr2.on2.push_back(i % b2);
  }
  return r;
}

TwoFunctor point(TwoCatPtr d, int x) {
  TwoFunctor F;
  F.source = fix_T();
  F.target = d;
  F.on0 = {x};
  F.on1 = {d->id1(x)};
  F.on2 = {d->id2(d->id1(x))};
  return F;
}

TwoFunctor to_terminal(TwoCatPtr c, TwoCatPtr t) {
  TwoFunctor F;
  F.source = c;
  F.target = t;
  F.on0.assign(c->num_objects(), 0);
  F.on1.assign(c->num_one_cells(), 0);
  F.on2.assign(c->num_two_cells(), 0);
  return F;
}

}  // namespace twocat
