#include "twocat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace twocat {

json to_json(const TwoCategory& c) {
  json j;
  j["objects"] = json::array();
  for (int x = 0; x < c.num_objects(); ++x) j["objects"].push_back(c.object(x));
  std::vector<int> id_of1(c.num_one_cells(), -1), id_of2(c.num_two_cells(), -1);
  for (int x = 0; x < c.num_objects(); ++x) id_of1[c.id1(x)] = x;
  for (int f = 0; f < c.num_one_cells(); ++f) id_of2[c.id2(f)] = f;
  j["one_cells"] = json::array();
  for (int f = 0; f < c.num_one_cells(); ++f) {
    json e = {{"id", c.one(f).id}, {"src", c.object(c.one(f).src)}, {"tgt", c.object(c.one(f).tgt)}};
    if (id_of1[f] >= 0) e["identity_of"] = c.object(id_of1[f]);
    j["one_cells"].push_back(e);
  }
  j["two_cells"] = json::array();
  for (int a = 0; a < c.num_two_cells(); ++a) {
    json e = {{"id", c.two(a).id}, {"src", c.one(c.two(a).src).id}, {"tgt", c.one(c.two(a).tgt).id}};
    if (id_of2[a] >= 0) e["identity_of"] = c.one(id_of2[a]).id;
    j["two_cells"].push_back(e);
  }
  j["comp1"] = json::array();
  for (int f = 0; f < c.num_one_cells(); ++f)
    for (int g : c.out_one(c.one(f).tgt))
      j["comp1"].push_back({{"after", c.one(g).id}, {"before", c.one(f).id}, {"result", c.one(c.compose(g, f)).id}});
  j["vcomp"] = json::array();
  j["whisk_l"] = json::array();
  j["whisk_r"] = json::array();
  for (int a = 0; a < c.num_two_cells(); ++a)
    for (int b : c.two_from(c.two(a).tgt))
      j["vcomp"].push_back({{"after", c.two(b).id}, {"before", c.two(a).id}, {"result", c.two(c.vcompose(b, a)).id}});
  for (int a = 0; a < c.num_two_cells(); ++a) {
    for (int k : c.out_one(c.tgt0(a)))
      j["whisk_l"].push_back({{"cell", c.two(a).id}, {"by", c.one(k).id}, {"result", c.two(c.whisker_l(k, a)).id}});
    for (int h : c.in_one(c.src0(a)))
      j["whisk_r"].push_back({{"cell", c.two(a).id}, {"by", c.one(h).id}, {"result", c.two(c.whisker_r(a, h)).id}});
  }
  if (!c.construction.empty()) j["construction"] = c.construction;
  return j;
}

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string str(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string()) throw InputError(std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

int lookup(const std::unordered_map<std::string, int>& m, const std::string& id, const char* what) {
  auto it = m.find(id);
  if (it == m.end()) throw InputError(std::string("dangling ") + what + " identifier " + id);
  return it->second;
}

}  // namespace

const json& json_need(const json& j, const char* key) { return need(j, key); }
std::string json_string(const json& j, const char* key) { return str(j, key); }

TwoCategory two_category_from_json(const json& j) {
  if (!j.is_object()) throw InputError("2-category must be a JSON object");
  TwoCategoryBuilder b;
  std::unordered_map<std::string, int> ob, on, tw;
  for (const auto& o : need(j, "objects")) {
    if (!o.is_string()) throw InputError("object identifiers must be strings");
    const std::string id = o.get<std::string>();
    if (ob.count(id)) throw InputError("duplicate object id " + id);
    ob[id] = b.add_object(id);
  }
  const json& ones = need(j, "one_cells");
  for (const auto& e : ones) {
    const std::string id = str(e, "id");
    if (on.count(id)) throw InputError("duplicate 1-cell id " + id);
    on[id] = b.add_one_cell(id, lookup(ob, str(e, "src"), "object"), lookup(ob, str(e, "tgt"), "object"));
  }
  const json& twos = need(j, "two_cells");
  for (const auto& e : twos) {
    const std::string id = str(e, "id");
    if (tw.count(id)) throw InputError("duplicate 2-cell id " + id);
    tw[id] = b.add_two_cell(id, lookup(on, str(e, "src"), "1-cell"), lookup(on, str(e, "tgt"), "1-cell"));
  }
  for (const auto& e : ones)
    if (e.contains("identity_of"))
      b.set_id1(lookup(ob, str(e, "identity_of"), "object"), on.at(str(e, "id")));
  for (const auto& e : twos)
    if (e.contains("identity_of"))
      b.set_id2(lookup(on, str(e, "identity_of"), "1-cell"), tw.at(str(e, "id")));
  b.begin_tables();
  for (const auto& e : need(j, "comp1"))
    b.set_compose(lookup(on, str(e, "after"), "1-cell"), lookup(on, str(e, "before"), "1-cell"),
                  lookup(on, str(e, "result"), "1-cell"));
  for (const auto& e : need(j, "vcomp"))
    b.set_vcompose(lookup(tw, str(e, "after"), "2-cell"), lookup(tw, str(e, "before"), "2-cell"),
                   lookup(tw, str(e, "result"), "2-cell"));
  for (const auto& e : need(j, "whisk_l"))
    b.set_whisker_l(lookup(on, str(e, "by"), "1-cell"), lookup(tw, str(e, "cell"), "2-cell"),
                    lookup(tw, str(e, "result"), "2-cell"));
  for (const auto& e : need(j, "whisk_r"))
    b.set_whisker_r(lookup(tw, str(e, "cell"), "2-cell"), lookup(on, str(e, "by"), "1-cell"),
                    lookup(tw, str(e, "result"), "2-cell"));
  TwoCategory c = b.finish();
  if (j.contains("construction") && j["construction"].is_string()) c.construction = j["construction"];
  return c;
}

json id_map_json(const std::vector<int>& m, const std::function<std::string(int)>& src_id,
                 const std::function<std::string(int)>& tgt_id) {
  json a = json::array();
  for (int i = 0; i < int(m.size()); ++i) a.push_back(json::array({src_id(i), tgt_id(m[i])}));
  return a;
}

json to_json(const TwoFunctor& f, bool embed) {
  const TwoCategory &C = *f.source, &D = *f.target;
  json j;
  if (embed) {
    j["source"] = to_json(C);
    j["target"] = to_json(D);
  }
  j["on_objects"] = id_map_json(f.on0, [&](int x) { return C.object(x); }, [&](int x) { return D.object(x); });
  j["on_one_cells"] = id_map_json(f.on1, [&](int x) { return C.one(x).id; }, [&](int x) { return D.one(x).id; });
  j["on_two_cells"] = id_map_json(f.on2, [&](int x) { return C.two(x).id; }, [&](int x) { return D.two(x).id; });
  return j;
}

json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + p.string() + ": " + e.what());
  }
}

TwoCategory load_two_category(const std::filesystem::path& p) {
  TwoCategory c = two_category_from_json(read_json_file(p));
  validate(c);
  return c;
}

TwoCatPtr category_ref(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base / p;
    return std::make_shared<TwoCategory>(load_two_category(p));
  }
  TwoCategory c = two_category_from_json(j);
  validate(c);
  return std::make_shared<TwoCategory>(std::move(c));
}

std::vector<int> read_map(const json& arr, int n, const std::function<int(const std::string&)>& src,
                          const std::function<int(const std::string&)>& tgt, const char* what) {
  std::vector<int> m(n, -1);
  if (!arr.is_array()) throw InputError(std::string(what) + " must be an array of pairs");
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw InputError(std::string(what) + " entries must be [source, target] string pairs");
    const int s = src(p[0].get<std::string>()), t = tgt(p[1].get<std::string>());
    if (s < 0) throw InputError(std::string("dangling identifier in ") + what + ": " + p[0].get<std::string>());
    if (t < 0) throw InputError(std::string("dangling identifier in ") + what + ": " + p[1].get<std::string>());
    m[s] = t;
  }
  for (int i = 0; i < n; ++i)
    if (m[i] < 0) throw InputError(std::string(what) + " is not total");
  return m;
}

TwoFunctor functor_from_json(const json& j, const std::filesystem::path& base) {
  TwoFunctor f;
  f.source = category_ref(need(j, "source"), base);
  f.target = category_ref(need(j, "target"), base);
  const TwoCategory &C = *f.source, &D = *f.target;
  f.on0 = read_map(need(j, "on_objects"), C.num_objects(), [&](const std::string& s) { return C.find_object(s); },
                   [&](const std::string& s) { return D.find_object(s); }, "on_objects");
  f.on1 = read_map(need(j, "on_one_cells"), C.num_one_cells(), [&](const std::string& s) { return C.find_one(s); },
                   [&](const std::string& s) { return D.find_one(s); }, "on_one_cells");
  f.on2 = read_map(need(j, "on_two_cells"), C.num_two_cells(), [&](const std::string& s) { return C.find_two(s); },
                   [&](const std::string& s) { return D.find_two(s); }, "on_two_cells");
  return f;
}

TwoFunctor load_functor(const std::filesystem::path& p) {
  return functor_from_json(read_json_file(p), p.parent_path());
}

}  // namespace twocat
