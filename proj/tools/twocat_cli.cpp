// twocat-cli: JSON in, JSON out front end for the library.
#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twocat/constructs.hpp"
#include "twocat/homology.hpp"
#include "twocat/json_io.hpp"
#include "twocat/nerve.hpp"
#include "twocat/opfib.hpp"
#include "twocat/pgm.hpp"
#include "twocat/sinv.hpp"
#include "twocat/specseq.hpp"

#ifndef TWOCAT_VERSION
#define TWOCAT_VERSION "dev"
#endif

using namespace twocat;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int n = 0;
  EVP_Digest(data.data(), data.size(), md, &n, EVP_sha256(), nullptr);
  static const char* hx = "0123456789abcdef";
  std::string s;
  for (unsigned i = 0; i < n; ++i) {
    s += hx[md[i] >> 4];
    s += hx[md[i] & 15];
  }
  return s;
}

struct Run {
  std::string sub;
  json inputs = json::array();
  json bounds = json::object();
  bool pretty = false;

  void input(const std::string& path) {
    inputs.push_back({{"path", path}, {"sha256", sha256_hex(slurp(path))}});
  }
  std::string hash_of(size_t k) const { return inputs[k]["sha256"]; }

  json manifest() const {
    return {{"subcommand", sub},
            {"inputs", inputs},
            {"bounds", bounds},
            {"determinism", "no randomness; output depends only on input bytes and bounds"},
            {"version", TWOCAT_VERSION}};
  }
};

Run run;

void emit(json report, const std::string& summary = {}) {
  json out;
  out["manifest"] = run.manifest();
  for (auto& [k, v] : report.items()) out[k] = v;
  if (run.pretty) {
    std::cout << out.dump(2) << "\n";
    if (!summary.empty()) std::cout << summary << "\n";
  } else {
    std::cout << out.dump() << "\n";
  }
}

json group_json(const FGAbGroup& g) {
  json t = json::array();
  for (auto& x : g.torsion) t.push_back(x.get_str());
  return {{"rank", g.rank}, {"torsion", t}, {"canonical", g.str()}};
}

json counts(const TwoCategory& c) {
  return {{"objects", c.num_objects()}, {"one_cells", c.num_one_cells()}, {"two_cells", c.num_two_cells()}};
}

TwoCategory load_cat(const std::string& p) {
  run.input(p);
  return load_two_category(p);
}

TwoFunctor load_fun(const std::string& p) {
  run.input(p);
  TwoFunctor f = load_functor(p);
  validate(f);
  return f;
}

std::pair<TwoFunctor, TwoFunctor> load_cospan(const std::string& p) {
  run.input(p);
  const json j = read_json_file(p);
  const fs::path base = fs::path(p).parent_path();
  auto side = [&](const char* key) {
    const json& v = json_need(j, key);
    TwoFunctor f;
    if (v.is_string()) {
      fs::path q = v.get<std::string>();
      if (q.is_relative()) q = base / q;
      run.input(q.string());
      f = load_functor(q);
    } else {
      f = functor_from_json(v, base);
    }
    validate(f);
    return f;
  };
  auto l = side("left");
  auto r = side("right");
  if (l.target->num_objects() != r.target->num_objects() || !identical(*l.target, *r.target))
    throw InputError("cospan legs have different targets");
  r.target = l.target;
  return {l, r};
}

// ---- validate ----

void cmd_validate(const std::string& path, std::string kind) {
  run.input(path);
  const json j = read_json_file(path);
  const fs::path base = fs::path(path).parent_path();
  if (kind == "auto") {
    if (j.is_object() && j.contains("carrier")) kind = "pgm";
    else if (j.is_object() && j.contains("pgm")) kind = "action";
    else if (j.is_object() && j.contains("on_objects")) kind = "functor";
    else kind = "category";
  }
  json r = {{"kind", kind}, {"valid", true}};
  if (kind == "category") {
    TwoCategory c = two_category_from_json(j);
    validate(c);
    r["counts"] = counts(c);
  } else if (kind == "functor") {
    TwoFunctor f = functor_from_json(j, base);
    validate(f);
    r["source"] = counts(*f.source);
    r["target"] = counts(*f.target);
  } else if (kind == "pgm") {
    PGM p = pgm_from_json(j, base);
    validate_pgm(p);
    validate(*p.S);
    r["counts"] = counts(*p.S);
    r["pi0"] = pi0_monoid(p).names;
  } else if (kind == "action") {
    PGMAction a = action_from_json(j, base);
    validate_action(a);
    r["space"] = counts(*a.X);
  } else {
    throw InputError("unknown kind " + kind);
  }
  emit(r, "valid " + kind);
}

// ---- constructions ----

json category_with_provenance(const TwoCategory& c, const std::string& construction) {
  json j = to_json(c);
  j["construction"] = construction;
  json h = json::array();
  for (auto& i : run.inputs) h.push_back(i["sha256"]);
  j["inputs"] = h;
  return j;
}

void write_or_embed(json& r, const char* key, json value, const std::string& out) {
  if (out.empty()) {
    r[key] = std::move(value);
  } else {
    std::ofstream o(out);
    if (!o) throw InputError("cannot write " + out);
    o << value.dump(1) << "\n";
    r[key] = out;
  }
}

void cmd_comma(const std::string& path, bool lax, const std::string& out) {
  auto [F, G] = load_cospan(path);
  Comma L = lax ? laco(F, G) : oplaco(F, G);
  validate(*L.cat);
  validate(L.pX);
  validate(L.pZ);
  validate(L.pi);
  json r = {{"counts", counts(*L.cat)}};
  write_or_embed(r, "category", category_with_provenance(*L.cat, lax ? "laco" : "oplaco"), out);
  emit(r, std::string(lax ? "laco" : "oplaco") + ": " + std::to_string(L.cat->num_objects()) + " objects");
}

void cmd_pullback(const std::string& path, const std::string& out) {
  auto [P, F] = load_cospan(path);
  Pullback pb = pullback(P, F);
  validate(*pb.cat);
  validate(pb.p1);
  validate(pb.p2);
  json r = {{"counts", counts(*pb.cat)}};
  write_or_embed(r, "category", category_with_provenance(*pb.cat, "pullback"), out);
  emit(r, "pullback: " + std::to_string(pb.cat->num_objects()) + " objects");
}

void cmd_fiber(const std::string& path, const std::string& object, const std::string& out) {
  TwoFunctor P = load_fun(path);
  const int x = P.target->find_object(object);
  if (x < 0) throw InputError("no object " + object + " in the target");
  Fiber fb = strict_fiber(P, x);
  validate(*fb.cat);
  validate(fb.incl);
  json r = {{"object", object}, {"counts", counts(*fb.cat)}};
  write_or_embed(r, "category", category_with_provenance(*fb.cat, "fiber"), out);
  emit(r, "fiber over " + object + ": " + std::to_string(fb.cat->num_objects()) + " objects");
}

void cmd_dualize(const std::string& path, const std::string& mode, const std::string& out) {
  TwoCategory c = load_cat(path);
  TwoCategory d = mode == "op" ? op_dual(c) : mode == "co" ? co_dual(c) : mode == "coop" ? coop_dual(c)
                                                                           : throw InputError("mode must be op, co or coop");
  validate(d);
  json r = {{"mode", mode}, {"counts", counts(d)}};
  write_or_embed(r, "category", category_with_provenance(d, mode + "_dual"), out);
  emit(r, mode + " dual");
}

// ---- nerve / homology ----

json nerve_json(const Nerve& nv) {
  const TruncSimplicialSet& X = nv.sset;
  json levels = json::array();
  for (int p = 0; p <= X.N; ++p) {
    json lv = {{"dim", p}};
    json names = json::array(), deg = json::array();
    for (int x = 0; x < X.count[p]; ++x) {
      names.push_back(simplex_name(*nv.cat, p, nv.simplices[p][x]));
      deg.push_back(bool(X.degenerate[p][x]));
    }
    lv["simplices"] = names;
    lv["degenerate"] = deg;
    if (p >= 1) lv["faces"] = X.face[p];
    if (p + 1 <= X.N) lv["degeneracies"] = X.degen[p];
    levels.push_back(lv);
  }
  return {{"max_dim", X.N}, {"levels", levels}};
}

struct NamedSSet {
  TruncSimplicialSet X;
  std::vector<std::vector<std::string>> names;
};

NamedSSet sset_from_json(const json& j) {
  NamedSSet r;
  TruncSimplicialSet& X = r.X;
  const json& md = json_need(j, "max_dim");
  if (!md.is_number_integer()) throw InputError("max_dim must be an integer");
  X.N = md.get<int>();
  const json& lv = json_need(j, "levels");
  if (!lv.is_array() || int(lv.size()) != X.N + 1) throw InputError("levels must list dimensions 0..max_dim");
  X.face.resize(X.N + 1);
  X.degen.resize(X.N + 1);
  for (int p = 0; p <= X.N; ++p) {
    const json& L = lv[p];
    const json& s = json_need(L, "simplices");
    if (!s.is_array()) throw InputError("simplices must be an array");
    r.names.emplace_back();
    for (auto& n : s) r.names.back().push_back(n.is_string() ? n.get<std::string>() : n.dump());
    X.count.push_back(int(s.size()));
  }
  auto table = [&](const json& t, int p, int arity, int range) {
    std::vector<std::vector<int>> out;
    if (!t.is_array() || int(t.size()) != arity) throw InputError("operator table at level " + std::to_string(p) + " has the wrong arity");
    for (auto& row : t) {
      if (!row.is_array() || int(row.size()) != X.count[p]) throw InputError("operator table at level " + std::to_string(p) + " is not total");
      std::vector<int> v;
      for (auto& e : row) {
        if (!e.is_number_integer() || e.get<int>() < 0 || e.get<int>() >= range) throw InputError("operator value out of range");
        v.push_back(e.get<int>());
      }
      out.push_back(v);
    }
    return out;
  };
  for (int p = 0; p <= X.N; ++p) {
    if (p >= 1) X.face[p] = table(json_need(lv[p], "faces"), p, p + 1, X.count[p - 1]);
    if (p + 1 <= X.N) X.degen[p] = table(json_need(lv[p], "degeneracies"), p, p + 1, X.count[p + 1]);
  }
  if (auto e = check_simplicial_identities(X); !e.empty()) throw AxiomError("simplicial-identity", e);
  X.mark_degenerate();
  return r;
}

std::string cache_path(const std::string& key) {
  const char* dir = std::getenv("TWOCAT_CACHE_DIR");
  if (!dir || !*dir) return {};
  return (fs::path(dir) / ("nerve-" + key + ".json")).string();
}

json cached_nerve(const std::string& input, int N) {
  const std::string c = cache_path(run.hash_of(run.inputs.size() - 1) + "-" + std::to_string(N));
  if (!c.empty() && fs::exists(c)) return read_json_file(c);
  auto cat = std::make_shared<TwoCategory>(load_two_category(input));
  json j = nerve_json(nerve(cat, N));
  if (!c.empty()) {
    fs::create_directories(fs::path(c).parent_path());
    std::ofstream(c) << j.dump() << "\n";
  }
  return j;
}

void cmd_nerve(const std::string& input, int N, const std::string& out) {
  run.bounds["max_dim"] = N;
  run.input(input);
  json j = cached_nerve(input, N);
  json r;
  json cs = json::array();
  for (auto& L : j["levels"]) cs.push_back(L["simplices"].size());
  r["level_counts"] = cs;
  write_or_embed(r, "nerve", j, out);
  emit(r, "nerve level counts " + cs.dump());
}

IntMatrix matrix_json(const json& m, int rows, int cols, const std::string& what) {
  if (!m.is_array() || int(m.size()) != rows) throw InputError(what + " must have " + std::to_string(rows) + " rows");
  IntMatrix A(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!m[i].is_array() || int(m[i].size()) != cols) throw InputError(what + " must have " + std::to_string(cols) + " columns");
    for (int k = 0; k < cols; ++k) {
      const json& e = m[i][k];
      if (e.is_number_integer()) A(i, k) = Int(std::to_string(e.get<long long>()));
      else if (e.is_string()) A(i, k) = Int(e.get<std::string>());
      else throw InputError(what + " entries must be integers");
    }
  }
  return A;
}

// {"default": {"rank","torsion"}, "groups": {"n:name": {"gens", "relations"}},
//  "face": {"n:i:name": matrix}, "degeneracy": {"n:i:name": matrix}}
LocalCoeffSystem coeffs_from_json(const json& j, const NamedSSet& S) {
  const TruncSimplicialSet& X = S.X;
  FGAbGroup def;
  def.rank = 1;
  if (j.contains("default")) {
    const json& d = j["default"];
    def.rank = d.value("rank", 0);
    def.torsion.clear();
    if (d.contains("torsion"))
      for (auto& t : d["torsion"]) def.torsion.push_back(Int(t.is_string() ? t.get<std::string>() : std::to_string(t.get<long long>())));
  }
  LocalCoeffSystem L = constant_system(X, def);
  std::vector<std::unordered_map<std::string, int>> ix(X.N + 1);
  for (int n = 0; n <= X.N; ++n)
    for (int x = 0; x < X.count[n]; ++x) ix[n][S.names[n][x]] = x;
  auto parse_key = [&](const std::string& k, bool with_i) {
    std::vector<std::string> parts;
    size_t pos = 0;
    for (int t = 0; t < (with_i ? 2 : 1); ++t) {
      const size_t c = k.find(':', pos);
      if (c == std::string::npos) throw InputError("bad coefficient key " + k);
      parts.push_back(k.substr(pos, c - pos));
      pos = c + 1;
    }
    parts.push_back(k.substr(pos));
    const int n = std::stoi(parts[0]);
    const int i = with_i ? std::stoi(parts[1]) : 0;
    if (n < 0 || n > X.N || i < 0 || i > n) throw InputError("coefficient key out of range: " + k);
    auto it = ix[n].find(parts.back());
    if (it == ix[n].end()) throw InputError("unknown simplex in coefficient key " + k);
    return std::array<int, 3>{n, i, it->second};
  };
  if (j.contains("groups"))
    for (auto& [k, v] : j["groups"].items()) {
      auto [n, i, x] = parse_key(k, false);
      (void)i;
      const int g = v.at("gens").get<int>();
      const json& rel = v.contains("relations") ? v["relations"] : json::array();
      L.gens[n][x] = g;
      L.rel[n][x] = rel.empty() ? IntMatrix(g, 0) : matrix_json(rel, g, int(rel[0].size()), "relations of " + k);
    }
  for (int n = 0; n <= X.N; ++n)
    for (int x = 0; x < X.count[n]; ++x) {
      if (n >= 1)
        for (int i = 0; i <= n; ++i) L.face[n][i][x] = IntMatrix(L.gens[n - 1][X.face[n][i][x]], L.gens[n][x]);
      if (n + 1 <= X.N)
        for (int i = 0; i <= n; ++i) L.degen[n][i][x] = IntMatrix(L.gens[n + 1][X.degen[n][i][x]], L.gens[n][x]);
    }
  // unspecified operators: identity when the ranks match
  for (int n = 0; n <= X.N; ++n)
    for (int x = 0; x < X.count[n]; ++x) {
      auto ident = [](IntMatrix& M) {
        if (M.rows() == M.cols()) M = IntMatrix::identity(M.rows());
      };
      if (n >= 1)
        for (int i = 0; i <= n; ++i) ident(L.face[n][i][x]);
      if (n + 1 <= X.N)
        for (int i = 0; i <= n; ++i) ident(L.degen[n][i][x]);
    }
  auto ops = [&](const char* key, bool face) {
    if (!j.contains(key)) return;
    for (auto& [k, v] : j[key].items()) {
      auto [n, i, x] = parse_key(k, true);
      if (face && n < 1) throw InputError("face key at level 0: " + k);
      if (!face && n + 1 > X.N) throw InputError("degeneracy key above truncation: " + k);
      IntMatrix& M = face ? L.face[n][i][x] : L.degen[n][i][x];
      M = matrix_json(v, M.rows(), M.cols(), k);
    }
  };
  ops("face", true);
  ops("degeneracy", false);
  return L;
}

void cmd_homology(const std::string& nerve_path, const std::string& input, int N, int deg, const std::string& coeffs) {
  run.bounds["deg"] = deg;
  NamedSSet S;
  if (!nerve_path.empty()) {
    run.input(nerve_path);
    json j = read_json_file(nerve_path);
    if (j.contains("nerve") && j["nerve"].is_object()) j = j["nerve"];
    S = sset_from_json(j);
  } else if (!input.empty()) {
    run.bounds["trunc"] = N;
    run.input(input);
    S = sset_from_json(cached_nerve(input, N));
  } else {
    throw InputError("homology needs --nerve or --input");
  }
  require_trusted(deg, S.X.N);
  json r = {{"deg", deg}, {"trusted_max", S.X.N - 1}};
  FGAbGroup h;
  if (coeffs.empty()) {
    h = homology(S.X, deg);
  } else {
    run.input(coeffs);
    LocalCoeffSystem L = coeffs_from_json(read_json_file(coeffs), S);
    if (auto e = check_functoriality(S.X, L); !e.empty()) throw AxiomError("coefficient-functoriality", e);
    r["morphism_inverting"] = is_morphism_inverting(S.X, L);
    h = homology_local(S.X, L, deg);
  }
  r["homology"] = group_json(h);
  emit(r, "H_" + std::to_string(deg) + " = " + h.str());
}

// ---- opfib ----

json cert_json(const OpfibrationCertificate& c) {
  const TwoCategory &C = *c.P.source, &D = *c.P.target;
  json l1 = json::array(), l2 = json::array();
  std::vector<std::pair<std::uint64_t, int>> a(c.lift1.begin(), c.lift1.end()), b(c.lift2.begin(), c.lift2.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (auto& [k, v] : a)
    l1.push_back({{"object", C.object(int(k >> 32))}, {"one_cell", D.one(int(k & 0xffffffffu)).id}, {"lift", C.one(v).id}});
  for (auto& [k, v] : b)
    l2.push_back({{"one_cell", C.one(int(k >> 32)).id}, {"two_cell", D.two(int(k & 0xffffffffu)).id}, {"lift", C.two(v).id}});
  json cart = json::array();
  for (int k = 0; k < C.num_two_cells(); ++k)
    if (c.is_cartesian[k]) cart.push_back(C.two(k).id);
  return {{"opcartesian_lifts", l1}, {"cartesian_lifts", l2}, {"cartesian_two_cells", cart}, {"composite_checks", c.composite_checks}};
}

int cmd_opfib(const std::string& path, const std::string& emit_cert) {
  TwoFunctor P = load_fun(path);
  OpfibrationCertificate c = check_opfibration(P);
  if (!c) {
    emit({{"opfibration", false}, {"counterexample", {{"clause", c.failure->clause}, {"detail", c.failure->detail}}}},
         "not an opfibration: " + c.failure->clause);
    return 2;
  }
  if (auto e = verify_certificate(c); !e.empty()) throw AxiomError("certificate", e);
  json r = {{"opfibration", true}};
  if (!emit_cert.empty()) write_or_embed(r, "certificate", cert_json(c), emit_cert);
  emit(r, "opfibration certified");
  return 0;
}

// ---- ss ----

void cmd_ss(const std::string& path, int P, int Q, std::optional<int> fq) {
  run.bounds["pmax"] = P;
  run.bounds["qmax"] = Q;
  TwoFunctor F = load_fun(path);
  const int T = P + Q;
  run.bounds["total"] = T;
  Bisimplicial B = build_B(F, P, Q, T);
  if (auto e = check_bisimplicial(B); !e.empty()) throw AxiomError("bisimplicial", e);
  SSPages pg = pages(B);
  json grid = json::array();
  for (auto& [pq, g] : pg.E1) {
    json e = {{"p", pq.first}, {"q", pq.second}, {"E1", group_json(g)}, {"E1_trusted", pg.e1_trusted(pq.first, pq.second)}};
    if (auto it = pg.E2.find(pq); it != pg.E2.end()) {
      e["E2"] = group_json(it->second);
      e["E2_trusted"] = pg.e2_trusted(pq.first, pq.second);
    }
    grid.push_back(e);
  }
  json tot = json::array();
  const int tm = tot_trusted_max(B);
  for (int n = 0; n <= tm; ++n) tot.push_back(group_json(totalization_homology(B, n)));
  json r = {{"trusted_range", {{"totalization_max", tm}, {"rule", "E1 needs q+1<=Q, E2 needs p+1<=P and q+1<=Q"}}},
            {"pages", grid},
            {"d1_squared_zero", pg.d1_squared_zero},
            {"totalization", tot}};
  if (fq) {
    const int q = *fq;
    OpfibrationCertificate cert = check_opfibration(F);
    if (!cert) throw AxiomError("hypothesis", "not an opfibration: " + cert.failure->clause);
    FiberSystem sys = fiber_coeff_system(F, cert, q, P + 1);
    json fib = json::array();
    for (int x = 0; x < F.target->num_objects(); ++x)
      fib.push_back({{"object", F.target->object(x)}, {"homology", group_json(sys.fiber_homology[x])}});
    json cmp = json::array();
    for (int p = 0; p + 1 <= P; ++p)
      if (pg.e2_trusted(p, q)) cmp.push_back({{"p", p}, {"q", q}, {"equal", e2_vs_local(F, cert, p, q)}});
    r["fiber_coefficients"] = {{"q", q},
                               {"fibers", fib},
                               {"morphism_inverting", is_morphism_inverting(sys.ND.sset, sys.L)},
                               {"e2_vs_local", cmp}};
  }
  emit(r, "spectral sequence computed");
}

// ---- sinv / gc-check ----

PGMAction load_action_or_self(const std::string& pgm, const std::string& action, std::shared_ptr<const PGM>& S) {
  if (!action.empty()) {
    run.input(action);
    PGMAction a = load_action(action);
    S = a.S;
    return a;
  }
  run.input(pgm);
  S = load_pgm(pgm);
  PGMAction a = self_action(S);
  validate_action(a);
  return a;
}

void cmd_sinv(const std::string& pgm, const std::string& action, bool point, const std::string& out) {
  std::shared_ptr<const PGM> S;
  SInv X;
  if (point) {
    if (pgm.empty()) throw InputError("--point needs --pgm");
    run.input(pgm);
    S = load_pgm(pgm);
    X = s_inv_point(S);
  } else {
    PGMAction a = load_action_or_self(pgm, action, S);
    X = s_inv_x(S, a);
  }
  validate(*X.cat);
  const Components c = pi0(*X.cat);
  json r = {{"counts", counts(*X.cat)}, {"components", c.count()}, {"congruence_checks", X.congruence_checks}};
  if (point) {
    PointContraction pc;
    try {
      pc = point_contraction(X);
      r["hom_terminal"] = pc.hom_terminal;
      r["contraction"] = pc.detail;
    } catch (const AxiomError& e) {
      r["hom_terminal"] = nullptr;
      r["contraction"] = e.what();
    }
  } else {
    r["inclusion"] = to_json(X.i, false);
  }
  write_or_embed(r, "category", category_with_provenance(*X.cat, point ? "sinv-point" : "sinv"), out);
  emit(r, "S^-1 X: " + std::to_string(X.cat->num_objects()) + " objects, " + std::to_string(c.count()) + " components");
}

void cmd_gc(const std::string& pgm, const std::string& action, int maxdeg, int N) {
  run.bounds["max_deg"] = maxdeg;
  run.bounds["trunc"] = N;
  std::shared_ptr<const PGM> S;
  PGMAction a = load_action_or_self(pgm, action, S);
  json degs = json::array();
  std::string summary;
  CommMonoid M;
  for (int q = 0; q <= maxdeg; ++q) {
    GCReport g = group_completion_check(S, a, q, N);
    M = g.pi0;
    degs.push_back({{"q", q},
                    {"H_X", group_json(g.HX)},
                    {"localized", group_json(g.localized)},
                    {"H_SinvX", group_json(g.HSinv)},
                    {"representative_independent", g.representative_independent},
                    {"iso", g.iso}});
    summary += "q=" + std::to_string(q) + ": " + g.localized.str() + " -> " + g.HSinv.str() + (g.iso ? " iso\n" : " not iso\n");
  }
  emit({{"pi0", {{"elements", M.names}, {"group", M.is_group()}}}, {"degrees", degs}}, summary);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite 2-category toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", run.pretty, "indented JSON plus a short summary");
  app.set_version_flag("--version", TWOCAT_VERSION);

  std::string file, kind = "auto", out, cospan, functor, object, mode, input, nerve_path, coeffs, cert, pgm, action;
  int N = 4, deg = 0, P = 3, Q = 3, maxdeg = 0;
  bool point = false;
  std::optional<int> fq;

  auto* v = app.add_subcommand("validate", "validate a category, functor, PGM or action file");
  v->add_option("file", file)->required();
  v->add_option("--kind", kind)->check(CLI::IsMember({"auto", "category", "functor", "pgm", "action"}));
  auto* la = app.add_subcommand("laco", "lax comma object of a cospan");
  auto* ol = app.add_subcommand("oplaco", "oplax comma object of a cospan");
  auto* pb = app.add_subcommand("pullback", "strict pullback of a cospan");
  for (auto* s : {la, ol, pb}) {
    s->add_option("--cospan", cospan)->required();
    s->add_option("--out", out);
  }
  auto* fi = app.add_subcommand("fiber", "strict fiber of a 2-functor");
  fi->add_option("--functor", functor)->required();
  fi->add_option("--object", object)->required();
  fi->add_option("--out", out);
  auto* ne = app.add_subcommand("nerve", "normal oplax nerve");
  ne->add_option("--input", input)->required();
  ne->add_option("--max-dim", N);
  ne->add_option("--out", out);
  auto* ho = app.add_subcommand("homology", "homology of a nerve");
  ho->add_option("--nerve", nerve_path);
  ho->add_option("--input", input);
  ho->add_option("--trunc", N);
  ho->add_option("--deg", deg)->required();
  ho->add_option("--coeffs", coeffs);
  auto* op = app.add_subcommand("opfib", "opfibration certificate");
  op->add_option("--functor", functor)->required();
  op->add_option("--emit-cert", cert);
  auto* ss = app.add_subcommand("ss", "bisimplicial spectral sequence");
  ss->add_option("--functor", functor)->required();
  ss->add_option("--pmax", P);
  ss->add_option("--qmax", Q);
  ss->add_option("--fiber-coeffs", fq);
  auto* si = app.add_subcommand("sinv", "the S^-1 X construction");
  si->add_option("--pgm", pgm);
  si->add_option("--action", action);
  si->add_flag("--point", point);
  si->add_option("--out", out);
  auto* gc = app.add_subcommand("gc-check", "group completion check");
  gc->add_option("--pgm", pgm);
  gc->add_option("--action", action);
  gc->add_option("--max-deg", maxdeg)->required();
  gc->add_option("--trunc", N);
  auto* du = app.add_subcommand("dualize", "op, co or coop dual");
  du->add_option("--input", input)->required();
  du->add_option("--mode", mode)->required()->check(CLI::IsMember({"op", "co", "coop"}));
  du->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*v) run.sub = "validate", cmd_validate(file, kind);
    else if (*la) run.sub = "laco", cmd_comma(cospan, true, out);
    else if (*ol) run.sub = "oplaco", cmd_comma(cospan, false, out);
    else if (*pb) run.sub = "pullback", cmd_pullback(cospan, out);
    else if (*fi) run.sub = "fiber", cmd_fiber(functor, object, out);
    else if (*ne) run.sub = "nerve", cmd_nerve(input, N, out);
    else if (*ho) run.sub = "homology", cmd_homology(nerve_path, input, N, deg, coeffs);
    else if (*op) {
      run.sub = "opfib";
      return cmd_opfib(functor, cert);
    }
    else if (*ss) run.sub = "ss", cmd_ss(functor, P, Q, fq);
    else if (*si) run.sub = "sinv", cmd_sinv(pgm, action, point, out);
    else if (*gc) {
      run.sub = "gc-check";
      if (pgm.empty() && action.empty()) throw InputError("gc-check needs --pgm or --action");
      cmd_gc(pgm, action, maxdeg, N);
    } else if (*du) run.sub = "dualize", cmd_dualize(input, mode, out);
  } catch (const InputError& e) {
    emit({{"error", "input"}, {"detail", e.what()}});
    return 1;
  } catch (const AxiomError& e) {
    emit({{"error", "axiom"}, {"counterexample", {{"axiom", e.axiom()}, {"detail", e.detail()}}}});
    return 2;
  } catch (const std::exception& e) {
    emit({{"error", "input"}, {"detail", e.what()}});
    return 1;
  }
  return 0;
}
