// Writes the standard fixtures as JSON files into the given directory.
#include <fstream>
#include <iostream>

#include "twocat/fixtures.hpp"
#include "twocat/json_io.hpp"
#include "twocat/pgm.hpp"

using namespace twocat;
namespace fs = std::filesystem;

namespace {

fs::path dir;

void put(const std::string& name, const json& j) {
  std::ofstream o(dir / name);
  o << j.dump(1) << "\n";
}

json functor_file(const TwoFunctor& F, const std::string& src, const std::string& tgt) {
  json j = to_json(F, false);
  json out = {{"source", src}, {"target", tgt}};
  for (auto& [k, v] : j.items()) out[k] = v;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: export_fixtures DIR\n";
    return 1;
  }
  dir = argv[1];
  fs::create_directories(dir);

  put("FIX_T.json", to_json(*fix_T()));
  put("FIX_I.json", to_json(*fix_I()));
  put("FIX_G2.json", to_json(*fix_G2()));
  put("FIX_G2sat.json", to_json(*fix_G2sat()));
  put("FIX_C2.json", to_json(*fix_C2()));
  put("FIX_M2.json", to_json(*fix_M2()));
  const Product GC = fix_prod(fix_G2(), fix_C2());
  put("FIX_PROD_G2_C2.json", to_json(*GC.cat));
  const Product GI = fix_prod(fix_G2(), fix_I());
  put("FIX_PROD_G2_I.json", to_json(*GI.cat));
  auto D2 = std::make_shared<TwoCategory>(discrete({"0", "1"}));
  put("discrete01.json", to_json(*D2));

  put("id_G2.json", functor_file(identity_functor(fix_G2()), "FIX_G2.json", "FIX_G2.json"));
  put("id_I.json", functor_file(identity_functor(fix_I()), "FIX_I.json", "FIX_I.json"));
  put("id_T.json", functor_file(identity_functor(fix_T()), "FIX_T.json", "FIX_T.json"));
  put("G2_to_T.json", functor_file(to_terminal(fix_G2(), fix_T()), "FIX_G2.json", "FIX_T.json"));
  put("G2sat_to_T.json", functor_file(to_terminal(fix_G2sat(), fix_T()), "FIX_G2sat.json", "FIX_T.json"));
  put("pr2_G2xC2.json", functor_file(GC.pr2, "FIX_PROD_G2_C2.json", "FIX_C2.json"));
  put("pr2_G2xI.json", functor_file(GI.pr2, "FIX_PROD_G2_I.json", "FIX_I.json"));
  put("point_C2_0.json", functor_file(point(fix_C2(), 0), "FIX_T.json", "FIX_C2.json"));
  put("point_I_1.json", functor_file(point(fix_I(), 1), "FIX_T.json", "FIX_I.json"));
  TwoFunctor di{D2, fix_I(), {0, 1}, {0, 2}, {0, 2}};
  validate(di);
  put("discrete-to-interval.json", functor_file(di, "discrete01.json", "FIX_I.json"));

  put("cospan_pr2_point0.json", {{"left", "pr2_G2xC2.json"}, {"right", "point_C2_0.json"}});
  put("cospan_idI_point1.json", {{"left", "id_I.json"}, {"right", "point_I_1.json"}});
  put("cospan_idG2_idG2.json", {{"left", "id_G2.json"}, {"right", "id_G2.json"}});

  put("pgm_C2.json", to_json(*pgm_C2()));
  put("pgm_M2.json", to_json(*pgm_M2()));
  put("pgm_G2.json", to_json(*pgm_G2()));
  put("pgm_G2sat.json", to_json(*pgm_G2sat()));
  put("action_C2_trivial_on_G2sat.json", {{"pgm", "pgm_C2.json"}, {"space", "FIX_G2sat.json"}, {"trivial", true}});
  put("coeffs_Z3.json", {{"default", {{"rank", 0}, {"torsion", {3}}}}});
  return 0;
}
