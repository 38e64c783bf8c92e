#pragma once

#include <filesystem>
#include <json.hpp>

#include "twocat/functor.hpp"

namespace twocat {

using json = nlohmann::ordered_json;

json to_json(const TwoCategory& c);
// Structural parse; InputError on malformed data. Call validate() for axioms.
TwoCategory two_category_from_json(const json& j);

json to_json(const TwoFunctor& f, bool embed_categories = true);
// "source"/"target" may be inline 2-categories or paths relative to base.
TwoFunctor functor_from_json(const json& j, const std::filesystem::path& base);

json read_json_file(const std::filesystem::path& p);
TwoCategory load_two_category(const std::filesystem::path& p);
TwoFunctor load_functor(const std::filesystem::path& p);

// InputError when the key is missing or not a string.
const json& json_need(const json& j, const char* key);
std::string json_string(const json& j, const char* key);

// Inline 2-category (validated) or a path relative to base.
TwoCatPtr category_ref(const json& j, const std::filesystem::path& base);
// Total map from a list of [source, target] identifier pairs.
std::vector<int> read_map(const json& arr, int n, const std::function<int(const std::string&)>& src,
                          const std::function<int(const std::string&)>& tgt, const char* what);

// Pair lists ["a","b"] keyed by identifiers of the source.
json id_map_json(const std::vector<int>& m, const std::function<std::string(int)>& src_id,
                 const std::function<std::string(int)>& tgt_id);

}  // namespace twocat
