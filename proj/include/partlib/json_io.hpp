// JSON (de)serialization for recurrence triples. Writing renders seed values
// as decimal strings so arbitrarily large integers survive the round trip;
// reading accepts either integers or decimal strings for them.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "partlib/triple.hpp"

namespace partlib {

inline nlohmann::json triple_to_json(const triple_spec& T) {
  nlohmann::json j;
  j["name"] = T.name;
  j["k"] = {{"prefix", T.k.prefix}, {"m", T.k.m}, {"c", T.k.c}, {"n0", T.k.n0}};
  j["L"] = T.L;
  j["R"] = T.R;
  j["init"] = nlohmann::json::array();
  for (const auto& v : T.init) j["init"].push_back(v.str());
  return j;
}

inline triple_spec triple_from_json(const nlohmann::json& j) {
  try {
    std::string name = j.value("name", std::string("custom"));
    const auto& jk = j.at("k");
    std::vector<index_t> prefix;
    if (jk.contains("prefix")) prefix = jk.at("prefix").get<std::vector<index_t>>();
    index_t m = jk.at("m").get<index_t>();
    index_t c = jk.value("c", index_t{0});
    index_t n0 = jk.value("n0", index_t{-1});
    auto k = make_k_spec(prefix, m, c, n0);

    auto L = j.at("L").get<std::vector<long long>>();
    auto R = j.at("R").get<std::vector<long long>>();

    std::vector<bigint> init;
    for (const auto& item : j.at("init")) {
      if (item.is_string()) {
        init.emplace_back(item.get<std::string>());
      } else if (item.is_number_integer()) {
        init.emplace_back(item.get<long long>());
      } else {
        throw error(errc::parse_error, "seed entries must be integers or decimal strings");
      }
    }
    return make_triple(name, k, L, R, init);
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, std::string("bad triple JSON: ") + e.what());
  }
}

inline triple_spec triple_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  return triple_from_json(j);
}

}  // namespace partlib
