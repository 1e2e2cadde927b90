#pragma once

#include <complex>
#include <fstream>
#include <string>

#include "json.hpp"

namespace oracle {

inline const nlohmann::json& data() {
  static const nlohmann::json j = [] {
    std::ifstream in(GTODA_ORACLES);
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline std::complex<double> cnum(const nlohmann::json& v) {
  return {std::stod(v.at(0).get<std::string>()), std::stod(v.at(1).get<std::string>())};
}

}  // namespace oracle
