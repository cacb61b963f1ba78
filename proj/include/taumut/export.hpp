#pragma once

// DOT and JSON records for explored exchange quivers.

#include <string>

#include "taumut/tau_tilting.hpp"

namespace taumut {

struct ExportOptions {
  bool smc = false;       // per-vertex degree0 / degree_minus1 dim vectors
  bool matrices = false;  // per-vertex g and c matrices (rows)
};

std::string export_dot(TauTiltingEngine& engine, const ExchangeQuiver& q);
std::string export_records(TauTiltingEngine& engine, const ExchangeQuiver& q,
                           const ExportOptions& opts = {});

}  // namespace taumut
