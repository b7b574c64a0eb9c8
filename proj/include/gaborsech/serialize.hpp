#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "gaborsech/critical.hpp"
#include "gaborsech/factorization.hpp"
#include "gaborsech/framebounds.hpp"
#include "gaborsech/zak.hpp"

namespace gaborsech {

// Output formats
//
// CSV: '.' decimal point, no locale, doubles with 17 significant digits.
//   Zak field:     t,nu,re,im         one row per sample, row-major t then nu
//   Profile:       t,value
//   Frame bounds:  gamma,a,b,A_est,B_est,A_analytic,converged
//   Limits:        gamma,to_sinc,to_indicator
//
// JSON: metadata object plus flat arrays; doubles use the shortest
// representation that round-trips to the same binary64 value.

/// printf("%.17g") without locale dependence.
std::string format_double(double x);

nlohmann::json to_json(const WindowSpec& w);
nlohmann::json to_json(const GridSpec& g);
nlohmann::json to_json(const ZakField& field);
nlohmann::json to_json(const FactorizationReport& report);
nlohmann::json to_json(const FrameBoundsReport& report);
nlohmann::json to_json(const SampledProfile& profile, const char* what);
nlohmann::json to_json(std::span<const LimitDistance> limits);

WindowSpec window_from_json(const nlohmann::json& j);
GridSpec grid_from_json(const nlohmann::json& j);
/// Inverse of to_json(ZakField); InvalidArgument on schema mismatch.
ZakField zak_field_from_json(const nlohmann::json& j);

std::string to_csv(const ZakField& field);
std::string to_csv(const SampledProfile& profile);
std::string frame_bounds_csv_header();
std::string to_csv_row(const FrameBoundsReport& report);
std::string to_csv(std::span<const LimitDistance> limits);

}  // namespace gaborsech
