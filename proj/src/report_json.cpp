#include "spiralcert/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include <json.hpp>

namespace spiralcert {

namespace {

using nlohmann::json;

void put_num(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void put_int(std::string& out, std::int64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
  out += buf;
}

void put_nums(std::string& out, std::span<const double> values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    put_num(out, values[i]);
  }
  out += ']';
}

void put_family(std::string& out, const PhaseFamily& family) {
  out += "{\"kind\":\"";
  out += kind_name(family.kind());
  out += '"';
  if (family.kind() != PhaseKind::Custom) {
    out += ",\"alpha\":";
    put_num(out, family.alpha());
  }
  if (family.kind() == PhaseKind::Power) {
    out += ",\"beta\":";
    put_num(out, family.beta());
  }
  if (family.kind() == PhaseKind::Custom) {
    out += ",\"values\":";
    put_nums(out, family.custom_values());
  }
  out += '}';
}

void put_window_fields(std::string& out, const AnnulusWindow& w) {
  out += "{\"inner_radius\":";
  put_num(out, w.inner_radius);
  out += ",\"width\":";
  put_num(out, w.width);
  out += ",\"first_index\":";
  put_int(out, w.first_index);
  out += ",\"count\":";
  put_int(out, w.count);
  out += '}';
}

void put_sector(std::string& out, const SectorSpec& s) {
  out += "{\"angle_lo\":";
  put_num(out, s.angle_lo);
  out += ",\"angle_hi\":";
  put_num(out, s.angle_hi);
  out += ",\"radius_lo\":";
  put_num(out, s.radius_lo);
  out += ",\"radius_hi\":";
  put_num(out, s.radius_hi);
  out += '}';
}

std::string head(const char* type) {
  std::string out = "{\"schema_version\":1,\"type\":\"";
  out += type;
  out += '"';
  return out;
}

double get_num(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

PhaseFamily get_family(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "sqrt") return PhaseFamily::sqrt_linear(j.at("alpha").get<double>());
  if (kind == "linear") return PhaseFamily::linear(j.at("alpha").get<double>());
  if (kind == "power") {
    return PhaseFamily::power(j.at("alpha").get<double>(), j.at("beta").get<double>());
  }
  if (kind == "custom") {
    return PhaseFamily::custom(j.at("values").get<std::vector<double>>());
  }
  throw std::invalid_argument("unknown family kind: " + kind);
}

AnnulusWindow get_window(const json& j) {
  return {get_num(j.at("inner_radius")), get_num(j.at("width")),
          j.at("first_index").get<std::int64_t>(), j.at("count").get<std::int64_t>()};
}

SectorSpec get_sector(const json& j) {
  return {get_num(j.at("angle_lo")), get_num(j.at("angle_hi")),
          get_num(j.at("radius_lo")), get_num(j.at("radius_hi"))};
}

json parse_checked(std::string_view text, const char* type) {
  json j = json::parse(text);
  if (j.at("schema_version").get<int>() != 1) {
    throw std::invalid_argument("unsupported schema_version");
  }
  if (j.at("type").get<std::string>() != type) {
    throw std::invalid_argument("unexpected document type");
  }
  return j;
}

}  // namespace

std::string to_json(const AnnulusWindow& window) {
  std::string out = head("annulus_window");
  out += ",\"window\":";
  put_window_fields(out, window);
  out += '}';
  return out;
}

std::string to_json(const GapReport& report) {
  std::string out = head("gap_report");
  out += ",\"window\":";
  put_window_fields(out, report.window);
  out += ",\"gaps\":";
  put_nums(out, report.gaps);
  out += ",\"min_gap\":";
  put_num(out, report.min_gap);
  out += ",\"scaled_min_gap\":";
  put_num(out, report.scaled_min_gap);
  out += '}';
  return out;
}

std::string to_json(const GapProfile& profile) {
  std::string out = head("gap_profile");
  out += ",\"family\":";
  put_family(out, profile.family);
  out += ",\"width\":";
  put_num(out, profile.width);
  out += ",\"entries\":[";
  for (std::size_t i = 0; i < profile.entries.size(); ++i) {
    const GapSummary& s = profile.entries[i];
    if (i) out += ',';
    out += "{\"window\":";
    put_window_fields(out, s.window);
    out += ",\"min_gap\":";
    put_num(out, s.min_gap);
    out += ",\"scaled_min_gap\":";
    put_num(out, s.scaled_min_gap);
    out += ",\"wrap_gap\":";
    put_num(out, s.wrap_gap);
    out += ",\"included\":";
    out += s.included ? "true" : "false";
    out += '}';
  }
  out += "],\"inf_scaled\":";
  put_num(out, profile.inf_scaled);
  out += ",\"sup_scaled\":";
  put_num(out, profile.sup_scaled);
  out += ",\"included_count\":";
  put_int(out, profile.included_count);
  out += ",\"flagged_count\":";
  put_int(out, profile.flagged_count);
  out += '}';
  return out;
}

std::string to_json(const DeloneReport& report) {
  std::string out = head("delone_report");
  out += ",\"family\":";
  put_family(out, report.family);
  out += ",\"r_max\":";
  put_num(out, report.r_max);
  out += ",\"h_lower\":";
  put_num(out, report.h_lower);
  out += ",\"h_upper\":";
  put_num(out, report.h_upper);
  out += ",\"inf_scaled\":";
  put_num(out, report.inf_scaled);
  out += ",\"sup_scaled\":";
  put_num(out, report.sup_scaled);
  out += ",\"separation_bound\":";
  put_num(out, report.separation_bound);
  out += ",\"grid_size\":";
  put_int(out, report.grid_size);
  out += ",\"flagged_windows\":";
  put_int(out, report.flagged_windows);
  out += ",\"empirics_radius\":";
  put_num(out, report.empirics_radius);
  out += ",\"packing_radius\":";
  put_num(out, report.packing_radius);
  out += ",\"covering_region\":";
  put_sector(out, report.covering_region);
  out += ",\"covering_eps\":";
  put_num(out, report.covering_eps);
  out += ",\"covering_radius_est\":";
  put_num(out, report.covering_radius_est);
  out += ",\"covering_slack\":";
  put_num(out, report.covering_slack);
  out += ",\"density_sector\":";
  put_sector(out, report.density_sector);
  out += ",\"density_ratio\":";
  put_num(out, report.density_ratio);
  out += ",\"delta_m\":{\"upper_ok\":";
  out += report.delta_m.upper_ok ? "true" : "false";
  out += ",\"upper_checked\":";
  put_int(out, report.delta_m.upper_checked);
  out += ",\"upper_worst\":";
  put_num(out, report.delta_m.upper_worst);
  out += ",\"lower_ok\":";
  out += report.delta_m.lower_ok ? "true" : "false";
  out += ",\"lower_checked\":";
  put_int(out, report.delta_m.lower_checked);
  out += ",\"lower_worst\":";
  put_num(out, report.delta_m.lower_worst);
  out += "},\"verdict\":";
  out += report.verdict ? "true" : "false";
  out += '}';
  return out;
}

std::string to_json(const GapHistogram& histogram) {
  std::string out = head("gap_histogram");
  out += ",\"family\":";
  put_family(out, histogram.family);
  out += ",\"n\":";
  put_int(out, histogram.n);
  out += ",\"bin_edges\":";
  put_nums(out, histogram.bin_edges);
  out += ",\"counts\":[";
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    if (i) out += ',';
    put_int(out, histogram.counts[i]);
  }
  out += "],\"min_rescaled\":";
  put_num(out, histogram.min_rescaled);
  out += ",\"max_rescaled\":";
  put_num(out, histogram.max_rescaled);
  out += '}';
  return out;
}

std::string to_json(const PairCorrelationReport& report) {
  std::string out = head("pair_correlation");
  out += ",\"n\":";
  put_int(out, report.n);
  out += ",\"excluded\":";
  put_int(out, report.excluded);
  out += ",\"squares_included\":";
  out += report.squares_included ? "true" : "false";
  out += ",\"s_values\":";
  put_nums(out, report.s_values);
  out += ",\"statistics\":";
  put_nums(out, report.statistics);
  out += ",\"expected\":";
  put_nums(out, report.expected);
  out += '}';
  return out;
}

AnnulusWindow parse_annulus_window(std::string_view text) {
  json j = parse_checked(text, "annulus_window");
  return get_window(j.at("window"));
}

GapReport parse_gap_report(std::string_view text) {
  json j = parse_checked(text, "gap_report");
  GapReport r;
  r.window = get_window(j.at("window"));
  r.gaps = j.at("gaps").get<std::vector<double>>();
  r.min_gap = get_num(j.at("min_gap"));
  r.scaled_min_gap = get_num(j.at("scaled_min_gap"));
  return r;
}

GapProfile parse_gap_profile(std::string_view text) {
  json j = parse_checked(text, "gap_profile");
  GapProfile p;
  p.family = get_family(j.at("family"));
  p.width = get_num(j.at("width"));
  for (const json& e : j.at("entries")) {
    GapSummary s;
    s.window = get_window(e.at("window"));
    s.min_gap = get_num(e.at("min_gap"));
    s.scaled_min_gap = get_num(e.at("scaled_min_gap"));
    s.wrap_gap = get_num(e.at("wrap_gap"));
    s.included = e.at("included").get<bool>();
    p.entries.push_back(s);
  }
  p.inf_scaled = get_num(j.at("inf_scaled"));
  p.sup_scaled = get_num(j.at("sup_scaled"));
  p.included_count = j.at("included_count").get<std::int64_t>();
  p.flagged_count = j.at("flagged_count").get<std::int64_t>();
  return p;
}

DeloneReport parse_delone_report(std::string_view text) {
  json j = parse_checked(text, "delone_report");
  DeloneReport r;
  r.family = get_family(j.at("family"));
  r.r_max = get_num(j.at("r_max"));
  r.h_lower = get_num(j.at("h_lower"));
  r.h_upper = get_num(j.at("h_upper"));
  r.inf_scaled = get_num(j.at("inf_scaled"));
  r.sup_scaled = get_num(j.at("sup_scaled"));
  r.separation_bound = get_num(j.at("separation_bound"));
  r.grid_size = j.at("grid_size").get<std::int64_t>();
  r.flagged_windows = j.at("flagged_windows").get<std::int64_t>();
  r.empirics_radius = get_num(j.at("empirics_radius"));
  r.packing_radius = get_num(j.at("packing_radius"));
  r.covering_region = get_sector(j.at("covering_region"));
  r.covering_eps = get_num(j.at("covering_eps"));
  r.covering_radius_est = get_num(j.at("covering_radius_est"));
  r.covering_slack = get_num(j.at("covering_slack"));
  r.density_sector = get_sector(j.at("density_sector"));
  r.density_ratio = get_num(j.at("density_ratio"));
  const json& dm = j.at("delta_m");
  r.delta_m.upper_ok = dm.at("upper_ok").get<bool>();
  r.delta_m.upper_checked = dm.at("upper_checked").get<std::int64_t>();
  r.delta_m.upper_worst = get_num(dm.at("upper_worst"));
  r.delta_m.lower_ok = dm.at("lower_ok").get<bool>();
  r.delta_m.lower_checked = dm.at("lower_checked").get<std::int64_t>();
  r.delta_m.lower_worst = get_num(dm.at("lower_worst"));
  r.verdict = j.at("verdict").get<bool>();
  return r;
}

GapHistogram parse_gap_histogram(std::string_view text) {
  json j = parse_checked(text, "gap_histogram");
  GapHistogram h;
  h.family = get_family(j.at("family"));
  h.n = j.at("n").get<std::int64_t>();
  h.bin_edges = j.at("bin_edges").get<std::vector<double>>();
  h.counts = j.at("counts").get<std::vector<std::int64_t>>();
  h.min_rescaled = get_num(j.at("min_rescaled"));
  h.max_rescaled = get_num(j.at("max_rescaled"));
  return h;
}

PairCorrelationReport parse_pair_correlation(std::string_view text) {
  json j = parse_checked(text, "pair_correlation");
  PairCorrelationReport r;
  r.n = j.at("n").get<std::int64_t>();
  r.excluded = j.at("excluded").get<std::int64_t>();
  r.squares_included = j.at("squares_included").get<bool>();
  r.s_values = j.at("s_values").get<std::vector<double>>();
  r.statistics = j.at("statistics").get<std::vector<double>>();
  r.expected = j.at("expected").get<std::vector<double>>();
  return r;
}

}  // namespace spiralcert
