#include "ringspread/cli/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ringspread/cli/format.hpp"
#include "ringspread/cli/spec_io.hpp"
#include "ringspread/errors.hpp"
#include "ringspread/windowed_moments.hpp"

namespace ringspread::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Report numbers: 10 significant digits, +infinity as the string "inf".
ojson num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  if (x == 0.0) return 0.0;
  return round_significant(x);
}

ojson angle(double x) { return num(reduce_angle(x)); }

ojson angles(const std::vector<double>& xs) {
  ojson out = ojson::array();
  for (double x : xs) out.push_back(angle(x));
  return out;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string text_num(double x) { return sig10(x == 0.0 ? 0.0 : x); }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string centers_mode(const CMeasure& c) { return c.all_points ? "all-points" : "discrete"; }

ojson relation_json(const RelationReport& r) {
  ojson j;
  j["id"] = std::string(to_string(r.id));
  j["phi0"] = r.phi0 ? angle(*r.phi0) : ojson(nullptr);
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["slack"] = num(r.slack);
  j["satisfied"] = r.satisfied;
  return j;
}

ojson centers_json(const MeasureReport& m) {
  ojson j;
  j["mode"] = centers_mode(m.c);
  ojson points = ojson::array();
  for (const auto& cv : m.c.all_centers) {
    points.push_back({{"phi0", angle(cv.phi0)}, {"variance", num(cv.variance)}, {"selected", cv.selected}});
  }
  j["points"] = points;
  j["selected"] = angles(m.c.selected_centers);
  j["c_measure"] = num(m.c.value);
  j["centroid_angle"] = m.centers.centroid_angle ? angle(*m.centers.centroid_angle) : ojson(nullptr);
  j["centroid_consistent"] = m.centers.centroid_consistent;
  return j;
}

double quadrature_check(const CircleState& state, const RunConfig& cfg) {
  const WindowedMoments engine(state);
  QuadratureConfig q;
  q.panels = cfg.quad_panels;
  double worst = 0.0;
  for (double phi0 : even_phi0(8)) {
    const WindowMoments closed = engine.at(phi0);
    const WindowMoments quad = window_moments_by_quadrature(state, phi0, q);
    worst = std::max({worst, std::abs(closed.mean - quad.mean), std::abs(closed.variance - quad.variance),
                      std::abs(closed.cov_re - quad.cov_re), std::abs(closed.cov_im - quad.cov_im)});
  }
  return worst;
}

std::vector<std::pair<std::string, double>> measure_rows(const MeasureReport& m) {
  return {
      {"tilde_sq", m.tilde_sq},
      {"kr_phi", m.kr_phi},
      {"kr_lz", m.kr_lz},
      {"a_measure", m.a_measure},
      {"b_measure", m.b.value},
      {"c_measure", m.c.value},
      {"lz_mean", m.lz_mean},
      {"lz_variance", m.lz_variance},
      {"mean_sq_cov", m.mean_sq.cov_sq},
      {"mean_sq_img", m.mean_sq.img_sq},
      {"mean_cos", m.trig.mean_cos},
      {"mean_sin", m.trig.mean_sin},
      {"var_cos", m.trig.var_cos},
      {"var_sin", m.trig.var_sin},
  };
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw ParseError("unknown output format '" + name + "' (expected json, csv or text)");
}

void RunConfig::validate() const {
  if (grid_n < 8) throw ParameterRangeError("--grid must be >= 8");
  if (quad_panels < 1) throw ParameterRangeError("--panels must be >= 1");
  if (mmax_override && *mmax_override < 0) throw ParameterRangeError("--mmax must be >= 0");
}

ScanGrid RunConfig::grid() const {
  ScanGrid g;
  g.n = grid_n;
  return g;
}

BuildOptions RunConfig::build_options() const {
  BuildOptions o;
  o.normalize = normalize;
  o.mmax = mmax_override;
  return o;
}

ScanQuantity parse_scan_quantity(const std::string& name) {
  if (name == "mean") return ScanQuantity::Mean;
  if (name == "variance") return ScanQuantity::Variance;
  if (name == "cov_re") return ScanQuantity::CovRe;
  if (name == "cov_im") return ScanQuantity::CovIm;
  throw ParseError("unknown scan quantity '" + name + "' (expected one of: mean, variance, cov_re, cov_im)");
}

std::string_view to_string(ScanQuantity q) {
  switch (q) {
    case ScanQuantity::Mean: return "mean";
    case ScanQuantity::Variance: return "variance";
    case ScanQuantity::CovRe: return "cov_re";
    case ScanQuantity::CovIm: return "cov_im";
  }
  return "unknown";
}

std::vector<double> even_phi0(int count) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) out.push_back(-kPi + kTwoPi * j / count);
  return out;
}

std::string render_catalog(OutputFormat format) {
  if (format == OutputFormat::Json) {
    ojson j = ojson::array();
    for (const auto& e : catalog()) {
      j.push_back({{"name", e.name}, {"spec", format_state_spec(e.spec)}, {"description", e.description}});
    }
    return dump(j);
  }
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "name,spec,description\n";
    for (const auto& e : catalog()) {
      os << csv_field(e.name) << ',' << csv_field(format_state_spec(e.spec)) << ',' << csv_field(e.description)
         << '\n';
    }
    return os.str();
  }
  for (const auto& e : catalog()) {
    os << pad(std::string(e.name), 9) << format_state_spec(e.spec) << "\n         " << e.description << '\n';
  }
  return os.str();
}

std::string render_state(const CircleState& state, const StateSpec& spec, const RunConfig& cfg) {
  const LzMoments lz = lz_moments(state);
  double norm = 0.0;
  FourierParams explicit_form;
  for (int m = state.m_min(); m <= state.m_max(); ++m) {
    norm += std::norm(state.coefficient(m));
    if (state.coefficient(m) != complex{}) explicit_form.coeffs.push_back({m, state.coefficient(m)});
  }
  StateSpec fourier_spec{std::move(explicit_form), std::nullopt, state.label()};
  const std::vector<double> phis = even_phi0(16);

  switch (cfg.format.value_or(OutputFormat::Text)) {
    case OutputFormat::Json: {
      ojson j;
      j["schema"] = kSchemaVersion;
      j["state_label"] = state.label();
      j["input_spec"] = format_state_spec(spec);
      j["spec"] = format_state_spec(fourier_spec);
      ojson coeffs = ojson::array();
      for (int m = state.m_min(); m <= state.m_max(); ++m) {
        const complex c = state.coefficient(m);
        coeffs.push_back({m, c.real(), c.imag()});
      }
      j["coefficients"] = coeffs;
      j["norm"] = num(norm);
      j["lz_mean"] = num(lz.mean);
      j["lz_variance"] = num(lz.variance);
      ojson density = ojson::array();
      for (double phi : phis) density.push_back({num(phi), num(state.density(phi))});
      j["density"] = density;
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "m,re,im,probability\n";
      for (int m = state.m_min(); m <= state.m_max(); ++m) {
        const complex c = state.coefficient(m);
        os << m << ',' << shortest(c.real()) << ',' << shortest(c.imag()) << ',' << shortest(std::norm(c)) << '\n';
      }
      return os.str();
    }
    case OutputFormat::Text:
      break;
  }
  std::ostringstream os;
  os << "state        " << state.label() << '\n'
     << "spec         " << format_state_spec(spec) << '\n'
     << "m range      [" << state.m_min() << ", " << state.m_max() << "]\n"
     << "norm         " << text_num(norm) << '\n'
     << "<l_z>        " << text_num(lz.mean) << '\n'
     << "D l_z        " << text_num(lz.variance) << "\n\n"
     << pad("m", 6) << pad("re c_m", 22) << pad("im c_m", 22) << "|c_m|^2\n";
  for (int m = state.m_min(); m <= state.m_max(); ++m) {
    const complex c = state.coefficient(m);
    os << pad(std::to_string(m), 6) << pad(text_num(c.real()), 22) << pad(text_num(c.imag()), 22)
       << text_num(std::norm(c)) << '\n';
  }
  os << '\n' << pad("phi", 22) << "p(phi)\n";
  for (double phi : phis) os << pad(text_num(phi), 22) << text_num(state.density(phi)) << '\n';
  return os.str();
}

std::string render_measure(const CircleState& state, const RunConfig& cfg) {
  cfg.validate();
  const MeasureReport m = measure_report(state, cfg.grid());
  const auto rows = measure_rows(m);
  switch (cfg.format.value_or(OutputFormat::Json)) {
    case OutputFormat::Json: {
      ojson measures;
      for (const auto& [name, value] : rows) measures[name] = num(value);
      measures["b_argmins"] = angles(m.b.argmins);
      measures["b_degenerate"] = m.b.degenerate;
      measures["c_selected_centers"] = angles(m.c.selected_centers);
      measures["quadrature_check_max_dev"] = num(quadrature_check(state, cfg));
      ojson relations = ojson::array();
      for (const auto& r : relation_report(state, m, even_phi0(8))) relations.push_back(relation_json(r));
      ojson j;
      j["schema"] = kSchemaVersion;
      j["state_label"] = state.label();
      j["measures"] = measures;
      j["centers"] = centers_json(m);
      j["relations"] = relations;
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "quantity,value\n";
      for (const auto& [name, value] : rows) os << name << ',' << sig10(value) << '\n';
      os << "centers_mode," << centers_mode(m.c) << '\n';
      return os.str();
    }
    case OutputFormat::Text:
      break;
  }
  std::ostringstream os;
  os << "state        " << state.label() << '\n';
  for (const auto& [name, value] : rows) os << pad(name, 13) << text_num(value) << '\n';
  os << pad("b_argmins", 13);
  if (m.b.degenerate) {
    os << "all points (D constant)";
  } else {
    for (double x : m.b.argmins) os << text_num(reduce_angle(x)) << ' ';
  }
  os << '\n' << pad("centers", 13);
  if (m.c.all_points) {
    os << "all-points";
  } else {
    for (double x : m.c.selected_centers) os << text_num(reduce_angle(x)) << ' ';
  }
  os << '\n';
  return os.str();
}

std::string render_scan(const CircleState& state, ScanQuantity quantity, const RunConfig& cfg) {
  cfg.validate();
  const WindowedMoments engine(state);
  const ScanGrid grid = cfg.grid();
  std::vector<double> phi0(static_cast<std::size_t>(grid.n));
  std::vector<double> values(phi0.size());
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.node(i);
    phi0[static_cast<std::size_t>(i)] = x;
    double v = 0.0;
    switch (quantity) {
      case ScanQuantity::Mean: v = engine.mean(x); break;
      case ScanQuantity::Variance: v = engine.variance(x); break;
      case ScanQuantity::CovRe: v = engine.covariance(x).real(); break;
      case ScanQuantity::CovIm: v = engine.covariance(x).imag(); break;
    }
    values[static_cast<std::size_t>(i)] = v;
  }
  if (cfg.format.value_or(OutputFormat::Csv) == OutputFormat::Json) {
    ojson j;
    j["schema"] = kSchemaVersion;
    j["state_label"] = state.label();
    j["quantity"] = std::string(to_string(quantity));
    j["phi0"] = phi0;
    j["values"] = values;
    return dump(j);
  }
  std::ostringstream os;
  os << "phi0," << csv_field(std::string(to_string(quantity)) + "[" + state.label() + "]") << '\n';
  for (std::size_t i = 0; i < phi0.size(); ++i) os << shortest(phi0[i]) << ',' << shortest(values[i]) << '\n';
  return os.str();
}

std::string render_centers(const CircleState& state, const RunConfig& cfg) {
  cfg.validate();
  const MeasureReport m = measure_report(state, cfg.grid());
  switch (cfg.format.value_or(OutputFormat::Text)) {
    case OutputFormat::Json: {
      ojson j;
      j["schema"] = kSchemaVersion;
      j["state_label"] = state.label();
      j["centers"] = centers_json(m);
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "mode,phi0,variance,selected\n";
      if (m.c.all_points) {
        os << "all-points,," << sig10(m.c.value) << ",\n";
      } else {
        for (const auto& cv : m.c.all_centers) {
          os << "discrete," << sig10(reduce_angle(cv.phi0)) << ',' << sig10(cv.variance) << ','
             << (cv.selected ? 1 : 0) << '\n';
        }
      }
      return os.str();
    }
    case OutputFormat::Text:
      break;
  }
  std::ostringstream os;
  os << "state        " << state.label() << '\n';
  if (m.c.all_points) {
    os << "M(phi0) = phi0 holds identically: all points equivalent\n"
       << "D            " << text_num(m.c.value) << '\n';
    return os.str();
  }
  os << "solutions of M(phi0) = phi0: " << m.c.all_centers.size() << "\n\n"
     << pad("phi0", 22) << pad("D(phi0)", 22) << "selected\n";
  for (const auto& cv : m.c.all_centers) {
    os << pad(text_num(reduce_angle(cv.phi0)), 22) << pad(text_num(cv.variance), 22) << (cv.selected ? "*" : "")
       << '\n';
  }
  os << "\nc_measure    " << text_num(m.c.value) << '\n';
  if (m.centers.centroid_angle) {
    os << "centroid     " << text_num(*m.centers.centroid_angle)
       << (m.centers.centroid_consistent ? " (among the solutions)" : " (NOT among the solutions)") << '\n';
  } else {
    os << "centroid     at the origin (angle undefined)\n";
  }
  return os.str();
}

std::string render_relations(const CircleState& state, const RunConfig& cfg) {
  cfg.validate();
  const auto rows = relation_report(state, cfg.grid(), even_phi0(8));
  switch (cfg.format.value_or(OutputFormat::Text)) {
    case OutputFormat::Json: {
      ojson relations = ojson::array();
      for (const auto& r : rows) relations.push_back(relation_json(r));
      ojson j;
      j["schema"] = kSchemaVersion;
      j["state_label"] = state.label();
      j["relations"] = relations;
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "id,phi0,lhs,rhs,slack,satisfied\n";
      for (const auto& r : rows) {
        os << to_string(r.id) << ',' << (r.phi0 ? sig10(reduce_angle(*r.phi0)) : "") << ',' << sig10(r.lhs) << ','
           << sig10(r.rhs) << ',' << sig10(r.slack) << ',' << (r.satisfied ? 1 : 0) << '\n';
      }
      return os.str();
    }
    case OutputFormat::Text:
      break;
  }
  std::ostringstream os;
  os << "state        " << state.label() << "\n\n"
     << pad("relation", 20) << pad("phi0", 18) << pad("lhs", 18) << pad("rhs", 18) << pad("slack", 18) << "ok\n";
  for (const auto& r : rows) {
    os << pad(std::string(to_string(r.id)), 20) << pad(r.phi0 ? text_num(reduce_angle(*r.phi0)) : "-", 18)
       << pad(text_num(r.lhs), 18) << pad(text_num(r.rhs), 18) << pad(text_num(r.slack), 18)
       << (r.satisfied ? "yes" : "NO") << '\n';
  }
  return os.str();
}

Figure parse_figure(const std::string& name) {
  if (name == "fig1") return Figure::Fig1;
  if (name == "fig2") return Figure::Fig2;
  throw ParseError("unknown figure '" + name + "' (expected fig1 or fig2)");
}

std::vector<std::filesystem::path> write_figure(Figure which, const RunConfig& cfg, const std::filesystem::path& dir) {
  cfg.validate();
  struct Column {
    std::string header;
    const char* catalog_name;
  };
  const std::vector<Column> columns = which == Figure::Fig1
                                          ? std::vector<Column>{{"p_s", "psi_s"}, {"p_s2", "psi_s2"}, {"p_0", "uniform"}}
                                          : std::vector<Column>{{"p_cs", "cs"}, {"p_s4", "psi_s4"}};
  const std::string stem = which == Figure::Fig1 ? "fig1" : "fig2";

  std::vector<CircleState> states;
  for (const auto& c : columns) states.push_back(build_state(find_catalog_entry(c.catalog_name)->spec));

  const ScanGrid grid = cfg.grid();
  std::ostringstream density;
  density << "phi";
  for (const auto& c : columns) density << ',' << c.header;
  density << '\n';
  for (int i = 0; i < grid.n; ++i) {
    const double phi = grid.node(i);
    density << shortest(phi);
    for (const auto& s : states) density << ',' << shortest(s.density(phi));
    density << '\n';
  }

  std::ostringstream measures;
  measures << "state,tilde_sq,kr_phi,kr_lz,a_measure,b_measure,c_measure\n";
  for (std::size_t k = 0; k < states.size(); ++k) {
    const MeasureReport m = measure_report(states[k], grid);
    measures << columns[k].catalog_name << ',' << shortest(m.tilde_sq) << ',' << shortest(m.kr_phi) << ','
             << shortest(m.kr_lz) << ',' << shortest(m.a_measure) << ',' << shortest(m.b.value) << ','
             << shortest(m.c.value) << '\n';
  }

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  const std::filesystem::path density_path = dir / (stem + "_density.csv");
  const std::filesystem::path measures_path = dir / (stem + "_measures.csv");
  write_file(density_path, density.str());
  write_file(measures_path, measures.str());
  return {density_path, measures_path};
}

}  // namespace ringspread::cli
