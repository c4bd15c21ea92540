#include "ringspread/cli/spec_io.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "ringspread/cli/format.hpp"
#include "ringspread/errors.hpp"

namespace ringspread::cli {

namespace {

class SpecReader {
 public:
  SpecReader(const YAML::Node& root, std::string source) : root_(root), source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& what) const {
    const YAML::Mark mark = node.Mark();
    std::ostringstream os;
    os << source_;
    if (!mark.is_null()) os << ':' << (mark.line + 1) << ':' << (mark.column + 1);
    os << ": " << what;
    throw ParseError(os.str());
  }

  const YAML::Node& root() const { return root_; }

  YAML::Node field(const std::string& name, bool required) {
    seen_.insert(name);
    YAML::Node n = root_[name];
    if (!n && required) fail(root_, "missing required field '" + name + "'");
    return n;
  }

  template <typename T>
  T scalar(const YAML::Node& node, const std::string& name, const char* expected) const {
    if (!node.IsScalar()) fail(node, "field '" + name + "': expected " + expected);
    try {
      return node.as<T>();
    } catch (const YAML::Exception&) {
      fail(node, "field '" + name + "': expected " + expected + ", got '" + node.Scalar() + "'");
    }
  }

  int integer(const std::string& name) { return scalar<int>(field(name, true), name, "an integer"); }

  double real(const std::string& name, double fallback) {
    const YAML::Node n = field(name, false);
    return n ? scalar<double>(n, name, "a number") : fallback;
  }

  void reject_unknown_fields() const {
    for (const auto& kv : root_) {
      const auto key = kv.first.as<std::string>();
      if (!seen_.count(key)) fail(kv.first, "unknown field '" + key + "'");
    }
  }

 private:
  YAML::Node root_;
  std::string source_;
  std::set<std::string> seen_;
};

std::string kinds_list() {
  std::string out;
  for (auto k : kind_names()) {
    if (!out.empty()) out += ", ";
    out += k;
  }
  return out;
}

complex parse_complex(SpecReader& r, const YAML::Node& item, const std::string& name) {
  if (item.IsScalar()) return {r.scalar<double>(item, name, "a number"), 0.0};
  if (item.IsSequence() && item.size() == 2) {
    return {r.scalar<double>(item[0], name, "a number"), r.scalar<double>(item[1], name, "a number")};
  }
  r.fail(item, "field '" + name + "': expected a number or a [re, im] pair");
}

}  // namespace

StateSpec parse_state_spec(std::string_view text, std::string_view source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    std::ostringstream os;
    os << source << ':' << (e.mark.line + 1) << ':' << (e.mark.column + 1) << ": " << e.msg;
    throw ParseError(os.str());
  }
  SpecReader r(root, std::string(source));
  if (!root.IsMap()) r.fail(root, "state spec must be a mapping with a 'kind' field");

  const YAML::Node kind_node = r.field("kind", true);
  const auto kind = r.scalar<std::string>(kind_node, "kind", "a string");

  StateSpec spec;
  if (kind == "eigenstate") {
    spec.params = EigenstateParams{r.integer("m")};
  } else if (kind == "trig") {
    TrigParams p;
    p.harmonic = r.integer("harmonic");
    if (p.harmonic < 1) r.fail(root["harmonic"], "field 'harmonic': must be >= 1");
    const YAML::Node phase = r.field("phase", true);
    const auto name = r.scalar<std::string>(phase, "phase", "'sin' or 'cos'");
    if (name == "sin") {
      p.phase = TrigPhase::Sin;
    } else if (name == "cos") {
      p.phase = TrigPhase::Cos;
    } else {
      r.fail(phase, "field 'phase': expected 'sin' or 'cos', got '" + name + "'");
    }
    spec.params = p;
  } else if (kind == "coherent" || kind == "cat") {
    const double l = r.real("l", 0.0);
    const double theta = r.real("theta", 0.0);
    if (kind == "coherent") {
      spec.params = CoherentParams{l, theta};
    } else {
      spec.params = CatParams{l, theta};
    }
  } else if (kind == "density_poly") {
    DensityPolyParams p;
    p.offset = r.real("offset", 0.2);
    if (!(p.offset > 0.0)) r.fail(root["offset"], "field 'offset': must be > 0");
    spec.params = p;
  } else if (kind == "fourier") {
    const YAML::Node coeffs = r.field("coeffs", true);
    if (!coeffs.IsSequence() || coeffs.size() == 0) r.fail(coeffs, "field 'coeffs': expected a non-empty list");
    FourierParams p;
    std::set<int> seen;
    for (const auto& item : coeffs) {
      if (!item.IsSequence() || (item.size() != 2 && item.size() != 3)) {
        r.fail(item, "field 'coeffs': each entry must be [m, re] or [m, re, im]");
      }
      FourierTerm t;
      t.m = r.scalar<int>(item[0], "coeffs", "an integer m");
      const double re = r.scalar<double>(item[1], "coeffs", "a number");
      const double im = item.size() == 3 ? r.scalar<double>(item[2], "coeffs", "a number") : 0.0;
      t.c = {re, im};
      if (!seen.insert(t.m).second) r.fail(item, "field 'coeffs': duplicate m = " + std::to_string(t.m));
      p.coeffs.push_back(t);
    }
    spec.params = std::move(p);
  } else if (kind == "samples") {
    const YAML::Node values = r.field("values", true);
    if (!values.IsSequence()) r.fail(values, "field 'values': expected a list");
    SamplesParams p;
    for (const auto& item : values) p.values.push_back(parse_complex(r, item, "values"));
    if (p.values.size() < 4) r.fail(values, "field 'values': need at least 4 samples");
    spec.params = std::move(p);
  } else {
    r.fail(kind_node, "unknown kind '" + kind + "' (expected one of: " + kinds_list() + ")");
  }

  if (const YAML::Node t = r.field("truncation", false)) {
    spec.truncation = r.scalar<int>(t, "truncation", "an integer");
    if (*spec.truncation < 0) r.fail(t, "field 'truncation': must be >= 0");
  }
  if (const YAML::Node l = r.field("label", false)) spec.label = r.scalar<std::string>(l, "label", "a string");
  r.reject_unknown_fields();
  return spec;
}

StateSpec load_state_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state spec '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_spec(buffer.str(), path.string());
}

StateSpec resolve_state_argument(const std::string& argument) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(argument, ec)) return load_state_spec(argument);
  if (const CatalogEntry* entry = find_catalog_entry(argument)) return entry->spec;
  throw IoError("'" + argument + "' is neither a readable spec file nor a catalog entry (see `state --catalog`)");
}

std::string format_state_spec(const StateSpec& spec) {
  std::ostringstream os;
  os << "{kind: " << kind_name(spec);
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, EigenstateParams>) {
          os << ", m: " << p.m;
        } else if constexpr (std::is_same_v<P, TrigParams>) {
          os << ", harmonic: " << p.harmonic << ", phase: " << (p.phase == TrigPhase::Sin ? "sin" : "cos");
        } else if constexpr (std::is_same_v<P, CoherentParams> || std::is_same_v<P, CatParams>) {
          os << ", l: " << shortest(p.l) << ", theta: " << shortest(p.theta);
        } else if constexpr (std::is_same_v<P, DensityPolyParams>) {
          os << ", offset: " << shortest(p.offset);
        } else if constexpr (std::is_same_v<P, FourierParams>) {
          os << ", coeffs: [";
          for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
            if (i) os << ", ";
            os << '[' << p.coeffs[i].m << ", " << shortest(p.coeffs[i].c.real()) << ", "
               << shortest(p.coeffs[i].c.imag()) << ']';
          }
          os << ']';
        } else if constexpr (std::is_same_v<P, SamplesParams>) {
          os << ", values: [";
          for (std::size_t i = 0; i < p.values.size(); ++i) {
            if (i) os << ", ";
            os << '[' << shortest(p.values[i].real()) << ", " << shortest(p.values[i].imag()) << ']';
          }
          os << ']';
        }
      },
      spec.params);
  if (spec.truncation) os << ", truncation: " << *spec.truncation;
  if (spec.label) os << ", label: " << quoted(*spec.label);
  os << '}';
  return os.str();
}

}  // namespace ringspread::cli
