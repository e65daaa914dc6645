#pragma once

// Command implementations for the ccs2g front end, kept separate from main()
// so tests can drive them in-process.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ccs/ccs.hpp"

namespace ccs::cli {

enum class Output { json, csv, text };

struct RunConfig {
  std::string command;
  std::string module = "X1";
  std::string surface = "torus";
  std::string in;
  std::string out;
  CountMode mode = CountMode::fast;
  Output output = Output::text;
  bool show_float = false;
  EngineOptions engine = EngineOptions::from_environment();
  VerifyOptions verify;
};

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kUnknownFixture = 3,
  kSizeLimit = 4,
  kOtherError = 5,
};

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error: return kParseError;
    case Errc::unknown_fixture:
    case Errc::unknown_kind: return kUnknownFixture;
    case Errc::size_limit: return kSizeLimit;
    default: return kOtherError;
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
}

inline bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".json");
}

inline CrossedModule load_module(const std::string& source) {
  if (looks_like_path(source)) return crossed_module_from_json(read_json_file(source));
  return fixture(source);
}

/// A catalogue name, a file, or "a+b+c" meaning glue(glue(a, b), c).
inline SurfaceComplex load_surface(const std::string& source) {
  if (looks_like_path(source)) return surface_from_json(read_json_file(source));
  SurfaceComplex result;
  std::size_t start = 0;
  bool first = true;
  while (start <= source.size()) {
    std::size_t plus = source.find('+', start);
    const std::string part = source.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    SurfaceComplex piece = make_surface(surface_kind_from_string(part));
    result = first ? piece : glue(result, piece);
    first = false;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return result;
}

inline Tuple parse_tuple(const std::string& text) {
  Tuple t;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      t.push_back(static_cast<elem_t>(v));
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad element index '" + item + "'");
    }
  }
  return t;
}

inline std::string decimal(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

inline std::string scalar_text(const ExactScalar& x, bool show_float) {
  std::string s = x.str(true);
  if (show_float) s += "  (~" + decimal(x.to_double()) + ")";
  return s;
}

inline Json classes_json(const CrossedModule& cm) {
  const CTable c = c_table(cm);
  const TwoConjPartition p = two_conjugacy_classes(cm, c);
  const Rational gcf = generalized_commuting_fraction(cm);
  Json classes = Json::array();
  for (const auto& cls : p.classes) {
    const elem_t g = cls.front();
    classes.push_back({{"members", cls}, {"size", cls.size()}, {"c_gg", c[g][g]}});
  }
  const CheckResult check = verify_gcf_proposition(cm, c, p);
  return Json{{"module", cm.name()},
              {"class_count", p.size()},
              {"classes", std::move(classes)},
              {"gcf", fraction_string(gcf)},
              {"gcf_times_order", fraction_string(gcf * cm.g().order())},
              {"classes_by_squares", fraction_string(count_classes_by_squares(cm, c))},
              {"proposition_holds", check.passed}};
}

inline void print_classes_text(const Json& j, std::ostream& os) {
  os << "module " << j["module"].get<std::string>() << "\n";
  os << "2-conjugacy classes: " << j["class_count"].get<std::size_t>() << "\n";
  for (const auto& cls : j["classes"]) {
    os << "  {";
    bool first = true;
    for (const auto& m : cls["members"]) {
      os << (first ? "" : ",") << m.get<elem_t>();
      first = false;
    }
    os << "}  size " << cls["size"].get<std::size_t>() << "  C(g,g) = " << cls["c_gg"].get<std::uint64_t>() << "\n";
  }
  os << "generalized commuting fraction: " << Rational(j["gcf"].get<std::string>()) << "\n";
  os << "gcf * |G| = " << Rational(j["gcf_times_order"].get<std::string>()) << ", #classes = "
     << j["class_count"].get<std::size_t>() << ": " << (j["proposition_holds"].get<bool>() ? "ok" : "VIOLATED")
     << "\n";
}

inline Json checks_json(const std::vector<CheckResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return arr;
}

inline Json report_json(const RunConfig& cfg, const CrossedModule& cm, const std::vector<CheckResult>& checks) {
  EngineOptions opts = cfg.engine;
  opts.mode = cfg.mode;
  Json surfaces = Json::object();
  for (SurfaceKind kind : all_surface_kinds()) {
    const SurfaceComplex s = make_surface(kind);
    const SurfaceReport rep = validate(s);
    surfaces[s.name] = {{"v", rep.internal_vertices},
                        {"e", rep.internal_edges},
                        {"m", rep.n_out},
                        {"n", rep.n_in},
                        {"euler", rep.euler_characteristic},
                        {"matrix", to_json(matrix_of(s, cm, opts))}};
  }
  return Json{{"module", to_json(cm)},
              {"kernel", cm.kernel().members()},
              {"image", cm.image().members()},
              {"surfaces", std::move(surfaces)},
              {"classes", classes_json(cm)},
              {"verification", checks_json(checks)},
              {"all_passed", all_passed(checks)}};
}

inline int run(const RunConfig& cfg, std::ostream& os);

/// verify and report over every fixture module.
inline int run_all_fixtures(const RunConfig& cfg, std::ostream& os) {
  int code = kOk;
  if (cfg.command == "report") {
    Json doc = Json::object();
    for (const auto& name : fixture_names()) {
      RunConfig one = cfg;
      one.module = name;
      std::ostringstream part;
      if (run(one, part) != kOk) code = kVerificationFailed;
      doc[name] = Json::parse(part.str());
    }
    os << doc.dump(2) << "\n";
    return code;
  }
  for (const auto& name : fixture_names()) {
    RunConfig one = cfg;
    one.module = name;
    if (cfg.output != Output::json) os << "== " << name << "\n";
    if (run(one, os) != kOk) code = kVerificationFailed;
  }
  return code;
}

inline int run(const RunConfig& cfg, std::ostream& os) {
  if (cfg.module == "all" && (cfg.command == "verify" || cfg.command == "report")) return run_all_fixtures(cfg, os);
  EngineOptions opts = cfg.engine;
  opts.mode = cfg.mode;
  VerifyOptions vo = cfg.verify;
  vo.engine = opts;
  const CrossedModule cm = load_module(cfg.module);

  if (cfg.command == "invariant") {
    const SurfaceComplex s = load_surface(cfg.surface);
    const ExactScalar z = invariant(s, cm, parse_tuple(cfg.in), parse_tuple(cfg.out), opts);
    switch (cfg.output) {
      case Output::json: os << to_json(z).dump(2) << "\n"; break;
      case Output::csv: os << z.str() << "\n"; break;
      case Output::text: os << scalar_text(z, cfg.show_float) << "\n"; break;
    }
    return kOk;
  }
  if (cfg.command == "matrix") {
    const TqftMatrix z = matrix_of(load_surface(cfg.surface), cm, opts);
    switch (cfg.output) {
      case Output::json: os << to_json(z).dump(2) << "\n"; break;
      case Output::csv: os << to_csv(z); break;
      case Output::text:
        for (std::size_t r = 0; r < z.rows(); ++r) {
          for (std::size_t c = 0; c < z.cols(); ++c) os << (c ? "  " : "") << scalar_text(z(r, c), cfg.show_float);
          os << "\n";
        }
        break;
    }
    return kOk;
  }
  if (cfg.command == "classes") {
    const Json j = classes_json(cm);
    if (cfg.output == Output::json) {
      os << j.dump(2) << "\n";
    } else {
      print_classes_text(j, os);
    }
    return j["proposition_holds"].get<bool>() ? kOk : kVerificationFailed;
  }
  if (cfg.command == "verify") {
    const auto results = verify_module(cm, vo);
    if (cfg.output == Output::json) {
      os << checks_json(results).dump(2) << "\n";
    } else {
      for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << "\n";
      }
    }
    return all_passed(results) ? kOk : kVerificationFailed;
  }
  if (cfg.command == "report") {
    const auto results = verify_module(cm, vo);
    os << report_json(cfg, cm, results).dump(2) << "\n";
    return all_passed(results) ? kOk : kVerificationFailed;
  }
  throw Error(Errc::parse_error, "unknown command '" + cfg.command + "'");
}

/// run() with library errors mapped to exit codes and reported on `err`.
inline int run_guarded(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  try {
    return run(cfg, os);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace ccs::cli
