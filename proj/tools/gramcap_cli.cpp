// Batch front-end: read a surface description, compute the certified Gram
// matrix intervals, emit JSON (and optional CSV / debug dumps).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gramcap/errors.hpp"
#include "gramcap/gram.hpp"
#include "gramcap/oracle.hpp"
#include "gramcap/tube.hpp"

using json = nlohmann::ordered_json;

namespace {

gramcap::SurfaceSpec parse_spec(const json& j) {
  gramcap::SurfaceSpec spec;
  if (!j.contains("genus") || !j["genus"].is_number_integer())
    throw gramcap::validation_error("input must contain an integer 'genus'");
  spec.genus = j["genus"].get<int>();
  if (!j.contains("qpieces") || !j["qpieces"].is_array())
    throw gramcap::validation_error("input must contain a 'qpieces' array");
  for (const json& p : j["qpieces"]) {
    gramcap::QPieceInput in;
    for (const char* key : {"beta", "curve", "twist"})
      if (!p.contains(key) || !p[key].is_number())
        throw gramcap::validation_error(std::string("qpiece missing numeric '") + key + "'");
    in.fn.beta = p["beta"].get<double>();
    in.fn.curve = p["curve"].get<double>();
    in.fn.twist = p["twist"].get<double>();
    if (p.contains("curve_role"))
      in.role = gramcap::parse_curve_role(p["curve_role"].get<std::string>());
    spec.pieces.push_back(in);
  }
  return spec;
}

json matrix_json(const gramcap::GramIntervalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n; ++j) {
      row.push_back(json{{"lower", m.at(i, j).lower},
                         {"upper", m.at(i, j).upper},
                         {"quality", m.loose_at(i, j) ? "loose" : "ok"}});
    }
    rows.push_back(row);
  }
  return rows;
}

void write_csv(const gramcap::GramIntervalMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw gramcap::validation_error("cannot open csv output: " + path);
  out << "i,j,lower,upper,quality\n";
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      out << i << ',' << j << ',' << m.at(i, j).lower << ',' << m.at(i, j).upper
          << ',' << (m.loose_at(i, j) ? "loose" : "ok") << '\n';
}

const char* selector_name(gramcap::CurveSelector s) {
  switch (s) {
    case gramcap::CurveSelector::alpha_i: return "alpha_i";
    case gramcap::CurveSelector::alpha_tau: return "alpha_tau";
    case gramcap::CurveSelector::alpha_diag: return "alpha_diag";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified period Gram matrix bounds for surfaces glued from "
               "one-holed tori"};
  std::string input_path, output_path, csv_path, debug_dir, oracle_spec;
  double tol = 1e-8, trim = 0.0;
  app.add_option("input", input_path, "surface description (JSON)")->required();
  app.add_option("-o,--output", output_path, "output JSON path (default stdout)");
  app.add_option("--tol", tol, "quadrature tolerance");
  app.add_option("--trim", trim, "corner cap half-width for the tube rims");
  app.add_option("--csv", csv_path, "also dump the matrix as CSV");
  app.add_option("--debug-tubes", debug_dir, "dump tube boundary polylines to DIR");
  app.add_option("--oracle-check", oracle_spec,
                 "grid 'nt,ns': verify intervals against the discrete minimizer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::ifstream in(input_path);
    if (!in) throw gramcap::validation_error("cannot open input: " + input_path);
    json jin;
    try {
      jin = json::parse(in);
    } catch (const json::parse_error& e) {
      throw gramcap::validation_error(std::string("input is not valid JSON: ") + e.what());
    }

    gramcap::SurfaceSpec spec = parse_spec(jin);
    gramcap::GramIntervalMatrix m = gramcap::assemble(spec, tol, trim);

    json out;
    out["genus"] = spec.genus;
    out["tol"] = tol;
    out["trim"] = trim;
    out["matrix"] = matrix_json(m);
    out["warnings"] = m.warnings;

    if (!debug_dir.empty() || !oracle_spec.empty()) {
      int nt = 0, ns = 0;
      if (!oracle_spec.empty()) {
        std::istringstream ss(oracle_spec);
        char comma = 0;
        if (!(ss >> nt >> comma >> ns) || comma != ',' || nt < 8 || ns < 8)
          throw gramcap::validation_error("--oracle-check expects 'nt,ns' with nt,ns >= 8");
      }
      json checks = json::array();
      for (std::size_t p = 0; p < spec.pieces.size(); ++p) {
        gramcap::QPieceGeometry geo = gramcap::complete_from_triple(spec.pieces[p].fn);
        for (auto sel : {gramcap::CurveSelector::alpha_i,
                         gramcap::CurveSelector::alpha_tau,
                         gramcap::CurveSelector::alpha_diag}) {
          gramcap::Annulus tube = gramcap::build_tube(geo, sel, trim);
          if (!debug_dir.empty()) {
            std::string path = debug_dir + "/piece" + std::to_string(p) + "_" +
                               selector_name(sel) + ".csv";
            std::ofstream f(path);
            if (!f) throw gramcap::validation_error("cannot open debug output: " + path);
            gramcap::write_tube_polyline(tube, 256, f);
          }
          if (!oracle_spec.empty()) {
            gramcap::BoundInterval iv = gramcap::capacity_bounds(tube, tol);
            double est = gramcap::discrete_capacity(tube, nt, ns);
            checks.push_back(json{{"piece", p},
                                  {"curve", selector_name(sel)},
                                  {"lower", iv.lower},
                                  {"upper", iv.upper},
                                  {"estimate", est},
                                  {"inside", est >= iv.lower && est <= iv.upper}});
          }
        }
      }
      if (!oracle_spec.empty()) out["oracle_check"] = checks;
    }

    if (!csv_path.empty()) write_csv(m, csv_path);

    std::string text = out.dump(2);
    text.push_back('\n');
    if (output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(output_path);
      if (!f) throw gramcap::validation_error("cannot open output: " + output_path);
      f << text;
    }
    return 0;
  } catch (const gramcap::validation_error& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const gramcap::infeasible_error& e) {
    std::cerr << "geometric infeasibility: " << e.what() << '\n';
    return 3;
  } catch (const gramcap::convergence_error& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
