// Command line front end. Subcommands map one-to-one onto library calls;
// input files use the canonical block format from dataset.hpp, and a path
// argument may be a single file or a directory of .poly files (read in
// filename order). All numeric output is exact and byte-stable: integers
// and fraction strings, LF endings, no timestamps, no locale formatting.
//
// Exit codes: 0 all requested checks passed and everything was computed,
// 1 some polytope failed a requested check or could not be processed,
// 2 usage, parse, or input errors.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "latpoly/dataset.hpp"

using namespace latpoly;
namespace fs = std::filesystem;

namespace {

std::vector<PolytopeRecord> read_path(const std::string& path) {
  std::vector<std::string> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.path().extension() == ".poly") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw validation_error("no .poly files in " + path);
  } else {
    files.push_back(path);
  }
  std::vector<PolytopeRecord> all;
  std::set<std::string> ids;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in.good()) throw validation_error("cannot open " + file);
    const std::string short_name = fs::path(file).filename().string();
    std::vector<PolytopeRecord> recs;
    try {
      recs = parse_polytopes(in, short_name);
    } catch (const parse_error& e) {
      throw parse_error(short_name + ":" + std::to_string(e.line) + ":" +
                            std::to_string(e.column) + ": " + e.what(),
                        e.line, e.column);
    }
    for (auto& rec : recs) {
      if (!ids.insert(rec.id).second)
        throw validation_error("duplicate polytope id '" + rec.id + "' across inputs");
      all.push_back(std::move(rec));
    }
  }
  return all;
}

std::string int_list(const std::vector<Int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += to_string(xs[i]);
  }
  return s + "]";
}

std::string rat_list(const std::vector<Rat>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += to_string(xs[i]);
  }
  return s + "]";
}

std::string bool_list(const std::vector<bool>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += xs[i] ? "true" : "false";
  }
  return s + "]";
}

std::string id_list(const std::vector<std::string>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += xs[i];
  }
  return s + "]";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

// Runs body() for one record, mapping library errors onto a status line.
// body computes everything fallible before printing anything.
template <class Fn>
bool guarded_block(const std::string& id, bool first, Fn body) {
  if (!first) std::cout << "\n";
  std::cout << "polytope " << id << "\n";
  try {
    body();
    return true;
  } catch (const degenerate_input& e) {
    std::cout << "status skipped\nnote " << e.what() << "\n";
  } catch (const dimension_error& e) {
    std::cout << "status skipped\nnote " << e.what() << "\n";
  } catch (const unsupported_shape& e) {
    std::cout << "status skipped\nnote " << e.what() << "\n";
  } catch (const precondition_error& e) {
    std::cout << "status skipped\nnote " << e.what() << "\n";
  } catch (const error& e) {
    std::cout << "status failed\nnote " << e.what() << "\n";
  }
  return false;
}

int run_delta(const std::string& file, long dilation) {
  bool all_ok = true;
  bool first = true;
  for (const auto& rec : read_path(file)) {
    all_ok &= guarded_block(rec.id, first, [&] {
      Polytope p = make_polytope(rec.vertices);
      LatticePointCount c1 = count_lattice_points(p, 1);
      std::vector<Int> delta = delta_vector(p).delta;
      std::vector<Rat> ehrhart = ehrhart_polynomial(p).coefficients;
      std::cout << "status ok\n";
      std::cout << "dim " << p.dim() << "\n";
      std::cout << "vertices " << p.n_vertices() << "\n";
      std::cout << "lattice_points " << c1.total << "\n";
      std::cout << "boundary_points " << c1.boundary << "\n";
      std::cout << "interior_points " << (c1.total - c1.boundary) << "\n";
      std::cout << "normalized_volume " << normalized_volume(p) << "\n";
      std::cout << "delta " << int_list(delta) << "\n";
      std::cout << "ehrhart " << rat_list(ehrhart) << "\n";
      if (dilation >= 1) {
        std::cout << "dilation " << dilation << "\n";
        std::cout << "dilation_count " << count_lattice_points(p, dilation).total
                  << "\n";
      }
    });
    first = false;
  }
  return all_ok ? 0 : 1;
}

int run_check(const std::string& file, bool gate_reflexive, bool gate_smooth,
              bool equivalences, long idp_max) {
  CheckConfig cfg;
  cfg.hibi = false;
  cfg.oda = false;
  cfg.sandwich = false;
  cfg.equivalences = equivalences;
  cfg.idp_c_max = idp_max >= 1 ? static_cast<int>(idp_max) : 0;

  bool all_ok = true;
  bool first = true;
  for (const CheckReport& r : batch_check(read_path(file), cfg)) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "polytope " << r.id << "\n";
    std::cout << "status " << r.status << "\n";
    std::cout << "reflexive " << detail::fmt_bool(r.reflexive) << "\n";
    std::cout << "smooth_fano " << detail::fmt_bool(r.smooth_fano) << "\n";
    if (cfg.idp_c_max >= 1) {
      std::cout << "idp_cmax " << cfg.idp_c_max << "\n";
      std::cout << "idp_holds " << detail::fmt_bool(r.idp_holds) << "\n";
    }
    std::cout << "notes " << detail::fmt_notes(r.notes) << "\n";

    if (r.status != "ok") all_ok = false;
    if (gate_reflexive && r.reflexive != true) all_ok = false;
    if (gate_smooth && r.smooth_fano != true) all_ok = false;
    if (cfg.idp_c_max >= 1 && r.idp_holds != true) all_ok = false;
  }
  return all_ok ? 0 : 1;
}

int run_triangulate(const std::string& file) {
  bool all_ok = true;
  bool first = true;
  for (const auto& rec : read_path(file)) {
    all_ok &= guarded_block(rec.id, first, [&] {
      Polytope p = make_polytope(rec.vertices);
      Triangulation t = cone_triangulation(p);
      std::vector<Int> dets;
      for (const auto& s : t.simplices) dets.push_back(s.det);
      bool unimodular = is_unimodular_triangulation(t);
      Int lcm = triangulation_index_lcm(t);
      Int total = 0;
      for (const auto& d : dets) total += d;
      std::cout << "status ok\n";
      std::cout << "kind cone\n";
      std::cout << "simplices " << t.simplices.size() << "\n";
      std::cout << "dets " << int_list(dets) << "\n";
      std::cout << "unimodular " << bool_str(unimodular) << "\n";
      std::cout << "det_lcm " << lcm << "\n";
      std::cout << "total_volume " << total << "\n";
    });
    first = false;
  }
  return all_ok ? 0 : 1;
}

int run_bounds(long dim, long n) {
  const int d = static_cast<int>(dim);
  const int nn = static_cast<int>(n);
  Int cyclic = cyclic_facet_count(nn, d);
  FVector stacked = stacked_f_vector(nn, d);
  std::vector<Int> mcmullen;
  for (int i = 0; i <= d / 2; ++i) mcmullen.push_back(mcmullen_h_bound(nn, d, i));
  Int predicted = (Int(6) * d + (d % 2 == 0 ? 1 : -1) - 1) / 2;
  std::cout << "dim " << d << "\n";
  std::cout << "n " << nn << "\n";
  std::cout << "cyclic_facets " << cyclic << "\n";
  std::cout << "stacked_f " << int_list(stacked) << "\n";
  std::cout << "mcmullen_h " << int_list(mcmullen) << "\n";
  std::cout << "casagrande " << casagrande_volume_bound(d) << "\n";
  std::cout << "conjecture_bound " << conjecture_bound(d) << "\n";
  std::cout << "predicted_max_vertices " << predicted << "\n";
  return 0;
}

int run_sandwich(const std::string& file) {
  bool all_ok = true;
  bool first = true;
  for (const auto& rec : read_path(file)) {
    bool within = false;
    bool computed = guarded_block(rec.id, first, [&] {
      Polytope p = make_polytope(rec.vertices);
      BoundsReport b = check_volume_sandwich(p);
      within = b.within;
      std::cout << "status ok\n";
      std::cout << "boundary_points " << b.n << "\n";
      std::cout << "lower " << b.lower << "\n";
      std::cout << "normalized_volume " << b.actual << "\n";
      std::cout << "upper " << b.upper << "\n";
      std::cout << "within " << bool_str(b.within) << "\n";
    });
    first = false;
    if (!computed || !within) all_ok = false;
  }
  return all_ok ? 0 : 1;
}

int run_conjecture(const std::string& dataset, long dim) {
  auto recs = read_path(dataset);
  std::vector<Polytope> ps;
  std::vector<std::string> ids;
  std::vector<std::string> unusable;
  for (const auto& rec : recs) {
    try {
      ps.push_back(make_polytope(rec.vertices));
      ids.push_back(rec.id);
    } catch (const error&) {
      unusable.push_back(rec.id);
    }
  }
  ConjectureRecord c = evaluate_conjecture(ps, static_cast<int>(dim));

  auto names = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (std::size_t i : idx) out.push_back(ids[i]);
    return out;
  };
  std::cout << "dim " << c.dim << "\n";
  std::cout << "bound " << c.bound << "\n";
  std::cout << "max_volume " << c.max_volume << "\n";
  std::cout << "bound_holds " << bool_str(c.bound_holds) << "\n";
  std::cout << "sharp " << bool_str(c.sharp) << "\n";
  std::cout << "predicted_vertices " << c.predicted_vertices << "\n";
  std::cout << "attainers " << id_list(names(c.attainers)) << "\n";
  std::cout << "attainer_vertices " << int_list(c.attainer_vertices) << "\n";
  std::cout << "attainer_symmetric " << bool_list(c.attainer_symmetric) << "\n";
  std::cout << "attainer_classes " << c.attainer_classes << "\n";
  std::cout << "equivalence " << c.equivalence << "\n";
  if (c.sharp) {
    std::cout << "count_matches " << bool_str(c.count_matches) << "\n";
    std::cout << "symmetry_matches " << bool_str(c.symmetry_matches) << "\n";
    std::cout << "vertices_match_prediction " << bool_str(c.vertices_match_prediction)
              << "\n";
  }
  std::cout << "skipped " << id_list(names(c.skipped)) << "\n";
  if (!unusable.empty()) std::cout << "unusable " << id_list(unusable) << "\n";
  for (const auto& note : c.notes) std::cout << "note " << note << "\n";
  return c.bound_holds ? 0 : 1;
}

int run_batch(const std::string& dir, const std::string& out,
              const std::string& format, long idp_max) {
  CheckConfig cfg;  // batch means everything
  cfg.idp_c_max = idp_max >= 1 ? static_cast<int>(idp_max) : 0;
  auto reports = batch_check(read_path(dir), cfg);
  std::string text = write_report(
      reports, format == "table" ? ReportFormat::table : ReportFormat::lines);
  if (!out.empty()) {
    std::ofstream o(out, std::ios::binary);
    o << text;
    if (!o.good()) throw validation_error("cannot write " + out);
  } else {
    std::cout << text;
  }
  for (const auto& r : reports)
    if (r.status != "ok") return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic toolkit for lattice polytopes"};
  app.require_subcommand(1);

  std::string file, dataset, out;
  std::string format = "lines";
  long dilation = 0, idp_max = 0, batch_idp_max = 2, dim = 0, n = 0;
  bool gate_reflexive = false, gate_smooth = false, equivalences = false;

  auto* cmd_delta =
      app.add_subcommand("delta", "lattice point counts, delta vector, Ehrhart polynomial");
  cmd_delta->add_option("file", file, "polytope file or directory")->required();
  cmd_delta->add_option("-m,--dilation", dilation, "also count points of the m-th dilate");

  auto* cmd_check = app.add_subcommand("check", "reflexivity and smoothness verdicts");
  cmd_check->add_option("file", file, "polytope file or directory")->required();
  cmd_check->add_flag("--reflexive", gate_reflexive, "fail unless every polytope is reflexive");
  cmd_check->add_flag("--smooth-fano", gate_smooth, "fail unless every polytope is smooth Fano");
  cmd_check->add_flag("--equivalences", equivalences,
                      "cross-check the equivalent criteria for each verdict");
  cmd_check->add_option("--idp-max", idp_max, "verify integer decomposition up to this dilation");

  auto* cmd_tri = app.add_subcommand("triangulate", "cone triangulation with determinants");
  cmd_tri->add_option("file", file, "polytope file or directory")->required();

  auto* cmd_bounds = app.add_subcommand("bounds", "face count and volume bound table");
  cmd_bounds->add_option("--dim", dim, "dimension")->required();
  cmd_bounds->add_option("--n", n, "number of vertices")->required();

  auto* cmd_sandwich = app.add_subcommand("sandwich", "volume bounds from boundary points");
  cmd_sandwich->add_option("file", file, "polytope file or directory")->required();

  auto* cmd_conj = app.add_subcommand("conjecture", "maximal volume conjecture evaluation");
  cmd_conj->add_option("--dataset", dataset, "polytope file or directory")->required();
  cmd_conj->add_option("--dim", dim, "dimension to evaluate")->required();

  auto* cmd_batch = app.add_subcommand("batch", "full check pipeline over a corpus");
  cmd_batch->add_option("dir", dataset, "polytope file or directory")->required();
  cmd_batch->add_option("--out", out, "write the report here instead of stdout");
  cmd_batch->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"lines", "table"}));
  cmd_batch->add_option("--idp-max", batch_idp_max, "idp dilation bound (0 disables)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (cmd_delta->parsed()) return run_delta(file, dilation);
    if (cmd_check->parsed())
      return run_check(file, gate_reflexive, gate_smooth, equivalences, idp_max);
    if (cmd_tri->parsed()) return run_triangulate(file);
    if (cmd_bounds->parsed()) return run_bounds(dim, n);
    if (cmd_sandwich->parsed()) return run_sandwich(file);
    if (cmd_conj->parsed()) return run_conjecture(dataset, dim);
    if (cmd_batch->parsed()) return run_batch(dataset, out, format, batch_idp_max);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
