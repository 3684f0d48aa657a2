#pragma once

// Text format for polytope corpora and the batch verification pipeline.
//
// A file holds blocks of the form
//
//   polytope <id>
//   dim <d>
//   vertices <n>
//   <n rows of d integers>
//
// separated by blank lines; "#" starts a comment line. Parsing reports
// line/column on the first defect and refuses duplicate ids. Serialization
// writes the same format back with normalized whitespace, so
// parse(write(r)) == r and write(parse(x)) is a canonical form of x.
//
// batch_check runs the configured checks over a record sequence. A record
// never aborts the batch: degenerate inputs come back as status "skipped",
// violated theorems as status "failed", and everything else as "ok" with
// the verdicts spelled out. Predicates reporting false (a polytope that is
// simply not reflexive, say) are data, not failures; "failed" is reserved
// for broken preconditions and for claims the library guarantees.

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "latpoly/bounds.hpp"
#include "latpoly/ehrhart.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/idp.hpp"
#include "latpoly/integers.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/reflexive.hpp"
#include "latpoly/triangulation.hpp"

namespace latpoly {

struct PolytopeRecord {
  std::string id;
  int dim = 0;
  std::vector<IntVector> vertices;  // as parsed, order preserved
  std::string source;               // "<name>:<line>" of the header

  friend bool operator==(const PolytopeRecord& a, const PolytopeRecord& b) {
    return a.id == b.id && a.dim == b.dim && a.vertices == b.vertices;
  }
};

namespace detail {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

inline bool is_integer_token(const std::string& s) {
  std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline Int integer_at(const Token& t, int line) {
  if (!is_integer_token(t.text))
    throw parse_error("expected integer, got '" + t.text + "'", line, t.column);
  return Int(t.text);
}

}  // namespace detail

inline std::vector<PolytopeRecord> parse_polytopes(std::istream& in,
                                                   const std::string& name = "<stream>") {
  std::vector<PolytopeRecord> records;
  std::vector<std::string> seen_ids;

  std::string raw;
  int line = 0;
  // Reads the next meaningful line into `tokens`; false on end of input.
  std::vector<detail::Token> tokens;
  auto next_line = [&](bool blank_ends_block) -> bool {
    while (std::getline(in, raw)) {
      ++line;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      tokens = detail::tokenize(raw);
      if (!tokens.empty() && tokens[0].text[0] == '#') continue;
      if (tokens.empty()) {
        if (blank_ends_block)
          throw parse_error("unexpected blank line inside a block", line, 1);
        continue;
      }
      return true;
    }
    ++line;
    return false;
  };
  auto field = [&](const char* key) -> Int {
    if (!next_line(true))
      throw parse_error(std::string("unexpected end of input: expected '") + key + "'",
                        line, 1);
    if (tokens[0].text != key || tokens.size() != 2)
      throw parse_error(std::string("expected '") + key + " <value>'", line,
                        tokens[0].column);
    return detail::integer_at(tokens[1], line);
  };

  while (next_line(false)) {
    if (tokens[0].text != "polytope" || tokens.size() != 2)
      throw parse_error("expected 'polytope <id>'", line, tokens[0].column);
    PolytopeRecord rec;
    rec.id = tokens[1].text;
    rec.source = name + ":" + std::to_string(line);
    for (const auto& s : seen_ids)
      if (s == rec.id) throw validation_error("duplicate polytope id '" + rec.id + "'");
    seen_ids.push_back(rec.id);

    Int dim = field("dim");
    if (dim < 1 || dim > 32)
      throw parse_error("dim out of range", line, tokens[1].column);
    rec.dim = static_cast<int>(dim);
    Int nv = field("vertices");
    if (nv < 1)
      throw parse_error("vertex count must be positive", line, tokens[1].column);

    for (Int k = 0; k < nv; ++k) {
      if (!next_line(true))
        throw parse_error("unexpected end of input: expected coordinate row", line, 1);
      if (static_cast<int>(tokens.size()) != rec.dim)
        throw parse_error("expected " + std::to_string(rec.dim) +
                              " coordinates, got " + std::to_string(tokens.size()),
                          line, tokens[0].column);
      IntVector v(rec.dim);
      for (int i = 0; i < rec.dim; ++i) v[i] = detail::integer_at(tokens[i], line);
      rec.vertices.push_back(std::move(v));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

inline std::vector<PolytopeRecord> parse_polytopes(const std::string& text,
                                                   const std::string& name = "<stream>") {
  std::istringstream in(text);
  return parse_polytopes(in, name);
}

inline std::string write_polytopes(const std::vector<PolytopeRecord>& records) {
  std::string out;
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (r) out += "\n";
    const auto& rec = records[r];
    out += "polytope " + rec.id + "\n";
    out += "dim " + std::to_string(rec.dim) + "\n";
    out += "vertices " + std::to_string(rec.vertices.size()) + "\n";
    for (const auto& v : rec.vertices) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += to_string(v[i]);
      }
      out += "\n";
    }
  }
  return out;
}

struct CheckConfig {
  bool reflexive = true;
  bool smooth_fano = true;
  bool equivalences = true;  // cross-check the equivalent criteria
  bool hibi = true;          // boundary triangulation h vs delta, reflexive only
  bool oda = true;           // unimodular cone triangulation, smooth Fano only
  bool sandwich = true;      // volume bounds from boundary points, reflexive only
  int idp_c_max = 2;         // 0 disables the decomposition check
};

struct CheckReport {
  std::string id;
  std::string status;  // ok | failed | skipped
  int dim = 0;
  std::optional<Int> n_vertices;
  std::optional<Int> n_boundary_points;
  std::optional<bool> reflexive;
  std::optional<bool> smooth_fano;
  std::optional<Int> normalized_volume;
  std::optional<std::vector<Int>> delta;
  std::optional<std::vector<Int>> h;
  std::optional<std::vector<Int>> f;
  std::optional<bool> oda;
  int idp_cmax = 0;
  std::optional<bool> idp_holds;
  std::optional<Int> sandwich_lower;
  std::optional<Int> sandwich_upper;
  std::optional<bool> within;
  std::vector<std::string> notes;
};

// One record, never throws: construction failures yield "skipped", theorem
// violations and broken preconditions yield "failed", with the fields
// computed before the fault left in place.
inline CheckReport check_record(const PolytopeRecord& rec, const CheckConfig& cfg) {
  CheckReport r;
  r.id = rec.id;
  r.dim = rec.dim;
  r.status = "ok";
  try {
    Polytope p = make_polytope(rec.vertices);
    r.dim = p.dim();
    r.n_vertices = Int(p.n_vertices());
    r.n_boundary_points = count_lattice_points(p, 1).boundary;
    r.normalized_volume = normalized_volume(p);
    r.delta = delta_vector(p).delta;
    if (p.is_simplicial()) {
      r.f = f_vector(p);
      r.h = h_from_f(*r.f, p.dim());
    } else {
      r.notes.push_back("non-simplicial: f and h not reported");
    }

    if (cfg.reflexive) {
      r.reflexive = is_reflexive(p);
      // the three-way criterion check needs an interior origin to even apply
      if (cfg.equivalences &&
          contains_point(p, IntVector(p.dim(), 0)) == Location::interior &&
          !check_reflexive_equivalences(p).verdicts_agree)
        throw theorem_violation("reflexivity criteria disagree");
    }
    if (cfg.smooth_fano) {
      r.smooth_fano = is_smooth_fano(p);
      if (cfg.equivalences && p.is_simplicial() && r.reflexive.value_or(false) &&
          !check_smooth_fano_equivalences(p).verdicts_agree)
        throw theorem_violation("smooth Fano criteria disagree");
    }
    if (cfg.hibi && r.reflexive.value_or(false)) {
      Triangulation t = boundary_triangulation(p, !p.is_simplicial());
      HibiReport hr = check_hibi_inequality(p, t);
      if (!hr.holds) throw theorem_violation("hibi inequality violated");
      if (!hr.equality) r.notes.push_back("hibi strict inequality");
    }
    if (cfg.oda && r.smooth_fano.value_or(false)) r.oda = verify_oda_theorem(p);
    if (cfg.idp_c_max >= 1) {
      r.idp_cmax = cfg.idp_c_max;
      IdpReport ir = idp_check(p, cfg.idp_c_max);
      r.idp_holds = ir.holds_up_to_c_max;
      if (!ir.holds_up_to_c_max) {
        if (r.smooth_fano.value_or(false))
          throw theorem_violation("smooth Fano polytope fails idp");
        for (const auto& lvl : ir.per_level)
          if (!lvl.failures.empty()) {
            r.notes.push_back("idp fails at c = " + std::to_string(lvl.c));
            break;
          }
      }
    }
    if (cfg.sandwich && r.reflexive.value_or(false)) {
      BoundsReport br = check_volume_sandwich(p);
      r.sandwich_lower = br.lower;
      r.sandwich_upper = br.upper;
      r.within = br.within;
      if (!br.within)
        throw theorem_violation("volume outside the sandwich bounds");
    }
  } catch (const degenerate_input& e) {
    r.status = "skipped";
    r.notes.push_back(std::string("degenerate: ") + e.what());
  } catch (const dimension_error& e) {
    r.status = "skipped";
    r.notes.push_back(std::string("degenerate: ") + e.what());
  } catch (const theorem_violation& e) {
    r.status = "failed";
    r.notes.push_back(std::string("theorem violation: ") + e.what());
  } catch (const error& e) {
    r.status = "failed";
    r.notes.push_back(std::string("error: ") + e.what());
  }
  return r;
}

inline std::vector<CheckReport> batch_check(const std::vector<PolytopeRecord>& records,
                                            const CheckConfig& cfg = {}) {
  std::vector<CheckReport> out;
  out.reserve(records.size());
  for (const auto& rec : records) out.push_back(check_record(rec, cfg));
  return out;
}

enum class ReportFormat { lines, table };

namespace detail {

inline std::string fmt_bool(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "true" : "false";
}

inline std::string fmt_int(const std::optional<Int>& x) {
  return x ? to_string(*x) : "-";
}

inline std::string fmt_list(const std::optional<std::vector<Int>>& xs) {
  if (!xs) return "-";
  std::string s = "[";
  for (std::size_t i = 0; i < xs->size(); ++i) {
    if (i) s += ", ";
    s += to_string((*xs)[i]);
  }
  return s + "]";
}

inline std::string fmt_notes(const std::vector<std::string>& notes) {
  if (notes.empty()) return "-";
  std::string s = "[";
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) s += "; ";
    s += notes[i];
  }
  return s + "]";
}

inline std::vector<std::string> report_fields(const CheckReport& r) {
  return {r.id,
          r.status,
          std::to_string(r.dim),
          fmt_int(r.n_vertices),
          fmt_int(r.n_boundary_points),
          fmt_bool(r.reflexive),
          fmt_bool(r.smooth_fano),
          fmt_int(r.normalized_volume),
          fmt_list(r.delta),
          fmt_list(r.h),
          fmt_list(r.f),
          fmt_bool(r.oda),
          r.idp_cmax > 0 ? std::to_string(r.idp_cmax) : "-",
          fmt_bool(r.idp_holds),
          fmt_int(r.sandwich_lower),
          fmt_int(r.sandwich_upper),
          fmt_bool(r.within),
          fmt_notes(r.notes)};
}

inline const std::vector<std::string>& report_header() {
  static const std::vector<std::string> h = {
      "id",           "status",     "dim",       "n_vertices",
      "n_boundary_points", "reflexive", "smooth_fano", "normalized_volume",
      "delta",        "h",          "f",         "oda",
      "idp_cmax",     "idp_holds",  "sandwich_lower", "sandwich_upper",
      "within",       "notes"};
  return h;
}

}  // namespace detail

inline std::string write_report(const std::vector<CheckReport>& reports,
                                ReportFormat format = ReportFormat::lines) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) rows.push_back(detail::report_fields(r));

  std::string out;
  if (format == ReportFormat::lines) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += " ";
        out += row[i];
      }
      out += "\n";
    }
    return out;
  }

  const auto& header = detail::report_header();
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i].size() > width[i]) width[i] = row[i].size();
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    out += line + "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

}  // namespace latpoly
