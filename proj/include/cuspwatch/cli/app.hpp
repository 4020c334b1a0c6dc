#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cuspwatch/cli/json_io.hpp"

#ifndef CUSPWATCH_VERSION
#define CUSPWATCH_VERSION "unknown"
#endif

namespace cuspwatch::cli {

using io::Json;

enum ExitCode : int { kOk = 0, kInternal = 1, kPrecondition = 2, kUsage = 64 };

namespace detail {

/// "@path" reads the argument from a file.
inline std::string arg_text(const std::string& s) {
  if (s.empty() || s.front() != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw io::InputError("cannot read " + s.substr(1));
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Json json_arg(const std::string& s, const std::string& what) { return io::parse(arg_text(s), what); }

inline std::uint64_t fnv1a(const std::vector<std::string>& parts) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& p : parts) {
    for (unsigned char ch : p) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0xff;  // separator outside the byte range of argument text
    h *= 1099511628211ull;
  }
  return h;
}

inline Json manifest(const std::vector<std::string>& args) {
  std::vector<std::string> params;
  std::string line = "cuspwatch";
  for (const auto& a : args) {
    line += " " + a;
    if (a != "--manifest") params.push_back(arg_text(a));
  }
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a(params);
  return Json{{"command", line},
              {"parameter_hash", hash.str()},
              {"version", CUSPWATCH_VERSION},
              {"arithmetic", "exact rational; logs certified via MPFR"},
              {"decimal_digits", output_digits()},
              {"lll_delta", "3/4"},
              {"brute_force_universe_limit", kMaxUniverse},
              {"float_screen_margin", "1e-9*(1+|v|)"}};
}

// ---- CSV ----------------------------------------------------------------------

inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  auto key = [&](const std::string& k) { return prefix.empty() ? k : prefix + "." + k; };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, key(k), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key(std::to_string(i + 1)), out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

/// Arrays of records become one row each; anything else is a single row.
inline std::string to_csv(const Json& j) {
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  if (j.is_array()) {
    for (const auto& r : j) {
      rows.emplace_back();
      flatten(r, r.is_object() ? "" : "value", rows.back());
    }
  } else {
    rows.emplace_back();
    flatten(j, "", rows.back());
  }
  std::vector<std::string> header;
  for (const auto& r : rows)
    for (const auto& [k, v] : r)
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
  std::string s;
  for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + csv_field(header[i]);
  s += "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) s += ",";
      for (const auto& [k, v] : r)
        if (k == header[i]) {
          s += csv_field(v);
          break;
        }
    }
    s += "\n";
  }
  return s;
}

// ---- argument decoding ------------------------------------------------------------

inline QMat matrix_arg(const std::string& s) {
  QMat g = io::mat(json_arg(s, "matrix"));
  require<DimensionMismatchError>(g.is_square(), "matrix must be square");
  return g;
}

inline SubgroupSpec subgroup_arg(const std::string& s, std::size_t n) {
  if (s.empty()) return SubgroupSpec::full_torus(n);
  return SubgroupSpec(n, io::vecs(json_arg(s, "A basis")));
}

inline Gauge gauge_arg(const std::string& s) {
  if (s.empty() || s == "zero") return Gauge::zero();
  if (s.rfind("linear:", 0) == 0) return Gauge::linear(io::rational(Json(s.substr(7))));
  if (s.rfind("table:", 0) == 0) {
    std::vector<std::pair<Rational, Rational>> t;
    for (const auto& row : json_arg(s.substr(6), "gauge table")) {
      if (!row.is_array() || row.size() != 2) throw io::InputError("gauge table rows are [r, f(r)] pairs");
      t.emplace_back(io::rational(row[0]), io::rational(row[1]));
    }
    return Gauge::tabulated(std::move(t));
  }
  throw io::InputError("gauge must be zero, linear:p/q or table:[[r,f],...]");
}

inline std::vector<RadicalWitness> radicals_arg(const std::string& s) {
  std::vector<RadicalWitness> out;
  for (const auto& basis : json_arg(s, "radical list")) out.push_back(radical_from_subspace(io::vecs(basis)));
  return out;
}

inline BorderedSet bordered_arg(const std::vector<QVec>& phi, const std::string& c, const Gauge& f) {
  require(!phi.empty(), "no functionals given");
  std::vector<Rational> cs = c.empty() ? std::vector<Rational>(phi.size(), Rational(0)) : io::csv_vec(arg_text(c));
  return BorderedSet(phi.front().size(), phi, cs, f);
}

inline Json factorization_json(const QMat& g, const BruhatFactorization& f) {
  Json perm = Json::array();
  for (auto p : f.w.perm) perm.push_back(p + 1);
  return Json{{"w", perm},         {"w_rep", io::to_json(f.w.rep)}, {"n", io::to_json(f.n)},
              {"w0", io::to_json(f.w0)}, {"b", io::to_json(f.b)},         {"bound", io::to_json(f.bound)},
              {"reconstructs", f.product() == g}};
}

inline Json radical_list_json(const std::vector<RadicalWitness>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(io::to_json(r));
  return a;
}

}  // namespace detail

/// Runs one command line (argv without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;

  CLI::App app{"Exact computations for divergent diagonal orbits in SL_n(R)/SL_n(Z)", "cuspwatch"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_version_flag("--version", std::string(CUSPWATCH_VERSION));
  bool csv = false, with_manifest = false;
  app.add_flag("--csv", csv, "CSV instead of JSON");
  app.add_flag("--manifest", with_manifest, "attach the run manifest");

  // options shared across leaves
  std::string matrix, a_basis, eps = "1", mode = "brute", units = "natural", lo, hi, step = "1/2";
  std::string phi, consts, gauge, what, points, directions, sets, x, t = "1", k;
  std::string c0 = "0", radius = "1", slope, witnesses, psi, core_phi, core_c, alpha = "-3,-1,1,3", basis, gq;
  long height = 3;
  std::size_t restrict_l = 0;
  bool closed = false, backward = false;

  auto add_matrix = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--matrix,-g", matrix, "square matrix as JSON rows (numbers or \"p/q\"); @file reads a file");
    if (required) o->required();
  };
  auto add_a = [&](CLI::App* s) { s->add_option("--a", a_basis, "A basis as JSON list of diagonal directions (default: full torus)"); };

  auto* bruhat = app.add_subcommand("bruhat", "pivoted Bruhat factorization");
  bruhat->require_subcommand(1);
  auto* b_factor = bruhat->add_subcommand("factor", "g = w n w0 b");
  add_matrix(b_factor);
  auto* b_cell = bruhat->add_subcommand("cell", "Bruhat cell of g");
  add_matrix(b_cell);

  auto* radicals = app.add_subcommand("radicals", "active unipotent radicals");
  radicals->require_subcommand(1);
  auto* r_search = radicals->add_subcommand("search", "radicals with ||wedge Ad(g) p|| < eps");
  add_matrix(r_search);
  r_search->add_option("--eps", eps, "threshold p/q");
  r_search->add_option("--mode", mode, "brute | reduced")->check(CLI::IsMember({"brute", "reduced"}));
  r_search->add_option("--height", height, "search height");
  auto* r_profile = radicals->add_subcommand("profile", "cusp profile on a grid of A");
  add_matrix(r_profile);
  add_a(r_profile);
  r_profile->add_option("--lo", lo, "lower corner, comma separated")->required();
  r_profile->add_option("--hi", hi, "upper corner, comma separated")->required();
  r_profile->add_option("--step", step, "grid step");
  r_profile->add_option("--height", height, "candidate height");
  r_profile->add_option("--units", units, "natural | log2")->check(CLI::IsMember({"natural", "log2"}));

  auto* bordered = app.add_subcommand("bordered", "bordered and convex sets");
  bordered->require_subcommand(1);
  auto* bo_check = bordered->add_subcommand("check", "polyhedral decisions");
  bo_check->add_option("--what", what, "nontrivial | bounded | invdim | ktrivial | intersect | epsilon")
      ->required()
      ->check(CLI::IsMember({"nontrivial", "bounded", "invdim", "ktrivial", "intersect", "epsilon"}));
  bo_check->add_option("--phi", phi, "functionals as JSON rows");
  bo_check->add_option("--c", consts, "constants, comma separated (default 0)");
  bo_check->add_option("--gauge", gauge, "zero | linear:p/q | table:[[r,f],...]");
  bo_check->add_option("--points", points, "convex set: JSON points");
  bo_check->add_option("--directions", directions, "convex set: JSON recession directions");
  bo_check->add_option("--k", k, "k for ktrivial");
  bo_check->add_option("--sets", sets, "JSON list of {\"phi\": rows, \"c\": [..]}");
  bo_check->add_flag("--closed", closed, "closed relaxation for intersect");
  auto* bo_contract = bordered->add_subcommand("contract", "one contraction step");
  bo_contract->add_option("--phi", phi, "functionals as JSON rows")->required();
  bo_contract->add_option("--c", consts, "constants, comma separated (default 0)");
  bo_contract->add_option("--gauge", gauge, "zero | linear:p/q | table:[[r,f],...]");
  bo_contract->add_option("--x", x, "start point, comma separated")->required();
  bo_contract->add_option("--t", t, "time in [0,1]");

  auto* cover = app.add_subcommand("cover", "trajectory covers");
  cover->require_subcommand(1);
  auto add_cover_common = [&](CLI::App* s) {
    add_matrix(s);
    add_a(s);
    s->add_option("--c0", c0, "additive constant C0");
    s->add_option("--height", height, "candidate height");
  };
  auto* c_build = cover->add_subcommand("build", "cover elements of candidate radicals");
  add_cover_common(c_build);
  c_build->add_option("--witnesses", witnesses, "JSON list of subspace bases (default: all up to --height)");
  c_build->add_option("--slope", slope, "linear gauge slope (default: half the certified bound)");
  auto* c_local = cover->add_subcommand("local", "radicals whose element meets the box ||t|| <= R");
  add_cover_common(c_local);
  c_local->add_option("--radius", radius, "box radius");
  auto* c_goodres = cover->add_subcommand("goodres", "good-restriction test");
  c_goodres->add_option("--n", restrict_l, "n of SL_n")->required();
  add_a(c_goodres);
  c_goodres->add_option("--psi", psi, "JSON list of character coefficient vectors")->required();
  auto* c_verify = cover->add_subcommand("verify", "grid check that elements cover the box minus a core");
  add_cover_common(c_verify);
  c_verify->add_option("--witnesses", witnesses, "JSON list of subspace bases");
  c_verify->add_option("--slope", slope, "linear gauge slope");
  c_verify->add_option("--radius", radius, "box radius");
  c_verify->add_option("--step", step, "grid step");
  c_verify->add_option("--core-phi", core_phi, "core functionals (default: empty core)");
  c_verify->add_option("--core-c", core_c, "core constants");

  auto* diverge = app.add_subcommand("diverge", "obvious-divergence certificates");
  diverge->require_subcommand(1);
  auto* d_check = diverge->add_subcommand("check", "fan check of given witnesses");
  add_matrix(d_check);
  add_a(d_check);
  d_check->add_option("--witnesses", witnesses, "JSON list of subspace bases")->required();
  auto* d_search = diverge->add_subcommand("search", "search witnesses up to a height");
  add_matrix(d_search);
  add_a(d_search);
  d_search->add_option("--height", height, "search height");

  auto* sl4 = app.add_subcommand("sl4", "the quaternionic SL_4 example");
  sl4->require_subcommand(1);
  sl4->add_subcommand("verify-periodicity", "exact periodicity identity in Q(sqrt 3)");
  auto* s_grplus = sl4->add_subcommand("grplus", "Gr+ component and V_G dimensions");
  s_grplus->add_option("--alpha", alpha, "a1,a2,a3,a4 increasing, sum 0");
  auto* s_xmember = sl4->add_subcommand("xmember", "X_(i,j) containing span(basis)");
  s_xmember->add_option("--basis", basis, "JSON 2x4 rows")->required();
  s_xmember->add_option("--alpha", alpha, "flow for the shrinking test");
  s_xmember->add_flag("--backward", backward, "test the inverse flow");
  auto* s_demo = sl4->add_subcommand("demo", "two-witness certificate");
  s_demo->add_option("--alpha", alpha, "a1,a2,a3,a4 increasing, sum 0");
  s_demo->add_option("--gq", gq, "rational g_Q with det 1 (default identity)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << CUSPWATCH_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  Json result;
  try {
    if (b_factor->parsed()) {
      QMat g = matrix_arg(matrix);
      result = factorization_json(g, bruhat_factor(g));
    } else if (b_cell->parsed()) {
      WeylElement w = bruhat_cell(matrix_arg(matrix));
      Json perm = Json::array();
      for (auto p : w.perm) perm.push_back(p + 1);
      result = Json{{"w", perm}, {"w_rep", io::to_json(w.rep)}};
    } else if (r_search->parsed()) {
      SearchOptions opt{mode == "brute" ? SearchMode::BruteForce : SearchMode::ReductionAssisted, height};
      result = Json::array();
      for (const auto& r : active_radicals(matrix_arg(matrix), io::rational(Json(eps)), opt)) {
        Json row = io::to_json(r.witness);
        row["norm"] = io::to_json(r.norm);
        row["lognorm"] = io::to_json(r.lognorm());
        result.push_back(row);
      }
    } else if (r_profile->parsed()) {
      QMat g = matrix_arg(matrix);
      SubgroupSpec a = subgroup_arg(a_basis, g.rows());
      auto grid = box_grid(io::csv_vec(lo), io::csv_vec(hi), io::rational(Json(step)));
      auto cands = enumerate_radicals(g.rows(), height);
      result = Json::array();
      for (const auto& p : cusp_profile(g, a.basis, grid, cands, units == "log2" ? GridUnits::Log2 : GridUnits::Natural))
        result.push_back(Json{{"t", io::to_json(p.t)},
                              {"value", p.value.decimal(output_digits())},
                              {"argmin", io::to_json(cands[p.argmin].basis)}});
    } else if (bo_check->parsed()) {
      std::vector<QVec> phis = phi.empty() ? std::vector<QVec>{} : io::vecs(json_arg(phi, "functionals"));
      if (what == "nontrivial") {
        NontrivialityResult r = positively_nontrivial(phis);
        result = r.nontrivial ? Json{{"result", true}, {"witness", io::to_json(r.witness)}}
                              : Json{{"result", false}, {"lambda", io::to_json(r.lambda)}};
      } else if (what == "epsilon") {
        EpsilonBound e = epsilon_bound(phis);
        result = Json{{"raw", io::to_json(e.raw)}, {"certified", io::to_json(e.certified)}};
      } else if (what == "bounded") {
        result = Json{{"result", is_bounded(bordered_arg(phis, consts, gauge_arg(gauge)))}};
      } else if (what == "intersect") {
        std::vector<BorderedSet> bs;
        if (!sets.empty()) {
          for (const auto& s : json_arg(sets, "sets")) {
            if (!s.is_object() || !s.contains("phi")) throw io::InputError("each set needs a \"phi\" entry");
            auto p = io::vecs(s["phi"]);
            std::vector<Rational> cs = s.contains("c") ? io::vec(s["c"]) : std::vector<Rational>(p.size(), Rational(0));
            require(!p.empty(), "no functionals given");
            bs.emplace_back(p.front().size(), p, cs, gauge_arg(gauge));
          }
        } else {
          bs.push_back(bordered_arg(phis, consts, gauge_arg(gauge)));
        }
        IntersectResult r = intersect_nonempty(bs, closed ? Closure::Closed : Closure::Strict);
        result = Json{{"result", r.nonempty}};
        if (r.nonempty) result["witness"] = io::to_json(r.witness);
      } else {
        auto dims = [](const InvDim& d) { return d ? Json(*d) : Json(nullptr); };
        if (!points.empty()) {
          ConvexSpec s;
          s.points = io::vecs(json_arg(points, "points"));
          if (!directions.empty()) s.directions = io::vecs(json_arg(directions, "directions"));
          require(!s.points.empty(), "convex set needs a point");
          s.l = s.points.front().size();
          if (what == "invdim") {
            result = Json{{"invdim", dims(invdim(s))}};
          } else {
            if (k.empty()) throw io::InputError("ktrivial needs --k");
            result = Json{{"result", is_k_trivial(s, std::stol(k))}, {"invdim", dims(invdim(s))}};
          }
        } else {
          require(what == "invdim", "ktrivial takes a convex set given by --points");
          result = Json{{"invdim", dims(invdim(bordered_arg(phis, consts, gauge_arg(gauge))))}};
        }
      }
    } else if (bo_contract->parsed()) {
      BorderedSet u = bordered_arg(io::vecs(json_arg(phi, "functionals")), consts, gauge_arg(gauge));
      ContractionData d = contraction_data(u);
      QVec x0 = io::csv_vec(x);
      QVec x1 = contract_step(u, d, x0, io::rational(Json(t)));
      result = Json{{"point", io::to_json(x1)},
                    {"rho_before", io::to_json(u.rho(x0))},
                    {"rho_after", io::to_json(u.rho(x1))},
                    {"u", io::to_json(d.u)},
                    {"max_rho0", io::to_json(d.max_rho0)}};
    } else if (c_build->parsed() || c_verify->parsed()) {
      QMat g = matrix_arg(matrix);
      SubgroupSpec a = subgroup_arg(a_basis, g.rows());
      auto cands = witnesses.empty() ? enumerate_radicals(g.rows(), height) : radicals_arg(witnesses);
      std::optional<Gauge> f;
      if (!slope.empty()) f = Gauge::linear(io::rational(Json(slope)));
      auto elements = build_cover(g, a, cands, io::rational(Json(c0)), f);
      if (c_build->parsed()) {
        result = Json::array();
        for (const auto& e : elements) result.push_back(io::to_json(e));
      } else {
        const std::size_t l = a.l();
        BorderedSet core;
        if (core_phi.empty()) {
          // x_1 >= 1 and -x_1 >= 1: empty even when closed
          QVec e1(l, Rational(0)), m1(l, Rational(0));
          e1[0] = 1;
          m1[0] = -1;
          core = BorderedSet(l, {e1, m1}, {Rational(1), Rational(1)});
        } else {
          core = bordered_arg(io::vecs(json_arg(core_phi, "core functionals")), core_c, Gauge::zero());
        }
        SubcoverReport rep = verify_subcover(elements, l, io::rational(Json(radius)), io::rational(Json(step)), core);
        result = Json{{"covered", rep.covered}, {"checked", rep.checked}, {"gaps", io::to_json(rep.gaps)}};
      }
    } else if (c_local->parsed()) {
      QMat g = matrix_arg(matrix);
      SubgroupSpec a = subgroup_arg(a_basis, g.rows());
      result = radical_list_json(enumerate_local(g, a, io::rational(Json(radius)), io::rational(Json(c0)), height));
    } else if (c_goodres->parsed()) {
      SubgroupSpec a = subgroup_arg(a_basis, restrict_l);
      std::vector<Character> ps;
      for (const auto& v : json_arg(psi, "characters")) {
        if (!v.is_array()) throw io::InputError("characters are integer coefficient vectors");
        std::vector<std::int64_t> cs;
        for (const auto& c : v) {
          if (!c.is_number_integer()) throw io::InputError("character coefficients must be integers");
          cs.push_back(c.get<std::int64_t>());
        }
        require<DimensionMismatchError>(cs.size() == restrict_l, "character has the wrong length");
        ps.emplace_back(std::move(cs));
      }
      GoodRestrictionReport rep = good_restrictions(a, ps, a.l());
      Json viol = Json::array();
      for (const auto& c : rep.violation) viol.push_back(io::to_json(c));
      result = Json{{"good", rep.good}, {"violation", viol}};
    } else if (d_check->parsed() || d_search->parsed()) {
      QMat g = matrix_arg(matrix);
      SubgroupSpec a = subgroup_arg(a_basis, g.rows());
      std::vector<WitnessVector> ws;
      if (d_check->parsed()) {
        for (const auto& r : radicals_arg(witnesses)) ws.push_back(make_witness(g, r));
      } else {
        ws = search_witnesses(g, a, height);
      }
      Json wj = Json::array();
      for (const auto& w : ws) wj.push_back(io::to_json(w, a));
      result = io::to_json(check_certificate(a, ws));
      result["witnesses"] = wj;
    } else if (sl4->got_subcommand("verify-periodicity")) {
      PeriodicityReport r = verify_periodicity();
      result = Json{{"ok", r.ok},
                    {"diagonal_matches", r.diagonal_matches},
                    {"in_gamma", r.in_gamma},
                    {"conjugated", io::to_json(r.conjugated)}};
      result["preimage"] = r.preimage ? io::to_json(*r.preimage) : Json(nullptr);
    } else if (s_grplus->parsed()) {
      QVec al = io::csv_vec(alpha);
      GrPlus gp = gr_plus(al);
      VgReport vg = v_g_check(al);
      Json ip = Json::array();
      for (const auto& [i, j] : gp.i_plus) ip.push_back(Json::array({i, j}));
      result = Json{{"i_plus", ip},
                    {"max", Json::array({gp.max.first, gp.max.second})},
                    {"dim", gp.dim},
                    {"v_g", Json{{"dim", vg.dim_vg},
                                 {"stabilizer", vg.stabilizer},
                                 {"gr_plus", vg.dim_gr_plus},
                                 {"gr_minus", vg.dim_gr_minus}}}};
    } else if (s_xmember->parsed()) {
      auto b = io::vecs(json_arg(basis, "basis"));
      IndexPair p = x_membership(b);
      result = Json{{"pair", Json::array({p.first, p.second})},
                    {"shrinks", wedge_shrinks(io::csv_vec(alpha), b, !backward)}};
    } else if (s_demo->parsed()) {
      QMat g = gq.empty() ? QMat::identity(4) : matrix_arg(gq);
      Sl4Demo d = sl4_divergence_demo(io::csv_vec(alpha), g);
      Json wj = Json::array();
      for (const auto& w : d.witnesses) wj.push_back(io::to_json(w, d.a));
      result = Json{{"a", io::to_json(d.a.basis)}, {"witnesses", wj}, {"certificate", io::to_json(d.certificate)}};
    } else {
      throw InternalError("no handler for the parsed subcommand");
    }
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  Json m = with_manifest ? manifest(args) : Json();
  if (csv) {
    if (with_manifest) out << "# manifest " << m.dump() << "\n";
    out << to_csv(result);
  } else {
    if (with_manifest) {
      if (result.is_object()) {
        result["manifest"] = m;
      } else {
        result = Json{{"result", result}, {"manifest", m}};
      }
    }
    out << result.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace cuspwatch::cli
