#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// drive it with string vectors and in-memory streams.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hodgeloci/arrangement.hpp"
#include "hodgeloci/charvar.hpp"
#include "hodgeloci/cohomology.hpp"
#include "hodgeloci/cyclotomic_factor.hpp"
#include "hodgeloci/errors.hpp"
#include "hodgeloci/families.hpp"
#include "hodgeloci/hodge.hpp"
#include "hodgeloci/json_io.hpp"
#include "hodgeloci/twisted.hpp"

namespace hodgeloci::cli {

enum ExitCode : int { ok = 0, parse_failure = 2, precondition_failure = 3, invariant_failure = 4 };

namespace detail {

using io::json;

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline std::string rationals(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.str());
  return join(s, ",");
}

inline std::string betti_row(const Betti& h) {
  return std::to_string(h[0]) + "\t" + std::to_string(h[1]) + "\t" + std::to_string(h[2]);
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline std::string subtorus_text(const TranslatedSubtorus& t) {
  if (t.equations().empty()) return "whole";
  std::vector<std::string> eqs;
  for (const auto& e : t.equations()) {
    std::vector<std::string> m;
    for (long x : e.m) m.push_back(std::to_string(x));
    eqs.push_back("x^(" + join(m, ",") + ")=" + e.tau.str());
  }
  return join(eqs, ";");
}

inline void polytopes(const std::string& path, bool as_json, std::ostream& out) {
  const auto arr = io::decode_arrangement(io::load_file(path));
  const auto rs = residue_system(arr);
  const auto cells = polytope_decomposition(rs);
  json jf = json::array(), jc = json::array();
  std::vector<std::string> labels;
  for (const auto& f : rs.functionals) {
    labels.push_back(f.label);
    jf.push_back({{"label", f.label}, {"functional", io::encode(f.functional)}});
  }
  if (!as_json) out << "cell\t" << join(labels, "\t") << "\twitness\tclosure_dim\ttorsion_order\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const auto closure = zariski_closure_of_polytope(c.polytope, c.witness);
    const long tor = torsion_translation_order(closure);
    if (as_json) {
      jc.push_back({{"signature", c.signature},
                    {"polytope", io::encode(c.polytope)},
                    {"witness", io::encode(c.witness)},
                    {"closure", io::encode(closure)},
                    {"torsion_order", tor}});
    } else {
      out << i;
      for (long s : c.signature) out << "\t" << s;
      out << "\t" << rationals(c.witness.alphas()) << "\t" << closure.dimension() << "\t" << tor << "\n";
    }
  }
  if (as_json) emit(out, {{"convention", "upper_closed"}, {"dim", rs.dim}, {"functionals", jf}, {"cells", jc}});
}

inline void cohomology_arrangement(const std::string& path, const std::string& weights, bool as_json, std::ostream& out) {
  const auto arr = io::decode_arrangement(io::load_file(path));
  const auto a = WeightVector::reduced(io::parse_rational_list(weights));
  const auto res = arrangement_cohomology(arr, a.alphas());
  if (as_json) {
    emit(out, {{"engine", res.engine}, {"weights", io::encode(a)}, {"h", res.h}});
  } else {
    out << "engine\th0\th1\th2\n" << res.engine << "\t" << betti_row(res.h) << "\n";
  }
}

inline void cohomology_presentation(const std::string& path, const std::string& chi_text, bool as_json, std::ostream& out) {
  const auto p = io::decode_presentation(io::load_file(path));
  const auto chi = exp_map(WeightVector::reduced(io::parse_rational_list(chi_text)));
  const auto h = fox_cohomology(p, chi);
  if (as_json) {
    emit(out, {{"engine", "fox"}, {"character", io::encode(chi)}, {"euler", p.euler()}, {"h", h}});
  } else {
    out << "engine\th0\th1\th2\n" << "fox\t" << betti_row(h) << "\n";
  }
}

inline void hodge(const std::string& family, long r_flag, const std::string& weights, bool as_json, std::ostream& out) {
  const WeightVector u(io::parse_rational_list(weights));
  const long n = static_cast<long>(u.size());
  auto r_for = [&](long implied) {
    if (r_flag >= 0 && r_flag != implied)
      throw PreconditionError("--r " + std::to_string(r_flag) + " does not match " + std::to_string(n) + " weights");
    return implied;
  };
  GrFTable t;
  if (family == "p1-points") {
    t = p1_points_grf(r_for(n), u);
  } else if (family == "generic-p2") {
    t = generic_grf(r_for(n), u);
  } else if (family == "cone-p3") {
    t = cone_grf(r_for(n - 1), u);
  } else if (family == "ceva") {
    t = ceva_grf(families::ceva(), u);
  } else if (family == "d84") {
    t = d84_grf(families::d84(), u);
  } else {
    throw ParseError("unknown family '" + family + "' (p1-points, generic-p2, cone-p3, ceva, d84)");
  }
  if (as_json) {
    emit(out, {{"family", family}, {"weights", io::encode(u)}, {"table", io::encode(t)}});
  } else {
    out << "n\tp\tdim\n";
    for (const auto& [key, v] : t.entries) out << key.first << "\t" << key.second << "\t" << v << "\n";
  }
}

inline void covers(const std::string& path, const std::string& moduli_text, bool as_json, std::ostream& out) {
  const auto p = io::decode_presentation(io::load_file(path));
  const auto moduli = io::parse_long_list(moduli_text);
  if (moduli.size() != p.rank()) throw PreconditionError("one modulus per H_1 coordinate required");
  json rows = json::array();
  std::ostringstream tsv;
  const long total = cover_rank_aggregate(
      [&](const Character& chi) {
        const long h1 = fox_cohomology(p, chi)[1];
        rows.push_back({{"character", io::encode(chi)}, {"h1", h1}});
        tsv << rationals(chi.log().alphas()) << "\t" << h1 << "\n";
        return h1;
      },
      moduli);
  if (as_json) {
    emit(out, {{"moduli", moduli}, {"characters", rows}, {"total", total}});
  } else {
    out << "character\th1\n" << tsv.str() << "total\t" << total << "\n";
  }
}

inline void charvar(const std::string& path, long bound, bool as_json, std::ostream& out) {
  const auto p = io::decode_presentation(io::load_file(path));
  const auto rep = characteristic_variety_sweep(p, bound);
  long positive = 0;
  for (const auto& pt : rep.points) positive += pt.depth > 0;
  if (as_json) {
    json comps = json::array();
    for (const auto& c : rep.components)
      comps.push_back({{"depth", c.depth},
                       {"subtorus", io::encode(c.subtorus)},
                       {"dimension", c.subtorus.dimension()},
                       {"torsion_order", torsion_translation_order(c.subtorus)},
                       {"hits", c.hits}});
    emit(out, {{"order_bound", bound},
               {"characters", rep.points.size()},
               {"positive", positive},
               {"status", "candidates"},
               {"components", comps}});
  } else {
    out << "# " << rep.points.size() << " characters of order <= " << bound << ", " << positive
        << " with h1 > 0; components are candidates\n";
    out << "depth\tdimension\ttorsion_order\thits\tequations\n";
    for (const auto& c : rep.components)
      out << c.depth << "\t" << c.subtorus.dimension() << "\t" << torsion_translation_order(c.subtorus) << "\t" << c.hits
          << "\t" << subtorus_text(c.subtorus) << "\n";
  }
}

inline void twisted_alex(const std::string& pres_path, const std::string& rep_path, long check_bound, bool check,
                         bool as_json, std::ostream& out) {
  const auto p = io::decode_presentation(io::load_file(pres_path));
  const auto rho = io::decode_rep(io::load_file(rep_path));
  std::vector<long> eps;
  if (p.rank() == 1) {
    for (const auto& row : p.abelianization()) eps.push_back(row[0]);
  } else {
    eps = sum_epsilon(p);
  }
  const TwistedAlexanderData d(p, eps, rho);
  const auto h = twisted_homology(d);
  std::vector<Laurent1> delta;
  for (const auto& m : h) delta.push_back(m.order());
  json jd = json::array(), jc = json::array();
  std::ostringstream tsv;
  for (int k = 0; k < 3; ++k) {
    jd.push_back({{"k", k}, {"poly", io::encode(delta[static_cast<std::size_t>(k)])}});
    tsv << "Delta" << k << "\t" << delta[static_cast<std::size_t>(k)].str() << "\n";
  }
  if (check)
    for (int k = 0; k < 2; ++k) {
      const auto cert = cyclotomic_root_check(delta[static_cast<std::size_t>(k)], check_bound);
      jc.push_back({{"k", k}, {"all_roots_cyclotomic", cert.all_roots_cyclotomic}, {"certificate", cert.describe()}});
      tsv << "cyclotomic" << k << "\t" << (cert.all_roots_cyclotomic ? "true" : "false") << "\t" << cert.describe() << "\n";
    }
  if (as_json) {
    json j{{"epsilon", eps},
           {"delta", jd},
           {"torsion", {{"numerator", io::encode(delta[1])}, {"denominator", io::encode(delta[0])}}}};
    if (check) j["cyclotomic"] = jc;
    emit(out, j);
  } else {
    out << "invariant\tvalue\n" << tsv.str();
  }
}

/// Exit status and message for an exception escaping a command.
inline int report_exception(std::exception_ptr e, std::ostream& err) {
  try {
    std::rethrow_exception(e);
  } catch (const ParseError& x) {
    err << "parse error: " << x.what() << "\n";
    return parse_failure;
  } catch (const PreconditionError& x) {
    err << "precondition violated: " << x.what() << "\n";
    return precondition_failure;
  } catch (const InvariantError& x) {
    err << "internal invariant violated: " << x.what() << "\n";
    return invariant_failure;
  } catch (const io::json::exception& x) {
    err << "parse error: " << x.what() << "\n";
    return parse_failure;
  } catch (const std::exception& x) {
    err << "internal error: " << x.what() << "\n";
    return invariant_failure;
  } catch (...) {
    err << "internal error: unknown exception\n";
    return invariant_failure;
  }
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hodge loci, characteristic varieties and twisted Alexander invariants"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of TSV");

  std::string arrangement, presentation, weights, chi, family, moduli, rep;
  long r = -1, order_bound = 0, check_bound = 0;

  auto* polytopes = app.add_subcommand("polytopes", "polytope decomposition of the fundamental domain");
  polytopes->add_option("--arrangement", arrangement, "arrangement JSON")->required();
  polytopes->add_flag("--json", as_json);

  auto* cohomology = app.add_subcommand("cohomology", "local-system cohomology dimensions");
  auto* c_arr = cohomology->add_option("--arrangement", arrangement, "arrangement JSON");
  auto* c_w = cohomology->add_option("--weights", weights, "log weights p/q,... on the affine lines");
  auto* c_pres = cohomology->add_option("--presentation", presentation, "presentation JSON");
  auto* c_chi = cohomology->add_option("--chi", chi, "logs p/q,... of the character on H_1");
  c_arr->needs(c_w)->excludes(c_pres);
  c_w->needs(c_arr);
  c_pres->needs(c_chi);
  c_chi->needs(c_pres)->excludes(c_w);
  cohomology->add_flag("--json", as_json);

  auto* hodge = app.add_subcommand("hodge", "Gr_F tables of the worked families");
  hodge->add_option("--family", family, "p1-points | generic-p2 | cone-p3 | ceva | d84")->required();
  hodge->add_option("--r", r, "number of affine lines (or points)");
  hodge->add_option("--weights", weights, "weights p/q,... in [0,1)")->required();
  hodge->add_flag("--json", as_json);

  auto* covers = app.add_subcommand("covers", "H_1 rank of an abelian cover");
  covers->add_option("--presentation", presentation, "presentation JSON")->required();
  covers->add_option("--moduli", moduli, "m_1,...,m_r")->required();
  covers->add_flag("--json", as_json);

  auto* charvar = app.add_subcommand("charvar", "sampled characteristic variety components");
  charvar->add_option("--presentation", presentation, "presentation JSON")->required();
  charvar->add_option("--order-bound", order_bound, "largest character order swept")->required()->check(CLI::PositiveNumber);
  charvar->add_flag("--json", as_json);

  auto* twisted = app.add_subcommand("twisted-alex", "twisted Alexander polynomials");
  twisted->add_option("--presentation", presentation, "presentation JSON")->required();
  twisted->add_option("--rep", rep, "unitary representation JSON")->required();
  auto* check = twisted->add_option("--check-cyclotomic", check_bound, "cyclotomic sieve bound (0 = default)");
  twisted->add_flag("--json", as_json);

  std::vector<std::string> argv_storage{"hodgeloci"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_failure;
  }

  try {
    std::ostringstream buffer;  // nothing reaches out unless the command succeeds
    if (polytopes->parsed()) {
      detail::polytopes(arrangement, as_json, buffer);
    } else if (cohomology->parsed()) {
      if (!arrangement.empty()) {
        detail::cohomology_arrangement(arrangement, weights, as_json, buffer);
      } else if (!presentation.empty()) {
        detail::cohomology_presentation(presentation, chi, as_json, buffer);
      } else {
        throw ParseError("cohomology needs --arrangement F --weights CSV or --presentation F --chi CSV");
      }
    } else if (hodge->parsed()) {
      detail::hodge(family, r, weights, as_json, buffer);
    } else if (covers->parsed()) {
      detail::covers(presentation, moduli, as_json, buffer);
    } else if (charvar->parsed()) {
      detail::charvar(presentation, order_bound, as_json, buffer);
    } else if (twisted->parsed()) {
      if (check_bound < 0) throw ParseError("--check-cyclotomic must be nonnegative");
      detail::twisted_alex(presentation, rep, check_bound, check->count() > 0, as_json, buffer);
    }
    out << buffer.str();
    return ok;
  } catch (...) {
    return detail::report_exception(std::current_exception(), err);
  }
}

}  // namespace hodgeloci::cli
