#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gperm/equivalence.hpp"
#include "gperm/hopf.hpp"
#include "gperm/qsym.hpp"
#include "gperm/theta.hpp"

using Json = nlohmann::ordered_json;
using namespace gperm;

namespace {

// exit codes: 0 everything verified, 1 a check failed (witness in the
// report), 2 usage or feasibility problem
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::string group = "triv";
  std::string format = "json";
  std::string out;
  bool force = false;
  bool replay = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--group", c.group, "colour group, e.g. triv, Z2, Z2xZ3");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "write the report to this path instead of stdout");
  cmd->add_flag("--force", c.force, "override enumeration size guards");
  cmd->add_flag("--replay", c.replay, "on failure, re-run the minimal witness scope");
}

StatKind stat_arg(const std::string& name) {
  if (name == "descent") return StatKind::Descent;
  if (name == "peak" || name == "interior-peak") return StatKind::InteriorPeak;
  if (name == "exterior-peak") return StatKind::ExteriorPeak;
  if (name == "tree") return StatKind::Tree;
  if (name == "descent-b") return StatKind::DescentB;
  return stat_kind_parse(name);
}

void force_note(const Common& c, const ColourGroup& G, int n) {
  if (!c.force) return;
  uint64_t count = gn_order(G, n);
  double mib = (double)count * (double)(8 * n + 24) / (1024.0 * 1024.0);
  std::cerr << "# force: G_" << n << " over " << G.str() << " has " << count
            << " elements, estimated " << mib << " MiB\n";
}

int emit(const Json& report, const Common& c, int code) {
  std::string text = report.dump(2);
  text += "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    f << text;
  }
  return code;
}

int emit_csv(const std::string& csv, const Common& c, int code) {
  if (c.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(c.out);
    f << csv;
  }
  return code;
}

Json prop_json(const PropertyReport& r) {
  return Json{{"property", r.property},
              {"verdict", r.pass ? "pass" : "fail"},
              {"witness", r.witness}};
}

// leading "weight N:" or "degree N:" of a witness, -1 when absent
int witness_degree(const std::string& w) {
  for (const std::string head : {"weight ", "degree "}) {
    if (w.rfind(head, 0) != 0) continue;
    std::size_t at = head.size(), end = at;
    while (end < w.size() && std::isdigit((unsigned char)w[end])) ++end;
    if (end > at) return std::stoi(w.substr(at, end - at));
  }
  return -1;
}

// re-runs `run` at the degree named by the witness (or the original bound)
// and records whether the same witness reproduces
template <typename Run>
void attach_replay(Json& report, const Common& c, const PropertyReport& failed, int bound,
                   Run run) {
  if (!c.replay || failed.pass) return;
  int scope = witness_degree(failed.witness);
  if (scope < 0) scope = bound;
  PropertyReport again = run(scope);
  report["replay"] = Json{{"scope", scope},
                          {"witness", again.witness},
                          {"reproduced", !again.pass && again.witness == failed.witness}};
}

Json base_report(const std::string& command, Json params) {
  return Json{{"command", command}, {"params", std::move(params)}, {"results", Json::array()}};
}

void finish(Json& report, bool pass) { report["verdict"] = pass ? "pass" : "fail"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coloured permutation statistics and their algebras"};
  app.require_subcommand(1);

  Common common;

  // classes
  auto* cmd_classes = app.add_subcommand("classes", "list statistic fibers or relation classes");
  std::string cl_stat, cl_rel;
  int cl_n = 0;
  cmd_classes->add_option("--stat", cl_stat, "statistic kind");
  cmd_classes->add_option("--relation", cl_rel, "relation spec, e.g. D, IP:cong, EP:block");
  cmd_classes->add_option("--n", cl_n, "degree")->required();
  add_common(cmd_classes, common);

  // check
  auto* cmd_check = app.add_subcommand("check", "connectedness, map properties, coincidence");
  std::string ck_stat, ck_rel, ck_prop, ck_coin;
  int ck_n = 0, ck_m = 0;
  cmd_check->add_option("--stat", ck_stat, "statistic kind");
  cmd_check->add_option("--relation", ck_rel, "relation whose classes must match the fibers");
  cmd_check->add_option("--property", ck_prop, "IP, RP, or FP");
  cmd_check->add_option("--coincidence", ck_coin, "base relation for the lift comparison");
  cmd_check->add_option("--n", ck_n, "degree")->required();
  cmd_check->add_option("--m", ck_m, "second degree for map properties");
  add_common(cmd_check, common);

  // constants
  auto* cmd_constants = app.add_subcommand("constants", "structure constants over a class basis");
  std::string co_stat, co_mode = "external";
  int co_n = 0;
  cmd_constants->add_option("--stat", co_stat, "statistic kind")->required();
  cmd_constants->add_option("--mode", co_mode, "internal, external, or coproduct");
  cmd_constants->add_option("--n", co_n, "degree")->required();
  add_common(cmd_constants, common);

  // closure
  auto* cmd_closure = app.add_subcommand("closure", "closure of a class-sum span");
  std::string cs_stat, cs_mode = "external";
  int cs_n = 0;
  cmd_closure->add_option("--stat", cs_stat, "statistic kind")->required();
  cmd_closure->add_option("--mode", cs_mode, "internal, external, or coproduct");
  cmd_closure->add_option("--n", cs_n, "degree")->required();
  add_common(cmd_closure, common);

  // theta
  auto* cmd_theta = app.add_subcommand("theta", "peak projection checks");
  int th_nmax = 4;
  long long th_base = 2;
  cmd_theta->add_option("--nmax", th_nmax, "largest weight");
  cmd_theta->add_option("--base", th_base, "scale base of the closed formula");
  add_common(cmd_theta, common);

  // qsym
  auto* cmd_qsym = app.add_subcommand("qsym", "dual side: realization, duality, character");
  int qs_wmax = 4;
  cmd_qsym->add_option("--wmax", qs_wmax, "largest weight");
  add_common(cmd_qsym, common);

  // odd
  auto* cmd_odd = app.add_subcommand("odd", "odd subalgebra of the dual");
  int od_nmax = 4;
  std::string od_char = "evaluation";
  cmd_odd->add_option("--nmax", od_nmax, "largest degree");
  cmd_odd->add_option("--character", od_char, "evaluation or single")
      ->check(CLI::IsMember({"evaluation", "single"}));
  add_common(cmd_odd, common);

  // dims
  auto* cmd_dims = app.add_subcommand("dims", "class counts per degree");
  std::string dm_stat;
  int dm_nmax = 0;
  cmd_dims->add_option("--stat", dm_stat, "statistic kind")->required();
  cmd_dims->add_option("--nmax", dm_nmax, "largest degree")->required();
  add_common(cmd_dims, common);

  // hopf-axioms
  auto* cmd_axioms = app.add_subcommand("hopf-axioms", "bialgebra and antipode axioms");
  int ax_nmax = 3;
  cmd_axioms->add_option("--nmax", ax_nmax, "largest degree");
  add_common(cmd_axioms, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    ColourGroup G = ColourGroup::parse(common.group);

    if (*cmd_classes) {
      if (cl_stat.empty() == cl_rel.empty())
        throw std::invalid_argument("classes: give exactly one of --stat or --relation");
      force_note(common, G, cl_n);
      Json report = base_report(
          "classes", Json{{"group", G.str()}, {"n", cl_n},
                          {"kind", cl_stat.empty() ? cl_rel : cl_stat}});
      std::string csv = "label,size\n";
      if (!cl_stat.empty()) {
        ClassBasis basis = class_basis(G, stat_arg(cl_stat), cl_n, common.force);
        for (std::size_t i = 0; i < basis.labels.size(); ++i) {
          std::size_t size = basis.sums[i].terms.size();
          report["results"].push_back(Json{{"label", basis.labels[i]}, {"size", size}});
          csv += "\"" + basis.labels[i] + "\"," + std::to_string(size) + "\n";
        }
      } else {
        Partition part = classes(RelationSpec::parse(cl_rel), G, cl_n, common.force);
        for (const auto& block : part.blocks) {
          report["results"].push_back(
              Json{{"label", cp_str(block.front())}, {"size", block.size()}});
          csv += "\"" + cp_str(block.front()) + "\"," + std::to_string(block.size()) + "\n";
        }
      }
      finish(report, true);
      if (common.format == "csv") return emit_csv(csv, common, kPass);
      return emit(report, common, kPass);
    }

    if (*cmd_check) {
      int modes = (!ck_rel.empty()) + (!ck_prop.empty()) + (!ck_coin.empty());
      if (modes != 1)
        throw std::invalid_argument(
            "check: give exactly one of --relation, --property, --coincidence");
      force_note(common, G, ck_prop.empty() ? ck_n : ck_n + ck_m);
      PropertyReport rep;
      Json params{{"group", G.str()}, {"n", ck_n}};
      std::function<PropertyReport(int)> rerun;
      if (!ck_rel.empty()) {
        if (ck_stat.empty()) throw std::invalid_argument("check --relation needs --stat");
        RelationSpec rel = RelationSpec::parse(ck_rel);
        StatKind stat = stat_arg(ck_stat);
        params["relation"] = ck_rel;
        params["stat"] = stat_kind_str(stat);
        rep = check_connected(rel, stat, G, ck_n, common.force);
        rerun = [&](int) { return check_connected(rel, stat, G, ck_n, common.force); };
      } else if (!ck_prop.empty()) {
        if (ck_stat.empty()) throw std::invalid_argument("check --property needs --stat");
        MapProperty prop = parse_property(ck_prop);
        StatKind stat = stat_arg(ck_stat);
        params["property"] = ck_prop;
        params["stat"] = stat_kind_str(stat);
        params["m"] = ck_m;
        rep = check_property(stat, G, prop, ck_n, ck_m, common.force);
        rerun = [&](int) { return check_property(stat, G, prop, ck_n, ck_m, common.force); };
      } else {
        RelationKind base = RelationSpec::parse(ck_coin).kind;
        params["coincidence"] = ck_coin;
        rep = check_coincidence(base, G, ck_n, common.force);
        rerun = [&](int) { return check_coincidence(base, G, ck_n, common.force); };
      }
      Json report = base_report("check", params);
      report["results"].push_back(prop_json(rep));
      attach_replay(report, common, rep, ck_n, rerun);
      finish(report, rep.pass);
      return emit(report, common, rep.pass ? kPass : kFail);
    }

    if (*cmd_constants || *cmd_closure) {
      bool constants = (bool)*cmd_constants;
      StatKind stat = stat_arg(constants ? co_stat : cs_stat);
      ClosureMode mode = closure_mode_parse(constants ? co_mode : cs_mode);
      int n = constants ? co_n : cs_n;
      force_note(common, G, n);
      ClosureReport rep = verify_closure(G, stat, mode, n, common.force);
      Json report = base_report(constants ? "constants" : "closure",
                                Json{{"group", G.str()}, {"stat", stat_kind_str(stat)},
                                     {"mode", closure_mode_str(mode)}, {"n", n}});
      if (constants) {
        for (const auto& [key, count] : rep.table.entries) {
          const auto& [l, r, o] = key;
          report["results"].push_back(Json{{"left", rep.table.labels[l]},
                                           {"right", rep.table.labels[r]},
                                           {"out", rep.table.labels[o]},
                                           {"count", count}});
        }
        if (!rep.report.pass) report["results"].push_back(prop_json(rep.report));
      } else {
        report["results"].push_back(prop_json(rep.report));
        report["results"].back()["constants"] = rep.table.entries.size();
      }
      attach_replay(report, common, rep.report, n, [&](int) {
        return verify_closure(G, stat, mode, n, common.force).report;
      });
      finish(report, rep.report.pass);
      if (constants && common.format == "csv")
        return emit_csv(rep.table.csv(), common, rep.report.pass ? kPass : kFail);
      return emit(report, common, rep.report.pass ? kPass : kFail);
    }

    if (*cmd_theta) {
      force_note(common, G, th_nmax);
      Json report = base_report(
          "theta", Json{{"group", G.str()}, {"nmax", th_nmax}, {"base", th_base}});
      PropertyReport ext = verify_theta_extension(G, th_nmax, th_base, common.force);
      PropertyReport coa = verify_theta_coalgebra(G, th_nmax, th_base, common.force);
      ImageReport img = theta_image_report(G, th_nmax, th_base, common.force);
      report["results"].push_back(prop_json(ext));
      report["results"].push_back(prop_json(coa));
      Json imgj{{"property", "the projection image spans the peak classes"},
                {"verdict", img.pass ? "pass" : "fail"},
                {"witness", img.witness}};
      imgj["image_dims"] = img.image_dims;
      imgj["target_dims"] = img.target_dims;
      report["results"].push_back(imgj);
      const PropertyReport& failed = !ext.pass ? ext : coa;
      attach_replay(report, common, failed, th_nmax, [&](int scope) {
        return failed.property == ext.property
                   ? verify_theta_extension(G, scope, th_base, common.force)
                   : verify_theta_coalgebra(G, scope, th_base, common.force);
      });
      finish(report, ext.pass && coa.pass && img.pass);
      return emit(report, common, ext.pass && coa.pass && img.pass ? kPass : kFail);
    }

    if (*cmd_qsym) {
      force_note(common, G, qs_wmax);
      Json report = base_report("qsym", Json{{"group", G.str()}, {"wmax", qs_wmax}});
      PropertyReport dual = verify_qsym_duality(G, qs_wmax, common.force);
      PropertyReport stab = verify_qsym_stability(G, qs_wmax);
      PropertyReport inv = verify_character_inverse(G, qs_wmax, common.force);
      for (const auto& r : {dual, stab, inv}) report["results"].push_back(prop_json(r));
      const PropertyReport& failed = !dual.pass ? dual : (!stab.pass ? stab : inv);
      attach_replay(report, common, failed, qs_wmax, [&](int scope) {
        if (failed.property == dual.property) return verify_qsym_duality(G, scope, common.force);
        if (failed.property == stab.property) return verify_qsym_stability(G, scope);
        return verify_character_inverse(G, scope, common.force);
      });
      finish(report, dual.pass && stab.pass && inv.pass);
      return emit(report, common, dual.pass && stab.pass && inv.pass ? kPass : kFail);
    }

    if (*cmd_odd) {
      force_note(common, G, od_nmax);
      CharacterKind kind =
          od_char == "single" ? CharacterKind::SingleTerm : CharacterKind::Evaluation;
      OddReport rep = odd_subalgebra_report(G, od_nmax, kind, common.force);
      Json report = base_report(
          "odd", Json{{"group", G.str()}, {"nmax", od_nmax}, {"character", od_char}});
      Json entry{{"property", "odd subalgebra dimensions match the peak class counts"},
                 {"verdict", rep.pass ? "pass" : "fail"},
                 {"witness", rep.witness}};
      entry["dims"] = rep.dims;
      entry["expected"] = rep.expected;
      entry["dual_peak_match"] = rep.dual_peak_match;
      entry["dual_peak_witness"] = rep.dual_peak_witness;
      report["results"].push_back(entry);
      if (common.replay && !rep.pass) {
        int scope = witness_degree(rep.witness);
        if (scope < 0) scope = od_nmax;
        OddReport again = odd_subalgebra_report(G, scope, kind, common.force);
        report["replay"] = Json{{"scope", scope},
                                {"witness", again.witness},
                                {"reproduced", !again.pass && again.witness == rep.witness}};
      }
      finish(report, rep.pass);
      return emit(report, common, rep.pass ? kPass : kFail);
    }

    if (*cmd_dims) {
      StatKind stat = stat_arg(dm_stat);
      force_note(common, G, dm_nmax);
      Json report = base_report(
          "dims", Json{{"group", G.str()}, {"stat", stat_kind_str(stat)}, {"nmax", dm_nmax}});
      std::string csv = "degree,count\n";
      for (int n = 1; n <= dm_nmax; ++n) {
        std::size_t count = class_basis(G, stat, n, common.force).labels.size();
        report["results"].push_back(Json{{"degree", n}, {"count", count}});
        csv += std::to_string(n) + "," + std::to_string(count) + "\n";
      }
      finish(report, true);
      if (common.format == "csv") return emit_csv(csv, common, kPass);
      return emit(report, common, kPass);
    }

    if (*cmd_axioms) {
      force_note(common, G, ax_nmax);
      PropertyReport rep = verify_hopf_axioms(G, ax_nmax, common.force);
      Json report = base_report("hopf-axioms", Json{{"group", G.str()}, {"nmax", ax_nmax}});
      report["results"].push_back(prop_json(rep));
      attach_replay(report, common, rep, ax_nmax,
                    [&](int scope) { return verify_hopf_axioms(G, scope, common.force); });
      finish(report, rep.pass);
      return emit(report, common, rep.pass ? kPass : kFail);
    }
  } catch (const std::length_error& e) {
    std::cerr << "feasibility: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
