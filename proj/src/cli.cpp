#include "finsemi/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "finsemi/acceptance.hpp"
#include "finsemi/clifford.hpp"
#include "finsemi/families.hpp"

namespace finsemi {

namespace {

using Json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string base_name(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

bool looks_like_sslg(const std::string& text) {
  std::istringstream in(text);
  std::string line, w;
  while (std::getline(in, line)) {
    std::istringstream ls(line.substr(0, line.find('#')));
    if (ls >> w) return w == "semilattice";
  }
  return false;
}

// Semigroup inputs come as Cayley tables or strong-semilattice descriptions;
// the first directive tells them apart.
FiniteSemigroup load_semigroup(const std::string& path) {
  std::string text = slurp(path);
  if (looks_like_sslg(text)) {
    SslgSpec sp = parse_strong_semilattice(text, std::filesystem::path(path).parent_path().string());
    if (sp.name.empty()) sp.name = base_name(path);
    return make_strong_semilattice(sp).sg;
  }
  return parse_semigroup(text, base_name(path));
}

FiniteGroup load_group(const RunConfig& cfg, const std::string& path) {
  FiniteGroup g = parse_group(slurp(path), base_name(path));
  if (g.n > cfg.max_group_order)
    throw ResourceLimitError("group order " + std::to_string(g.n) + " exceeds --max-group-order " +
                             std::to_string(cfg.max_group_order));
  return g;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

Mask full_mask(int n) { return n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1; }

std::string tuple_to_string(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

// Members of a product subset in ascending global order, as "(a,b,...)".
std::vector<std::string> product_subset_tuples(const ProductGroup& pg, const ProductSubset& ps) {
  std::vector<std::string> out;
  auto bits = to_global_bitset(pg, ps);
  for (size_t x = bits.find_first(); x != boost::dynamic_bitset<>::npos; x = bits.find_next(x))
    out.push_back(tuple_to_string(pg.from_global((long long)x)));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string product_group_name(const ProductGroup& pg) {
  std::vector<std::string> names;
  for (const auto& f : pg.factors) names.push_back(f.name.empty() ? "?" : f.name);
  return join(names, " x ");
}

Json measure_json(const RationalMeasure& mu) {
  Json j = Json::object();
  for (int i = 0; i < mu.n; ++i)
    if (mu.w[i] != Rat(0)) j[std::to_string(i)] = rat_to_string(mu.w[i]);
  return j;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  FiniteSemigroup s = load_semigroup(cfg.inputs[0]);
  auto es = idempotents(s);
  bool grp = is_group(s);
  bool reg = is_regular(s);
  bool inv = inverse_table(s).has_value();
  bool cliff = is_clifford(s);
  bool ecomm = true;
  for (size_t i = 0; i < es.size() && ecomm; ++i)
    for (size_t j = i + 1; j < es.size() && ecomm; ++j)
      ecomm = s.mul(es[i], es[j]) == s.mul(es[j], es[i]);
  auto hasse = idempotent_hasse(s);
  if (cfg.json) {
    Json j;
    j["command"] = "analyze";
    j["name"] = s.name;
    j["order"] = s.n;
    j["group"] = grp;
    j["idempotents"] = es;
    j["regular"] = reg;
    j["inverse"] = inv;
    j["clifford"] = cliff;
    j["commutative_idempotents"] = ecomm;
    Json h = Json::array();
    for (auto& [e, f] : hasse) h.push_back(Json::array({e, f}));
    j["idempotent_covers"] = h;
    out << j.dump(2) << "\n";
  } else {
    out << "semigroup " << s.name << " of order " << s.n << "\n";
    out << "group: " << yn(grp) << "\n";
    out << "idempotents:";
    for (int e : es) out << " " << e;
    out << "\n";
    out << "regular: " << yn(reg) << "\n";
    out << "inverse: " << yn(inv) << "\n";
    out << "clifford: " << yn(cliff) << "\n";
    out << "commutative idempotents: " << yn(ecomm) << "\n";
    out << "idempotent order covers:";
    if (hasse.empty()) out << " none";
    for (auto& [e, f] : hasse) out << " " << e << "<" << f;
    out << "\n";
  }
  return kExitPass;
}

int cmd_exp(const RunConfig& cfg, std::ostream& out) {
  FiniteGroup g = load_group(cfg, cfg.inputs[0]);
  auto idems = idempotents_exp(g);
  auto regs = regular_elements_exp(g);
  Json j;
  if (cfg.json) {
    j["command"] = "exp";
    j["name"] = g.name;
    j["order"] = g.n;
    j["subsets"] = full_mask(g.n);
    j["idempotent_count"] = idems.size();
    j["regular_count"] = regs.size();
  } else {
    out << "group " << g.name << " of order " << g.n << "\n";
    out << "nonempty subsets: " << full_mask(g.n) << "\n";
    out << "idempotent subsets (subgroups): " << idems.size() << "\n";
    out << "regular subsets (cosets): " << regs.size() << "\n";
  }
  if (cfg.list_idempotents) {
    Json arr = Json::array();
    for (Mask m : idems) {
      if (cfg.json) arr.push_back(mask_to_string(m));
      else out << "  idempotent " << mask_to_string(m) << "\n";
    }
    if (cfg.json) j["idempotents"] = arr;
  }
  if (cfg.list_regular) {
    Json arr = Json::array();
    for (const auto& [m, w] : regs) {
      Mask inv = regular_subset_inverse(g, w);
      if (cfg.json) {
        Json e;
        e["subset"] = mask_to_string(m);
        e["subgroup"] = mask_to_string(w.h.members);
        e["shift"] = w.shift;
        e["inverse"] = mask_to_string(inv);
        arr.push_back(e);
      } else {
        out << "  " << mask_to_string(m) << " = " << mask_to_string(w.h.members) << "*" << w.shift
            << ", inverse " << mask_to_string(inv) << "\n";
      }
    }
    if (cfg.json) j["regular"] = arr;
  }
  if (cfg.show_table) {
    FiniteSemigroup t = exp_semigroup_table(g);
    if (cfg.json) {
      Json rows = Json::array();
      for (int a = 0; a < t.n; ++a) {
        Json row = Json::array();
        for (int b = 0; b < t.n; ++b) row.push_back(t.mul(a, b));
        rows.push_back(row);
      }
      j["table"] = rows;
    } else {
      out << "table (index = subset mask - 1):\n";
      for (int a = 0; a < t.n; ++a) {
        out << " ";
        for (int b = 0; b < t.n; ++b) out << " " << t.mul(a, b);
        out << "\n";
      }
    }
  }
  if (cfg.json) out << j.dump(2) << "\n";
  return kExitPass;
}

int cmd_conv(const RunConfig& cfg, std::ostream& out) {
  FiniteGroup g = load_group(cfg, cfg.inputs[0]);
  if (cfg.conv_action == "mul") {
    RationalMeasure a = parse_measure(slurp(cfg.inputs[1]), g.n);
    RationalMeasure b = parse_measure(slurp(cfg.inputs[2]), g.n);
    RationalMeasure c = convolve(g, a, b);
    if (cfg.json) {
      Json j;
      j["command"] = "conv";
      j["action"] = "mul";
      j["result"] = measure_json(c);
      j["support"] = mask_to_string(support(c));
      out << j.dump(2) << "\n";
    } else {
      out << "result: " << measure_to_string(c) << "\n";
      out << "support: " << mask_to_string(support(c)) << "\n";
    }
    return kExitPass;
  }
  if (cfg.conv_action == "classify") {
    RationalMeasure mu = parse_measure(slurp(cfg.inputs[1]), g.n);
    auto haar = classify_idempotent_measure(g, mu);
    auto wit = classify_regular_measure(g, mu);
    Json j;
    j["command"] = "conv";
    j["action"] = "classify";
    j["measure"] = measure_json(mu);
    std::string line;
    if (haar) {
      line = "idempotent: Haar(" + mask_to_string(haar->members) + ")";
      j["classification"] = "idempotent";
      j["subgroup"] = mask_to_string(haar->members);
    } else if (wit) {
      line = "regular: Haar(" + mask_to_string(wit->h.members) + ")*" + std::to_string(wit->shift);
      j["classification"] = "regular";
      j["subgroup"] = mask_to_string(wit->h.members);
      j["shift"] = wit->shift;
    } else {
      line = "not regular";
      j["classification"] = "not regular";
    }
    if (wit) {
      RationalMeasure inv = measure_inverse(g, mu);
      j["inverse"] = measure_json(inv);
      if (!cfg.json) {
        out << line << "\n";
        out << "inverse: " << measure_to_string(inv) << "\n";
      }
    } else if (!cfg.json) {
      out << line << "\n";
    }
    if (cfg.json) out << j.dump(2) << "\n";
    return kExitPass;
  }
  if (cfg.conv_action == "support-iso") {
    SupportIsoReport rep = support_iso_check(g);
    bool ok = rep.bijective && rep.homomorphic;
    if (cfg.json) {
      Json j;
      j["command"] = "conv";
      j["action"] = "support-iso";
      j["regular_measures"] = rep.measures;
      j["regular_subsets"] = rep.subsets;
      j["bijective"] = rep.bijective;
      j["multiplicative"] = rep.homomorphic;
      if (!rep.homomorphic) j["defect_pair"] = Json::array({rep.defect.first, rep.defect.second});
      out << j.dump(2) << "\n";
    } else {
      out << "regular measures: " << rep.measures << "\n";
      out << "regular subsets: " << rep.subsets << "\n";
      out << "bijective: " << yn(rep.bijective) << "\n";
      out << "multiplicative: " << yn(rep.homomorphic) << "\n";
      if (!rep.homomorphic)
        out << "defect pair: (" << rep.defect.first << "," << rep.defect.second << ")\n";
    }
    return ok ? kExitPass : kExitObstruction;
  }
  // grid: enumerate and classify every measure up to the denominator bound
  auto grid = measure_grid(g.n, cfg.grid_denominator);
  Json arr = Json::array();
  int idem = 0, reg = 0;
  for (const auto& mu : grid) {
    auto haar = classify_idempotent_measure(g, mu);
    auto wit = haar ? std::optional<RegularMeasureWitness>{{*haar, g.identity}}
                    : classify_regular_measure(g, mu);
    if (!haar && !wit) continue;
    idem += haar.has_value();
    reg += wit.has_value();
    std::string cls = haar ? "idempotent: Haar(" + mask_to_string(haar->members) + ")"
                           : "regular: Haar(" + mask_to_string(wit->h.members) + ")*" +
                                 std::to_string(wit->shift);
    if (cfg.json) {
      Json e;
      e["measure"] = measure_json(mu);
      e["classification"] = cls;
      arr.push_back(e);
    } else {
      out << "  " << measure_to_string(mu) << "  ->  " << cls << "\n";
    }
  }
  if (cfg.json) {
    Json j;
    j["command"] = "conv";
    j["action"] = "grid";
    j["denominator"] = cfg.grid_denominator;
    j["grid_size"] = grid.size();
    j["idempotent_count"] = idem;
    j["regular_count"] = reg;
    j["classified"] = arr;
    out << j.dump(2) << "\n";
  } else {
    out << "grid measures with denominator <= " << cfg.grid_denominator << ": " << grid.size()
        << "\n";
    out << "idempotent: " << idem << ", regular: " << reg << "\n";
  }
  return kExitPass;
}

int cmd_superext(const RunConfig& cfg, std::ostream& out) {
  FiniteGroup g = load_group(cfg, cfg.inputs[0]);
  FiniteSemigroup gs = group_as_semigroup(g);
  std::vector<UpFamily> carrier;
  FiniteSemigroup lam = superextension_semigroup(gs, &carrier);
  bool comm = is_commutative(lam);
  bool inv = inverse_table(lam).has_value();
  bool cliff = is_clifford(lam);
  auto invariant = invariant_elements(lam, principal_indices(carrier, g.n));
  if (cfg.json) {
    Json j;
    j["command"] = "superext";
    j["name"] = g.name;
    j["systems"] = Json::array();
    for (const auto& f : carrier) j["systems"].push_back(family_to_string(f));
    Json rows = Json::array();
    for (int a = 0; a < lam.n; ++a) {
      Json row = Json::array();
      for (int b = 0; b < lam.n; ++b) row.push_back(lam.mul(a, b));
      rows.push_back(row);
    }
    j["table"] = rows;
    j["commutative"] = comm;
    j["inverse"] = inv;
    j["clifford"] = cliff;
    j["invariant"] = invariant;
    out << j.dump(2) << "\n";
  } else {
    out << "superextension of " << g.name << ": " << lam.n << " maximal linked systems\n";
    for (size_t i = 0; i < carrier.size(); ++i)
      out << "  " << i << ": " << family_to_string(carrier[i]) << "\n";
    out << "table:\n";
    for (int a = 0; a < lam.n; ++a) {
      out << " ";
      for (int b = 0; b < lam.n; ++b) out << " " << std::setw(2) << lam.mul(a, b);
      out << "\n";
    }
    out << "commutative: " << yn(comm) << "\n";
    out << "inverse: " << yn(inv) << "\n";
    out << "clifford: " << yn(cliff) << "\n";
    out << "invariant elements:";
    if (invariant.empty()) out << " none";
    for (int i : invariant) out << " " << i;
    out << "\n";
  }
  return kExitPass;
}

void print_obstruction(const ObstructionReport& rep, bool json, Json& j, std::ostream& out) {
  static const char* kVerdict[] = {"PASS", "FAIL", "VACUOUS", "SKIPPED"};
  if (json) {
    Json arr = Json::array();
    for (const auto& c : rep.checks) {
      Json e;
      e["id"] = c.id;
      e["verdict"] = kVerdict[c.verdict];
      e["detail"] = c.detail;
      e["witness"] = c.witness;
      arr.push_back(e);
    }
    j["regular"] = rep.regular;
    j["checks"] = arr;
  } else {
    for (const auto& c : rep.checks)
      out << "check " << c.id << ": " << kVerdict[c.verdict] << " - " << c.detail << "\n";
  }
}

int cmd_embed(const RunConfig& cfg, std::ostream& out) {
  FiniteSemigroup s = load_semigroup(cfg.inputs[0]);
  ObstructionReport rep = obstruction_report(s);
  Json j;
  j["command"] = "embed";
  j["name"] = s.name;
  j["order"] = s.n;
  if (!rep.regular) {
    if (cfg.json) {
      j["regular"] = false;
      j["verdict"] = "inconclusive";
      j["reason"] = "not regular; the embedding theory covers regular semigroups only";
      out << j.dump(2) << "\n";
    } else {
      out << "not regular: the embedding theory covers regular semigroups only\n";
      out << "verdict: inconclusive\n";
    }
    return kExitInconclusive;
  }
  print_obstruction(rep, cfg.json, j, out);
  if (rep.any_fail()) {
    if (cfg.json) {
      j["verdict"] = "obstruction";
      out << j.dump(2) << "\n";
    } else {
      out << "verdict: obstruction certificate - embeds into no subset or measure semigroup "
             "over a group\n";
    }
    return kExitObstruction;
  }
  bool clifford_inverse = inverse_table(s).has_value() && is_clifford(s);
  if (!clifford_inverse) {
    // Outside the decidable fragment. Try small ambient groups exhaustively
    // and report whatever turns up, without claiming completeness.
    std::vector<FiniteGroup> targets{make_cyclic(2), make_cyclic(3), make_cyclic(4), make_klein()};
    if (s.n <= 16) {
      for (const FiniteGroup& g : targets) {
        VirtualSemigroup ex = exp_semigroup(g);
        auto em = find_embedding(s, ex);
        if (!em) continue;
        if (cfg.json) {
          j["verdict"] = "embedded";
          j["target"] = "exp(" + g.name + ")";
          Json m = Json::array();
          for (int x = 0; x < s.n; ++x) m.push_back(mask_to_string((Mask)((*em)[x] + 1)));
          j["images"] = m;
          out << j.dump(2) << "\n";
        } else {
          out << "embedded into the subset semigroup over " << g.name << ":\n";
          for (int x = 0; x < s.n; ++x)
            out << "  " << x << " -> " << mask_to_string((Mask)((*em)[x] + 1)) << "\n";
          out << "verdict: embedded\n";
        }
        return kExitPass;
      }
    }
    if (cfg.json) {
      j["verdict"] = "inconclusive";
      j["reason"] = "all necessary checks pass but the input is not Clifford inverse; "
                    "exhaustive search over ambient groups of order <= 4 found nothing";
      out << j.dump(2) << "\n";
    } else {
      out << "verdict: inconclusive - all necessary checks pass but the input is not Clifford "
             "inverse,\n  and exhaustive search over ambient groups of order <= 4 found no "
             "embedding\n";
    }
    return kExitInconclusive;
  }
  ExpEmbedding em = assemble_exp_embedding(s, cfg.max_exp_order);
  VerifyResult ver = verify_exp_embedding(s, em);
  if (cfg.json) {
    j["verdict"] = "embedded";
    j["product_group"] = product_group_name(em.group);
    j["product_order"] = em.group.order;
  } else {
    out << "product group: " << product_group_name(em.group) << " (order " << em.group.order
        << ")\n";
  }
  if (cfg.embed_target == "exp") {
    if (cfg.json) {
      Json m = Json::array();
      for (int x = 0; x < s.n; ++x) {
        Json e;
        e["element"] = x;
        e["subset"] = product_subset_tuples(em.group, em.images[x]);
        m.push_back(e);
      }
      j["images"] = m;
    } else {
      for (int x = 0; x < s.n; ++x)
        out << "  " << x << " -> {" << join(product_subset_tuples(em.group, em.images[x]), ",")
            << "}\n";
    }
  } else {
    MeasureEmbedding mem = assemble_measure_embedding(s, cfg.max_exp_order);
    VerifyResult mver = verify_measure_embedding(s, mem);
    ver.ok = ver.ok && mver.ok;
    ver.detail += "; " + mver.detail;
    if (cfg.json) {
      Json m = Json::array();
      for (int x = 0; x < s.n; ++x) {
        auto tuples = product_subset_tuples(em.group, em.images[x]);
        Json e;
        e["element"] = x;
        e["weight"] = rat_to_string(Rat(1, (long long)tuples.size()));
        e["support"] = tuples;
        m.push_back(e);
      }
      j["images"] = m;
    } else {
      for (int x = 0; x < s.n; ++x) {
        auto tuples = product_subset_tuples(em.group, em.images[x]);
        out << "  " << x << " -> " << rat_to_string(Rat(1, (long long)tuples.size()))
            << " at each of {" << join(tuples, ",") << "}\n";
      }
    }
  }
  if (cfg.json) {
    j["verified"] = ver.ok;
    j["verification"] = ver.detail;
    out << j.dump(2) << "\n";
  } else {
    out << "verified: " << ver.detail << "\n";
    out << "verdict: embedded\n";
  }
  return ver.ok ? kExitPass : kExitObstruction;
}

int cmd_verify_paper(const RunConfig& cfg, std::ostream& out) {
  auto results = run_acceptance({cfg.quick, cfg.seed});
  int passed = 0;
  for (const auto& r : results) passed += r.pass;
  if (cfg.json) {
    Json j;
    j["command"] = "verify-paper";
    j["quick"] = cfg.quick;
    j["seed"] = cfg.seed;
    Json arr = Json::array();
    for (const auto& r : results) {
      Json e;
      e["id"] = r.id;
      e["title"] = r.title;
      e["pass"] = r.pass;
      e["detail"] = r.detail;
      e["notes"] = r.notes;
      arr.push_back(e);  // timings omitted: output must be run-independent
    }
    j["criteria"] = arr;
    j["passed"] = passed;
    j["total"] = results.size();
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << "criterion " << std::setw(2) << r.id << " " << (r.pass ? "PASS" : "FAIL") << " ("
          << std::fixed << std::setprecision(2) << r.seconds << " s) " << r.title << "\n";
      out << "    " << r.detail << "\n";
      for (const auto& n : r.notes) out << "    - " << n << "\n";
    }
    out << passed << "/" << results.size() << " criteria pass\n";
  }
  return passed == (int)results.size() ? kExitPass : kExitObstruction;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"finite semigroups inside subset and measure semigroups over groups"};
  app.name("finsemi");
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "emit a JSON report instead of text");
  app.add_flag("--quick", cfg.quick, "reduced sizes for verify-paper");
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--max-group-order", cfg.max_group_order, "largest ambient group accepted")
      ->capture_default_str();
  app.add_option("--max-exp-order", cfg.max_exp_order, "largest product group built by embed")
      ->capture_default_str();
  app.add_option("--grid-denominator", cfg.grid_denominator, "measure grid resolution")
      ->capture_default_str();

  std::string file, m1, m2;
  auto* analyze = app.add_subcommand("analyze", "structure report for a semigroup file");
  analyze->add_option("file", file, "Cayley table or strong-semilattice file")->required();

  auto* exp = app.add_subcommand("exp", "subset semigroup of a group");
  exp->add_option("file", file, "group Cayley table")->required();
  exp->add_flag("--regular", cfg.list_regular, "list the regular subsets with witnesses");
  exp->add_flag("--idempotents", cfg.list_idempotents, "list the idempotent subsets");
  exp->add_flag("--table", cfg.show_table, "print the full product table (order <= 5)");

  auto* conv = app.add_subcommand("conv", "convolution semigroup of measures on a group");
  conv->require_subcommand(1);
  auto* conv_mul = conv->add_subcommand("mul", "convolve two measures");
  conv_mul->add_option("group", file, "group Cayley table")->required();
  conv_mul->add_option("m1", m1, "first measure file")->required();
  conv_mul->add_option("m2", m2, "second measure file")->required();
  auto* conv_classify = conv->add_subcommand("classify", "classify one measure");
  conv_classify->add_option("group", file, "group Cayley table")->required();
  conv_classify->add_option("measure", m1, "measure file")->required();
  auto* conv_siso = conv->add_subcommand("support-iso", "check the support map on regular measures");
  conv_siso->add_option("group", file, "group Cayley table")->required();
  auto* conv_grid = conv->add_subcommand("grid", "classify every measure on a denominator grid");
  conv_grid->add_option("group", file, "group Cayley table")->required();

  auto* superext = app.add_subcommand("superext", "maximal linked systems over a group");
  superext->add_option("file", file, "group Cayley table")->required();

  auto* embed = app.add_subcommand("embed", "embed a semigroup into a subset or measure semigroup");
  embed->add_option("file", file, "Cayley table or strong-semilattice file")->required();
  embed->add_option("--target", cfg.embed_target, "exp (subsets) or conv (measures)")
      ->check(CLI::IsMember({"exp", "conv"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify-paper", "run the built-in verification suite");

  // Let the global flags appear after a subcommand name as well.
  for (auto* sub : {analyze, exp, conv, superext, embed, verify}) sub->fallthrough();
  for (auto* sub : {conv_mul, conv_classify, conv_siso, conv_grid}) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  cfg.inputs = {file, m1, m2};
  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (exp->parsed()) return cmd_exp(cfg, out);
    if (conv->parsed()) {
      cfg.conv_action = conv_mul->parsed() ? "mul"
                        : conv_classify->parsed() ? "classify"
                        : conv_siso->parsed() ? "support-iso"
                                              : "grid";
      return cmd_conv(cfg, out);
    }
    if (superext->parsed()) return cmd_superext(cfg, out);
    if (embed->parsed()) return cmd_embed(cfg, out);
    if (verify->parsed()) return cmd_verify_paper(cfg, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace finsemi
