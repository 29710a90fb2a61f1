// Command-line surface: exact crystal computations and replayable checks.
// JSON reports go to stdout, a one-line human summary to stderr.
// Exit codes: 0 computed/verified, 1 a checked statement failed,
// 2 invalid input, 3 budget exceeded.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lsc/scans.hpp"

using namespace lsc;

namespace {

Weight parse_weight(const std::string& text) {
  std::vector<Rat> c;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) fail(Errc::ParseError, "empty weight coordinate");
      c.push_back(Rat::parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return Weight(std::move(c));
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) fail(Errc::ParseError, "empty index");
      out.push_back(std::stoi(cur) - 1);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

Monomial parse_monomial(const std::string& text) {
  std::vector<std::pair<int, long long>> f;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      size_t colon = cur.find(':');
      if (colon == std::string::npos) fail(Errc::ParseError, "monomial factor needs i:b");
      f.emplace_back(std::stoi(cur.substr(0, colon)) - 1,
                     std::stoll(cur.substr(colon + 1)));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return Monomial::of(std::move(f));
}

Quadruple parse_quad(const std::string& text) {
  std::vector<Weight> parts;
  std::string cur;
  for (char ch : text + ";") {
    if (ch == ';') {
      parts.push_back(parse_weight(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (parts.size() != 4) fail(Errc::ParseError, "quadruple needs four weights");
  return Quadruple::of(parts[0], parts[1], parts[2], parts[3]);
}

struct DatumSource {
  std::string type;
  std::string gcm_file;

  RootDatum datum() const {
    if (!type.empty()) return RootDatum::from_type(type);
    if (!gcm_file.empty()) {
      std::ifstream in(gcm_file);
      if (!in) fail(Errc::ParseError, "cannot open " + gcm_file);
      return gcm_from_json(Json::parse(in));
    }
    fail(Errc::ParseError, "need --type or --gcm");
  }
};

void emit(const Json& report, const std::string& summary, bool json_out = true) {
  if (json_out) std::cout << report.dump(2) << "\n";
  std::cerr << summary << "\n";
}

Json scan_to_json(const ScanReport& rep, uint64_t seed, bool seeded) {
  Json out;
  out["scan"] = rep.name;
  if (seeded) out["seed"] = seed;
  out["checked"] = rep.checked;
  out["failures"] = rep.failures;
  out["notes"] = rep.notes;
  out["details"] = rep.details;
  out["verified"] = rep.pass();
  return out;
}

int finish_scans(const std::vector<ScanReport>& reps, uint64_t seed, bool seeded,
                 bool json_out) {
  Json out = Json::array();
  long long failures = 0;
  for (const ScanReport& rep : reps) {
    out.push_back(scan_to_json(rep, seed, seeded));
    failures += rep.failures;
  }
  emit(out.size() == 1 ? out[0] : out,
       failures == 0 ? "scan passed" : "scan FAILED with " + std::to_string(failures),
       json_out);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Littelmann path crystals, tensor decompositions, and checkers"};
  app.require_subcommand(1);

  DatumSource src;
  std::string lambda_text, mu_text, monomial_text, quad_text, beta_text, indices_text;
  std::string word_text, word2_text, child_type, folding_file, scan_name, check_name;
  long long n_value = 1;
  int position = 1;
  uint64_t seed = 1;
  int count = 100;
  long long coord_max = 2;
  long long budget_nodes = -1;
  int jobs = 1;
  bool dot = false;
  bool json_out = true;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type", src.type, "root datum label, e.g. A2, B3, D4");
    cmd->add_option("--gcm", src.gcm_file, "JSON file with a type or a Cartan matrix");
    cmd->add_option("--jobs", jobs, "worker threads for closures and scans");
    cmd->add_option("--budget-nodes", budget_nodes, "node budget for crystal closures");
    cmd->add_flag("--json,!--no-json", json_out, "print the JSON report (default on)");
  };

  CLI::App* cmd_decompose = app.add_subcommand("decompose", "tensor product decomposition");
  add_common(cmd_decompose);
  cmd_decompose->add_option("--lambda", lambda_text)->required();
  cmd_decompose->add_option("--mu", mu_text)->required();

  CLI::App* cmd_crystal = app.add_subcommand("crystal", "generate a crystal graph");
  add_common(cmd_crystal);
  cmd_crystal->add_option("--lambda", lambda_text)->required();
  cmd_crystal->add_flag("--dot", dot, "emit DOT to stdout instead of JSON");

  CLI::App* cmd_check = app.add_subcommand("check", "evaluate one checkable statement");
  add_common(cmd_check);
  cmd_check->add_option("statement", check_name,
                        "one of: lemma-nonzero epsilon mu-dominant thm-component wahl "
                        "schur-star transfer support-transfer deep deep-decompose lifting "
                        "kk-containment kostant stembridge virtual-fold virtual-epsilon "
                        "virtual-component")
      ->required();
  cmd_check->add_option("--lambda", lambda_text);
  cmd_check->add_option("--mu", mu_text);
  cmd_check->add_option("--monomial", monomial_text, "factors i:b, e.g. 1:1,2:1");
  cmd_check->add_option("--quad", quad_text, "four weights separated by ';'");
  cmd_check->add_option("--beta", beta_text, "simple-root indices, e.g. 1,2");
  cmd_check->add_option("--indices", indices_text, "index tuple, e.g. 1,2");
  cmd_check->add_option("--word", word_text, "word of simple reflections, e.g. 1,2,1");
  cmd_check->add_option("--word2", word2_text, "second word for comparisons");
  cmd_check->add_option("--N", n_value, "multiplicity for Wahl instances");
  cmd_check->add_option("--pos", position, "1-based monomial position");
  cmd_check->add_option("--child", child_type, "non-simply-laced child type, e.g. B2");
  cmd_check->add_option("--folding", folding_file, "JSON folding description");
  cmd_check->add_flag("--dot", dot, "emit a DOT vertex graph where applicable");

  CLI::App* cmd_scan = app.add_subcommand("scan", "exhaustive or seeded verification scans");
  add_common(cmd_scan);
  cmd_scan->add_option("name", scan_name,
                       "one of: crystal-sizes characters rho-square lemma-box epsilon-box "
                       "epsilon-random component-soundness simple-sum kostant wahl-box "
                       "transfer-box support-transfer-box deep-random stembridge foldings "
                       "all")
      ->required();
  cmd_scan->add_option("--seed", seed, "seed for randomized scans");
  cmd_scan->add_option("--count", count, "sample count for randomized scans");
  cmd_scan->add_option("--coord-max", coord_max, "coordinate bound for box scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_decompose) {
      RootDatum g = src.datum();
      Weight lam = parse_weight(lambda_text), mu = parse_weight(mu_text);
      ScanOptions opts;
      opts.jobs = jobs;
      Decomposition d = decompose(g, lam, mu, opts);
      emit(decomposition_to_json(g, d),
           "decomposed into " + std::to_string(d.mult.size()) + " components", json_out);
      return 0;
    }

    if (*cmd_crystal) {
      RootDatum g = src.datum();
      Weight lam = parse_weight(lambda_text);
      GenOptions opts;
      opts.node_budget = budget_nodes;
      opts.jobs = jobs;
      CrystalGraph gr = generate_crystal(g, lam, opts);
      if (dot) {
        std::cout << to_dot(gr);
        std::cerr << "crystal with " << gr.size() << " nodes\n";
        return 0;
      }
      Json rep;
      rep["type"] = g.label();
      rep["lambda"] = weight_to_json(lam);
      rep["nodes"] = gr.size();
      rep["dimension_oracle"] = weyl_dim(g, lam);
      emit(rep, "crystal with " + std::to_string(gr.size()) + " nodes", json_out);
      return 0;
    }

    if (*cmd_check) {
      Json rep;
      rep["check"] = check_name;
      bool verified = true;

      if (check_name == "lemma-nonzero") {
        RootDatum g = src.datum();
        Weight lam = parse_weight(lambda_text);
        Monomial m = parse_monomial(monomial_text);
        bool nonzero = monomial_nonzero(g, lam, m);
        rep["lambda"] = weight_to_json(lam);
        rep["monomial"] = monomial_to_json(m);
        rep["nonzero"] = nonzero;
        if (g.finite_type()) {
          bool replay = apply_lowering_monomial(g, lam, m.factors).has_value();
          rep["replay_agrees"] = replay == nonzero;
          verified = replay == nonzero;
        }
      } else if (check_name == "epsilon") {
        RootDatum g = src.datum();
        Weight lam = parse_weight(lambda_text);
        Monomial m = parse_monomial(monomial_text);
        long long closed = epsilon_closed_form(g, m, position - 1);
        rep["closed_form"] = closed;
        rep["monomial"] = monomial_to_json(m);
        if (g.finite_type() && monomial_nonzero(g, lam, m)) {
          auto path = apply_lowering_monomial(g, lam, m.factors);
          long long brute = epsilon(*path, m.factors[position - 1].first);
          rep["brute_force"] = brute;
          verified = closed == brute;
        }
      } else if (check_name == "mu-dominant") {
        RootDatum g = src.datum();
        Weight lam = parse_weight(lambda_text), mu = parse_weight(mu_text);
        Monomial m = parse_monomial(monomial_text);
        rep["dominant"] = monomial_mu_dominant(g, lam, mu, m);
        rep["monomial"] = monomial_to_json(m);
      } else if (check_name == "thm-component") {
        RootDatum g = src.datum();
        Weight lam = parse_weight(lambda_text), mu = parse_weight(mu_text);
        Monomial m = parse_monomial(monomial_text);
        auto nu = component_from_monomial(g, lam, mu, m);
        rep["certificate"] = monomial_to_json(m);
        rep["component_found"] = nu.has_value();
        if (nu) {
          rep["nu"] = weight_to_json(*nu);
          if (g.finite_type()) {
            long long mult = tensor_multiplicity(g, lam, mu, *nu);
            rep["multiplicity"] = mult;
            verified = mult >= 1;
          }
        }
      } else if (check_name == "wahl") {
        RootDatum g = src.datum();
        Weight lam = parse_weight(lambda_text), mu = parse_weight(mu_text);
        Weight beta = Weight::zero(g.rank());
        for (int i : parse_indices(beta_text)) beta = beta + g.simple_root(i);
        WahlReport wr = wahl_check(g, lam, mu, beta, n_value);
        rep["conditions_hold"] = wr.conditions_hold;
        rep["holds"] = wr.holds;
        rep["component"] = weight_to_json(wr.component);
        Json wit = Json::array();
        for (const Monomial& m : wr.witnesses) wit.push_back(monomial_to_json(m));
        rep["witnesses"] = wit;
        if (wr.holds && g.finite_type()) {
          long long mult = tensor_multiplicity(g, lam, mu, wr.component);
          rep["multiplicity"] = mult;
          verified = mult >= static_cast<long long>(wr.witnesses.size());
        }
      } else if (check_name == "schur-star") {
        RootDatum g = src.datum();
        Quadruple q = parse_quad(quad_text);
        rep["star"] = star_hypothesis(g, q);
      } else if (check_name == "transfer") {
        RootDatum g = src.datum();
        Quadruple q = parse_quad(quad_text);
        TransferCertificate cert = transfer_sigma(g, q, parse_indices(indices_text));
        Json sigma = Json::array();
        for (int p : cert.sigma) sigma.push_back(p + 1);
        rep["sigma"] = sigma;
        rep["certificate"] = monomial_to_json(cert.reordered);
      } else if (check_name == "support-transfer") {
        RootDatum g = src.datum();
        Quadruple q = parse_quad(quad_text);
        ScanOptions opts;
        opts.jobs = jobs;
        SupportTransferReport str = support_transfer(g, q, parse_indices(beta_text), opts);
        rep["nu"] = weight_to_json(str.nu);
        rep["mult_34"] = str.mult34;
        rep["mult_12"] = str.mult12;
        rep["vacuous"] = str.vacuous;
        Json certs = Json::array();
        for (const Monomial& m : str.certificates) certs.push_back(monomial_to_json(m));
        rep["certificates"] = certs;
        verified = str.holds;
      } else if (check_name == "lifting") {
        RootDatum g = src.datum();
        Weight lam_primed = parse_weight(lambda_text), mu = parse_weight(mu_text);
        LiftReport lr = lifting_check(g, lam_primed, mu, parse_indices(word_text),
                                      word2_text.empty() ? std::vector<int>{}
                                                         : parse_indices(word2_text));
        rep["applicable_primed"] = lr.applicable_primed;
        rep["applicable_lifted"] = lr.applicable_lifted;
        rep["distinct_primed"] = lr.distinct_primed;
        rep["distinct_lifted"] = lr.distinct_lifted;
        verified = lr.pass;
      } else if (check_name == "kk-containment") {
        RootDatum g = src.datum();
        Weight l2 = parse_weight(lambda_text), l4 = parse_weight(mu_text);
        WeylWord w{parse_indices(word_text)};
        DemazureContainment dc = demazure_word_containment(
            g, l2, l4, w,
            word2_text.empty() ? std::vector<int>{} : parse_indices(word2_text));
        rep["antecedent"] = dc.antecedent;
        rep["conclusion"] = dc.conclusion;
        verified = dc.pass;
      } else if (check_name == "deep") {
        RootDatum g = src.datum();
        Weight lam = parse_weight(lambda_text), mu = parse_weight(mu_text);
        bool deep = is_deep(g, lam, mu);
        rep["deep"] = deep;
        if (dot) {
          std::cout << polytope_dot(g, ShiftedWeylPolytope{lam, mu});
          std::cerr << (deep ? "deep" : "not deep") << "\n";
          return 0;
        }
      } else if (check_name == "deep-decompose") {
        RootDatum g = src.datum();
        Weight lam = parse_weight(lambda_text), mu = parse_weight(mu_text);
        Decomposition fast = deep_decompose(g, lam, mu);
        rep = decomposition_to_json(g, fast);
        rep["check"] = check_name;
        verified = fast.mult == decompose(g, lam, mu).mult;
        rep["matches_brute_force"] = verified;
      } else if (check_name == "kostant") {
        RootDatum g = src.datum();
        KostantReport kr = kostant_scan(g);
        Json comps = Json::array();
        for (const auto& c : kr.components) {
          Json item;
          item["nu"] = weight_to_json(c.nu);
          item["mult"] = c.mult;
          item["dim"] = c.dim;
          item["prv"] = c.prv;
          item["simple_sum_certified"] = c.simple_sum_certified;
          comps.push_back(item);
        }
        rep["components"] = comps;
        rep["support_match"] = kr.support_match;
        rep["dim_check"] = kr.dim_ok;
        verified = kr.support_match && kr.dim_ok;
      } else if (check_name == "stembridge") {
        RootDatum g = src.datum();
        Weight lam = parse_weight(lambda_text);
        GenOptions opts;
        opts.node_budget = budget_nodes;
        opts.jobs = jobs;
        StembridgeReport sr = check_stembridge(generate_crystal(g, lam, opts));
        rep["edges_checked"] = sr.edges_checked;
        rep["violations"] = sr.violations;
        verified = sr.ok();
      } else if (check_name == "virtual-fold") {
        Folding f = [&] {
          if (folding_file.empty()) return Folding::standard(child_type);
          std::ifstream in(folding_file);
          if (!in) fail(Errc::ParseError, "cannot open " + folding_file);
          return folding_from_json(Json::parse(in));
        }();
        rep["folding"] = folding_to_json(f);
        rep["self_validated"] = true;
      } else if (check_name == "virtual-epsilon") {
        Folding f = Folding::standard(child_type);
        Weight lam = parse_weight(lambda_text);
        Monomial m = parse_monomial(monomial_text);
        long long closed = folded_epsilon_closed_form(f, lam, m, position - 1);
        rep["closed_form"] = closed;
        VirtualElement x = virtual_highest(f, lam);
        bool present = true;
        for (auto it = m.factors.rbegin(); it != m.factors.rend() && present; ++it)
          for (long long k = 0; k < it->second && present; ++k) {
            auto y = v_f(f, x, it->first);
            present = y.has_value();
            if (present) x = std::move(*y);
          }
        if (present) {
          long long direct = v_epsilon(f, x, m.factors[position - 1].first);
          rep["virtual_direct"] = direct;
          verified = closed == direct;
        }
      } else if (check_name == "virtual-component") {
        Folding f = Folding::standard(child_type);
        Weight lam = parse_weight(lambda_text), mu = parse_weight(mu_text);
        Monomial m = parse_monomial(monomial_text);
        auto nu = folded_component_from_monomial(f, lam, mu, m);
        rep["certificate"] = monomial_to_json(m);
        rep["component_found"] = nu.has_value();
        if (nu) {
          rep["nu"] = weight_to_json(*nu);
          long long mult = virtual_decompose(f, lam, mu).multiplicity(*nu);
          rep["multiplicity"] = mult;
          verified = mult >= 1;
        }
      } else {
        fail(Errc::ParseError, "unknown statement '" + check_name + "'");
      }

      rep["verified"] = verified;
      emit(rep, check_name + (verified ? " ok" : " FAILED"), json_out);
      return verified ? 0 : 1;
    }

    if (*cmd_scan) {
      std::vector<ScanReport> reps;
      bool seeded = false;
      std::string type = src.type.empty() ? "A2" : src.type;
      if (scan_name == "crystal-sizes") {
        reps.push_back(scan_crystal_sizes(jobs));
      } else if (scan_name == "characters") {
        reps.push_back(scan_character_battery(coord_max));
      } else if (scan_name == "rho-square") {
        reps.push_back(scan_rho_square_table());
      } else if (scan_name == "lemma-box") {
        reps.push_back(scan_monomial_nonzero_box(type, coord_max));
      } else if (scan_name == "epsilon-box") {
        reps.push_back(scan_epsilon_box(type, coord_max));
      } else if (scan_name == "epsilon-random") {
        seeded = true;
        reps.push_back(scan_epsilon_random(src.type.empty() ? "D4" : src.type, count, seed));
      } else if (scan_name == "component-soundness") {
        reps.push_back(scan_component_soundness(type, coord_max));
      } else if (scan_name == "simple-sum") {
        reps.push_back(scan_simple_sum_coverage(src.type.empty() ? "A3" : src.type));
      } else if (scan_name == "kostant") {
        reps.push_back(scan_kostant(type));
      } else if (scan_name == "wahl-box") {
        reps.push_back(scan_wahl_box(type, std::max(coord_max, 3LL)));
      } else if (scan_name == "transfer-box") {
        reps.push_back(scan_transfer_box(type, coord_max));
      } else if (scan_name == "support-transfer-box") {
        reps.push_back(scan_support_transfer_box(type, coord_max));
      } else if (scan_name == "deep-random") {
        seeded = true;
        reps.push_back(scan_deep_random(type, count, seed));
      } else if (scan_name == "stembridge") {
        reps.push_back(scan_stembridge_battery());
      } else if (scan_name == "foldings") {
        reps.push_back(scan_foldings(budget_nodes < 0 ? 200000 : budget_nodes));
      } else if (scan_name == "all") {
        seeded = true;
        reps.push_back(scan_crystal_sizes(jobs));
        reps.push_back(scan_character_battery(2));
        reps.push_back(scan_rho_square_table());
        for (const char* t : {"A2", "A3"}) {
          reps.push_back(scan_monomial_nonzero_box(t));
          reps.push_back(scan_epsilon_box(t));
          reps.push_back(scan_component_soundness(t));
          reps.push_back(scan_wahl_box(t));
          reps.push_back(scan_transfer_box(t));
          reps.push_back(scan_support_transfer_box(t));
          reps.push_back(scan_deep_random(t, count, seed));
        }
        reps.push_back(scan_epsilon_random("D4", count, seed));
        for (const char* t : {"A3", "D4"}) reps.push_back(scan_simple_sum_coverage(t));
        for (const char* t : {"A1", "A2", "A3", "B2"}) reps.push_back(scan_kostant(t));
        reps.push_back(scan_stembridge_battery());
        reps.push_back(scan_foldings());
      } else {
        fail(Errc::ParseError, "unknown scan '" + scan_name + "'");
      }
      return finish_scans(reps, seed, seeded, json_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::BudgetExceeded) return 3;
    if (e.code() == Errc::InvariantBroken || e.code() == Errc::SelfValidationFailed) return 1;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
