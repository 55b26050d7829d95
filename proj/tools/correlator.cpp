// Command-line tool for enumerating combinatorial data, verifying algebraic
// relations symbolically, and certifying correlator identities numerically.
// All subcommands emit JSON reports with an embedded reproducibility manifest.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "corr/genfun.hpp"
#include "corr/relation_check.hpp"
#include "corr/serialize.hpp"
#include "corr/trees.hpp"

using namespace corr;

namespace {

using Clock = std::chrono::steady_clock;

struct Emitter {
  Clock::time_point start = Clock::now();
  bool pretty = false;
  std::string out_path;

  void emit(Json& report) {
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (report.contains("manifest")) report["manifest"]["wall_clock_ms"] = ms;
    std::string text = pretty ? report.dump(2) : report.dump();
    std::cout << text << "\n";
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << text << "\n";
    }
  }
};

std::map<std::string, Cplx> parse_assign(const std::string& s) {
  std::map<std::string, Cplx> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    // commas inside a complex literal never follow '=', so split greedily on
    // "name=" boundaries: scan for the next ",name=" occurrence
    size_t next = comma;
    while (next != std::string::npos) {
      size_t eq = s.find('=', next);
      size_t comma2 = s.find(',', next + 1);
      if (eq != std::string::npos && (comma2 == std::string::npos || eq < comma2)) break;
      next = comma2;
    }
    std::string item = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad assignment: '" + item + "'");
    out[item.substr(0, eq)] = parse_complex(item.substr(eq + 1));
  }
  return out;
}

std::vector<Cplx> parse_word(const std::string& word, const std::map<std::string, Cplx>& assign) {
  std::string s = word;
  if (!s.empty() && s.front() == '(') s = s.substr(1, s.size() - 2);
  std::vector<Cplx> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto it = assign.find(tok);
    if (it != assign.end())
      out.push_back(it->second);
    else
      out.push_back(parse_complex(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Cplx need(const std::map<std::string, Cplx>& a, const std::string& k) {
  auto it = a.find(k);
  if (it == a.end()) throw std::invalid_argument("missing assignment for '" + k + "'");
  return it->second;
}

Json coideal_report_json(const std::vector<CoidealWeightReport>& reports) {
  Json arr = Json::array();
  for (auto& r : reports) {
    Json j;
    j["weight"] = r.weight;
    j["dim_space"] = r.dim_space;
    j["dim_relations"] = r.dim_relations;
    j["contained"] = r.contained;
    if (!r.contained) j["witness"] = r.witness;
    j["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(j));
  }
  return arr;
}

Cplx rand_pt(std::mt19937& rng, double lo = 0.2, double hi = 2.0) {
  std::uniform_real_distribution<double> rad(lo, hi), ang(0, 2 * M_PI);
  return std::polar(rad(rng), ang(rng));
}

int run_suite(Emitter& em, long long seed) {
  Json rep;
  rep["manifest"] = run_manifest("suite", {}, seed, em.out_path.empty()
                                                     ? std::vector<std::string>{}
                                                     : std::vector<std::string>{em.out_path});
  Json checks = Json::array();
  bool all_pass = true;
  auto add = [&](const std::string& name, bool pass, Json detail) {
    detail["name"] = name;
    detail["pass"] = pass;
    checks.push_back(std::move(detail));
    all_pass = all_pass && pass;
  };
  std::mt19937 rng{static_cast<unsigned>(seed)};

  {  // quasishuffle counts vs closed formula
    bool ok = true;
    for (int r = 1; r <= 3; ++r)
      for (int s = r; s <= 3; ++s)
        ok = ok && (mpz_class(enumerate_quasishuffles(r, s).size()) == quasishuffle_count(r, s));
    ok = ok && quasishuffle_count(1, 1) == 3 && quasishuffle_count(2, 1) == 5 &&
         quasishuffle_count(2, 2) == 13;
    add("quasishuffle_counts", ok, {});
  }
  {  // plane tree counts vs Catalan
    bool ok = true;
    for (int n = 2; n <= 6; ++n)
      ok = ok && (mpz_class(enumerate_plane_trees(n).size()) == catalan(unsigned(n - 1)));
    add("plane_tree_counts", ok, {});
  }
  {  // co-Jacobi on random words over mu_3
    GroupSpec G = GroupSpec::mu(3);
    auto elems = G.all_elements();
    std::uniform_int_distribution<int> wt(1, 4), letter(0, int(elems.size()));
    bool ok = true;
    for (int t = 0; t < 50 && ok; ++t) {
      std::vector<GroupElement> letters;
      int w = wt(rng);
      for (int i = 0; i <= w; ++i) {
        int pick = letter(rng);
        letters.push_back(pick == int(elems.size()) ? G.zero() : elems[size_t(pick)]);
      }
      ok = cojacobi_defect(CyclicWord(std::move(letters))).is_zero();
    }
    add("cojacobi_random_words", ok, {});
  }
  {  // weight-2 base case has exactly vanishing cobracket mod weight-1 scaling
    GroupSpec G = GroupSpec::free_abelian(3);
    RelationElement rel = dilog_base_case(G, G.parse("a"), G.parse("b"));
    WedgeComb d = coproduct(rel.element);
    add("dilog_base_case_cobracket", weight1_reduce_wedge(G, d).empty(), {});
  }
  {  // coideal certificate, small sizes
    auto r1 = verify_coideal(GroupSpec::mu(1), 4);
    auto r2 = verify_coideal(GroupSpec::mu(2), 3);
    bool ok = true;
    for (auto& r : r1) ok = ok && r.contained;
    for (auto& r : r2) ok = ok && r.contained;
    Json detail;
    detail["mu1_weights"] = coideal_report_json(r1);
    detail["mu2_weights"] = coideal_report_json(r2);
    add("coideal_certificate", ok, std::move(detail));
  }
  {  // five-term relation
    double worst = 0;
    for (int t = 0; t < 50; ++t)
      worst = std::max(worst, std::abs(five_term_residual(rand_pt(rng), rand_pt(rng))));
    add("five_term", worst <= 1e-10, Json{{"max_residual", worst}});
  }
  {  // weight-3 closed-form relations
    double w27 = 0, w29 = 0, w28 = 0;
    for (int t = 0; t < 20; ++t) {
      Cplx x = rand_pt(rng), y = rand_pt(rng);
      if (std::abs(x - y) < 0.05 || std::abs(x - Cplx(1)) < 0.05 || std::abs(y - Cplx(1)) < 0.05)
        continue;
      w27 = std::max(w27, std::abs(corr27_residual(x)));
      w29 = std::max(w29, std::abs(corr29_residual(x, y)));
      w28 = std::max(w28, std::abs(gr28_weight3_residual(x, y)));
    }
    add("corr27", w27 <= 1e-9, Json{{"max_residual", w27}});
    add("corr29", w29 <= 1e-9, Json{{"max_residual", w29}});
    add("gr28_weight3", w28 <= 1e-9, Json{{"max_residual", w28}});
  }
  {  // weight-1 distribution relation on periods
    double worst = 0;
    for (int t = 0; t < 50; ++t) {
      Cplx x = rand_pt(rng), y = rand_pt(rng);
      if (std::abs(x - y) < 0.02) continue;
      worst = std::max(worst, std::abs(distribution_log_residual(x, y)));
    }
    add("distribution_log", worst <= 1e-12, Json{{"max_residual", worst}});
  }
  {  // multiple polylog quasishuffle products
    double worst = 0;
    std::uniform_int_distribution<int> wd(1, 3);
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
      for (int t = 0; t < 10; ++t) {
        std::vector<int> nA, nB;
        std::vector<Cplx> zA, zB;
        for (int i = 0; i < r; ++i) nA.push_back(wd(rng)), zA.push_back(rand_pt(rng, 0.05, 0.4));
        for (int i = 0; i < s; ++i) nB.push_back(wd(rng)), zB.push_back(rand_pt(rng, 0.05, 0.4));
        worst = std::max(worst, std::abs(multi_li(nA, zA) * multi_li(nB, zB) -
                                         multi_li_quasishuffle_rhs(nA, zA, nB, zB)));
      }
    }
    add("polylog_quasishuffle", worst <= 1e-10, Json{{"max_residual", worst}});
  }
  {  // generating function identities, small instance over mu_2
    GroupSpec G = GroupSpec::mu(2);
    GroupElement w = G.parse("w");
    bool mi = check_multiset_identity(G, {w, w}, {{"x"}, {"s"}}, 0, "t", "u", 2);
    bool du = check_duality(G, {w, w}, {"t0", "t1"}, 2);
    add("genfun_multiset_identity", mi, {});
    add("genfun_duality", du, {});
  }
  {  // Monte Carlo spot check against the weight-2 closed form
    std::vector<Cplx> zs = {Cplx(0, 0), Cplx(1, 0), Cplx(0.3, 0.7)};
    IntegrationConfig cfg;
    cfg.samples = 200000;
    cfg.radius_factor = 2;
    cfg.seed = std::uint64_t(seed) + 17;
    MCResult r = feynman_correlator(zs, cfg);
    double target = correlator_closed(zs);
    Json detail;
    detail["estimate"] = r.value;
    detail["sigma"] = r.sigma;
    detail["target"] = target;
    add("feynman_weight2_spot", std::abs(r.value - target) < 4 * r.sigma, std::move(detail));
  }

  rep["checks"] = std::move(checks);
  rep["pass"] = all_pass;
  em.emit(rep);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic-word relation and correlator toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Emitter em;
  app.add_flag("--pretty", em.pretty, "indent JSON output");
  app.add_option("--out", em.out_path, "also write the JSON report to this file");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list quasishuffles or plane trees");
  enumerate->require_subcommand(1);
  int qr = 1, qs = 1;
  auto* equasi = enumerate->add_subcommand("quasishuffles");
  equasi->add_option("r", qr)->required();
  equasi->add_option("s", qs)->required();
  int leaves = 3;
  auto* etrees = enumerate->add_subcommand("trees");
  etrees->add_option("--leaves", leaves, "number of boundary points")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a correlator numerically");
  std::string word, assign_str, method = "auto";
  long long samples = 1000000, seed = 0;
  int batches = 32;
  double radius_factor = 4.0;
  eval->add_option("--word", word)->required();
  eval->add_option("--assign", assign_str);
  eval->add_option("--method", method)->check(CLI::IsMember({"closed", "feynman", "auto"}));
  eval->add_option("--samples", samples);
  eval->add_option("--seed", seed);
  eval->add_option("--batches", batches);
  eval->add_option("--radius-factor", radius_factor);

  // check-relation
  auto* check = app.add_subcommand("check-relation", "verify a relation numerically");
  std::string relation;
  int cr = 1, cs = 1;
  std::string ns_str;
  check->add_option("--relation", relation)
      ->required()
      ->check(CLI::IsMember({"five-term", "corr27", "corr29", "gr28", "distribution-log",
                             "additive-shuffle", "second-shuffle", "first-shuffle"}));
  check->add_option("--assign", assign_str);
  check->add_option("--r", cr);
  check->add_option("--s", cs);
  check->add_option("--n", ns_str, "comma list n_1,...,n_k,n_0");
  check->add_option("--method", method)->check(CLI::IsMember({"closed", "feynman", "auto"}));
  check->add_option("--samples", samples);
  check->add_option("--seed", seed);

  // verify-coideal
  auto* vc = app.add_subcommand("verify-coideal", "exact coideal certificate");
  std::string group = "mu", kinds = "all";
  long Nval = 1;
  int max_weight = 3;
  bool restricted = false;
  vc->add_option("--group", group);
  vc->add_option("--N", Nval);
  vc->add_option("--max-weight", max_weight);
  vc->add_option("--kinds", kinds, "all | first-shuffle-scaling-distribution");
  vc->add_flag("--restricted", restricted);

  // expand-genfun
  auto* eg = app.add_subcommand("expand-genfun", "expand a generating function");
  std::string ws_str;
  long egN = 2;
  int degree = 2;
  eg->add_option("--N", egN, "mu_N group order");
  eg->add_option("--ws", ws_str, "comma list of segment elements, product 1")->required();
  eg->add_option("--degree", degree);

  // suite
  auto* suite = app.add_subcommand("suite", "run the consolidated check matrix");
  suite->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (equasi->parsed()) {
      Json rep;
      rep["manifest"] = run_manifest("enumerate quasishuffles", args, 0);
      auto qs_list = enumerate_quasishuffles(qr, qs);
      rep["r"] = qr;
      rep["s"] = qs;
      rep["count"] = qs_list.size();
      rep["count_formula"] = quasishuffle_count(qr, qs).get_str();
      Json items = Json::array();
      for (auto& q : qs_list) items.push_back(Json{{"slots", q.M}, {"phi", q.phi}});
      rep["items"] = std::move(items);
      em.emit(rep);
      return 0;
    }
    if (etrees->parsed()) {
      if (leaves < 2) throw std::invalid_argument("need at least 2 leaves");
      Json rep;
      rep["manifest"] = run_manifest("enumerate trees", args, 0);
      rep["leaves"] = leaves;
      if (leaves == 2) {
        rep["count"] = 1;
        rep["items"] = Json::array({Json{{"edges", Json::array({Json::array({0, 1})})}}});
      } else {
        auto trees = enumerate_plane_trees(leaves - 1);
        rep["count"] = trees.size();
        Json items = Json::array();
        for (auto& t : trees) {
          Json edges = Json::array();
          for (auto& [a, b] : t.edges) edges.push_back(Json::array({a, b}));
          items.push_back(Json{{"edges", std::move(edges)}});
        }
        rep["items"] = std::move(items);
      }
      em.emit(rep);
      return 0;
    }
    if (eval->parsed()) {
      auto assign = parse_assign(assign_str);
      std::vector<Cplx> zs = parse_word(word, assign);
      Json rep;
      rep["manifest"] = run_manifest("eval", args, seed);
      rep["word"] = word;
      Json pts = Json::array();
      for (auto& z : zs) pts.push_back(json_complex(z));
      rep["points"] = std::move(pts);
      rep["weight"] = zs.size() - 1;
      IntegrationConfig cfg;
      cfg.samples = samples;
      cfg.batches = batches;
      cfg.radius_factor = radius_factor;
      cfg.seed = std::uint64_t(seed);
      if (method == "closed") {
        rep["method"] = "closed";
        rep["value"] = correlator_closed(zs);  // throws UnsupportedClosedForm -> exit 3
      } else if (method == "feynman") {
        MCResult r = feynman_correlator(zs, cfg);
        rep["method"] = "feynman";
        rep["value"] = r.value;
        rep["sigma"] = r.sigma;
        rep["samples"] = samples;
      } else {
        try {
          rep["method"] = "closed";
          rep["value"] = correlator_closed(zs);
        } catch (const UnsupportedClosedForm&) {
          MCResult r = feynman_correlator(zs, cfg);
          rep["method"] = "feynman";
          rep["value"] = r.value;
          rep["sigma"] = r.sigma;
          rep["samples"] = samples;
        }
      }
      em.emit(rep);
      return 0;
    }
    if (check->parsed()) {
      auto assign = parse_assign(assign_str);
      Json rep;
      rep["manifest"] = run_manifest("check-relation", args, seed);
      rep["relation"] = relation;
      double residual = 0, sigma = 0, tol = 1e-9;
      if (relation == "five-term") {
        residual = five_term_residual(need(assign, "w1"), need(assign, "w2"));
        tol = 1e-10;
      } else if (relation == "corr27") {
        residual = corr27_residual(need(assign, "x"));
      } else if (relation == "corr29") {
        residual = corr29_residual(need(assign, "x"), need(assign, "y"));
      } else if (relation == "gr28") {
        residual = gr28_weight3_residual(need(assign, "x"), need(assign, "y"));
      } else if (relation == "distribution-log") {
        residual = distribution_log_residual(need(assign, "x"), need(assign, "y"));
        tol = 1e-12;
      } else if (relation == "additive-shuffle") {
        Cplx e1 = need(assign, "e1"), e2 = need(assign, "e2");
        residual = correlator_closed({e1, e1 + e2, Cplx(0)}) +
                   correlator_closed({e2, e1 + e2, Cplx(0)});
        tol = 1e-10;
      } else if (relation == "second-shuffle" || relation == "first-shuffle") {
        int k = cr + cs;
        std::vector<std::string> syms;
        std::vector<Cplx> vals;
        Cplx prod = 1;
        for (int i = 1; i <= k; ++i) {
          std::string nm = "w" + std::to_string(i);
          syms.push_back(nm);
          vals.push_back(need(assign, nm));
          prod *= vals.back();
        }
        GroupSpec G = GroupSpec::free_abelian(syms);
        std::vector<GroupElement> gs;
        for (auto& nm : syms) gs.push_back(G.parse(nm));
        LinComb comb;
        if (relation == "second-shuffle") {
          std::vector<long> ns;
          {
            std::stringstream ss(ns_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) ns.push_back(std::stol(tok));
          }
          if (ns.empty()) ns.assign(size_t(k) + 1, 0);
          if (int(ns.size()) != k + 1)
            throw std::invalid_argument("--n needs k+1 entries (n_1..n_k, n_0)");
          std::vector<GroupElement> ws = gs;
          GroupElement g0 = G.identity();
          for (auto& g : gs) g0 = G.mul(g0, g);
          ws.push_back(G.inverse(g0));
          comb = second_shuffle(G, cr, cs, ws, ns).element;
        } else {
          // use the identity letter as the marked base point x0
          comb = first_shuffle(G, G.identity(), gs, cr).element;
          assign["1"] = need(assign, "x0");
        }
        std::vector<NumericTerm> terms;
        Json jterms = Json::array();
        for (auto& [w, c] : comb.terms) {
          std::vector<Cplx> pts;
          for (auto& l : w.letters) {
            if (l.zero) {
              pts.push_back(0);
            } else if (G.is_identity(l) && assign.count("1")) {
              pts.push_back(assign.at("1"));
            } else {
              Cplx p = 1;
              for (size_t i = 0; i < syms.size(); ++i)
                p *= std::pow(vals[i], double(l.e[i]));
              pts.push_back(p);
            }
          }
          terms.push_back({c.get_d(), pts});
          jterms.push_back(Json{{"word", to_string(G, w)}, {"coef", rat_to_string(c)}});
        }
        rep["terms"] = std::move(jterms);
        IntegrationConfig cfg;
        cfg.samples = samples;
        cfg.seed = std::uint64_t(seed);
        cfg.radius_factor = 2;
        if (method == "closed") {
          // throws UnsupportedClosedForm (exit 3) if any term lacks one
          for (auto& t : terms) residual += t.coef * correlator_closed(t.zs);
        } else {
          CombinationResult r = evaluate_combination(terms, cfg, method == "feynman");
          residual = r.residual;
          sigma = r.sigma;
        }
        tol = sigma > 0 ? 3 * sigma : 1e-9;
      }
      bool pass = std::abs(residual) <= tol;
      rep["residual"] = residual;
      if (sigma > 0) rep["sigma"] = sigma;
      rep["tolerance"] = tol;
      rep["pass"] = pass;
      em.emit(rep);
      return pass ? 0 : 1;
    }
    if (vc->parsed()) {
      if (group != "mu") {
        std::cerr << "error: only --group mu is supported for the coideal certificate "
                     "(free abelian groups have infinitely many words per weight)\n";
        return 2;
      }
      CoidealOptions opt;
      opt.restricted = restricted;
      if (kinds == "first-shuffle-scaling-distribution")
        opt.kinds = {RelationKind::FirstShuffle, RelationKind::Scaling,
                     RelationKind::Distribution};
      else if (kinds != "all")
        throw std::invalid_argument("unknown --kinds value");
      auto reports = verify_coideal(GroupSpec::mu(Nval), max_weight, opt);
      bool ok = true;
      for (auto& r : reports) ok = ok && r.contained;
      Json rep;
      rep["manifest"] = run_manifest("verify-coideal", args, 0);
      rep["group"] = "mu_" + std::to_string(Nval);
      rep["weights"] = coideal_report_json(reports);
      rep["pass"] = ok;
      em.emit(rep);
      return ok ? 0 : 1;
    }
    if (eg->parsed()) {
      GroupSpec G = GroupSpec::mu(egN);
      std::vector<GroupElement> ws;
      {
        std::stringstream ss(ws_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) ws.push_back(G.parse(tok));
      }
      std::vector<std::vector<std::string>> slots;
      for (size_t i = 0; i < ws.size(); ++i) slots.push_back({"t" + std::to_string(i)});
      TruncatedGenFun f = lambda_star(G, ws, slots, degree);
      Json rep;
      rep["manifest"] = run_manifest("expand-genfun", args, 0);
      rep["group"] = "mu_" + std::to_string(egN);
      rep["degree"] = degree;
      Json coeffs = Json::array();
      for (auto& [mon, comb] : f.coeffs) {
        Json jm = Json::object();
        for (auto& [var, e] : mon) jm[var] = e;
        coeffs.push_back(Json{{"monomial", std::move(jm)}, {"words", json_lincomb(G, comb)}});
      }
      rep["coefficients"] = std::move(coeffs);
      em.emit(rep);
      return 0;
    }
    if (suite->parsed()) return run_suite(em, seed);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const UnsupportedClosedForm& e) {
    std::cerr << "unsupported term: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
