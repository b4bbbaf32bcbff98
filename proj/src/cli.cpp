#include "polarity/cli.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "polarity/analysis.hpp"
#include "polarity/report.hpp"

namespace polarity {

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  return v ? std::atoi(v) : fallback;
}

uint64_t env_u64(const char* name, uint64_t fallback) {
  const char* v = std::getenv(name);
  return v ? std::strtoull(v, nullptr, 10) : fallback;
}

// temp file + rename, so partially written artifacts are never observed
void write_atomic(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("IoError", "cannot open " + tmp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("IoError", "cannot rename " + tmp + " to " + path);
}

void render_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_text(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array()) {
    os << prefix << ":";
    for (const auto& value : j) {
      if (value.is_structured()) {
        os << "\n";
        render_text(value, prefix + "[]", os);
      } else {
        os << " " << value.dump();
      }
    }
    os << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const Json& j, const std::string& out_path, const std::string& format) {
  std::string body;
  if (format == "text") {
    std::ostringstream os;
    render_text(j, "", os);
    body = os.str();
  } else {
    body = j.dump(2) + "\n";
  }
  if (out_path.empty())
    std::cout << body;
  else
    write_atomic(out_path, body);
}

struct FamilyBuild {
  Graph graph;
  Json info = Json::object();
};

FamilyBuild build_family(const std::string& family, const QContext& qc, int max_q,
                         int max_m = kDefaultMaxDegree) {
  FamilyBuild fb;
  fb.info["family"] = family;
  fb.info["q"] = qc.base.q;
  if (family == "cayley") {
    fb.graph = cayley_sum_graph(qc.sidon).graph;
  } else if (family == "er-dot" || family == "er-alt") {
    fb.graph = er_graph(qc.base, family == "er-dot" ? ErForm::dot : ErForm::alt).graph;
  } else if (family == "h") {
    CayleyGraph cg = cayley_sum_graph(qc.sidon);
    attach_special_vertex(cg.meta, lindstrom_shift(qc.ext, qc.sidon));
    fb.graph = h_graph(cg).graph;
  } else if (family == "g1" || family == "g2" || family == "g3") {
    const CayleyGraph cg = cayley_sum_graph(qc.sidon);
    const G3Assembly a = build_g3(cg, qc.ext);
    fb.graph = family == "g1" ? a.g1 : (family == "g2" ? a.g2 : a.g3);
  } else if (family == "subfield") {
    if (qc.base.m % 2 != 0)
      throw Error("NotEvenPowerPrime", "subfield construction needs q = p^{2t}");
    fb.graph = subfield_construction(qc.base.p, qc.base.m / 2, max_q, max_m).graph;
  } else {
    throw Error("UnknownFamily", "unknown family: " + family);
  }
  fb.info["vertices"] = fb.graph.size();
  fb.info["edges"] = fb.graph.edge_count();
  return fb;
}

int cmd_field(int p, int m, std::optional<int> alpha, std::optional<int> beta,
              const std::string& out, int max_q, int max_m) {
  const FieldCtx base = build_base_field(p, m, max_m);
  const ExtFieldCtx ext = alpha ? make_quadratic_extension(base, *alpha, *beta)
                                : find_primitive_quadratic(base, max_q);
  Json j = {{"p", base.p},
            {"m", base.m},
            {"q", base.q},
            {"modulus", base.modulus_string()},
            {"alpha", ext.alpha},
            {"beta", ext.beta},
            {"theta_order", ext.n},
            {"theta_norm", ext.theta_norm},
            {"mu", ext.mu}};
  emit(j, out, "json");
  return 0;
}

int cmd_sidon(const QContext& qc, const std::string& format, const std::string& out) {
  const SidonSet& s = qc.sidon;
  Json labels = Json::array();
  for (const auto& lab : s.labels)
    labels.push_back({{"i", lab.i}, {"m", lab.m}, {"b", lab.b}, {"a", lab.a}});
  const LindstromData lind = lindstrom_shift(qc.ext, s);
  Json j = {{"q", s.q},
            {"n", s.n},
            {"alpha", qc.ext.alpha},
            {"beta", qc.ext.beta},
            {"A", Json(s.elements)},
            {"labels", labels},
            {"H", Json(s.subgroup)},
            {"lindstrom",
             {{"c", lind.c},
              {"B", Json(lind.shifted_set)},
              {"shift_matches", lind.shift_matches},
              {"scale_matches", lind.scale_matches}}}};
  if (lind.x_special) {
    j["lindstrom"]["x_special"] = *lind.x_special;
    j["lindstrom"]["special_matches"] = lind.special_matches;
  }
  emit(j, out, format);
  return 0;
}

int cmd_build(const std::string& family, const QContext& qc, const std::string& format,
              const std::string& out, int max_q, int max_m, bool quiet) {
  FamilyBuild fb = build_family(family, qc, max_q, max_m);
  const std::string bytes = export_graph(fb.graph, parse_format(format));
  if (out.empty()) {
    std::cout << bytes;
    if (!bytes.empty() && bytes.back() != '\n') std::cout << "\n";
    return 0;
  }
  write_atomic(out, bytes);
  if (!quiet) {
    fb.info["format"] = format;
    fb.info["file"] = out;
    fb.info["digest_fnv1a64"] = fnv1a64_hex(bytes);
    emit(fb.info, "", "json");
  }
  return 0;
}

int certificate_exit(const Certificate& c) { return c.pass ? 0 : 2; }

int cmd_check(const std::string& claim, const std::string& family, const QContext& qc,
              const std::string& out, int max_q, int max_m, const MisBudget& budget) {
  if (claim == "c4free") {
    const FamilyBuild fb = build_family(family, qc, max_q, max_m);
    Certificate c = certify_c4_free(fb.graph, "c4free", {{"q", qc.base.q}, {"family", family}});
    emit(c.to_json(), out, "json");
    return certificate_exit(c);
  }
  if (claim == "saturated") {
    const FamilyBuild fb = build_family(family, qc, max_q, max_m);
    Certificate c =
        certify_c4_saturated(fb.graph, "saturated", {{"q", qc.base.q}, {"family", family}});
    emit(c.to_json(), out, "json");
    return certificate_exit(c);
  }
  if (claim == "distance") {
    const CayleyGraph cg = cayley_sum_graph(qc.sidon);
    auto certs = distance_certificates(cg.graph, qc.sidon);
    Certificate merged;
    merged.claim = "distance";
    merged.params = {{"q", qc.base.q}};
    merged.pass = true;
    for (const auto& c : certs) {
      merged.stats[c.claim] = c.pass;
      if (!c.pass && merged.witness.is_null()) merged.witness = c.witness;
      merged.pass = merged.pass && c.pass;
    }
    merged.stats["diameter"] = certs[0].stats["diameter"];
    emit(merged.to_json(), out, "json");
    return certificate_exit(merged);
  }
  if (claim == "triples") {
    Certificate c = certify_triples(qc.sidon);
    emit(c.to_json(), out, "json");
    return certificate_exit(c);
  }
  if (claim == "lindstrom") {
    const LindstromData lind = lindstrom_shift(qc.ext, qc.sidon);
    Certificate c;
    c.claim = "lindstrom";
    c.params = {{"q", qc.base.q}, {"p", qc.base.p}};
    c.pass = lind.shift_matches && lind.scale_matches &&
             (!lind.x_special || lind.special_matches);
    c.stats = {{"c", lind.c},
               {"B", Json(lind.shifted_set)},
               {"shift_matches", lind.shift_matches},
               {"scale_matches", lind.scale_matches}};
    if (lind.x_special) {
      c.stats["x_special"] = *lind.x_special;
      c.stats["special_matches"] = lind.special_matches;
    }
    emit(c.to_json(), out, "json");
    return certificate_exit(c);
  }
  if (claim == "kst") {
    const ErGraph er = er_graph(qc.base, ErForm::dot);
    const KstBound bound{static_cast<int64_t>(er.graph.size())};
    Certificate c;
    c.claim = "kst";
    c.params = {{"q", qc.base.q}};
    c.pass = bound.admits(er.graph.edge_count());
    c.stats = {{"n", bound.n},
               {"edges", er.graph.edge_count()},
               {"bound_floor", bound.floor_value()}};
    emit(c.to_json(), out, "json");
    return certificate_exit(c);
  }
  if (claim == "petersen") {
    Certificate c;
    c.claim = "petersen";
    c.params = {{"q", qc.base.q}};
    if (qc.base.q >= 4) {
      const CayleyGraph cg = cayley_sum_graph(qc.sidon);
      const G3Assembly a = build_g3(cg, qc.ext);
      const auto w = petersen_embed(a);
      c.pass = w.has_value() && w->verified;
      if (w) {
        Json verts = Json::array();
        for (int v : w->vertices) verts.push_back(a.vertex_name(v));
        c.stats = {{"method", "constructive"}, {"i", w->i}, {"j", w->j}, {"k", w->k},
                   {"s", w->s}, {"t", w->t}, {"vertices", verts}};
      }
    } else if (qc.base.q == 3) {
      const ErGraph er = er_graph(qc.base, ErForm::dot);
      const auto found = petersen_brute_search(er.graph, budget.node_cap);
      c.pass = found.has_value();
      c.stats = {{"method", "brute_force"}, {"found", found.has_value()}};
      if (found) {
        Json map = Json::array();
        for (int v : *found) map.push_back(er.points[static_cast<size_t>(v)].str());
        c.stats["embedding"] = map;
      }
    } else {
      throw Error("QTooSmall", "the Petersen graph needs q >= 3");
    }
    emit(c.to_json(), out, "json");
    return certificate_exit(c);
  }
  throw Error("UnknownClaim", "unknown claim: " + claim);
}

int cmd_iso(const QContext& qc, const std::string& out) {
  const CayleyGraph cg = cayley_sum_graph(qc.sidon);
  const G3Assembly a = build_g3(cg, qc.ext);
  const ErGraph er = er_graph(qc.base, ErForm::alt);
  const Certificate cert = verify_isomorphism(a, qc.ext, er);

  Json table = Json::array();
  for (int v = 0; v < a.total_vertices(); ++v)
    table.push_back({{"vertex", a.vertex_name(v)}, {"point", phi(a, qc.ext, v).str()}});

  Json j = {{"q", qc.base.q},
            {"alpha", qc.ext.alpha},
            {"beta", qc.ext.beta},
            {"parity_case", a.even ? "even" : "odd"},
            {"stage_edges",
             {{"cayley", a.cayley_edges},
              {"g1", a.stage_edges[0]},
              {"g2", a.stage_edges[1]},
              {"g3", a.stage_edges[2]}}},
            {"phi", table},
            {"certificate", cert.to_json()}};
  emit(j, out, "json");
  return cert.pass ? 0 : 2;
}

int cmd_mis(const std::string& family, const QContext& qc, const MisBudget& budget,
            const std::string& out, int max_q, int max_m) {
  const FamilyBuild fb = build_family(family, qc, max_q, max_m);
  const IndependenceResult r = max_independent_set(fb.graph, budget);
  const bool indep = is_independent_set(fb.graph, r.witness);
  Json j = {{"family", family},
            {"q", qc.base.q},
            {"alpha", r.alpha},
            {"method", r.exact ? "exact" : "lower-bound-only"},
            {"witness", Json(r.witness)},
            {"witness_independent", indep},
            {"nodes", r.nodes}};
  if (family == "cayley") j["sumset_independent"] = cayley_independence_check(qc.sidon, r.witness);
  emit(j, out, "json");
  if (!indep) return 2;
  return r.exact ? 0 : 3;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Sidon sets, Cayley sum graphs, orthogonal polarity graphs, and their certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags like --jobs may follow the subcommand

  const int max_q = env_int("POLARITY_MAX_Q", kDefaultMaxQ);
  const int max_m = env_int("POLARITY_MAX_M", kDefaultMaxDegree);
  MisBudget default_budget;
  default_budget.node_cap = env_u64("POLARITY_MIS_NODES", default_budget.node_cap);

  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for pair loops (0 = library default)");

  // ---- field ----
  auto* field = app.add_subcommand("field", "construct GF(q) and its quadratic extension");
  int f_p = 0, f_m = 1;
  std::optional<int> f_alpha, f_beta;
  std::string f_out;
  field->add_option("--p", f_p, "characteristic (prime)")->required();
  field->add_option("--m", f_m, "extension degree");
  field->add_option("--alpha", f_alpha, "theta^2 = alpha*theta + beta");
  field->add_option("--beta", f_beta, "theta^2 = alpha*theta + beta");
  field->add_option("--out", f_out, "write JSON here instead of stdout");

  // ---- sidon ----
  auto* sidon = app.add_subcommand("sidon", "Bose-Chowla set, labels, and shift data");
  int s_q = 0;
  std::optional<int> s_alpha, s_beta;
  std::string s_format = "json", s_out;
  sidon->add_option("--q", s_q, "prime power")->required();
  sidon->add_option("--alpha", s_alpha, "theta override");
  sidon->add_option("--beta", s_beta, "theta override");
  sidon->add_option("--format", s_format, "json|text")->check(CLI::IsMember({"json", "text"}));
  sidon->add_option("--out", s_out, "output file");

  // ---- build / export ----
  const std::vector<std::string> families = {"cayley", "er-dot", "er-alt", "h",
                                             "g1",     "g2",     "g3",     "subfield"};
  auto add_build = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    return cmd;
  };
  struct BuildArgs {
    std::string family = "cayley";
    int q = 0, p = 0, t = 0;
    std::optional<int> alpha, beta;
    std::string format = "edges", out;
  };
  BuildArgs b_args, e_args;
  for (auto [cmd_ptr, args] : {std::pair{add_build("build", "construct a graph family and write it"), &b_args},
                               std::pair{add_build("export", "alias of build (stdout by default)"), &e_args}}) {
    cmd_ptr->add_option("--family", args->family, "graph family")
        ->check(CLI::IsMember(families));
    cmd_ptr->add_option("--q", args->q, "prime power");
    cmd_ptr->add_option("--p", args->p, "prime (subfield family)");
    cmd_ptr->add_option("--t", args->t, "exponent: q = p^{2t} (subfield family)");
    cmd_ptr->add_option("--alpha", args->alpha, "theta override");
    cmd_ptr->add_option("--beta", args->beta, "theta override");
    cmd_ptr->add_option("--format", args->format, "graph6|dimacs|edges")
        ->check(CLI::IsMember({"graph6", "dimacs", "edges"}));
    cmd_ptr->add_option("--out", args->out, "output file (stdout if omitted)");
  }

  // ---- check ----
  auto* check = app.add_subcommand("check", "run one certificate");
  std::string c_claim, c_family = "cayley", c_out;
  int c_q = 0;
  std::optional<int> c_alpha, c_beta;
  check->add_option("--claim", c_claim, "c4free|saturated|distance|triples|petersen|lindstrom|kst")
      ->required()
      ->check(CLI::IsMember({"c4free", "saturated", "distance", "triples", "petersen",
                             "lindstrom", "kst"}));
  check->add_option("--q", c_q, "prime power")->required();
  check->add_option("--family", c_family, "graph family for c4free/saturated")
      ->check(CLI::IsMember(families));
  check->add_option("--alpha", c_alpha, "theta override");
  check->add_option("--beta", c_beta, "theta override");
  check->add_option("--out", c_out, "output file");

  // ---- iso ----
  auto* iso = app.add_subcommand("iso", "stage counts, the phi table, and the certificate");
  int i_q = 0;
  std::optional<int> i_alpha, i_beta;
  std::string i_out;
  iso->add_option("--q", i_q, "prime power")->required();
  iso->add_option("--alpha", i_alpha, "theta override");
  iso->add_option("--beta", i_beta, "theta override");
  iso->add_option("--out", i_out, "output file");

  // ---- mis ----
  auto* mis = app.add_subcommand("mis", "maximum independent set");
  std::string m_family = "cayley", m_out;
  int m_q = 0;
  std::optional<int> m_alpha, m_beta;
  uint64_t m_nodes = default_budget.node_cap;
  int m_exact_cap = default_budget.exact_cap_n;
  mis->add_option("--q", m_q, "prime power")->required();
  mis->add_option("--family", m_family, "graph family")->check(CLI::IsMember(families));
  mis->add_option("--nodes", m_nodes, "branch-and-bound node budget");
  mis->add_option("--exact-cap", m_exact_cap, "max vertices for exact mode");
  mis->add_option("--alpha", m_alpha, "theta override");
  mis->add_option("--beta", m_beta, "theta override");
  mis->add_option("--out", m_out, "output file");

  // ---- petersen ----
  auto* pet = app.add_subcommand("petersen", "Petersen subgraph witness");
  int p_q = 0;
  std::optional<int> p_alpha, p_beta;
  std::string p_out;
  pet->add_option("--q", p_q, "prime power >= 3")->required();
  pet->add_option("--alpha", p_alpha, "theta override");
  pet->add_option("--beta", p_beta, "theta override");
  pet->add_option("--out", p_out, "output file");

  // ---- suite ----
  auto* suite = app.add_subcommand("suite", "full certificate battery for one q");
  int su_q = 0;
  std::optional<int> su_alpha, su_beta;
  uint64_t su_seed = 0;
  std::string su_out;
  suite->add_option("--q", su_q, "prime power")->required();
  suite->add_option("--alpha", su_alpha, "theta override");
  suite->add_option("--beta", su_beta, "theta override");
  suite->add_option("--seed", su_seed, "seed for randomized heuristics");
  suite->add_option("--out", su_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    if (*field) return cmd_field(f_p, f_m, f_alpha, f_beta, f_out, max_q, max_m);
    if (*sidon)
      return cmd_sidon(make_q_context(s_q, s_alpha, s_beta, max_q, max_m), s_format, s_out);
    for (auto [cmd_ptr, args] :
         {std::pair{app.get_subcommand("build"), &b_args}, std::pair{app.get_subcommand("export"), &e_args}}) {
      if (!*cmd_ptr) continue;
      int q = args->q;
      if (q == 0 && args->family == "subfield") {
        if (args->p == 0 || args->t == 0)
          throw Error("Usage", "subfield needs --q or both --p and --t");
        q = 1;
        for (int i = 0; i < 2 * args->t; ++i) q *= args->p;
      }
      if (q == 0) throw Error("Usage", "--q is required");
      return cmd_build(args->family, make_q_context(q, args->alpha, args->beta, max_q, max_m),
                       args->format, args->out, max_q, max_m, false);
    }
    if (*check)
      return cmd_check(c_claim, c_family, make_q_context(c_q, c_alpha, c_beta, max_q, max_m),
                       c_out, max_q, max_m, default_budget);
    if (*iso) return cmd_iso(make_q_context(i_q, i_alpha, i_beta, max_q, max_m), i_out);
    if (*mis) {
      MisBudget budget;
      budget.node_cap = m_nodes;
      budget.exact_cap_n = m_exact_cap;
      return cmd_mis(m_family, make_q_context(m_q, m_alpha, m_beta, max_q, max_m), budget,
                     m_out, max_q, max_m);
    }
    if (*pet)
      return cmd_check("petersen", "cayley", make_q_context(p_q, p_alpha, p_beta, max_q, max_m),
                       p_out, max_q, max_m, default_budget);
    if (*suite) {
      SuiteOptions opt;
      opt.q = su_q;
      opt.alpha = su_alpha;
      opt.beta = su_beta;
      opt.seed = su_seed;
      opt.mis = default_budget;
      opt.max_q = max_q;
      opt.max_m = max_m;
      const RunReport report = run_suite(opt);
      emit(report.to_json(), su_out, "json");
      return report.all_pass() ? 0 : 2;
    }
  } catch (const Error& e) {
    if (e.code() == "SearchSpaceExceeded" || e.code() == "BudgetExceeded") {
      std::cerr << e.what() << "\n";
      return 3;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace polarity
