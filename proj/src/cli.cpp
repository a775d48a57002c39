#include "gradedlie/cli.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "gradedlie/error.hpp"
#include "gradedlie/prolong.hpp"
#include "gradedlie/report.hpp"

namespace gradedlie {

namespace {

struct GradationArgs {
  std::string type;
  int rank = 0;
  std::string delta1;

  void attach(CLI::App* cmd) {
    cmd->add_option("type", type, "A, B, C or D")->required();
    cmd->add_option("rank", rank, "rank l")->required();
    cmd->add_option("delta1", delta1, "marked simple roots, e.g. 1,3")->required();
  }
  Json json() const { return Json{{"type", type}, {"rank", rank}, {"delta1", delta1}}; }
  GradedLieAlgebra build() const {
    const LieType t = parse_lie_type(type);
    if (rank < min_rank(t)) throw InvalidInput("rank " + std::to_string(rank) + " is below the minimum for type " + type);
    const MarkedSet s = MarkedSet::parse(delta1);
    s.validate(rank);
    return grade(std::make_shared<const MatrixLieAlgebra>(realize(t, rank)), s);
  }
};

std::string dims_text(const std::map<int, std::size_t>& dims) {
  std::string s;
  for (const auto& [k, d] : dims) s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(d);
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

class Clock {
public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void check_max_rank(int r) {
  if (r < 1 || r > kHardMaxRank)
    throw InvalidInput("--max-rank must be between 1 and " + std::to_string(kHardMaxRank));
}

int cmd_grade(const GradationArgs& a, bool diagram, bool json, std::ostream& out) {
  Clock clock;
  const auto g = a.build();
  std::string picture;
  if (diagram) picture = render_block_diagram(g);
  if (json) {
    Json r = to_json(g);
    if (diagram) r["diagram"] = picture;
    out << make_report("grade", a.json(), r, clock.seconds()).dump(2) << "\n";
    return 0;
  }
  out << "(" << to_char(g.algebra().type()) << "," << g.algebra().rank() << ",{" << g.delta1().to_string() << "})"
      << " dim " << g.algebra().dim() << "\n";
  out << "depth " << g.depth() << "\n";
  out << "dims " << dims_text(g.dims()) << "\n";
  for (const auto& c : g.checks()) out << "  " << c.name << " " << (c.passed ? "ok" : "FAILED " + c.detail) << "\n";
  if (diagram) out << picture;
  return 0;
}

int cmd_classify(int max_rank, bool json, bool csv, bool verify, std::optional<int> cap, std::ostream& out,
                 std::ostream& err) {
  check_max_rank(max_rank);
  Clock clock;
  Json rows = Json::array();
  int failures = 0;
  if (csv) out << csv_header() << (verify ? ",prolongation" : "") << "\n";
  for (const auto& key : all_gradations(max_rank)) {
    const auto rec = classify(key.type, key.rank, key.delta1);
    Json row = to_json(rec);
    std::string status;
    if (verify) {
      const auto g = grade(realize(key.type, key.rank), key.delta1);
      const auto cmp = compare_with_tower(g, cap);
      bool ok;
      if (rec.verdict == Verdict::TypeI) {
        ok = cmp.reproduces_g;
        status = ok ? "prolongation dims match" : "prolongation dims differ: " + join(cmp.tower_dims);
      } else {
        ok = cmp.first_excess.has_value();
        status = ok ? "excess at degree " + std::to_string(*cmp.first_excess) : "no excess found";
      }
      if (!ok) {
        ++failures;
        err << "cross-validation failed for " << rec.canonical.to_string() << ": " << status << "\n";
      }
      row["prolongation"] = Json{{"status", status},
                                 {"passed", ok},
                                 {"grading_dims", cmp.grading_dims},
                                 {"tower_dims", cmp.tower_dims}};
    }
    if (json) {
      rows.push_back(row);
    } else if (csv) {
      out << csv_row(rec) << (verify ? ",\"" + status + "\"" : "") << "\n";
    } else {
      std::ostringstream line;
      line << to_char(rec.type) << rec.rank << " {" << std::left << std::setw(12) << rec.delta1.to_string() + "}"
           << " depth " << rec.depth << "  " << std::setw(9) << to_string(rec.verdict) << (rec.contact ? " contact" : "");
      if (rec.exceptional_aut) line << " aut->" << rec.exceptional_aut->to_string();
      if (rec.vmrt) line << " vmrt " << rec.vmrt->model << " dim " << rec.vmrt->dim;
      if (verify) line << "  [" << status << "]";
      out << line.str() << "\n";
    }
  }
  if (json) {
    Json inputs{{"max_rank", max_rank}, {"verify", verify}, {"cap", nullptr}};
    if (cap) inputs["cap"] = *cap;
    out << make_report("classify", inputs, Json{{"records", rows}, {"failures", failures}}, clock.seconds()).dump(2)
        << "\n";
  }
  return failures == 0 ? 0 : 1;
}

int cmd_verify_all(std::optional<int> max_rank, bool json, std::ostream& out, std::ostream& err) {
  Clock clock;
  AcceptanceOptions o;
  if (max_rank) {
    check_max_rank(*max_rank);
    o = acceptance_options_for(*max_rank);
  }
  Json rows = Json::array();
  const CriterionResult* first_failure = nullptr;
  const auto results = run_acceptance(o);
  for (const auto& r : results) {
    if (!r.passed && !first_failure) first_failure = &r;
    if (json) {
      rows.push_back(to_json(r));
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << std::fixed << std::setprecision(2)
          << r.seconds << "s): " << r.detail << "\n";
    }
  }
  if (json) {
    Json inputs{{"max_rank", nullptr}};
    if (max_rank) inputs["max_rank"] = *max_rank;
    out << make_report("verify-all", inputs, Json{{"criteria", rows}}, clock.seconds()).dump(2) << "\n";
  }
  if (first_failure) {
    err << "first failing criterion: " << first_failure->id << " " << first_failure->name << "\n";
    return 1;
  }
  return 0;
}

int cmd_prolong(const GradationArgs& a, std::optional<int> cap, bool g0_prime, bool json, std::ostream& out) {
  Clock clock;
  const auto g = a.build();
  ProlongationTower tower(symbol(g));
  const int top = cap.value_or(default_cap(tower.symbol()));
  if (top < 0) throw InvalidInput("--cap must be nonnegative");
  tower.extend_to(top);
  std::vector<std::size_t> graded;
  for (int k = 0; k <= top; ++k) graded.push_back(k <= g.depth() ? g.dim_part(k) : 0);
  const Subspace g0 = g0_prime ? g0_preserving(tower, decompose(g)) : embedded_g0(g, tower);
  const auto restricted = restricted_prolong(tower, g0, top);
  if (json) {
    Json inputs = a.json();
    inputs["cap"] = top;
    inputs["g0"] = g0_prime ? "g0_prime" : "iota_g0";
    out << make_report("prolong", inputs,
                       Json{{"graded_dims", graded},
                            {"full_dims", tower.dims()},
                            {"restricted_dims", restricted.dims()},
                            {"depth", g.depth()}},
                       clock.seconds())
               .dump(2)
        << "\n";
    return 0;
  }
  out << "degree      " << join([&] {
    std::vector<std::size_t> ks;
    for (int k = 0; k <= top; ++k) ks.push_back(static_cast<std::size_t>(k));
    return ks;
  }()) << "\n";
  out << "g_k         " << join(graded) << "\n";
  out << "g_k(m)      " << join(tower.dims()) << "\n";
  out << (g0_prime ? "g_k(m,g0')  " : "g_k(m,g0)   ") << join(restricted.dims()) << "\n";
  return 0;
}

int cmd_lemma(int l, bool json, std::ostream& out) {
  Clock clock;
  const auto r = lemma_equation_count(l);
  const bool ok = r.relations_hold && r.kernel_equals_constraint && r.kernel_equals_iota;
  if (json) {
    out << make_report("lemma", Json{{"l", l}}, to_json(r), clock.seconds()).dump(2) << "\n";
  } else {
    out << "l " << r.l << ": " << r.equations.rows() << " equations of rank " << r.equation_rank << " on "
        << r.ambient_dim << " unknowns\n";
    out << "kernel dim " << r.g0_prime_dim << ", constraint dim " << r.constraint_dim << ", dim g0 " << r.g0_dim
        << "\n";
    out << "[f_i,e_i] = " << to_string(r.bracket_scale) << "*h, relations " << (r.relations_hold ? "hold" : "FAIL")
        << "\n";
    out << "kernel = constraint " << (r.kernel_equals_constraint ? "yes" : "no") << ", kernel = iota(g0) "
        << (r.kernel_equals_iota ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_embed(const std::string& which, int l, bool isometric, bool json, std::ostream& out) {
  Clock clock;
  EmbeddingReport r;
  if (which == "so")
    r = embed_so(l, isometric ? CenterSplit::Isometric : CenterSplit::Duplicate);
  else if (which == "sp")
    r = embed_sp(l);
  else
    throw InvalidInput("embedding must be so or sp");
  if (json) {
    Json inputs{{"embedding", which}, {"l", l}, {"isometric", isometric}};
    out << make_report("embed", inputs, to_json(r), clock.seconds()).dump(2) << "\n";
  } else {
    out << r.source << " -> " << r.target << " (dims " << r.source_dim << " -> " << r.target_dim << ")\n";
    for (const auto& [name, ok] : r.checks()) out << "  " << name << " " << (ok ? "yes" : "no") << "\n";
    if (which == "so")
      out << "  dim J(p) " << r.dim_jp << ", dim p~ ^ J(g) " << r.dim_p_cap_jg << ", dim J(n) " << r.dim_jn
          << ", dim n~ " << r.dim_n_target << "\n";
    else
      out << "  dim m " << r.dim_m << ", dim m~ " << r.dim_m_target << ", corner degree " << r.corner_source_degree
          << " -> " << r.corner_target_degree << "\n";
  }
  return r.all_passed() ? 0 : 1;
}

int cmd_ecp2(bool json, std::ostream& out) {
  Clock clock;
  const auto m1 = build_M(1), m2 = build_M(2);
  Json res = Json::object();
  bool ok = true;
  for (const auto* m : {&m1, &m2}) {
    const bool hom = verify_homomorphism(*m);
    const auto rank_t = open_orbit_rank(*m);
    const bool det1 = determinant(*m) == Polynomial(1L);
    ok = ok && hom && rank_t == 2 && det1;
    res[m->name] = Json{{"homomorphism", hom},
                        {"determinant_one", det1},
                        {"inverse_is_negation", inverse_is_negation(*m)},
                        {"open_orbit_rank", rank_t},
                        {"left_action_rank_e1", orbit_rank(*m, OrbitAction::Left, {1, 0, 0})}};
  }
  const auto d = distinguish(m1, m2);
  const bool mutated = verify_homomorphism(build_M2_with(1));
  ok = ok && d.distinct && !mutated;
  res["distinguish"] = to_json(d);
  res["mutated_M2_homomorphism"] = mutated;
  if (json) {
    out << make_report("ecp2", Json::object(), res, clock.seconds()).dump(2) << "\n";
  } else {
    for (const auto* name : {"M1", "M2"}) {
      const auto& r = res[name];
      out << name << ": homomorphism " << r["homomorphism"] << ", det 1 " << r["determinant_one"]
          << ", open orbit rank " << r["open_orbit_rank"] << " (left action at e1: " << r["left_action_rank_e1"]
          << ")\n";
    }
    out << "unipotent indices " << d.index1 << ", " << d.index2 << (d.distinct ? ": not conjugate" : "") << "\n";
    out << "M2 with coefficient 1: homomorphism " << (mutated ? "true" : "false") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded simple Lie algebras: gradations, prolongations, classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GradationArgs grade_args, prolong_args;
  bool json = false, csv = false, diagram = false, verify = false, g0_prime = false, isometric = false;
  int max_rank = kDefaultMaxRank;
  std::optional<int> cap, verify_rank;
  int l = 0;
  std::string which;

  auto* grade_cmd = app.add_subcommand("grade", "graded dimensions and checks for one gradation");
  grade_args.attach(grade_cmd);
  grade_cmd->add_flag("--diagram", diagram, "print the block degree diagram (types A and C)");
  grade_cmd->add_flag("--json", json);

  auto* classify_cmd = app.add_subcommand("classify", "classification table for every gradation up to a rank");
  classify_cmd->add_option("--max-rank", max_rank)->capture_default_str();
  classify_cmd->add_flag("--json", json);
  classify_cmd->add_flag("--csv", csv);
  classify_cmd->add_flag("--verify", verify, "cross-check every verdict against the prolongation tower");
  classify_cmd->add_option("--cap", cap, "highest tower degree compared (default depth + 1)");

  auto* verify_cmd = app.add_subcommand("verify-all", "run the acceptance suite");
  verify_cmd->add_option("--max-rank", verify_rank, "clip the rank of every sweep");
  verify_cmd->add_flag("--json", json);

  auto* prolong_cmd = app.add_subcommand("prolong", "full and restricted prolongation dimensions");
  prolong_args.attach(prolong_cmd);
  prolong_cmd->add_option("--cap", cap, "highest degree computed (default depth + 2)");
  prolong_cmd->add_flag("--g0-prime", g0_prime, "restrict with the decomposition-preserving g0' (type III only)");
  prolong_cmd->add_flag("--json", json);

  auto* lemma_cmd = app.add_subcommand("lemma", "equation count for (A_l,{1,l})");
  lemma_cmd->add_option("l", l)->required();
  lemma_cmd->add_flag("--json", json);

  auto* embed_cmd = app.add_subcommand("embed", "the embeddings so(2l+1) -> so(2l+2) and sp(2l) -> sl(2l)");
  embed_cmd->add_option("which", which, "so or sp")->required();
  embed_cmd->add_option("l", l)->required();
  embed_cmd->add_flag("--isometric", isometric, "split the center isometrically instead of duplicating it");
  embed_cmd->add_flag("--json", json);

  auto* ecp2_cmd = app.add_subcommand("ecp2", "the two additive-group structures on P2");
  ecp2_cmd->add_flag("--json", json);

  std::vector<const char*> argv{"gradedlie"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (json && csv) {
    err << "--json and --csv are exclusive\n";
    return 2;
  }

  try {
    if (*grade_cmd) return cmd_grade(grade_args, diagram, json, out);
    if (*classify_cmd) return cmd_classify(max_rank, json, csv, verify, cap, out, err);
    if (*verify_cmd) return cmd_verify_all(verify_rank, json, out, err);
    if (*prolong_cmd) return cmd_prolong(prolong_args, cap, g0_prime, json, out);
    if (*lemma_cmd) return cmd_lemma(l, json, out);
    if (*embed_cmd) return cmd_embed(which, l, isometric, json, out);
    if (*ecp2_cmd) return cmd_ecp2(json, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace gradedlie
