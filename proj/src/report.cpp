#include "gradedlie/report.hpp"

namespace gradedlie {

Json make_report(const std::string& command, Json inputs, Json results, double seconds) {
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"timing", Json{{"seconds", seconds}}},
              {"version", kVersion}};
}

Json dims_json(const std::map<int, std::size_t>& dims) {
  Json j = Json::object();
  for (const auto& [k, d] : dims) j[std::to_string(k)] = d;
  return j;
}

Json to_json(const GradedLieAlgebra& g) {
  Json checks = Json::object();
  for (const auto& c : g.checks()) checks[c.name] = c.passed;
  return Json{{"type", std::string(1, to_char(g.algebra().type()))},
              {"rank", g.algebra().rank()},
              {"delta1", g.delta1().indices()},
              {"dim", g.algebra().dim()},
              {"depth", g.depth()},
              {"dims", dims_json(g.dims())},
              {"checks", checks}};
}

namespace {

Json label_json(const GradationLabel& l) {
  return Json{{"type", l.type}, {"rank", l.rank}, {"delta1", l.delta1.indices()}};
}

}  // namespace

Json to_json(const ClassificationRecord& r) {
  Json j{{"type", std::string(1, to_char(r.type))},
         {"rank", r.rank},
         {"delta1", r.delta1.indices()},
         {"canonical", label_json(r.canonical)},
         {"depth", r.depth},
         {"dims", dims_json(r.dims)},
         {"contact", r.contact},
         {"verdict", to_string(r.verdict)},
         {"exceptional_aut", nullptr},
         {"vmrt", nullptr}};
  if (r.exceptional_aut) j["exceptional_aut"] = label_json(*r.exceptional_aut);
  if (r.vmrt) j["vmrt"] = Json{{"model", r.vmrt->model}, {"dim", r.vmrt->dim}};
  return j;
}

Json to_json(const LemmaReport& r) {
  return Json{{"l", r.l},
              {"ambient_dim", r.ambient_dim},
              {"equation_count", r.equations.rows()},
              {"equation_rank", r.equation_rank},
              {"g0_prime_dim", r.g0_prime_dim},
              {"g0_dim", r.g0_dim},
              {"constraint_dim", r.constraint_dim},
              {"relations_hold", r.relations_hold},
              {"bracket_scale", to_string(r.bracket_scale)},
              {"kernel_equals_constraint", r.kernel_equals_constraint},
              {"kernel_equals_iota", r.kernel_equals_iota}};
}

Json to_json(const EmbeddingReport& r) {
  Json checks = Json::object();
  for (const auto& [name, ok] : r.checks()) checks[name] = ok;
  return Json{{"source", r.source},
              {"target", r.target},
              {"source_dim", r.source_dim},
              {"target_dim", r.target_dim},
              {"checks", checks},
              {"dim_jp", r.dim_jp},
              {"dim_p_cap_jg", r.dim_p_cap_jg},
              {"dim_jn", r.dim_jn},
              {"dim_n_target", r.dim_n_target},
              {"dim_jn_cap_n_target", r.dim_jn_cap_n_target},
              {"dim_m", r.dim_m},
              {"dim_m_target", r.dim_m_target},
              {"corner_source_degree", r.corner_source_degree},
              {"corner_target_degree", r.corner_target_degree}};
}

Json to_json(const Distinction& d) {
  return Json{{"index1", d.index1},
              {"index2", d.index2},
              {"square_zero1", d.square_zero1},
              {"square_zero2", d.square_zero2},
              {"distinct", d.distinct}};
}

Json to_json(const CriterionResult& r) {
  Json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds},
         {"budget_seconds", nullptr}};
  if (r.budget_seconds) j["budget_seconds"] = *r.budget_seconds;
  return j;
}

std::string csv_header() { return "type,rank,delta1,depth,dims,verdict,contact,exceptional_aut,vmrt_dim"; }

std::string csv_row(const ClassificationRecord& r) {
  std::string dims;
  for (const auto& [k, d] : r.dims) dims += (dims.empty() ? "" : " ") + std::to_string(d);
  std::string out;
  out += to_char(r.type);
  out += "," + std::to_string(r.rank);
  out += ",\"" + r.delta1.to_string() + "\"";
  out += "," + std::to_string(r.depth);
  out += "," + dims;
  out += "," + to_string(r.verdict);
  out += std::string(",") + (r.contact ? "true" : "false");
  out += ",\"" + (r.exceptional_aut ? r.exceptional_aut->to_string() : std::string()) + "\"";
  out += "," + (r.vmrt ? std::to_string(r.vmrt->dim) : std::string());
  return out;
}

}  // namespace gradedlie
