#ifndef GRADEDLIE_REPORT_HPP
#define GRADEDLIE_REPORT_HPP

#include <string>

#include <json.hpp>

#include "gradedlie/acceptance.hpp"
#include "gradedlie/classify.hpp"
#include "gradedlie/ecp2.hpp"
#include "gradedlie/embedj.hpp"
#include "gradedlie/grading.hpp"
#include "gradedlie/typeiii.hpp"

namespace gradedlie {

// nlohmann::json keeps object keys in a std::map, so dumps are sorted.
using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// {command, inputs, results, timing: {seconds}, version}
Json make_report(const std::string& command, Json inputs, Json results, double seconds);

Json dims_json(const std::map<int, std::size_t>& dims);
Json to_json(const GradedLieAlgebra& g);
Json to_json(const ClassificationRecord& r);
Json to_json(const LemmaReport& r);
Json to_json(const EmbeddingReport& r);
Json to_json(const Distinction& d);
Json to_json(const CriterionResult& r);

std::string csv_header();
/// type,rank,delta1,depth,dims,verdict,contact,exceptional_aut,vmrt_dim
std::string csv_row(const ClassificationRecord& r);

}  // namespace gradedlie

#endif  // GRADEDLIE_REPORT_HPP
