#include "hsym/report_json.hpp"

#include "hsym/errors.hpp"

#include <cstdint>
#include <limits>

namespace hsym {

namespace {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

// Library exceptions from malformed documents surface as InputError.
template <class F>
auto reading(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON report: ") + e.what());
  }
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return z.convert_to<std::int64_t>();
  }
  return z.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

Json to_json(const Weight& w) { return w.fw_coords; }

Weight weight_from_json(const Json& j) {
  return reading([&] { return Weight(j.get<std::vector<int>>()); });
}

Json to_json(const HermitianSpace& space) {
  return Json{{"family", to_string(space.family)},
              {"klein_label", space.klein_label},
              {"ambient", space.ambient.name()},
              {"node", space.node}};
}

HermitianSpace hermitian_space_from_json(const Json& j) {
  return reading([&] {
    return HermitianSpace{SimpleType::parse(j.at("ambient").get<std::string>()), j.at("node").get<int>(),
                          parse_family(j.at("family").get<std::string>()), j.at("klein_label").get<std::string>()};
  });
}

Json to_json(const BundleReport& report) {
  Json j = to_json(report.space);
  j["weight"] = to_json(report.lam);
  j["rank"] = integer_to_json(report.rank);
  j["h0"] = integer_to_json(report.h0);
  j["xi_k"] = rational_to_json(report.xi_k_lam);
  j["xi_k_ad"] = rational_to_json(report.xi_k_ad);
  j["c1_ratio"] = rational_to_json(report.c1_ratio);
  j["j"] = report.j_value ? rational_to_json(*report.j_value) : Json(nullptr);
  j["lambda1_reference"] = rational_to_json(lambda1_reference());
  j["sharp"] = report.sharp();
  return j;
}

BundleReport bundle_report_from_json(const Json& j) {
  return reading([&] {
    BundleReport report;
    report.space = hermitian_space_from_json(j);
    report.lam = weight_from_json(j.at("weight"));
    report.rank = integer_from_json(j.at("rank"));
    report.h0 = integer_from_json(j.at("h0"));
    report.xi_k_lam = rational_from_json(j.at("xi_k"));
    report.xi_k_ad = rational_from_json(j.at("xi_k_ad"));
    report.c1_ratio = rational_from_json(j.at("c1_ratio"));
    if (!j.at("j").is_null()) report.j_value = rational_from_json(j.at("j"));
    return report;
  });
}

Json to_json(const SearchOutcome& outcome) {
  Json j = to_json(outcome.space);
  j["best_j"] = rational_to_json(outcome.best_j);
  j["bound_kind"] = "best homogeneous-bundle bound";
  Json minimizers = Json::array();
  for (const auto& w : outcome.minimizers) minimizers.push_back(to_json(w));
  j["minimizers"] = std::move(minimizers);
  j["candidates_examined"] = outcome.candidates_examined;
  j["pruning_bound_used"] = rational_to_json(outcome.pruning_bound_used);
  j["incumbent_seed"] = to_json(outcome.incumbent_seed);
  Json coeffs = Json::array();
  for (const auto& c : outcome.pruning_coefficients) coeffs.push_back(rational_to_json(c));
  j["pruning_coefficients"] = std::move(coeffs);
  Json examined = Json::array();
  for (const auto& cand : outcome.examined) {
    examined.push_back(Json{{"weight", to_json(cand.lam)},
                            {"bound", rational_to_json(cand.bound)},
                            {"j", rational_to_json(cand.j)}});
  }
  j["examined"] = std::move(examined);
  j["lambda1_reference"] = rational_to_json(lambda1_reference());
  j["sharp"] = outcome.best_j == lambda1_reference();
  return j;
}

SearchOutcome search_outcome_from_json(const Json& j) {
  return reading([&] {
    SearchOutcome outcome;
    outcome.space = hermitian_space_from_json(j);
    outcome.best_j = rational_from_json(j.at("best_j"));
    for (const auto& w : j.at("minimizers")) outcome.minimizers.push_back(weight_from_json(w));
    outcome.candidates_examined = j.at("candidates_examined").get<std::size_t>();
    outcome.pruning_bound_used = rational_from_json(j.at("pruning_bound_used"));
    outcome.incumbent_seed = weight_from_json(j.at("incumbent_seed"));
    for (const auto& c : j.at("pruning_coefficients")) outcome.pruning_coefficients.push_back(rational_from_json(c));
    for (const auto& cand : j.at("examined")) {
      outcome.examined.push_back(
          {weight_from_json(cand.at("weight")), rational_from_json(cand.at("bound")), rational_from_json(cand.at("j"))});
    }
    return outcome;
  });
}

}  // namespace hsym
