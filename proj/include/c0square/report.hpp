#pragma once

// JSON front end: input parsing/validation, the full analyzer + oracle
// pipeline behind the `analyze` subcommand, and the randomized agreement
// suite. Reports are plain JSON objects; with a fixed input and seed the
// serialized report is byte-identical across runs.

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "c0square/analysis.hpp"
#include "c0square/blaschke_product.hpp"
#include "c0square/corpus.hpp"
#include "c0square/errors.hpp"
#include "c0square/model_operator.hpp"
#include "c0square/oracle.hpp"
#include "c0square/theta_function.hpp"

namespace c0square {

struct InputSpec {
  std::vector<ZeroFactor> zeros;
  double constant_phase = 0.0;
  std::uint64_t seed = 0;
  int samples = 2048;
  double tolerance = 1e-8;
  bool oracle = true;

  int degree() const {
    int n = 0;
    for (const ZeroFactor& z : zeros) n += z.multiplicity;
    return n;
  }

  BlaschkeProduct product() const {
    return BlaschkeProduct(zeros, std::polar(1.0, constant_phase));
  }
};

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw validation_error(message);
}

inline nlohmann::json complex_json(Complex z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

inline nlohmann::json zeros_json(const std::vector<ZeroFactor>& zeros) {
  nlohmann::json out = nlohmann::json::array();
  for (const ZeroFactor& z : zeros)
    out.push_back({{"re", z.value.real()}, {"im", z.value.imag()}, {"multiplicity", z.multiplicity}});
  return out;
}

inline const char* case_name(ReducibilityCase c) {
  switch (c) {
    case ReducibilityCase::Even: return "Even";
    case ReducibilityCase::Odd: return "Odd";
    case ReducibilityCase::Factor: return "Factor";
    default: return "Irreducible";
  }
}

inline const char* pair_case_name(PairCase c) {
  switch (c) {
    case PairCase::CaseI: return "I";
    case PairCase::CaseII: return "II";
    default: return "III";
  }
}

}  // namespace detail

inline InputSpec parse_input(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed JSON input: ") + e.what());
  }
  detail::require(doc.is_object(), "input must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "zeros" && key != "constant_phase" && key != "seed" && key != "samples" &&
        key != "tolerance" && key != "oracle")
      throw validation_error("unknown input field: " + key);
  }
  detail::require(doc.contains("zeros") && doc["zeros"].is_array(), "input needs a zeros array");

  InputSpec spec;
  for (const nlohmann::json& z : doc["zeros"]) {
    detail::require(z.is_object() && z.contains("re") && z.contains("im") &&
                        z["re"].is_number() && z["im"].is_number(),
                    "each zero needs numeric re and im");
    for (const auto& [key, value] : z.items()) {
      (void)value;
      if (key != "re" && key != "im" && key != "multiplicity")
        throw validation_error("unknown zero field: " + key);
    }
    ZeroFactor zf{Complex(z["re"].get<double>(), z["im"].get<double>()), 1};
    if (z.contains("multiplicity")) {
      detail::require(z["multiplicity"].is_number_integer(), "multiplicity must be an integer");
      zf.multiplicity = z["multiplicity"].get<int>();
    }
    detail::require(zf.multiplicity >= 1, "multiplicity must be >= 1");
    detail::require(std::abs(zf.value) < 1.0 - 1e-6,
                    "zero modulus must be below 1 - 1e-6");
    spec.zeros.push_back(zf);
  }
  if (doc.contains("constant_phase")) {
    detail::require(doc["constant_phase"].is_number(), "constant_phase must be a number");
    spec.constant_phase = doc["constant_phase"].get<double>();
  }
  if (doc.contains("seed")) {
    detail::require(doc["seed"].is_number_unsigned(), "seed must be a nonnegative integer");
    spec.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("samples")) {
    detail::require(doc["samples"].is_number_integer(), "samples must be an integer");
    spec.samples = doc["samples"].get<int>();
    detail::require(spec.samples >= 16, "samples must be >= 16");
  }
  if (doc.contains("tolerance")) {
    detail::require(doc["tolerance"].is_number(), "tolerance must be a number");
    spec.tolerance = doc["tolerance"].get<double>();
    detail::require(spec.tolerance > 0.0, "tolerance must be positive");
  }
  if (doc.contains("oracle")) {
    detail::require(doc["oracle"].is_boolean(), "oracle must be a boolean");
    spec.oracle = doc["oracle"].get<bool>();
  }
  detail::require(spec.degree() >= 2, "total degree must be >= 2");
  return spec;
}

inline nlohmann::json run_report(const InputSpec& spec) {
  const BlaschkeProduct m = spec.product();
  AnalysisReport analysis = analyze(m, spec.seed);

  const ThetaFunction theta = build_theta(m);
  const ThetaChecks checks = theta_checks(theta);

  Rng rng(spec.seed ^ 0xde7e47ull);
  double det_residual = 0.0;
  for (int i = 0; i < 64; ++i) {
    const Complex z = rng.complex_in_disk(0.95);
    const Complex det = theta.eval(z * z).determinant();
    det_residual = std::max(det_residual, std::abs(det - m.eval(z) * m.eval(-z)));
  }

  const ModelOperator model = model_matrix(m, spec.samples);
  const SpectralCheck spectral = spectral_check(model);

  nlohmann::json report;
  report["schema"] = "c0square-report/1";
  report["input"] = {{"degree", m.degree()},
                     {"zeros", detail::zeros_json(m.zeros())},
                     {"constant_phase", spec.constant_phase},
                     {"seed", spec.seed},
                     {"samples", spec.samples},
                     {"tolerance", spec.tolerance},
                     {"oracle", spec.oracle}};
  report["conditions"] = {{"A", analysis.cond_a}, {"B", analysis.cond_b}, {"C", analysis.cond_c}};
  report["verdicts"] = {{"reducible", analysis.verdict.reducible()},
                        {"reducibility_case", detail::case_name(analysis.verdict.kind)},
                        {"multiplicity_free", analysis.multiplicity_free},
                        {"lat_equal", analysis.lat_equal}};

  nlohmann::json witnesses = nlohmann::json::object();
  if (analysis.even_divisor)
    witnesses["even_divisor_zeros"] = detail::zeros_json(analysis.even_divisor->zeros());
  if (analysis.verdict.mu) witnesses["factor_mu"] = detail::complex_json(*analysis.verdict.mu);
  if (analysis.pair) {
    nlohmann::json pair = {{"case", detail::pair_case_name(analysis.pair->case_tag)},
                           {"q1", analysis.pair->q1},
                           {"q2", analysis.pair->q2},
                           {"theta", detail::complex_json(analysis.pair->theta)}};
    if (analysis.pair->case_tag == PairCase::CaseIII) pair["rho"] = analysis.pair->rho;
    witnesses["projection_pair"] = pair;
  }
  if (analysis.split) {
    nlohmann::json factors = nlohmann::json::array();
    for (const BlaschkeProduct* f : {&analysis.split->first, &analysis.split->second})
      factors.push_back({{"constant", detail::complex_json(f->constant())},
                         {"zeros", detail::zeros_json(f->zeros())}});
    witnesses["split_factors"] = factors;
  }

  nlohmann::json residuals = {{"theta_inner", checks.inner_residual},
                              {"det_identity", det_residual},
                              {"eig", spectral.eig_residual}};

  if (spec.oracle) {
    const Eigen::MatrixXcd squared = square_model(model);
    const bool oracle_irreducible = is_irreducible(squared);
    const bool oracle_cyclic = is_cyclic(squared, spec.seed);
    const CommutantBasis commutant = commutant_basis(squared);
    const auto witness = lat_witness(squared, spec.seed, spec.tolerance);

    analysis.oracle_agreement = OracleAgreement{
        oracle_irreducible == (analysis.verdict.kind == ReducibilityCase::Irreducible),
        oracle_cyclic == analysis.multiplicity_free,
        oracle_cyclic ? !witness.has_value() : (witness.has_value() && !witness->hyperinvariant),
        spectral.eig_residual};
    const OracleAgreement& agreement = *analysis.oracle_agreement;

    if (witness) {
      nlohmann::json basis = nlohmann::json::array();
      for (int j = 0; j < witness->basis.cols(); ++j) {
        nlohmann::json column = nlohmann::json::array();
        for (int i = 0; i < witness->basis.rows(); ++i)
          column.push_back(detail::complex_json(witness->basis(i, j)));
        basis.push_back(column);
      }
      witnesses["lat_witness"] = {{"dimension", witness->basis.cols()},
                                  {"hyperinvariant", witness->hyperinvariant},
                                  {"basis", basis}};
    }

    report["oracle"] = {{"irreducible", oracle_irreducible},
                        {"cyclic", oracle_cyclic},
                        {"commutant_dim", commutant.dimension},
                        {"agreement", agreement.irreducible_match && agreement.cyclic_match &&
                                          agreement.lat_witness_consistent}};
  }

  report["witnesses"] = witnesses;
  report["residuals"] = residuals;
  return report;
}

inline bool report_agreement(const nlohmann::json& report) {
  if (!report.contains("oracle")) return true;  // nothing to disagree with
  return report["oracle"]["agreement"].get<bool>();
}

inline std::string render_text(const nlohmann::json& report) {
  std::ostringstream out;
  const auto& input = report["input"];
  const auto& cond = report["conditions"];
  const auto& verd = report["verdicts"];
  const bool reducible = verd["reducible"].get<bool>();
  const bool lat_equal = verd["lat_equal"].get<bool>();

  out << "Blaschke product of degree " << input["degree"].get<int>() << "\n";
  out << "(A) m(z) is not even .................... " << (cond["A"].get<bool>() ? "yes" : "no")
      << "\n";
  out << "(B) no one-factor quotient is even ...... " << (cond["B"].get<bool>() ? "yes" : "no")
      << "\n";
  out << "(C) an even inner divisor exists ........ " << (cond["C"].get<bool>() ? "yes" : "no")
      << "\n";
  out << "(D) the square is irreducible ........... " << (reducible ? "no" : "yes");
  if (reducible)
    out << "  [reducible, case " << verd["reducibility_case"].get<std::string>() << "]";
  out << "\n";
  out << "(E) Lat differs from Lat' ............... " << (lat_equal ? "no" : "yes") << "\n";
  out << "multiplicity free: " << (verd["multiplicity_free"].get<bool>() ? "yes" : "no") << "\n";
  if (report.contains("oracle")) {
    const auto& oracle = report["oracle"];
    out << "oracle: irreducible=" << (oracle["irreducible"].get<bool>() ? "yes" : "no")
        << " cyclic=" << (oracle["cyclic"].get<bool>() ? "yes" : "no")
        << " commutant_dim=" << oracle["commutant_dim"].get<int>()
        << " agreement=" << (oracle["agreement"].get<bool>() ? "yes" : "no") << "\n";
  }
  const auto& res = report["residuals"];
  out << "residuals: theta_inner=" << res["theta_inner"].get<double>()
      << " det_identity=" << res["det_identity"].get<double>()
      << " eig=" << res["eig"].get<double>() << "\n";
  return out.str();
}

inline nlohmann::json random_suite(int min_degree, int max_degree, int count,
                                   std::uint64_t seed) {
  detail::require(min_degree >= 2 && max_degree >= min_degree && max_degree <= 8,
                  "degrees must satisfy 2 <= min <= max <= 8");
  detail::require(count >= 1, "count must be >= 1");

  Rng rng(seed);
  nlohmann::json instances = nlohmann::json::array();
  int agreements = 0;
  for (int i = 0; i < count; ++i) {
    const BlaschkeProduct m = random_corpus_instance(rng, min_degree, max_degree);
    const std::uint64_t instance_seed = rng.fork_seed();
    const AnalysisReport analysis = analyze(m, instance_seed);
    const Eigen::MatrixXcd squared = square_model(model_matrix(m));
    const bool oracle_irreducible = is_irreducible(squared);
    const bool oracle_cyclic = is_cyclic(squared, instance_seed);

    const bool agree_reducibility =
        oracle_irreducible == (analysis.verdict.kind == ReducibilityCase::Irreducible);
    const bool agree_multiplicity = oracle_cyclic == analysis.multiplicity_free;
    if (agree_reducibility && agree_multiplicity) ++agreements;

    instances.push_back({{"degree", m.degree()},
                         {"zeros", detail::zeros_json(m.zeros())},
                         {"reducibility_case", detail::case_name(analysis.verdict.kind)},
                         {"multiplicity_free", analysis.multiplicity_free},
                         {"oracle_irreducible", oracle_irreducible},
                         {"oracle_cyclic", oracle_cyclic},
                         {"agree_reducibility", agree_reducibility},
                         {"agree_multiplicity", agree_multiplicity}});
  }

  return {{"schema", "c0square-suite/1"},
          {"min_degree", min_degree},
          {"max_degree", max_degree},
          {"count", count},
          {"seed", seed},
          {"agreements", agreements},
          {"all_agree", agreements == count},
          {"instances", instances}};
}

}  // namespace c0square
