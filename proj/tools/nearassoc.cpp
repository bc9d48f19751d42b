#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nearassoc/io.hpp"

namespace {

using namespace nearassoc;
using nearassoc::io::json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::DimensionMismatch:
    case Errc::WrongDimension:
    case Errc::ContextMismatch:
    case Errc::SearchSpaceTooLarge:
      return 2;
    default:
      return 1;
  }
}

void emit(const std::string& out_path, const json& doc) {
  io::write_output(out_path, io::dump_canonical(doc));
}

int report_error(const std::string& out_path, const Error& err) {
  json doc;
  doc["schema"] = "report";
  doc["kind"] = "error";
  doc["error"] = err.code_name();
  doc["message"] = err.what();
  emit(out_path, doc);
  std::cerr << "error (" << err.code_name() << "): " << err.what() << "\n";
  return exit_code_for(err.code());
}

FieldContext field_from_flag(const std::string& flag) {
  if (flag == "rationals" || flag.empty()) return FieldContext::rationals();
  if (flag.rfind("prime:", 0) == 0) {
    try {
      return FieldContext::prime(static_cast<unsigned>(std::stoul(flag.substr(6))));
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::ParseError, "bad prime field flag: " + flag);
    }
  }
  if (flag.rfind("quadratic:", 0) == 0) {
    try {
      return FieldContext::quadratic(std::stoll(flag.substr(10)));
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::ParseError, "bad quadratic field flag: " + flag);
    }
  }
  fail(Errc::ParseError, "unknown field flag: " + flag +
                             " (expected rationals, prime:<p>, or quadratic:<d>)");
}

json load_doc(const std::string& path) { return io::parse_document(io::read_input(path)); }

int run_check(const std::string& file, const std::string& identity,
              const std::string& alpha_file, const std::string& out_path) {
  const std::optional<IdentityId> id = identity_from_name(identity);
  if (!id) fail(Errc::ParseError, "unknown identity: " + identity);

  HomAlgebra h = io::hom_algebra_from_doc(load_doc(file));
  if (!alpha_file.empty()) {
    Matrix twist = io::matrix_from_doc(load_doc(alpha_file));
    h = HomAlgebra(h.alg, std::move(twist));
  }

  const CheckReport report = check_identity(h, *id);
  json doc = io::check_report_doc(report);
  doc["identity"] = identity_name(*id);
  emit(out_path, doc);
  std::cerr << io::check_report_line(report) << "\n";
  return report.holds ? 0 : 1;
}

int run_semidirect(const std::string& file, const std::string& out_path) {
  const Bimodule b = io::bimodule_from_doc(load_doc(file));
  emit(out_path, io::hom_algebra_doc(semidirect(b)));
  return 0;
}

int run_double(const std::string& file, const std::string& out_path) {
  const MatchedPair mp = io::matched_pair_from_doc(load_doc(file));
  emit(out_path, io::hom_algebra_doc(double_algebra(mp)));
  return 0;
}

int run_manin(const std::string& algebra_file, const std::string& coproduct_file,
              const std::string& out_path) {
  const Algebra alg = io::algebra_from_doc(load_doc(algebra_file));
  const Coproduct cp = io::coproduct_from_doc(load_doc(coproduct_file));
  const ManinDouble result = manin_double(alg, cp);
  json doc;
  doc["schema"] = "report";
  doc["kind"] = "manin-double";
  doc["algebra"] = io::hom_algebra_doc(result.algebra);
  doc["form"] = io::form_doc(result.form);
  emit(out_path, doc);
  return 0;
}

int run_dual_bimodule(const std::string& file, const std::string& order,
                      const std::string& out_path) {
  if (order != "lr" && order != "rl")
    fail(Errc::ParseError, "order must be \"lr\" or \"rl\"");
  const Bimodule b = io::bimodule_from_doc(load_doc(file));
  const Bimodule dual = dual_bimodule(b, order == "lr" ? DualOrder::LR : DualOrder::RL);
  emit(out_path, io::bimodule_doc(dual));
  return 0;
}

int run_commutator(const std::string& file, const std::string& out_path) {
  const HomAlgebra h = io::hom_algebra_from_doc(load_doc(file));
  emit(out_path, io::algebra_doc(commutator_algebra(h.alg)));
  return 0;
}

int run_family(const std::string& name, const std::string& alpha, const std::string& beta,
               const std::string& gamma, const std::string& delta,
               const std::string& field_flag, const std::string& out_path) {
  const FieldContext ctx = field_from_flag(field_flag);
  FamilyParams params{Family::I, Scalar::parse(ctx, alpha), Scalar::parse(ctx, beta),
                      std::nullopt, std::nullopt};
  if (name == "I")
    params.family = Family::I;
  else if (name == "II")
    params.family = Family::II;
  else if (name == "III")
    params.family = Family::III;
  else
    fail(Errc::ParseError, "family name must be I, II, or III");
  if (!gamma.empty()) params.gamma = Scalar::parse(ctx, gamma);
  if (!delta.empty()) params.delta = Scalar::parse(ctx, delta);
  emit(out_path, io::algebra_doc(family_algebra(params, ctx)));
  return 0;
}

int run_enumerate(std::size_t dim, unsigned prime, const std::string& identity, bool classify,
                  const std::string& out_path) {
  const std::optional<IdentityId> id = identity_from_name(identity);
  if (!id) fail(Errc::ParseError, "unknown identity: " + identity);
  if (classify && dim != 2)
    fail(Errc::ParseError, "--classify is defined for dimension 2 only");
  if (classify && *id != IdentityId::NearlyAssociative)
    fail(Errc::ParseError, "--classify partitions the nearly-associative tables");

  const std::vector<Algebra> hits = enumerate_fp(dim, prime, *id);

  json doc;
  doc["schema"] = "report";
  doc["kind"] = classify ? "classification" : "enumeration";
  doc["dim"] = dim;
  doc["field"] = io::field_to_json(FieldContext::prime(prime));
  doc["identity"] = identity_name(*id);
  doc["count"] = hits.size();
  constexpr std::size_t kTableLimit = 1000;
  if (hits.size() <= kTableLimit) {
    json tables = json::array();
    for (const Algebra& alg : hits) tables.push_back(io::algebra_doc(alg)["constants"]);
    doc["tables"] = std::move(tables);
  } else {
    doc["truncated"] = true;
  }
  if (classify) {
    const ClassifyReport report = classify_report_fp(prime);
    doc["classes"] = io::classify_report_doc(report)["classes"];
    std::cerr << io::classify_report_table(report);
  }
  emit(out_path, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks and constructions for nearly associative algebras"};
  app.require_subcommand(1);

  std::string file, second_file, identity, alpha_file, out_path = "-";
  std::string order = "lr", family_name_flag, alpha_flag, beta_flag, gamma_flag, delta_flag,
              field_flag = "rationals";
  std::size_t dim = 2;
  unsigned prime = 2;
  bool classify = false;

  CLI::App* check = app.add_subcommand("check", "evaluate an identity on an algebra file");
  check->add_option("file", file, "algebra or hom-algebra document (\"-\" for stdin)")
      ->required();
  check->add_option("--identity", identity, "identity name (kebab-case)")->required();
  check->add_option("--alpha", alpha_file, "twist override: {\"field\", \"matrix\"} file");
  check->add_option("--out", out_path, "output path (\"-\" for stdout)");

  CLI::App* semidirect_cmd =
      app.add_subcommand("semidirect", "semidirect product of a bimodule document");
  semidirect_cmd->add_option("file", file, "bimodule document")->required();
  semidirect_cmd->add_option("--out", out_path, "output path");

  CLI::App* double_cmd =
      app.add_subcommand("double", "double algebra of a matched-pair document");
  double_cmd->add_option("file", file, "matched-pair document")->required();
  double_cmd->add_option("--out", out_path, "output path");

  CLI::App* manin_cmd = app.add_subcommand(
      "manin", "double of an algebra and a coproduct, with the canonical form");
  manin_cmd->add_option("algebra", file, "algebra document")->required();
  manin_cmd->add_option("coproduct", second_file, "coproduct document")->required();
  manin_cmd->add_option("--out", out_path, "output path");

  CLI::App* dual_cmd =
      app.add_subcommand("dual-bimodule", "dual actions of a bimodule document");
  dual_cmd->add_option("file", file, "bimodule document")->required();
  dual_cmd->add_option("--order", order, "slot order: lr (default) or rl");
  dual_cmd->add_option("--out", out_path, "output path");

  CLI::App* comm_cmd = app.add_subcommand("commutator", "commutator bracket of an algebra");
  comm_cmd->add_option("file", file, "algebra or hom-algebra document")->required();
  comm_cmd->add_option("--out", out_path, "output path");

  CLI::App* family_cmd =
      app.add_subcommand("family", "build a classified two-dimensional table");
  family_cmd->add_option("--name", family_name_flag, "family name: I, II, or III")->required();
  family_cmd->add_option("--alpha", alpha_flag, "first parameter")->required();
  family_cmd->add_option("--beta", beta_flag, "second parameter")->required();
  family_cmd->add_option("--gamma", gamma_flag, "third parameter (family III)");
  family_cmd->add_option("--delta", delta_flag, "square root of gamma^2+4*alpha*beta");
  family_cmd->add_option("--field", field_flag,
                         "rationals (default), prime:<p>, or quadratic:<d>");
  family_cmd->add_option("--out", out_path, "output path");

  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "exhaustive finite-field census of an identity");
  enum_cmd->add_option("--dim", dim, "dimension (1-3)")->required();
  enum_cmd->add_option("--prime", prime, "field size (prime, <= 7)")->required();
  enum_cmd->add_option("--identity", identity, "identity name (kebab-case)")->required();
  enum_cmd->add_flag("--classify", classify, "partition into isomorphism classes (dim 2)");
  enum_cmd->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return run_check(file, identity, alpha_file, out_path);
    if (semidirect_cmd->parsed()) return run_semidirect(file, out_path);
    if (double_cmd->parsed()) return run_double(file, out_path);
    if (manin_cmd->parsed()) return run_manin(file, second_file, out_path);
    if (dual_cmd->parsed()) return run_dual_bimodule(file, order, out_path);
    if (comm_cmd->parsed()) return run_commutator(file, out_path);
    if (family_cmd->parsed())
      return run_family(family_name_flag, alpha_flag, beta_flag, gamma_flag, delta_flag,
                        field_flag, out_path);
    if (enum_cmd->parsed()) return run_enumerate(dim, prime, identity, classify, out_path);
  } catch (const Error& err) {
    return report_error(out_path, err);
  } catch (const std::exception& ex) {
    std::cerr << "unexpected error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
