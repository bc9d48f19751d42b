#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "nearassoc/io.hpp"

using namespace nearassoc;
using io::json;

namespace {

const FieldContext kQ = FieldContext::rationals();

Algebra sample_b() {
  Algebra a(kQ, 2);
  a.at(0, 0, 1) = Scalar::one(kQ);
  a.at(0, 1, 0) = Scalar::one(kQ);
  a.at(1, 0, 0) = Scalar::one(kQ);
  a.at(1, 1, 1) = Scalar::one(kQ);
  return a;
}

}  // namespace

TEST_CASE("canonical dumps are stable byte for byte") {
  const json doc = io::algebra_doc(sample_b());
  const std::string text = io::dump_canonical(doc);
  CHECK(text.back() == '\n');
  // keys come out sorted regardless of insertion order
  CHECK(text.find("\"constants\"") < text.find("\"field\""));
  CHECK(text.find("\"field\"") < text.find("\"schema\""));
  // re-parsing and re-dumping reproduces the exact bytes
  CHECK(io::dump_canonical(io::parse_document(text)) == text);
}

TEST_CASE("algebra documents round-trip") {
  const Algebra a = sample_b();
  const Algebra back = io::algebra_from_doc(io::algebra_doc(a));
  CHECK(back == a);
  CHECK(back.context() == kQ);

  // scalars survive as exact strings
  Algebra frac(kQ, 1);
  frac.at(0, 0, 0) = Scalar::parse(kQ, "-22/7");
  const json doc = io::algebra_doc(frac);
  CHECK(doc["constants"][0][0][0] == "-22/7");
  CHECK(io::algebra_from_doc(doc) == frac);
}

TEST_CASE("field descriptors round-trip for all three kinds") {
  for (const FieldContext& ctx : {FieldContext::rationals(), FieldContext::prime(13),
                                  FieldContext::quadratic(-5)}) {
    CHECK(io::field_from_json(io::field_to_json(ctx)) == ctx);
  }
  CHECK(io::field_to_json(FieldContext::prime(13))["p"] == 13);
  CHECK(io::field_to_json(FieldContext::quadratic(-5))["d"] == -5);
  CHECK(io::field_to_json(kQ)["kind"] == "rationals");

  // invalid descriptors become ParseError, including factory rejections
  CHECK_THROWS_AS(io::field_from_json(json{{"kind", "reals"}}), Error);
  try {
    io::field_from_json(json{{"kind", "prime"}, {"p", 4}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("numeric scalars are rejected: exactness demands strings") {
  json doc = io::algebra_doc(sample_b());
  doc["constants"][0][0][1] = 1;  // a JSON number, not "1"
  CHECK_THROWS_AS(io::algebra_from_doc(doc), Error);
}

TEST_CASE("shape errors in constants are caught") {
  json doc = io::algebra_doc(sample_b());
  doc["constants"][0][0].push_back("0");  // cell of length 3 in a dim-2 tensor
  try {
    io::algebra_from_doc(doc);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("wrong length") != std::string::npos);
  }

  json short_row = io::algebra_doc(sample_b());
  short_row["constants"][1].erase(1);
  CHECK_THROWS_AS(io::algebra_from_doc(short_row), Error);

  json not_tagged = io::algebra_doc(sample_b());
  not_tagged["schema"] = "coproduct";
  CHECK_THROWS_AS(io::algebra_from_doc(not_tagged), Error);

  json missing = io::algebra_doc(sample_b());
  missing.erase("field");
  CHECK_THROWS_AS(io::algebra_from_doc(missing), Error);
}

TEST_CASE("hom-algebra documents carry the twist") {
  Matrix alpha(kQ, 2, 2);
  alpha.at(0, 0) = Scalar::one(kQ);
  alpha.at(0, 1) = Scalar::of_int(kQ, 3);
  const HomAlgebra h(sample_b(), alpha);
  const json doc = io::hom_algebra_doc(h);
  CHECK(doc["schema"] == "hom-algebra");
  const HomAlgebra back = io::hom_algebra_from_doc(doc);
  CHECK(back.alg == h.alg);
  CHECK(back.alpha == h.alpha);

  // plain algebra documents parse as identity-twisted hom-algebras
  const HomAlgebra lifted = io::hom_algebra_from_doc(io::algebra_doc(sample_b()));
  CHECK(lifted.alpha.is_identity());
}

TEST_CASE("bimodule and matched-pair documents round-trip") {
  const Bimodule reg = regular_bimodule(with_identity_twist(sample_b()));
  const Bimodule b = io::bimodule_from_doc(io::bimodule_doc(reg));
  CHECK(b.vdim == reg.vdim);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(b.l[i] == reg.l[i]);
    CHECK(b.r[i] == reg.r[i]);
  }
  CHECK(b.phi == reg.phi);
  CHECK(b.base.alg == reg.base.alg);

  const MatchedPair mp = assemble_dual_matched_pair(sample_b(), Algebra(kQ, 2));
  const MatchedPair back = io::matched_pair_from_doc(io::matched_pair_doc(mp));
  CHECK(back.a.alg == mp.a.alg);
  CHECK(back.b.alg == mp.b.alg);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.la[i] == mp.la[i]);
    CHECK(back.ra[i] == mp.ra[i]);
    CHECK(back.lb[i] == mp.lb[i]);
    CHECK(back.rb[i] == mp.rb[i]);
  }
}

TEST_CASE("coproduct and form documents round-trip") {
  Coproduct cp(kQ, 2);
  cp.at(0, 1, 1) = Scalar::parse(kQ, "5/3");
  cp.at(1, 0, 1) = Scalar::of_int(kQ, -2);
  const Coproduct back = io::coproduct_from_doc(io::coproduct_doc(cp));
  CHECK(back == cp);

  Matrix gram(kQ, 2, 2);
  gram.at(0, 1) = Scalar::one(kQ);
  gram.at(1, 0) = Scalar::one(kQ);
  const BilinearForm form(gram);
  CHECK(io::form_from_doc(io::form_doc(form)).matrix() == gram);

  // asymmetric matrices are rejected at parse time as ParseError
  json bad = io::form_doc(form);
  bad["matrix"][0][1] = "2";
  try {
    io::form_from_doc(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("check reports serialize their witness") {
  const CheckReport ok = check_identity(sample_b(), IdentityId::NearlyAssociative);
  const json good = io::check_report_doc(ok);
  CHECK(good["schema"] == "report");
  CHECK(good["kind"] == "check");
  CHECK(good["holds"] == true);
  CHECK(!good.contains("witness"));

  Algebra t(kQ, 2);
  t.at(0, 0, 0) = Scalar::one(kQ);
  t.at(0, 1, 1) = Scalar::one(kQ);
  const CheckReport bad = check_identity(t, IdentityId::NearlyAssociative);
  const json doc = io::check_report_doc(bad);
  CHECK(doc["holds"] == false);
  REQUIRE(doc.contains("witness"));
  CHECK(doc["witness"]["where"] == "basis triple");
  CHECK(doc["witness"]["at"].is_array());
  CHECK(doc["witness"]["lhs"].size() == 2);
}

TEST_CASE("human-readable lines use one-based labels") {
  Algebra t(kQ, 2);
  t.at(0, 0, 0) = Scalar::one(kQ);
  t.at(0, 1, 1) = Scalar::one(kQ);
  const CheckReport bad = check_identity(t, IdentityId::NearlyAssociative);
  REQUIRE(bad.witness.has_value());
  const std::string line = io::check_report_line(bad);
  CHECK(line.find("nearly-associative: fails") == 0);
  CHECK(line.find("basis triple") != std::string::npos);
  // 0-based (0, 0, 1) renders as (1, 1, 2)
  std::string rendered = "(";
  for (std::size_t idx : bad.witness->at) {
    if (rendered.size() > 1) rendered += ", ";
    rendered += std::to_string(idx + 1);
  }
  rendered += ")";
  CHECK(line.find(rendered) != std::string::npos);

  CHECK(io::check_report_line(check_identity(t, IdentityId::Associative)) ==
        "associative: holds");
}

TEST_CASE("classification reports serialize and tabulate") {
  const ClassifyReport rep = classify_report_fp(2);
  const json doc = io::classify_report_doc(rep);
  CHECK(doc["schema"] == "report");
  CHECK(doc["kind"] == "classification");
  CHECK(doc["classes"].size() == 6);
  CHECK(doc["classes"][0].contains("representative"));
  CHECK(doc["classes"][0].contains("size"));

  const std::string table = io::classify_report_table(rep);
  CHECK(table.find("isomorphism classes over F_2") != std::string::npos);
  CHECK(table.find("family gap") != std::string::npos);
  CHECK(table.find("zero product") != std::string::npos);
}

TEST_CASE("malformed JSON carries the parser position") {
  try {
    io::parse_document("{\"schema\": ");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  CHECK_THROWS_AS(io::parse_document(""), Error);
  CHECK_THROWS_AS(io::parse_document("[1, 2"), Error);
}

TEST_CASE("matrix json enforces the requested shape") {
  Matrix m(kQ, 2, 3);
  m.at(1, 2) = Scalar::of_int(kQ, 9);
  const json j = io::matrix_to_json(m);
  CHECK(io::matrix_from_json(j, kQ, 2, 3) == m);
  CHECK_THROWS_AS(io::matrix_from_json(j, kQ, 3, 2), Error);
  CHECK_THROWS_AS(io::matrix_from_json(j, kQ, 2, 2), Error);
}

TEST_CASE("file transport reads what it wrote") {
  const std::string path = "io_roundtrip_scratch.json";
  const std::string text = io::dump_canonical(io::algebra_doc(sample_b()));
  io::write_output(path, text);
  CHECK(io::read_input(path) == text);
  std::remove(path.c_str());

  CHECK_THROWS_AS(io::read_input("definitely/not/a/real/path.json"), Error);
}
