#pragma once

#include <string>

#include <json.hpp>

#include "nearassoc/bialgebra.hpp"
#include "nearassoc/bimodule.hpp"
#include "nearassoc/classify2d.hpp"
#include "nearassoc/matched_pair.hpp"

namespace nearassoc::io {

using json = nlohmann::json;

// ---- field descriptors and scalar text ------------------------------------

json field_to_json(const FieldContext& ctx);
FieldContext field_from_json(const json& j);

// ---- document builders (schema-tagged, canonical key order) ----------------

json algebra_doc(const Algebra& alg);
json hom_algebra_doc(const HomAlgebra& h);
json bimodule_doc(const Bimodule& b);
json matched_pair_doc(const MatchedPair& mp);
json coproduct_doc(const Coproduct& cp);
json form_doc(const BilinearForm& form);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldContext& ctx, std::size_t rows,
                        std::size_t cols);

// ---- document parsers (ParseError on any malformed input) ------------------

Algebra algebra_from_doc(const json& doc);
// Accepts both "algebra" (identity twist) and "hom-algebra" documents.
HomAlgebra hom_algebra_from_doc(const json& doc);
Bimodule bimodule_from_doc(const json& doc);
MatchedPair matched_pair_from_doc(const json& doc);
Coproduct coproduct_from_doc(const json& doc);
BilinearForm form_from_doc(const json& doc);

// A bare {"field": ..., "matrix": [[...]]} file (used for twist overrides).
Matrix matrix_from_doc(const json& doc);

// ---- reports ----------------------------------------------------------------

json check_report_doc(const CheckReport& report);
json classify_report_doc(const ClassifyReport& report);
std::string classify_report_table(const ClassifyReport& report);

// One human-readable line for a check outcome, with 1-based basis labels.
std::string check_report_line(const CheckReport& report);

// ---- serialization and transport -------------------------------------------

// Two-space indented, sorted keys, trailing newline.
std::string dump_canonical(const json& doc);

// Parses text into a document; malformed JSON becomes ParseError with the
// parser's position message.
json parse_document(const std::string& text);

// "-" means stdin / stdout.
std::string read_input(const std::string& path);
void write_output(const std::string& path, const std::string& text);

}  // namespace nearassoc::io
