#include "nearassoc/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace nearassoc::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(Errc::ParseError, what); }

const json& need(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string need_string(const json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t array_size(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  return j.size();
}

Scalar scalar_from_json(const json& j, const FieldContext& ctx) {
  return Scalar::parse(ctx, need_string(j, "scalar entry"));
}

void require_schema(const json& doc, const char* expected) {
  if (!doc.is_object()) malformed("document must be a JSON object");
  if (need_string(need(doc, "schema"), "schema") != expected)
    malformed(std::string("expected a \"") + expected + "\" document");
}

json constants_to_json(const Algebra& alg) {
  const std::size_t n = alg.dim();
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json cell = json::array();
      for (std::size_t k = 0; k < n; ++k) cell.push_back(alg.at(i, j, k).str());
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Algebra constants_from_json(const json& j, const FieldContext& ctx) {
  const std::size_t n = array_size(j, "\"constants\"");
  if (n == 0 || n > kMaxDim) malformed("dimension must be between 1 and 16");
  Algebra alg(ctx, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (array_size(j[i], "constants row") != n)
      malformed("constants row has the wrong length");
    for (std::size_t jj = 0; jj < n; ++jj) {
      if (array_size(j[i][jj], "constants cell") != n)
        malformed("constants cell has the wrong length");
      for (std::size_t k = 0; k < n; ++k)
        alg.at(i, jj, k) = scalar_from_json(j[i][jj][k], ctx);
    }
  }
  return alg;
}

std::vector<Matrix> matrix_list_from_json(const json& j, const FieldContext& ctx,
                                           std::size_t count, std::size_t rows,
                                           std::size_t cols, const char* what) {
  if (array_size(j, what) != count)
    malformed(std::string(what) + " must hold " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::size_t q = 0; q < count; ++q) out.push_back(matrix_from_json(j[q], ctx, rows, cols));
  return out;
}

json matrix_list_to_json(const std::vector<Matrix>& mats) {
  json out = json::array();
  for (const Matrix& m : mats) out.push_back(matrix_to_json(m));
  return out;
}

json scalar_vec_to_json(const Vec& v) {
  json out = json::array();
  for (const Scalar& s : v) out.push_back(s.str());
  return out;
}

// 1-based basis label like "(1, 2, 1)"
std::string indices_one_based(const std::vector<std::size_t>& at) {
  std::string out = "(";
  for (std::size_t q = 0; q < at.size(); ++q) {
    if (q) out += ", ";
    out += std::to_string(at[q] + 1);
  }
  out += ")";
  return out;
}

std::string render_combination(const Vec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!v[k].is_one()) out += v[k].str() + " ";
    out += "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

json field_to_json(const FieldContext& ctx) {
  json j;
  switch (ctx.kind()) {
    case FieldKind::Rationals:
      j["kind"] = "rationals";
      break;
    case FieldKind::Quadratic:
      j["kind"] = "quadratic";
      j["d"] = ctx.d();
      break;
    case FieldKind::Prime:
      j["kind"] = "prime";
      j["p"] = ctx.p();
      break;
  }
  return j;
}

FieldContext field_from_json(const json& j) {
  if (!j.is_object()) malformed("field descriptor must be an object");
  const std::string kind = need_string(need(j, "kind"), "field kind");
  try {
    if (kind == "rationals") return FieldContext::rationals();
    if (kind == "quadratic") {
      const json& d = need(j, "d");
      if (!d.is_number_integer()) malformed("quadratic field needs an integer \"d\"");
      return FieldContext::quadratic(d.get<long long>());
    }
    if (kind == "prime") {
      const json& p = need(j, "p");
      if (!p.is_number_unsigned() && !p.is_number_integer())
        malformed("prime field needs an integer \"p\"");
      const long long val = p.get<long long>();
      if (val < 2) malformed("prime field needs p >= 2");
      return FieldContext::prime(static_cast<unsigned>(val));
    }
  } catch (const Error& e) {
    malformed(e.what());
  }
  malformed("unknown field kind \"" + kind + "\"");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const FieldContext& ctx, std::size_t rows,
                        std::size_t cols) {
  if (array_size(j, "matrix") != rows) malformed("matrix has the wrong number of rows");
  Matrix m(ctx, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (array_size(j[i], "matrix row") != cols) malformed("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c], ctx);
  }
  return m;
}

json algebra_doc(const Algebra& alg) {
  json doc;
  doc["schema"] = "algebra";
  doc["field"] = field_to_json(alg.context());
  doc["constants"] = constants_to_json(alg);
  return doc;
}

json hom_algebra_doc(const HomAlgebra& h) {
  json doc;
  doc["schema"] = "hom-algebra";
  doc["field"] = field_to_json(h.alg.context());
  doc["constants"] = constants_to_json(h.alg);
  doc["twist"] = matrix_to_json(h.alpha);
  return doc;
}

json bimodule_doc(const Bimodule& b) {
  json doc;
  doc["schema"] = "bimodule";
  doc["field"] = field_to_json(b.base.alg.context());
  json base;
  base["constants"] = constants_to_json(b.base.alg);
  base["twist"] = matrix_to_json(b.base.alpha);
  doc["base"] = std::move(base);
  doc["dim"] = b.vdim;
  doc["left"] = matrix_list_to_json(b.l);
  doc["right"] = matrix_list_to_json(b.r);
  doc["phi"] = matrix_to_json(b.phi);
  return doc;
}

json matched_pair_doc(const MatchedPair& mp) {
  json doc;
  doc["schema"] = "matched-pair";
  doc["field"] = field_to_json(mp.a.alg.context());
  json a, b;
  a["constants"] = constants_to_json(mp.a.alg);
  a["twist"] = matrix_to_json(mp.a.alpha);
  b["constants"] = constants_to_json(mp.b.alg);
  b["twist"] = matrix_to_json(mp.b.alpha);
  doc["a"] = std::move(a);
  doc["b"] = std::move(b);
  doc["la"] = matrix_list_to_json(mp.la);
  doc["ra"] = matrix_list_to_json(mp.ra);
  doc["lb"] = matrix_list_to_json(mp.lb);
  doc["rb"] = matrix_list_to_json(mp.rb);
  return doc;
}

json coproduct_doc(const Coproduct& cp) {
  json doc;
  doc["schema"] = "coproduct";
  doc["field"] = field_to_json(cp.context());
  const std::size_t n = cp.dim();
  json outer = json::array();
  for (std::size_t k = 0; k < n; ++k) {
    json mid = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json inner = json::array();
      for (std::size_t j = 0; j < n; ++j) inner.push_back(cp.at(k, i, j).str());
      mid.push_back(std::move(inner));
    }
    outer.push_back(std::move(mid));
  }
  doc["coproduct"] = std::move(outer);
  return doc;
}

json form_doc(const BilinearForm& form) {
  json doc;
  doc["schema"] = "form";
  doc["field"] = field_to_json(form.context());
  doc["matrix"] = matrix_to_json(form.matrix());
  return doc;
}

Algebra algebra_from_doc(const json& doc) {
  require_schema(doc, "algebra");
  const FieldContext ctx = field_from_json(need(doc, "field"));
  return constants_from_json(need(doc, "constants"), ctx);
}

HomAlgebra hom_algebra_from_doc(const json& doc) {
  if (!doc.is_object()) malformed("document must be a JSON object");
  const std::string schema = need_string(need(doc, "schema"), "schema");
  if (schema == "algebra") return with_identity_twist(algebra_from_doc(doc));
  if (schema != "hom-algebra") malformed("expected an \"algebra\" or \"hom-algebra\" document");
  const FieldContext ctx = field_from_json(need(doc, "field"));
  Algebra alg = constants_from_json(need(doc, "constants"), ctx);
  const std::size_t n = alg.dim();
  Matrix twist = matrix_from_json(need(doc, "twist"), ctx, n, n);
  return HomAlgebra(std::move(alg), std::move(twist));
}

Bimodule bimodule_from_doc(const json& doc) {
  require_schema(doc, "bimodule");
  const FieldContext ctx = field_from_json(need(doc, "field"));
  const json& base = need(doc, "base");
  if (!base.is_object()) malformed("\"base\" must be an object");
  Algebra alg = constants_from_json(need(base, "constants"), ctx);
  const std::size_t n = alg.dim();
  Matrix twist = matrix_from_json(need(base, "twist"), ctx, n, n);
  const json& dim = need(doc, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0 ||
      dim.get<std::size_t>() > kMaxDim)
    malformed("\"dim\" must be an integer between 1 and 16");
  const std::size_t vdim = dim.get<std::size_t>();
  std::vector<Matrix> l = matrix_list_from_json(need(doc, "left"), ctx, n, vdim, vdim, "\"left\"");
  std::vector<Matrix> r =
      matrix_list_from_json(need(doc, "right"), ctx, n, vdim, vdim, "\"right\"");
  Matrix phi = matrix_from_json(need(doc, "phi"), ctx, vdim, vdim);
  return Bimodule(HomAlgebra(std::move(alg), std::move(twist)), vdim, std::move(l),
                  std::move(r), std::move(phi));
}

MatchedPair matched_pair_from_doc(const json& doc) {
  require_schema(doc, "matched-pair");
  const FieldContext ctx = field_from_json(need(doc, "field"));
  auto half = [&](const char* key) {
    const json& j = need(doc, key);
    if (!j.is_object()) malformed(std::string("\"") + key + "\" must be an object");
    Algebra alg = constants_from_json(need(j, "constants"), ctx);
    const std::size_t n = alg.dim();
    Matrix twist = matrix_from_json(need(j, "twist"), ctx, n, n);
    return HomAlgebra(std::move(alg), std::move(twist));
  };
  HomAlgebra a = half("a");
  HomAlgebra b = half("b");
  const std::size_t n = a.alg.dim();
  const std::size_t m = b.alg.dim();
  std::vector<Matrix> la = matrix_list_from_json(need(doc, "la"), ctx, n, m, m, "\"la\"");
  std::vector<Matrix> ra = matrix_list_from_json(need(doc, "ra"), ctx, n, m, m, "\"ra\"");
  std::vector<Matrix> lb = matrix_list_from_json(need(doc, "lb"), ctx, m, n, n, "\"lb\"");
  std::vector<Matrix> rb = matrix_list_from_json(need(doc, "rb"), ctx, m, n, n, "\"rb\"");
  return MatchedPair(std::move(a), std::move(b), std::move(la), std::move(ra), std::move(lb),
                     std::move(rb));
}

Coproduct coproduct_from_doc(const json& doc) {
  require_schema(doc, "coproduct");
  const FieldContext ctx = field_from_json(need(doc, "field"));
  const json& d = need(doc, "coproduct");
  const std::size_t n = array_size(d, "\"coproduct\"");
  if (n == 0 || n > kMaxDim) malformed("dimension must be between 1 and 16");
  Coproduct cp(ctx, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (array_size(d[k], "coproduct layer") != n)
      malformed("coproduct layer has the wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      if (array_size(d[k][i], "coproduct row") != n)
        malformed("coproduct row has the wrong length");
      for (std::size_t j = 0; j < n; ++j) cp.at(k, i, j) = scalar_from_json(d[k][i][j], ctx);
    }
  }
  return cp;
}

BilinearForm form_from_doc(const json& doc) {
  require_schema(doc, "form");
  const FieldContext ctx = field_from_json(need(doc, "field"));
  const json& m = need(doc, "matrix");
  const std::size_t n = array_size(m, "\"matrix\"");
  if (n == 0 || n > 2 * kMaxDim) malformed("form dimension out of range");
  try {
    return BilinearForm(matrix_from_json(m, ctx, n, n));
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    malformed(e.what());
  }
}

Matrix matrix_from_doc(const json& doc) {
  if (!doc.is_object()) malformed("document must be a JSON object");
  const FieldContext ctx = field_from_json(need(doc, "field"));
  const json& m = need(doc, "matrix");
  const std::size_t rows = array_size(m, "\"matrix\"");
  if (rows == 0) malformed("matrix must not be empty");
  const std::size_t cols = array_size(m[0], "matrix row");
  return matrix_from_json(m, ctx, rows, cols);
}

json check_report_doc(const CheckReport& report) {
  json doc;
  doc["schema"] = "report";
  doc["kind"] = "check";
  doc["check"] = report.check;
  doc["holds"] = report.holds;
  if (report.witness) {
    json w;
    w["where"] = report.witness->where;
    w["at"] = report.witness->at;
    w["lhs"] = scalar_vec_to_json(report.witness->lhs);
    w["rhs"] = scalar_vec_to_json(report.witness->rhs);
    doc["witness"] = std::move(w);
  }
  if (report.trilinear_variant) doc["trilinear_variant"] = *report.trilinear_variant;
  if (!report.warnings.empty()) doc["warnings"] = report.warnings;
  return doc;
}

std::string check_report_line(const CheckReport& report) {
  std::string line = report.check;
  if (report.holds) {
    line += ": holds";
  } else {
    line += ": fails";
    if (report.witness) {
      line += " — " + report.witness->where;
      if (!report.witness->at.empty()) line += " at " + indices_one_based(report.witness->at);
    }
  }
  for (const std::string& w : report.warnings) line += " [warning: " + w + "]";
  return line;
}

json classify_report_doc(const ClassifyReport& report) {
  json doc;
  doc["schema"] = "report";
  doc["kind"] = "classification";
  doc["field"] = field_to_json(report.ctx);
  json classes = json::array();
  for (const IsoClass& cls : report.classes) {
    json c;
    c["representative"] = constants_to_json(cls.representative);
    c["size"] = cls.size;
    c["family_gap"] = cls.family_gap;
    json fams = json::array();
    for (const FamilyInstance& inst : cls.family_matches) {
      json f;
      f["family"] = family_name(inst.family);
      json params = json::array();
      for (const Scalar& s : inst.params) params.push_back(s.str());
      f["params"] = std::move(params);
      fams.push_back(std::move(f));
    }
    c["families"] = std::move(fams);
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  return doc;
}

std::string classify_report_table(const ClassifyReport& report) {
  std::ostringstream os;
  os << "isomorphism classes over " << report.ctx.describe() << "\n";
  os << "class  size  products (1-based basis)";
  os << std::string(18, ' ') << "families\n";
  std::size_t idx = 0;
  for (const IsoClass& cls : report.classes) {
    ++idx;
    std::string products;
    const Algebra& rep = cls.representative;
    for (std::size_t i = 0; i < rep.dim(); ++i)
      for (std::size_t j = 0; j < rep.dim(); ++j) {
        const Vec v = rep.basis_product(i, j);
        if (is_zero(v)) continue;
        if (!products.empty()) products += ", ";
        products += "e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + "=" +
                    render_combination(v);
      }
    if (products.empty()) products = "zero product";
    std::size_t count_i = 0, count_ii = 0, count_iii = 0;
    for (const FamilyInstance& inst : cls.family_matches) {
      if (inst.family == Family::I) ++count_i;
      if (inst.family == Family::II) ++count_ii;
      if (inst.family == Family::III) ++count_iii;
    }
    std::string fams;
    if (count_i) fams += "I x " + std::to_string(count_i);
    if (count_ii) fams += (fams.empty() ? "" : ", ") + std::string("II x ") + std::to_string(count_ii);
    if (count_iii)
      fams += (fams.empty() ? "" : ", ") + std::string("III x ") + std::to_string(count_iii);
    if (cls.family_gap) fams = "family gap";
    std::string size_str = std::to_string(cls.size);
    os << std::string(5 - std::min<std::size_t>(5, std::to_string(idx).size()), ' ') << idx
       << "  ";
    os << std::string(4 - std::min<std::size_t>(4, size_str.size()), ' ') << size_str << "  ";
    if (products.size() < 40)
      os << products << std::string(40 - products.size(), ' ');
    else
      os << products << "  ";
    os << fams << "\n";
  }
  return os.str();
}

std::string dump_canonical(const json& doc) { return doc.dump(2) + "\n"; }

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) malformed("cannot open output file: " + path);
  out << text;
}

}  // namespace nearassoc::io
