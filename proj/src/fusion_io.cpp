#include "center_kit/fusion_io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ck {

using nlohmann::json;

namespace {

std::string line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw Error(codes::kParse, where + ": missing field '" + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) throw Error(codes::kParse, where + "." + key + ": expected an integer");
  return v.get<int>();
}

double real_value(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    size_t used = 0;
    double x = 0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(codes::kParse, where + ": '" + s + "' is not a decimal number");
    return x;
  }
  throw Error(codes::kParse, where + ": expected a number or decimal string");
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

FusionCategory parse_fusion_data(const std::string& text, const std::string& name_hint) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(codes::kParse, "malformed JSON at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(codes::kParse, "top level must be an object");

  const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : name_hint;
  const json& jl = field(doc, "labels", "document");
  if (!jl.is_array() || jl.empty()) throw Error(codes::kParse, "labels: expected a nonempty array of strings");
  std::vector<std::string> labels;
  for (size_t i = 0; i < jl.size(); ++i) {
    if (!jl[i].is_string()) throw Error(codes::kParse, "labels[" + std::to_string(i) + "]: expected a string");
    labels.push_back(jl[i].get<std::string>());
    for (size_t k = 0; k + 1 < labels.size(); ++k)
      if (labels[k] == labels.back()) throw Error(codes::kParse, "labels: duplicate label '" + labels.back() + "'");
  }
  const int n = static_cast<int>(labels.size());
  auto index = [&](const json& v, const std::string& where) {
    if (!v.is_string()) throw Error(codes::kParse, where + ": expected a label string");
    const std::string s = v.get<std::string>();
    for (int i = 0; i < n; ++i)
      if (labels[i] == s) return i;
    throw Error(codes::kLabelUnknown, where + ": unknown label '" + s + "'");
  };

  if (!doc.contains("unit")) throw Error(codes::kUnitMissing, "document: no 'unit' field");
  int unit = -1;
  try {
    unit = index(doc["unit"], "unit");
  } catch (const Error&) {
    throw Error(codes::kUnitMissing, "unit: does not name a label");
  }

  const json& jd = field(doc, "dual", "document");
  if (!jd.is_object()) throw Error(codes::kParse, "dual: expected an object");
  std::vector<int> dual(n, -1);
  for (auto it = jd.begin(); it != jd.end(); ++it) {
    const int a = index(json(it.key()), "dual");
    dual[a] = index(it.value(), "dual." + it.key());
  }
  for (int a = 0; a < n; ++a)
    if (dual[a] < 0) throw Error(codes::kDualNotInvolutive, "dual: no dual given for '" + labels[a] + "'");

  const json& jdim = field(doc, "dims", "document");
  if (!jdim.is_object()) throw Error(codes::kParse, "dims: expected an object");
  std::vector<double> dims(n, 0.0);
  std::vector<bool> seen(n, false);
  for (auto it = jdim.begin(); it != jdim.end(); ++it) {
    const int a = index(json(it.key()), "dims");
    dims[a] = real_value(it.value(), "dims." + it.key());
    seen[a] = true;
  }
  for (int a = 0; a < n; ++a)
    if (!seen[a]) throw Error(codes::kDimInvalid, "dims: no dimension given for '" + labels[a] + "'");

  const json& jf = field(doc, "fusion", "document");
  if (!jf.is_array()) throw Error(codes::kParse, "fusion: expected an array");
  std::vector<int> fusion(n * n * n, 0);
  for (size_t i = 0; i < jf.size(); ++i) {
    const std::string where = "fusion[" + std::to_string(i) + "]";
    const int a = index(field(jf[i], "a", where), where + ".a");
    const int b = index(field(jf[i], "b", where), where + ".b");
    const int c = index(field(jf[i], "c", where), where + ".c");
    const int N = int_field(jf[i], "N", where);
    if (N < 0) throw Error(codes::kFusionInvalid, where + ".N: negative multiplicity");
    fusion[(a * n + b) * n + c] = N;
  }
  auto Nf = [&](int a, int b, int c) { return fusion[(a * n + b) * n + c]; };

  std::map<FKey, Mat> F;
  if (doc.contains("F")) {
    const json& jF = doc["F"];
    if (!jF.is_array()) throw Error(codes::kParse, "F: expected an array");
    for (size_t i = 0; i < jF.size(); ++i) {
      const std::string where = "F[" + std::to_string(i) + "]";
      const json& x = jF[i];
      const int a = index(field(x, "a", where), where + ".a");
      const int b = index(field(x, "b", where), where + ".b");
      const int c = index(field(x, "c", where), where + ".c");
      const int d = index(field(x, "d", where), where + ".d");
      const int e = index(field(x, "e", where), where + ".e");
      const int f = index(field(x, "f", where), where + ".f");
      const int al = x.contains("alpha") ? int_field(x, "alpha", where) : 0;
      const int be = x.contains("beta") ? int_field(x, "beta", where) : 0;
      const int mu = x.contains("mu") ? int_field(x, "mu", where) : 0;
      const int nu = x.contains("nu") ? int_field(x, "nu", where) : 0;
      const double re = real_value(field(x, "re", where), where + ".re");
      const double im = x.contains("im") ? real_value(x["im"], where + ".im") : 0.0;
      if (al < 0 || al >= Nf(a, b, e) || be < 0 || be >= Nf(e, c, d) || mu < 0 || mu >= Nf(b, c, f) || nu < 0 ||
          nu >= Nf(a, f, d))
        throw Error(codes::kFShape, where + ": channel indices do not match the fusion rules");
      int row = 0, col = 0, nl = 0, nr = 0;
      for (int m = 0; m < n; ++m) {
        if (m == e) row = nl + al * Nf(m, c, d) + be;
        nl += Nf(a, b, m) * Nf(m, c, d);
        if (m == f) col = nr + mu * Nf(a, m, d) + nu;
        nr += Nf(b, c, m) * Nf(a, m, d);
      }
      if (nl != nr) throw Error(codes::kFusionInvalid, where + ": fusion rules are not associative at this block");
      auto [it, inserted] = F.try_emplace(FKey{a, b, c, d}, Mat::Zero(nl, nr));
      it->second(row, col) = cd(re, im);
    }
  }
  return FusionCategory(name, labels, unit, dual, dims, fusion, F);
}

FusionCategory load_fusion_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(codes::kUsage, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fusion_data(ss.str(), std::filesystem::path(path).stem().string());
}

FusionCategory load_category(const std::string& spec) {
  for (const auto& b : builtin_names())
    if (spec == b) return builtin(spec);
  return load_fusion_file(spec);
}

json to_json(const FusionCategory& C) {
  const int n = C.rank();
  json j;
  j["name"] = C.name();
  j["labels"] = C.labels();
  j["unit"] = C.label_name(C.unit());
  j["dual"] = json::object();
  j["dims"] = json::object();
  for (int a = 0; a < n; ++a) {
    j["dual"][C.label_name(a)] = C.label_name(C.dual(a));
    j["dims"][C.label_name(a)] = fmt(C.dim(a));
  }
  j["fusion"] = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (C.N(a, b, c))
          j["fusion"].push_back(
              {{"a", C.label_name(a)}, {"b", C.label_name(b)}, {"c", C.label_name(c)}, {"N", C.N(a, b, c)}});
  j["F"] = json::array();
  for (const auto& [k, M] : C.F_blocks()) {
    if (k[0] == C.unit() || k[1] == C.unit() || k[2] == C.unit()) continue;
    const auto L = C.left_basis(k[0], k[1], k[2], k[3]);
    const auto R = C.right_basis(k[0], k[1], k[2], k[3]);
    for (size_t r = 0; r < L.size(); ++r)
      for (size_t s = 0; s < R.size(); ++s) {
        const cd z = M(r, s);
        if (z == cd(0.0)) continue;
        j["F"].push_back({{"a", C.label_name(k[0])},
                          {"b", C.label_name(k[1])},
                          {"c", C.label_name(k[2])},
                          {"d", C.label_name(k[3])},
                          {"e", C.label_name(L[r].mid)},
                          {"f", C.label_name(R[s].mid)},
                          {"alpha", L[r].i},
                          {"beta", L[r].j},
                          {"mu", R[s].i},
                          {"nu", R[s].j},
                          {"re", z.real()},
                          {"im", z.imag()}});
      }
  }
  return j;
}

std::string serialize(const FusionCategory& C) { return to_json(C).dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string fingerprint(const FusionCategory& C) {
  json j = to_json(C);
  j.erase("name");
  return sha256_hex(j.dump());
}

}  // namespace ck
