// Copyright 2026 The pauliframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pauliframe/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pframe {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what(), 1, 1);
  }
}

void check_header(const Json& doc, const std::string& format) {
  if (!doc.is_object() || !doc.contains("format") ||
      doc["format"] != format) {
    throw ParseError("expected a '" + format + "' document", 1, 1);
  }
  if (!doc.contains("layout_version") ||
      doc["layout_version"].get<int>() != kLayoutVersion) {
    throw ParseError("unsupported layout_version in '" + format +
                         "' document",
                     1, 1);
  }
}

Json complex_pair(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex pair_to_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("expected an [re, im] pair", 1, 1);
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json values_to_json(const RealVector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

RealVector json_to_values(const Json& arr) {
  if (!arr.is_array()) throw ParseError("expected an array of numbers", 1, 1);
  RealVector v(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) v[i] = arr[i].get<double>();
  return v;
}

Json tensor_doc(const char* kind, int m, const RealVector& values) {
  Json doc;
  doc["format"] = "tensor";
  doc["layout_version"] = kLayoutVersion;
  doc["kind"] = kind;
  doc["m"] = m;
  doc["values"] = values_to_json(values);
  return doc;
}

}  // namespace

DocKind peek_kind(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("format")) {
    throw ParseError("document has no 'format' field", 1, 1);
  }
  const std::string format = doc["format"].get<std::string>();
  if (format == "projector-set") return DocKind::projector_set;
  if (format == "density") return DocKind::density;
  if (format == "ptm") return DocKind::ptm;
  if (format == "tensor") {
    const std::string kind = doc.value("kind", "");
    if (kind == "pauli") return DocKind::pauli_tensor;
    if (kind == "probability") return DocKind::probability_tensor;
    throw ParseError("tensor document with unknown kind '" + kind + "'", 1, 1);
  }
  throw ParseError("unknown document format '" + format + "'", 1, 1);
}

std::string set_to_text(const ProjectorSet& set) {
  Json doc;
  doc["format"] = "projector-set";
  doc["layout_version"] = kLayoutVersion;
  doc["dim"] = set.dim;
  doc["label"] = set.label;
  Json kets = Json::array();
  for (const ComplexVector& v : set.kets) {
    Json ket = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) ket.push_back(complex_pair(v[i]));
    kets.push_back(std::move(ket));
  }
  doc["kets"] = std::move(kets);
  return doc.dump(2) + "\n";
}

ProjectorSet set_from_text(const std::string& text) {
  const Json doc = parse_json(text);
  check_header(doc, "projector-set");
  const int dim = doc.at("dim").get<int>();
  std::vector<ComplexVector> kets;
  for (const Json& jket : doc.at("kets")) {
    ComplexVector v(jket.size());
    for (size_t i = 0; i < jket.size(); ++i) v[i] = pair_to_complex(jket[i]);
    kets.push_back(std::move(v));
  }
  return make_projector_set(dim, std::move(kets), doc.value("label", ""));
}

std::string pauli_tensor_to_text(const PauliParameterTensor& t) {
  return tensor_doc("pauli", t.m, t.values).dump(2) + "\n";
}

PauliParameterTensor pauli_tensor_from_text(const std::string& text) {
  const Json doc = parse_json(text);
  check_header(doc, "tensor");
  if (doc.value("kind", "") != "pauli") {
    throw ParseError("expected a pauli tensor document", 1, 1);
  }
  const int m = doc.at("m").get<int>();
  PauliParameterTensor t{m, json_to_values(doc.at("values"))};
  if (m < 1 || t.values.size() != pow_ll(4, m)) {
    throw ParseError("pauli tensor with m = " + std::to_string(m) +
                         " must hold 4^m values",
                     1, 1);
  }
  return t;
}

std::string probability_tensor_to_text(const ProbabilityTensor& p) {
  return tensor_doc("probability", p.m, p.values).dump(2) + "\n";
}

ProbabilityTensor probability_tensor_from_text(const std::string& text) {
  const Json doc = parse_json(text);
  check_header(doc, "tensor");
  if (doc.value("kind", "") != "probability") {
    throw ParseError("expected a probability tensor document", 1, 1);
  }
  const int m = doc.at("m").get<int>();
  ProbabilityTensor p{m, json_to_values(doc.at("values"))};
  if (m < 1 || p.values.size() != pow_ll(6, m)) {
    throw ParseError("probability tensor with m = " + std::to_string(m) +
                         " must hold 6^m values",
                     1, 1);
  }
  return p;
}

std::string density_to_text(const ComplexMatrix& rho) {
  Json doc;
  doc["format"] = "density";
  doc["layout_version"] = kLayoutVersion;
  doc["dim"] = rho.rows();
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      entries.push_back(complex_pair(rho(i, j)));
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

ComplexMatrix density_from_text(const std::string& text) {
  const Json doc = parse_json(text);
  check_header(doc, "density");
  const Eigen::Index dim = doc.at("dim").get<Eigen::Index>();
  const Json& entries = doc.at("entries");
  if (!entries.is_array() ||
      static_cast<Eigen::Index>(entries.size()) != dim * dim) {
    throw ParseError("density document must hold dim^2 entries", 1, 1);
  }
  ComplexMatrix rho(dim, dim);
  size_t k = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      rho(i, j) = pair_to_complex(entries[k++]);
    }
  }
  return rho;
}

std::string ptm_to_text(const PauliTransferMatrix& a) {
  Json doc;
  doc["format"] = "ptm";
  doc["layout_version"] = kLayoutVersion;
  doc["arity"] = a.arity;
  doc["trace_preserving"] = a.trace_preserving;
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < a.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.entries.cols(); ++j) {
      entries.push_back(a.entries(i, j));
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

PauliTransferMatrix ptm_from_text(const std::string& text) {
  const Json doc = parse_json(text);
  check_header(doc, "ptm");
  const int arity = doc.at("arity").get<int>();
  const long long size = pow_ll(4, arity);
  const Json& entries = doc.at("entries");
  if (!entries.is_array() ||
      static_cast<long long>(entries.size()) != size * size) {
    throw ParseError("ptm document must hold 16^arity entries", 1, 1);
  }
  PauliTransferMatrix a;
  a.arity = arity;
  a.trace_preserving = doc.value("trace_preserving", false);
  a.entries = RealMatrix(size, size);
  size_t k = 0;
  for (long long i = 0; i < size; ++i) {
    for (long long j = 0; j < size; ++j) {
      a.entries(i, j) = entries[k++].get<double>();
    }
  }
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace pframe
