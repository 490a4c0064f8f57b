#include "donsum/manifold_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "donsum/errors.hpp"
#include "donsum/exppoly.hpp"

namespace donsum {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(Errc::Parse, std::string("missing key \"") + key + "\"");
  return *it;
}

long as_long(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw Error(Errc::Parse, what + " must be an integer");
  return v.get<long>();
}

IntVec as_vector(const json& v, const std::string& what) {
  if (!v.is_array()) throw Error(Errc::Parse, what + " must be an array of integers");
  IntVec out;
  for (const json& x : v) out.push_back(as_long(x, what + " entry"));
  return out;
}

GaussRat as_coeff(const json& v, const std::string& what) {
  if (!v.is_string()) throw Error(Errc::Parse, what + " must be an exact string such as \"1/4\"");
  return parse_gaussrat(v.get<std::string>());
}

}  // namespace

StructureSeries parse_manifold(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::Parse, "document must be a JSON object");

  const long rank = as_long(require(doc, "rank"), "rank");
  if (rank <= 0) throw Error(Errc::Validation, "[vector length] rank must be positive");
  const json& form = require(doc, "form");
  if (!form.is_array()) throw Error(Errc::Parse, "form must be an array of rows");
  std::vector<long> entries;
  for (const json& row : form) {
    const IntVec r = as_vector(row, "form row");
    if (static_cast<long>(r.size()) != rank) {
      throw Error(Errc::Validation, "[vector length] form row of length " + std::to_string(r.size()) +
                                        ", rank is " + std::to_string(rank));
    }
    entries.insert(entries.end(), r.begin(), r.end());
  }
  if (static_cast<long>(form.size()) != rank) {
    throw Error(Errc::Validation, "[vector length] form has " + std::to_string(form.size()) + " rows, rank is " +
                                      std::to_string(rank));
  }

  ManifoldDescriptor m;
  const json& name = require(doc, "name");
  if (!name.is_string()) throw Error(Errc::Parse, "name must be a string");
  m.name = name.get<std::string>();
  m.lattice = Lattice(static_cast<std::size_t>(rank), std::move(entries));

  const json& classes = require(doc, "classes");
  if (!classes.is_object()) throw Error(Errc::Parse, "classes must be an object");
  m.sigma = as_vector(require(classes, "sigma"), "classes.sigma");
  m.w = as_vector(require(classes, "w"), "classes.w");
  for (const auto& [key, value] : classes.items()) {
    if (key == "sigma" || key == "w") continue;
    if (key == "dbar") {
      m.dbar = as_vector(value, "classes.dbar");
    } else {
      m.classes[key] = as_vector(value, "classes." + key);
    }
  }
  m.genus = as_long(require(doc, "genus"), "genus");
  m.b_plus = as_long(require(doc, "b_plus"), "b_plus");
  m.b1 = doc.contains("b1") ? as_long(doc["b1"], "b1") : 0;
  m.euler = as_long(require(doc, "euler"), "euler");
  m.signature = as_long(require(doc, "signature"), "signature");
  const json& st = require(doc, "simple_type");
  if (!st.is_boolean()) throw Error(Errc::Parse, "simple_type must be true or false");
  m.simple_type = st.get<bool>();

  StructureSeries s{std::move(m), {}};
  const json& basics = require(doc, "basic_classes");
  if (!basics.is_array()) throw Error(Errc::Parse, "basic_classes must be an array");
  for (const json& b : basics) {
    if (!b.is_object()) throw Error(Errc::Parse, "basic class entries must be objects");
    BasicClass bc;
    bc.k = as_vector(require(b, "vector"), "basic class vector");
    bc.coeff = as_coeff(require(b, "coeff"), "basic class coeff");
    if (b.contains("sw")) bc.sw = as_coeff(b["sw"], "basic class sw");
    s.classes.push_back(std::move(bc));
  }
  return s;
}

StructureSeries load_manifold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifold(buf.str());
}

std::string serialize_manifold(const StructureSeries& s) {
  const ManifoldDescriptor& m = s.owner;
  const std::size_t rank = m.lattice.rank();
  json form = json::array();
  for (std::size_t i = 0; i < rank; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rank; ++j) row.push_back(m.lattice.form(i, j));
    form.push_back(std::move(row));
  }
  json classes{{"sigma", m.sigma}, {"w", m.w}};
  if (m.dbar) classes["dbar"] = *m.dbar;
  for (const auto& [key, v] : m.classes) classes[key] = v;
  json basics = json::array();
  for (const BasicClass& b : s.classes) {
    json item{{"vector", b.k}, {"coeff", b.coeff.str()}};
    if (b.sw) item["sw"] = b.sw->str();
    basics.push_back(std::move(item));
  }
  json doc{{"name", m.name},
           {"rank", rank},
           {"form", std::move(form)},
           {"classes", std::move(classes)},
           {"genus", m.genus},
           {"b_plus", m.b_plus},
           {"b1", m.b1},
           {"euler", m.euler},
           {"signature", m.signature},
           {"simple_type", m.simple_type},
           {"basic_classes", std::move(basics)}};
  return doc.dump(2) + "\n";
}

}  // namespace donsum
