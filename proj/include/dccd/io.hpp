#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "design.hpp"
#include "expansion.hpp"
#include "one_factorization.hpp"

namespace dccd {

/* A design plus the optional labeling carried by its file form. */
struct design_document {
  design d;
  std::optional<std::string> name;
  std::optional<std::string> provenance;
};

/* Canonical text form: UTF-8, LF, two-space indent, keys in alphabetical
   order, every block sorted ascending. Emitting the same design twice
   yields byte-identical output. */
inline std::string emit_design(const design_document& doc)
{
  nlohmann::json j;
  j["v"] = doc.d.v;
  j["k"] = doc.d.k;
  j["circular"] = doc.d.circular;
  j["blocks"] = doc.d.blocks;
  if (doc.name) j["name"] = *doc.name;
  if (doc.provenance) j["provenance"] = *doc.provenance;
  return j.dump(2) + "\n";
}

inline std::string emit_design(const design& d)
{
  return emit_design(design_document{d, std::nullopt, std::nullopt});
}

inline design_document parse_design(const std::string& text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parameter_error(std::string("design document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw parameter_error("design document must be a JSON object");
  for (auto& [key, val] : j.items()) {
    if (key != "v" && key != "k" && key != "circular" && key != "blocks" && key != "name" &&
        key != "provenance")
      throw parameter_error("design document has unknown field '" + key + "'");
  }
  if (!j.contains("v") || !j["v"].is_number_integer())
    throw parameter_error("design document needs an integer field 'v'");
  if (!j.contains("k") || !j["k"].is_number_integer())
    throw parameter_error("design document needs an integer field 'k'");
  if (!j.contains("circular") || !j["circular"].is_boolean())
    throw parameter_error("design document needs a boolean field 'circular'");
  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw parameter_error("design document needs an array field 'blocks'");

  std::vector<block> blocks;
  for (const auto& jb : j["blocks"]) {
    if (!jb.is_array()) throw parameter_error("'blocks' must be an array of arrays");
    block b;
    for (const auto& x : jb) {
      if (!x.is_number_integer()) throw parameter_error("block entries must be integers");
      b.push_back(x.get<int>());
    }
    blocks.push_back(std::move(b));
  }

  design_document doc;
  doc.d = design(j["v"].get<int>(), j["k"].get<int>(), j["circular"].get<bool>(),
                 std::move(blocks));
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw parameter_error("'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) throw parameter_error("'provenance' must be a string");
    doc.provenance = j["provenance"].get<std::string>();
  }
  return doc;
}

/**
 * Table form: one column per block, elements kept on their row while they
 * persist, introduced elements starred. Mirrors the usual presentation of
 * these designs.
 */
inline std::string pretty_design(const design& d)
{
  auto intro = introductions(d);
  std::vector<std::vector<std::string>> cells(d.k, std::vector<std::string>(d.b()));
  std::vector<int> row_of(d.v, -1);

  for (int i = 0; i < d.b(); ++i) {
    std::vector<int> free_rows;
    if (i == 0) {
      for (int r = 0; r < d.k; ++r) free_rows.push_back(r);
    } else {
      std::vector<char> taken(d.k, 0);
      for (int x : d.blocks[i])
        if (!std::binary_search(intro[i].begin(), intro[i].end(), x)) taken[row_of[x]] = 1;
      for (int r = 0; r < d.k; ++r)
        if (!taken[r]) free_rows.push_back(r);
    }
    std::size_t next_free = 0;
    for (int x : d.blocks[i]) {
      bool fresh = std::binary_search(intro[i].begin(), intro[i].end(), x);
      // an element of B_1 that is not introduced (circular wrap) keeps no
      // prior row; treat it like a fresh placement without the star
      bool placed = !fresh && i > 0;
      int r = placed ? row_of[x] : static_cast<int>(free_rows[next_free++]);
      row_of[x] = r;
      cells[r][i] = std::to_string(x) + (fresh ? "*" : "");
    }
  }

  std::vector<std::size_t> width(d.b());
  for (int i = 0; i < d.b(); ++i) {
    width[i] = 1 + std::to_string(i + 1).size(); // "B<i>"
    for (int r = 0; r < d.k; ++r) width[i] = std::max(width[i], cells[r][i].size());
  }

  std::ostringstream os;
  for (int i = 0; i < d.b(); ++i) {
    std::string h = "B" + std::to_string(i + 1);
    os << h << std::string(width[i] - h.size() + (i + 1 < d.b() ? 2 : 0), ' ');
  }
  os << "\n";
  for (int r = 0; r < d.k; ++r) {
    for (int i = 0; i < d.b(); ++i) {
      os << cells[r][i];
      if (i + 1 < d.b()) os << std::string(width[i] - cells[r][i].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

inline std::string emit_factorization(const one_factorization& f)
{
  nlohmann::json j;
  j["n"] = f.n;
  auto& factors = j["factors"] = nlohmann::json::array();
  for (const auto& factor : f.factors) {
    nlohmann::json jf = nlohmann::json::array();
    for (auto [a, b] : factor) jf.push_back({a, b});
    factors.push_back(std::move(jf));
  }
  return j.dump(2) + "\n";
}

inline std::string emit_expansion_set(const expansion_set& e)
{
  nlohmann::json j;
  j["locations"] = e.locations;
  j["parts"] = e.parts;
  return j.dump(2) + "\n";
}

} // namespace dccd
