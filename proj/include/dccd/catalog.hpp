#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "classify.hpp"
#include "constructions.hpp"
#include "expansion.hpp"

namespace dccd {

namespace detail {

/* Table form of the seven-block ring on seven points; everything else in
   the catalog is rebuilt from its construction. */
inline std::vector<block> seven_point_blocks()
{
  return {{0, 1, 2}, {0, 4, 5}, {2, 3, 4}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}, {1, 3, 5}};
}

inline design expand_by_circle(const design& d)
{
  auto es = find_expansion_set(d);
  if (!es) throw structural_error("catalog: design unexpectedly has no expansion set");
  return expand(d, *es, circle_method(d.v / (d.k - 2) + 1));
}

inline design chain_design(int k, int c)
{
  return expand_by_circle(develop(base_family(k, c)));
}

struct catalog_spec {
  std::function<design()> build;
  std::string provenance;
  bool expect_tight = true;
};

inline const std::map<std::string, catalog_spec>& catalog_registry()
{
  static const std::map<std::string, catalog_spec> registry = [] {
    std::map<std::string, catalog_spec> reg;

    reg["dccd-7-3-7"] = {[] { return design(7, 3, false, seven_point_blocks()); },
                         "stored seven-block double change sequence, linear"};
    reg["cdccd-7-3-7"] = {[] { return design(7, 3, true, seven_point_blocks()); },
                          "stored seven-block double change sequence, circular"};
    reg["cdccd-7-3-7-linear"] = {[] { return design(7, 3, false, seven_point_blocks()); },
                                 "alias of dccd-7-3-7"};

    for (int kp = 2; kp <= 10; ++kp) {
      int v = 2 * kp - 1;
      std::string csccd_name = "csccd-" + std::to_string(v) + "-" + std::to_string(kp) + "-" +
                               std::to_string(v);
      reg[csccd_name] = {[kp] { return csccd_consecutive(kp); },
                         "consecutive-block single change ring, k'=" + std::to_string(kp)};

      int k2 = 2 * kp;
      std::string dbl_name = "cdccd-" + std::to_string(2 * k2 - 2) + "-" + std::to_string(k2) +
                             "-" + std::to_string(k2 - 1);
      reg[dbl_name] = {[kp] { return double_points(csccd_consecutive(kp)); },
                       "point doubling of csccd k'=" + std::to_string(kp)};

      int k3 = k2 + 1;
      std::string adj_name = "cdccd-" + std::to_string(2 * k3 - 3) + "-" + std::to_string(k3) +
                             "-" + std::to_string(k3 - 2);
      reg[adj_name] = {[kp] { return adjoin_point(double_points(csccd_consecutive(kp))); },
                       "point adjunction on doubled ring, k'=" + std::to_string(kp)};
    }

    reg["cdccd-3-3-1"] = {[] { return adjoin_point(design(2, 2, true, {{0, 1}})); },
                          "degenerate point adjunction on the two-point block"};

    reg["cdccd-11-4-11"] = {[] { return develop(base_family(4, 1)); },
                            "difference family (k=4, c=1) developed over Z11"};
    reg["cdccd-13-3-26"] = {[] { return develop(base_family(3, 2)); },
                            "difference family (k=3, c=2) developed over Z13"};
    reg["cdccd-21-4-42"] = {[] { return develop(base_family(4, 2)); },
                            "difference family (k=4, c=2) developed over Z21"};
    reg["cdccd-61-4-366"] = {[] { return develop(base_family_61()); },
                             "six base blocks developed over Z61"};

    reg["dccd-15-3-35"] = {
        [] { return expand_by_circle(design(7, 3, false, seven_point_blocks())); },
        "expansion of dccd-7-3-7 by K8"};
    reg["cdccd-10-4-9"] = {
        [] { return expand_by_circle(double_points(csccd_consecutive(2))); },
        "expansion of cdccd-6-4-3 by K4"};

    struct chain_params {
      int c, k;
    };
    static const chain_params chain[] = {{1, 3}, {1, 5}, {2, 3}, {2, 7}, {3, 3}, {3, 9},
                                         {4, 3}, {4, 5}, {4, 11}, {5, 3}, {5, 13}};
    for (auto [c, k] : chain) {
      int v = c * (4 * k - 6) + 1;
      int l = v / (k - 2);
      int vs = v + l + 1;
      int bs = c * c * (4 * k - 6) + c + l * (l + 1) / 2;
      std::string name = "cdccd-" + std::to_string(vs) + "-" + std::to_string(k) + "-" +
                         std::to_string(bs);
      reg[name] = {[k, c] { return chain_design(k, c); },
                   "difference family (k=" + std::to_string(k) + ", c=" + std::to_string(c) +
                       ") developed over Z" + std::to_string(v) + ", expanded by K" +
                       std::to_string(l + 1)};
    }

    return reg;
  }();
  return registry;
}

} // namespace detail

inline std::vector<std::string> catalog_names()
{
  std::vector<std::string> names;
  for (const auto& [name, spec] : detail::catalog_registry()) names.push_back(name);
  return names;
}

/* Rebuild a named design and re-verify the classification its provenance
   promises before handing it out. */
inline catalog_entry catalog(const std::string& name)
{
  const auto& registry = detail::catalog_registry();
  auto it = registry.find(name);
  if (it == registry.end()) {
    std::string msg = "unknown catalog name '" + name + "'; available:";
    for (const auto& n : catalog_names()) msg += " " + n;
    throw lookup_error(msg);
  }
  catalog_entry entry;
  entry.name = name;
  entry.d = it->second.build();
  entry.provenance = it->second.provenance;
  if (it->second.expect_tight && !classify(entry.d).tight)
    throw structural_error("catalog entry '" + name + "' failed its tightness re-check");
  return entry;
}

} // namespace dccd
