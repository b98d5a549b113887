#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "glk/local/cohomology.hpp"

namespace glk {

/// Local data at one place v of S: dims of H^0 and H^1 for M and M(1), and the
/// dimension of the chosen local condition L_v.
struct PlaceEntry {
  std::string label;
  int h0 = 0;
  int h0_dual = 0;
  int h1 = 0;
  int h1_dual = 0;
  int dimL = 0;
  bool tame = true;

  int h2() const { return h1 - h0; }  // tame Euler characteristic
  int dim_L_perp() const { return h1_dual - dimL; }

  void validate() const {
    const std::string at = "place '" + label + "': ";
    require(h0 >= 0 && h0_dual >= 0 && h1 >= 0 && h1_dual >= 0, ErrorCode::InvalidLedger, at + "negative dimension");
    require(dimL >= 0 && dimL <= h1, ErrorCode::InvalidLedger,
            at + "dimL = " + std::to_string(dimL) + " outside [0, h1 = " + std::to_string(h1) + "]");
    if (tame) {
      require(h1 == h0 + h0_dual, ErrorCode::InvalidLedger,
              at + "tame place needs h1 = h0 + h0_dual (h2 = h0 of the dual)");
      require(h1_dual == h1, ErrorCode::InvalidLedger, at + "tame place needs h1_dual = h1");
    }
    require(dimL <= h1_dual, ErrorCode::InvalidLedger, at + "dimL exceeds h1_dual");
  }

  /// Entry for a tame place built from local-theory dims for M and M(1).
  static PlaceEntry from_local(std::string label, const LocalDims& m, const LocalDims& m_dual, int dimL) {
    PlaceEntry e{std::move(label), m.h0, m_dual.h0, m.h1, m_dual.h1, dimL, true};
    e.validate();
    return e;
  }

  /// h0 = h2 = 1, h1 = 2 (Ad^0 at a nice prime).
  static PlaceEntry nice(std::string label, int dimL) { return {std::move(label), 1, 1, 2, 2, dimL, true}; }
};

/// Wiles-formula bookkeeping for one choice of local conditions.
struct Ledger {
  int global_h0 = 0;
  int global_h0_dual = 0;
  std::vector<PlaceEntry> places;

  void validate() const {
    require(global_h0 >= 0 && global_h0_dual >= 0, ErrorCode::InvalidLedger, "negative global dimension");
    std::set<std::string> seen;
    for (const auto& e : places) {
      e.validate();
      require(seen.insert(e.label).second, ErrorCode::InvalidLedger, "duplicate place label '" + e.label + "'");
    }
  }

  Ledger& add(PlaceEntry e) {
    places.push_back(std::move(e));
    return *this;
  }

  static Ledger from_json(const nlohmann::json& j) {
    Ledger l;
    try {
      l.global_h0 = j.value("global_h0", 0);
      l.global_h0_dual = j.value("global_h0_dual", 0);
      for (const auto& p : j.value("places", nlohmann::json::array())) {
        PlaceEntry e;
        e.label = p.at("label").get<std::string>();
        e.h0 = p.at("h0").get<int>();
        e.h1 = p.at("h1").get<int>();
        e.h0_dual = p.at("h0_dual").get<int>();
        e.h1_dual = p.at("h1_dual").get<int>();
        e.dimL = p.at("dimL").get<int>();
        e.tame = p.value("tame", true);
        l.places.push_back(std::move(e));
      }
    } catch (const nlohmann::json::exception& ex) {
      fail(ErrorCode::InvalidLedger, std::string("malformed ledger: ") + ex.what());
    }
    l.validate();
    return l;
  }

  nlohmann::json to_json() const {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& e : places) {
      ps.push_back({{"label", e.label}, {"h0", e.h0}, {"h1", e.h1}, {"h1_dual", e.h1_dual},
                    {"h0_dual", e.h0_dual}, {"dimL", e.dimL}});
      if (!e.tame) ps.back()["tame"] = false;
    }
    return {{"global_h0", global_h0}, {"global_h0_dual", global_h0_dual}, {"places", ps}};
  }
};

/// dim Sel - dim Sel^dual = h0(M) - h0(M(1)) + sum_v (dim L_v - h0(G_v, M)).
inline int wiles_difference(const Ledger& ledger) {
  int d = ledger.global_h0 - ledger.global_h0_dual;
  for (const auto& e : ledger.places) d += e.dimL - e.h0;
  return d;
}

/// Change in the difference from adding a tame place with the full condition.
inline int add_place_delta(const Ledger&, const PlaceEntry& entry) {
  require(entry.tame, ErrorCode::InvalidLedger, "add_place_delta needs a tame place");
  entry.validate();
  require(entry.dimL == entry.h1, ErrorCode::InvalidLedger, "added place must carry the full condition dimL = h1");
  return entry.h1 - entry.h0;
}

/// One nice prime per basis element of Sha^1 and of its dual.
inline int sha_elimination_plan(int dim_sha1, int dim_sha1_dual) {
  require(dim_sha1 >= 0 && dim_sha1_dual >= 0, ErrorCode::InvalidArgument, "negative dimension");
  return dim_sha1 + dim_sha1_dual;
}

/// Places carry dim N_v in dimL; balanced when the difference vanishes.
inline bool auxiliary_balance(const Ledger& ledger) { return wiles_difference(ledger) == 0; }

}  // namespace glk
