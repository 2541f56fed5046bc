// Instance-file plumbing for the command-line tool: JSON schema (version 1)
// to library types, and report builders.  Instance files are UTF-8 JSON with
// the shared polynomial grammar embedded as strings; exact integers only.
//
// Schema summary (see docs/file-formats.md for the full reference):
//   common:   schema_version: 1, kind: one of {ring, gb, member, linsolve,
//             quotient, order-check, poly-disc, order-disc, counterexample}
//   ring:     {"vars": ["s"], "relations": ["s^2 - 5"]}   (omitted => Z)
//   fraction: "3", "1/2", "(1+s)/2", or {"num": "1+s", "den": "2"}
//   algebra:  {"min_poly": [fraction...]}                 (ascending, monic)
//   splitting:{"q_over_k": [elem...], "roots": [[fraction x d]... x n]}
//             (omitted => computed; requires base Z)
//   strategy: {"variant": "exhaustive"} | {"variant": "bounded", "bound": "8"}
//             | {"variant": "user", "elements": [[fraction x d]...],
//                "complete": false}

#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "disceq/solver.hpp"

namespace disceq {
namespace inst {

using json = nlohmann::json;

inline json load_instance(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "FileError", "cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("ParseError", "instance file is not valid JSON: " + std::string(e.what()));
  }
  require(j.is_object(), "SchemaError", "instance must be a JSON object");
  require(j.contains("schema_version") && j["schema_version"].is_number_integer() &&
              j["schema_version"].get<int>() == 1,
          "SchemaError", "unsupported schema_version (expected 1)");
  require(j.contains("kind") && j["kind"].is_string(), "SchemaError",
          "instance needs a string field 'kind'");
  return j;
}

inline void check_kind(const json& j, const std::vector<std::string>& allowed) {
  std::string k = j["kind"].get<std::string>();
  for (auto& a : allowed)
    if (k == a) return;
  std::string want;
  for (size_t i = 0; i < allowed.size(); i++)
    want += (i ? " or " : "") + allowed[i];
  fail("SchemaError", "instance kind '" + k + "' does not fit this command "
                      "(expected " + want + ")");
}

inline std::vector<std::string> string_list(const json& j, const std::string& what) {
  require(j.is_array(), "SchemaError", what + " must be an array");
  std::vector<std::string> out;
  for (auto& e : j) {
    require(e.is_string(), "SchemaError", what + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline RingPtr ring_of(const json& j) {
  if (!j.contains("ring")) return ring_Z();
  const json& r = j["ring"];
  require(r.is_object(), "SchemaError", "'ring' must be an object");
  std::vector<std::string> vars, rels;
  if (r.contains("vars")) vars = string_list(r["vars"], "ring.vars");
  if (r.contains("relations")) rels = string_list(r["relations"], "ring.relations");
  return make_ring(vars, rels);
}

inline RingElem elem_of(const RingPtr& R, const json& j, const std::string& what) {
  require(j.is_string(), "SchemaError", what + " must be a polynomial string");
  return ring_elem(R, j.get<std::string>());
}

// "3", "1/2", "(1+s)/2", or {"num": ..., "den": ...}; the polynomial grammar
// has no '/', so the first '/' of a string form separates the two parts
inline FracElem frac_of(const RingPtr& R, const json& j, const std::string& what) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    size_t cut = s.find('/');
    if (cut == std::string::npos) return frac(ring_elem(R, s));
    return frac(ring_elem(R, s.substr(0, cut)), ring_elem(R, s.substr(cut + 1)));
  }
  require(j.is_object() && j.contains("num"), "SchemaError",
          what + " must be a string or an object with 'num' and 'den'");
  RingElem num = elem_of(R, j["num"], what + ".num");
  RingElem den = j.contains("den") ? elem_of(R, j["den"], what + ".den")
                                   : ring_int(R, 1);
  return frac(num, den);
}

inline std::vector<FracElem> frac_list(const RingPtr& R, const json& j,
                                       const std::string& what) {
  require(j.is_array(), "SchemaError", what + " must be an array");
  std::vector<FracElem> out;
  for (size_t i = 0; i < j.size(); i++)
    out.push_back(frac_of(R, j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<RingElem> elem_list(const RingPtr& R, const json& j,
                                       const std::string& what) {
  require(j.is_array(), "SchemaError", what + " must be an array");
  std::vector<RingElem> out;
  for (size_t i = 0; i < j.size(); i++)
    out.push_back(elem_of(R, j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

inline EtalePtr algebra_of(const RingPtr& R, const json& j) {
  require(j.contains("algebra") && j["algebra"].is_object() &&
              j["algebra"].contains("min_poly"),
          "SchemaError", "instance needs algebra.min_poly");
  return make_etale(R, frac_list(R, j["algebra"]["min_poly"], "algebra.min_poly"));
}

inline SplitPtr splitting_of(const EtalePtr& E, const json& j) {
  if (!j.contains("splitting")) return splitting_data(E);
  const json& s = j["splitting"];
  require(s.is_object() && s.contains("q_over_k") && s.contains("roots"),
          "SchemaError", "splitting needs q_over_k and roots");
  std::vector<RingElem> Q = elem_list(E->base, s["q_over_k"], "splitting.q_over_k");
  require(s["roots"].is_array(), "SchemaError", "splitting.roots must be an array");
  std::vector<std::vector<FracElem>> roots;
  for (size_t i = 0; i < s["roots"].size(); i++)
    roots.push_back(frac_list(E->base, s["roots"][i],
                              "splitting.roots[" + std::to_string(i) + "]"));
  return make_splitting_data(E, Q, roots);
}

inline ClosureGen closure_gen_of(const RingPtr& R, const json& j,
                                 const std::string& what) {
  require(j.is_object() && j.contains("value") && j.contains("cert"),
          "SchemaError", what + " must be an object with value and cert");
  return ClosureGen{frac_of(R, j["value"], what + ".value"),
                    elem_list(R, j["cert"], what + ".cert")};
}

inline std::vector<ClosureGen> closure_list(const RingPtr& R, const json& j,
                                            const std::string& what) {
  require(j.is_array(), "SchemaError", what + " must be an array");
  std::vector<ClosureGen> out;
  for (size_t i = 0; i < j.size(); i++)
    out.push_back(closure_gen_of(R, j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

// --strategy override text: "", "exhaustive", "bounded:<H>", or "user"
inline CandidateStrategy strategy_of(const SplitPtr& S, const json& j,
                                     const std::string& override_text) {
  const RingPtr& R = S->owner->base;
  std::string variant;
  if (!override_text.empty()) {
    variant = override_text;
  } else {
    require(j.contains("strategy") && j["strategy"].is_object() &&
                j["strategy"].contains("variant"),
            "SchemaError", "instance needs strategy.variant (or --strategy)");
    variant = j["strategy"]["variant"].get<std::string>();
    if (variant == "bounded") {
      require(j["strategy"].contains("bound"), "SchemaError",
              "bounded strategy needs a bound");
      variant += ":" + (j["strategy"]["bound"].is_string()
                            ? j["strategy"]["bound"].get<std::string>()
                            : std::to_string(j["strategy"]["bound"].get<long>()));
    }
  }
  if (variant == "exhaustive") return strategy_exhaustive();
  if (variant.rfind("bounded:", 0) == 0)
    return strategy_bounded(Int(variant.substr(8)));
  if (variant == "user") {
    require(j.contains("strategy") && j["strategy"].is_object() &&
                j["strategy"]["variant"] == "user" &&
                j["strategy"].contains("elements"),
            "SchemaError",
            "a user strategy takes its elements from the instance file");
    const json& st = j["strategy"];
    std::vector<GElem> elems;
    for (size_t i = 0; i < st["elements"].size(); i++)
      elems.push_back(g_elem(S, frac_list(R, st["elements"][i],
                                          "strategy.elements[" +
                                              std::to_string(i) + "]")));
    bool complete = st.contains("complete") && st["complete"].get<bool>();
    return strategy_user(std::move(elems), complete);
  }
  fail("SchemaError", "unknown strategy variant '" + variant +
                          "' (expected exhaustive, bounded:<H>, or user)");
}

inline PolyDiscInstance poly_disc_of(const json& j,
                                     const std::string& strategy_override) {
  RingPtr R = ring_of(j);
  EtalePtr E = algebra_of(R, j);
  SplitPtr S = splitting_of(E, j);
  PolyDiscInstance out;
  out.splitting = S;
  require(j.contains("delta"), "SchemaError", "instance needs delta");
  out.delta = elem_of(R, j["delta"], "delta");
  if (j.contains("root_module")) {
    require(j["root_module"].is_array(), "SchemaError",
            "root_module must be an array");
    for (size_t i = 0; i < j["root_module"].size(); i++) {
      const json& g = j["root_module"][i];
      std::string what = "root_module[" + std::to_string(i) + "]";
      require(g.is_object() && g.contains("value") && g.contains("cert"),
              "SchemaError", what + " must be an object with value and cert");
      out.root_module.push_back(
          GClosureGen{g_elem(S, frac_list(R, g["value"], what + ".value")),
                      elem_list(R, g["cert"], what + ".cert")});
    }
  }
  if (j.contains("closure_k"))
    out.closure_K = closure_list(R, j["closure_k"], "closure_k");
  out.strategy = strategy_of(S, j, strategy_override);
  return out;
}

inline OrderDiscInstance order_disc_of(const json& j,
                                       const std::string& strategy_override) {
  RingPtr R = ring_of(j);
  EtalePtr E = algebra_of(R, j);
  require(j.contains("order") && j["order"].is_object() &&
              j["order"].contains("gens"),
          "SchemaError", "instance needs order.gens");
  std::vector<AlgElem> gens;
  for (size_t i = 0; i < j["order"]["gens"].size(); i++)
    gens.push_back(alg_elem(E, frac_list(R, j["order"]["gens"][i],
                                         "order.gens[" + std::to_string(i) +
                                             "]")));
  OrderDiscInstance out{check_order(E, gens), splitting_of(E, j),
                        elem_of(R, j.at("delta"), "delta"),
                        CandidateStrategy{}};
  out.strategy = strategy_of(out.splitting, j, strategy_override);
  return out;
}

// ---- report builders ----------------------------------------------------------------

inline std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

inline json report_envelope(const std::string& command,
                            const std::string& instance_name,
                            std::optional<long> seed) {
  json j;
  j["schema_version"] = 1;
  j["command"] = command;
  if (!instance_name.empty()) j["instance"] = instance_name;
  j["timestamp"] = iso_timestamp();
  if (seed) j["seed"] = *seed;
  return j;
}

inline json frac_json(const FracElem& x) { return to_string(x); }

inline json poly_json(const std::vector<RingElem>& F) {
  json a = json::array();
  for (auto& c : F) a.push_back(to_string(c));
  return a;
}

inline json quotient_json(const QuotientReport& q) {
  json j;
  j["finite"] = q.finite;
  json reps = json::array();
  for (auto& r : q.representatives) reps.push_back(frac_json(r));
  j["representatives"] = reps;
  json w;
  w["scale"] = q.witness.scale;
  if (!q.witness.infinite_reason.empty())
    w["infinite_reason"] = q.witness.infinite_reason;
  json steps = json::array();
  for (auto& s : q.witness.steps) {
    json st;
    st["added_gen"] = s.added_gen;
    st["elim"] = to_string(s.elim);
    json primes = json::array();
    for (auto& p : s.primes) primes.push_back(to_string(p));
    st["primes"] = primes;
    st["finite"] = s.finite;
    st["count"] = to_string(s.count);
    steps.push_back(st);
  }
  w["steps"] = steps;
  j["witness"] = w;
  return j;
}

inline json solution_json(const SolutionReport& rep, bool with_trace,
                          bool order_kind) {
  json j;
  j["complete"] = rep.complete;
  j["quotient"] = quotient_json(rep.quotient);
  if (order_kind) {
    json elems = json::array();
    for (auto& a : rep.elem_reps) elems.push_back(to_string(a));
    j["elements"] = elems;
  } else {
    json classes = json::array();
    for (auto& F : rep.poly_reps) classes.push_back(poly_json(F));
    j["classes"] = classes;
  }
  j["tuples"] = {{"total", rep.tuples_total}, {"pruned", rep.tuples_pruned}};
  if (with_trace) {
    json tr = json::array();
    for (auto& t : rep.trace) {
      json e;
      e["gamma"] = t.gamma;
      e["outcome"] = t.outcome;
      if (!t.base.empty()) e["base"] = t.base;
      if (t.kept) e["kept"] = t.kept;
      tr.push_back(e);
    }
    j["trace"] = tr;
    j["trace_truncated"] = rep.trace_truncated;
  }
  return j;
}

inline json error_json(const std::string& command, const Error& e) {
  json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["timestamp"] = iso_timestamp();
  j["error"] = {{"code", e.code()}, {"message", e.what()}};
  return j;
}

inline void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  require(out.good(), "FileError", "cannot write report file: " + path);
  out << j.dump(2) << "\n";
}

// display form of a monic polynomial from ascending coefficients
inline std::string poly_display(const std::vector<RingElem>& F) {
  auto wrap = [](const RingElem& c) {
    std::string s = to_string(c);
    return (s.find_first_of("+-", 1) != std::string::npos) ? "(" + s + ")" : s;
  };
  std::string out;
  for (size_t k = F.size(); k-- > 0;) {
    if (is_zero(F[k]) && F.size() > 1) continue;
    std::string term;
    if (k + 1 == F.size()) {
      term = "X";  // monic lead
      if (k > 1) term += "^" + std::to_string(k);
      if (k == 0) term = to_string(F[k]);
    } else if (k == 0) {
      term = wrap(F[k]);
    } else {
      std::string c = to_string(F[k]);
      term = (c == "1") ? "" : (c == "-1" ? "-" : wrap(F[k]) + "*");
      term += "X";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace inst
}  // namespace disceq
