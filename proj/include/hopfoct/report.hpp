#pragma once
// JSON report builders behind the CLI. Each builder evaluates its inputs
// and returns a deterministic ordered document: term lists are sorted
// canonical strings, tensors are [left, right] pairs. Timing is added by
// the driver, never here, so equal inputs give byte-equal reports.

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "verify.hpp"

namespace hopfoct {

using ordered_json = nlohmann::ordered_json;

// Bad arguments (wrong ring, unknown suite, malformed input) as opposed to
// verification failures; drivers map this to a usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RingKind { B, Bplus };

inline const char* ringName(RingKind r) {
  return r == RingKind::B ? "B" : "Bplus";
}

inline RingKind parseRingName(const std::string& s) {
  if (s == "B") return RingKind::B;
  if (s == "Bplus") return RingKind::Bplus;
  throw UsageError("unknown ring '" + s + "' (expected B or Bplus)");
}

inline RingKind valueRing(const EvalValue& v) {
  return std::holds_alternative<Element>(v) ||
                 std::holds_alternative<TensorB>(v)
             ? RingKind::B
             : RingKind::Bplus;
}

namespace detail {

inline void enforceRing(const EvalValue& v,
                        const std::optional<RingKind>& want) {
  if (want && valueRing(v) != *want)
    throw UsageError(std::string("expression evaluates in ring ") +
                     ringName(valueRing(v)) + ", not " + ringName(*want));
}

inline std::string tensorStr(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (pairs.empty()) return "0";
  std::string s;
  for (const auto& [l, r] : pairs) {
    if (!s.empty()) s += " + ";
    s += l + " (x) " + r;
  }
  return s;
}

inline ordered_json valueJson(const EvalValue& v) {
  ordered_json out;
  bool tensor = std::holds_alternative<TensorB>(v) ||
                std::holds_alternative<ChargedTensor>(v);
  out["kind"] = tensor ? "tensor" : "element";
  out["ring"] = ringName(valueRing(v));
  if (!tensor) {
    std::vector<std::string> terms =
        std::holds_alternative<Element>(v)
            ? canonicalTerms(std::get<Element>(v))
            : canonicalTerms(std::get<ChargedElement>(v));
    out["terms"] = terms;
    std::string s;
    for (const auto& t : terms) s += (s.empty() ? "" : " + ") + t;
    out["str"] = s.empty() ? "0" : s;
  } else {
    auto pairs = std::holds_alternative<TensorB>(v)
                     ? canonicalTerms(std::get<TensorB>(v))
                     : canonicalTerms(std::get<ChargedTensor>(v));
    ordered_json terms = ordered_json::array();
    for (const auto& [l, r] : pairs) terms.push_back({l, r});
    out["terms"] = std::move(terms);
    out["str"] = tensorStr(pairs);
  }
  return out;
}

inline EvalValue applyOp(Expr::Op op, const std::string& lhs,
                         const std::string& rhs) {
  auto node = std::make_shared<Expr>();
  node->op = op;
  node->lhs = parseExpr(lhs);
  if (!rhs.empty()) node->rhs = parseExpr(rhs);
  return evaluate(ExprPtr(node));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// basis / poincare

inline ordered_json reportBasis(RingKind ring, long n, long d) {
  ordered_json out;
  out["command"] = "basis";
  out["ring"] = ringName(ring);
  out["n"] = n;
  out["d"] = d;
  std::vector<std::string> classes;
  if (ring == RingKind::B)
    for (const auto& m : basisMonomials(n, d))
      classes.push_back(canonicalMonomialStr(m));
  else
    for (const auto& x : chargedBasis(n, d))
      classes.push_back(canonicalChargedStr(x));
  std::sort(classes.begin(), classes.end());
  out["dim"] = classes.size();
  out["classes"] = classes;
  return out;
}

inline ordered_json reportPoincare(RingKind ring, long n, long dmax) {
  if (n < 0 || dmax < 0) throw UsageError("poincare needs n >= 0, dmax >= 0");
  ordered_json out;
  out["command"] = "poincare";
  out["ring"] = ringName(ring);
  out["n"] = n;
  out["dmax"] = dmax;
  std::vector<std::size_t> dims;
  for (long d = 0; d <= dmax; ++d)
    dims.push_back(ring == RingKind::B ? basisMonomials(n, d).size()
                                       : chargedBasis(n, d).size());
  out["dims"] = dims;
  return out;
}

// ---------------------------------------------------------------------------
// arithmetic (mul = cup, transfer = o, comul, res, tr)

inline ordered_json reportBinary(const std::string& command,
                                 const std::string& lhs,
                                 const std::string& rhs,
                                 std::optional<RingKind> ring) {
  Expr::Op op = command == "mul" ? Expr::Op::Cup : Expr::Op::Odot;
  EvalValue l = evaluate(lhs);
  detail::enforceRing(l, ring);
  if (std::holds_alternative<TensorB>(l) ||
      std::holds_alternative<ChargedTensor>(l))
    throw UsageError(command + " needs ring elements, got a tensor");
  EvalValue v = detail::applyOp(op, lhs, rhs);
  ordered_json out;
  out["command"] = command;
  out["ring"] = ringName(valueRing(v));
  out["args"] = std::vector<std::string>{lhs, rhs};
  out["result"] = detail::valueJson(v);
  return out;
}

inline ordered_json reportUnary(const std::string& command,
                                const std::string& arg,
                                std::optional<RingKind> ring) {
  Expr::Op op = command == "comul" ? Expr::Op::Delta
                : command == "res" ? Expr::Op::Res
                                   : Expr::Op::Tr;
  if (command == "comul") detail::enforceRing(evaluate(arg), ring);
  EvalValue v = detail::applyOp(op, arg, "");
  ordered_json out;
  out["command"] = command;
  out["ring"] = ringName(valueRing(v));
  out["args"] = std::vector<std::string>{arg};
  out["result"] = detail::valueJson(v);
  return out;
}

// ---------------------------------------------------------------------------
// restriction to the elementary abelian subgroup of a partition: plain
// elements restrict to the full subgroup, signed elements to its even part
// (reduced by the sign relation).

inline ordered_json reportRestrict(const std::string& partition,
                                   const std::string& arg) {
  Partition2 pi = parsePartition(partition);
  EvalValue v = evaluate(arg);
  F2Poly p;
  if (std::holds_alternative<Element>(v))
    p = restrictB(pi, std::get<Element>(v));
  else if (std::holds_alternative<ChargedElement>(v))
    p = restrictCharged(pi, std::get<ChargedElement>(v));
  else
    throw UsageError("restrict needs a ring element, got a tensor");
  ordered_json out;
  out["command"] = "restrict";
  out["ring"] = ringName(valueRing(v));
  out["partition"] = pi.str();
  out["args"] = std::vector<std::string>{arg};
  ordered_json res;
  res["kind"] = "poly";
  res["str"] = restrictStr(partitionRing(pi), p);
  out["result"] = std::move(res);
  return out;
}

// ---------------------------------------------------------------------------
// detection table

inline ordered_json reportDetect(long n, long dmax) {
  if (n < 0 || dmax < 0) throw UsageError("detect needs n >= 0, dmax >= 0");
  ordered_json out;
  out["command"] = "detect";
  out["n"] = n;
  out["dmax"] = dmax;
  ordered_json cells = ordered_json::array();
  bool all = true;
  for (long d = 0; d <= dmax; ++d) {
    std::vector<ChargedMonomial> cols;
    GF2Matrix m = detectionMatrix(n, d, &cols);
    std::size_t rank = m.rank();
    ordered_json cell;
    cell["d"] = d;
    cell["dim"] = cols.size();
    cell["rank"] = rank;
    cell["detected"] = rank == cols.size();
    if (rank != cols.size()) all = false;
    cells.push_back(std::move(cell));
  }
  out["cells"] = std::move(cells);
  out["allDetected"] = all;
  return out;
}

// ---------------------------------------------------------------------------
// verification suites

inline ordered_json reportVerify(const std::string& suite) {
  std::vector<int> nums;
  if (suite == "all") {
    for (int k = 1; k <= 9; ++k) nums.push_back(k);
  } else {
    for (const auto& [name, ks] : verifySuites())
      if (name == suite) nums = ks;
    if (nums.empty()) {
      std::string known = "all";
      for (const auto& [name, ks] : verifySuites()) known += ", " + name;
      throw UsageError("unknown suite '" + suite + "' (expected one of " +
                       known + ")");
    }
  }
  ordered_json out;
  out["command"] = "verify";
  out["suite"] = suite;
  ordered_json criteria = ordered_json::array();
  bool ok = true;
  for (int k : nums) {
    Criterion c = runCriterion(k);
    if (!c.acceptable()) ok = false;
    ordered_json j;
    j["number"] = c.number;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["documented"] = c.documented;
    j["detail"] = c.detail;
    j["seconds"] = c.seconds;
    criteria.push_back(std::move(j));
  }
  out["criteria"] = std::move(criteria);
  out["ok"] = ok;
  return out;
}

}  // namespace hopfoct
