// Command line driver. Every subcommand prints one JSON report on stdout.
// Exit codes: 0 success, 1 failed verification, 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>

#include "hopfoct/report.hpp"

int main(int argc, char** argv) {
  using hopfoct::ordered_json;
  using hopfoct::RingKind;

  CLI::App app{
      "exact mod-2 cohomology of hyperoctahedral groups and their "
      "alternating subgroups"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON report");

  std::function<ordered_json()> job;

  // let app-level flags such as --pretty appear after the subcommand too
  auto addSub = [&app](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  std::string basisRing = "B";
  long basisN = 0, basisD = 0;
  {
    auto* sub = addSub("basis", "additive basis of one bidegree");
    sub->add_option("--ring", basisRing, "B or Bplus")
        ->check(CLI::IsMember({"B", "Bplus"}));
    sub->add_option("--n", basisN, "component")->required();
    sub->add_option("--d", basisD, "cohomological degree")->required();
    sub->callback([&] {
      job = [&] {
        return hopfoct::reportBasis(hopfoct::parseRingName(basisRing), basisN,
                                    basisD);
      };
    });
  }

  std::string poinRing = "B";
  long poinN = 0, poinDmax = 8;
  {
    auto* sub =
        addSub("poincare", "basis dimensions up to a degree");
    sub->add_option("--ring", poinRing, "B or Bplus")
        ->check(CLI::IsMember({"B", "Bplus"}));
    sub->add_option("--n", poinN, "component")->required();
    sub->add_option("--dmax", poinDmax, "top degree (default 8)");
    sub->callback([&] {
      job = [&] {
        return hopfoct::reportPoincare(hopfoct::parseRingName(poinRing), poinN,
                                       poinDmax);
      };
    });
  }

  std::string mulRing, mulL, mulR;
  CLI::Option* mulRingOpt = nullptr;
  {
    auto* sub = addSub("mul", "cup product of two elements");
    mulRingOpt = sub->add_option("--ring", mulRing, "require this ring")
                     ->check(CLI::IsMember({"B", "Bplus"}));
    sub->add_option("lhs", mulL, "left factor")->required();
    sub->add_option("rhs", mulR, "right factor")->required();
    sub->callback([&] {
      job = [&] {
        std::optional<RingKind> want;
        if (mulRingOpt->count()) want = hopfoct::parseRingName(mulRing);
        return hopfoct::reportBinary("mul", mulL, mulR, want);
      };
    });
  }

  std::string traRing, traL, traR;
  CLI::Option* traRingOpt = nullptr;
  {
    auto* sub =
        addSub("transfer", "transfer product of two elements");
    traRingOpt = sub->add_option("--ring", traRing, "require this ring")
                     ->check(CLI::IsMember({"B", "Bplus"}));
    sub->add_option("lhs", traL, "left factor")->required();
    sub->add_option("rhs", traR, "right factor")->required();
    sub->callback([&] {
      job = [&] {
        std::optional<RingKind> want;
        if (traRingOpt->count()) want = hopfoct::parseRingName(traRing);
        return hopfoct::reportBinary("transfer", traL, traR, want);
      };
    });
  }

  std::string comulRing, comulArg;
  CLI::Option* comulRingOpt = nullptr;
  {
    auto* sub = addSub("comul", "coproduct of an element");
    comulRingOpt = sub->add_option("--ring", comulRing, "require this ring")
                       ->check(CLI::IsMember({"B", "Bplus"}));
    sub->add_option("expr", comulArg, "element")->required();
    sub->callback([&] {
      job = [&] {
        std::optional<RingKind> want;
        if (comulRingOpt->count()) want = hopfoct::parseRingName(comulRing);
        return hopfoct::reportUnary("comul", comulArg, want);
      };
    });
  }

  std::string resArg;
  {
    auto* sub =
        addSub("res", "restrict a plain element to the even part");
    sub->add_option("expr", resArg, "plain element")->required();
    sub->callback([&] {
      job = [&] { return hopfoct::reportUnary("res", resArg, std::nullopt); };
    });
  }

  std::string trArg;
  {
    auto* sub =
        addSub("tr", "transfer a signed element up to B");
    sub->add_option("expr", trArg, "signed element")->required();
    sub->callback([&] {
      job = [&] { return hopfoct::reportUnary("tr", trArg, std::nullopt); };
    });
  }

  std::string restrictPi, restrictArg;
  {
    auto* sub = addSub(
        "restrict", "restrict to the elementary abelian subgroup of a "
                    "partition into powers of two");
    sub->add_option("--partition", restrictPi, "e.g. \"4,2,1\"")->required();
    sub->add_option("expr", restrictArg, "element")->required();
    sub->callback([&] {
      job = [&] { return hopfoct::reportRestrict(restrictPi, restrictArg); };
    });
  }

  long detN = 0, detDmax = 6;
  {
    auto* sub = addSub(
        "detect", "rank of restriction to all elementary abelian subgroups");
    sub->add_option("--n", detN, "component")->required();
    sub->add_option("--dmax", detDmax, "top degree (default 6)");
    sub->callback([&] {
      job = [&] { return hopfoct::reportDetect(detN, detDmax); };
    });
  }

  std::string suite = "all";
  {
    auto* sub = addSub("verify", "run acceptance criteria");
    sub->add_option("--suite", suite,
                    "all, hopf-axioms, gysin, relations, invariants, "
                    "detection, fn");
    sub->callback([&] { job = [&] { return hopfoct::reportVerify(suite); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json out = job();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    out["ms"] = std::round(ms * 1000.0) / 1000.0;
    std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
    if (out.contains("ok") && !out["ok"].get<bool>()) return 1;
    return 0;
  } catch (const hopfoct::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hopfoct::ExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
