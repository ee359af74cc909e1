#include "cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>

#include "thompson/bounds.h"
#include "thompson/cayley.h"
#include "thompson/collapse.h"
#include "thompson/experiments.h"
#include "thompson/interval_map.h"
#include "thompson/synthesis.h"

namespace thompson::cli {

namespace {

using experiments::fixed6;

const char* boolText(bool b) { return b ? "true" : "false"; }

void addElement(CLI::App* cmd, std::string& target, const std::string& name) {
  cmd->add_option(name, target, "element as domain|range|[perm]")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thompson's group V: tree-pair diagrams, clusters and word-metric bounds"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string a;
  std::string b;
  std::string text;
  unsigned radius = kDefaultRadius;
  std::size_t n = 1;
  std::size_t clusters = 1;
  std::size_t count = 10;
  std::size_t carets = 4;
  std::uint64_t seed = 1;
  std::function<void()> action;

  auto* reduceCmd = app.add_subcommand("reduce", "print the reduced diagram");
  addElement(reduceCmd, a, "element");
  reduceCmd->callback([&] { action = [&] { out << reduce(Element::parse(a)).str() << '\n'; }; });

  auto* mulCmd = app.add_subcommand("mul", "product: apply the first element, then the second");
  addElement(mulCmd, a, "first");
  addElement(mulCmd, b, "second");
  mulCmd->callback([&] {
    action = [&] { out << multiply(Element::parse(a), Element::parse(b)).str() << '\n'; };
  });

  auto* invCmd = app.add_subcommand("inv", "inverse element");
  addElement(invCmd, a, "element");
  invCmd->callback([&] { action = [&] { out << reduce(invert(Element::parse(a))).str() << '\n'; }; });

  auto* eqCmd = app.add_subcommand("eq", "test whether two diagrams are the same element");
  addElement(eqCmd, a, "first");
  addElement(eqCmd, b, "second");
  eqCmd->callback([&] {
    action = [&] { out << boolText(equals(Element::parse(a), Element::parse(b))) << '\n'; };
  });

  auto* statsCmd = app.add_subcommand("stats", "carets N, clusters B, membership in F and T");
  addElement(statsCmd, a, "element");
  statsCmd->callback([&] {
    action = [&] {
      const Element x = reduce(Element::parse(a));
      out << "N=" << caretCount(x) << " B=" << clusterCount(x) << " inF=" << boolText(inF(x))
          << " inT=" << boolText(inT(x)) << '\n';
    };
  });

  auto* mapCmd = app.add_subcommand("map", "affine pieces of the interval map");
  addElement(mapCmd, a, "element");
  mapCmd->callback([&] {
    action = [&] {
      const PiecewiseMap m = toIntervalMap(Element::parse(a));
      for (const auto& p : m.pieces) out << p.source.str() << " -> " << p.target.str() << '\n';
      out << "components=" << graphComponents(m) << '\n';
    };
  });

  auto* collapseCmd = app.add_subcommand("collapse", "collapse every cluster to one leaf");
  addElement(collapseCmd, a, "element");
  collapseCmd->callback([&] {
    action = [&] {
      const CollapseResult r = collapseClusters(Element::parse(a));
      out << "y=" << r.y.str() << '\n'
          << "z=" << r.z.str() << '\n'
          << "collapsed=" << r.collapsed.str() << '\n'
          << "y_carets=" << r.yDiagramCarets << '\n'
          << "z_carets=" << r.zDiagramCarets << '\n';
    };
  });

  auto* lengthCmd = app.add_subcommand("length", "exact word length by Cayley-graph search");
  addElement(lengthCmd, a, "element");
  lengthCmd->add_option("--radius", radius, "search radius")->check(CLI::Range(1U, 200U));
  lengthCmd->callback([&] {
    action = [&] {
      const LengthResult r = exactWordLength(Element::parse(a), radius);
      if (r.length) {
        out << "length=" << *r.length << '\n' << "witness=" << toString(r.witness) << '\n';
      } else {
        out << "length=unknown\n" << "radius=" << r.radius << '\n';
      }
    };
  });

  auto* ballCmd = app.add_subcommand("ball", "sphere sizes of the Cayley-graph ball");
  ballCmd->add_option("--radius", radius, "ball radius")->check(CLI::Range(0U, 200U));
  ballCmd->callback([&] {
    action = [&] {
      const auto sizes = ballSizes(radius);
      out << "generators: " << generatorSetDescription() << '\n';
      out << "radius: " << radius << '\n';
      for (std::size_t d = 0; d < sizes.size(); ++d) out << "sphere_" << d << ": " << sizes[d] << '\n';
    };
  });

  auto* wordCmd = app.add_subcommand("word", "synthesize or evaluate words");
  wordCmd->require_subcommand(1);
  auto* synthCmd = wordCmd->add_subcommand("synth", "a word evaluating to the element");
  addElement(synthCmd, a, "element");
  synthCmd->callback([&] { action = [&] { out << toString(synthesizeWord(Element::parse(a))) << '\n'; }; });
  auto* evalCmd = wordCmd->add_subcommand("eval", "the element a word evaluates to");
  evalCmd->add_option("word", text, "symbols from x0 x1 c pi, optional ^-1")->required();
  evalCmd->callback([&] { action = [&] { out << evaluateWord(parseWord(text)).str() << '\n'; }; });

  auto* counterCmd = app.add_subcommand("counterexample", "the y_n family and the product y_1...y_n");
  counterCmd->add_option("--n", n, "family index")->check(CLI::Range(1UL, 64UL));
  counterCmd->add_option("--radius", radius, "search radius for the exact length of the product")
      ->check(CLI::Range(0U, 200U));
  counterCmd->callback([&] {
    action = [&] {
      const Element yn = experiments::counterexampleY(n);
      const auto conj = experiments::verifyConjugationIdentity(n);
      const auto prod = experiments::counterexampleProduct(n);
      const std::size_t pn = caretCount(prod.product);
      const std::size_t pb = clusterCount(prod.product);
      out << "n: " << n << '\n'
          << "convention: " << experiments::toString(experiments::validatedConvention()) << '\n'
          << "y_n: " << yn.str() << '\n'
          << "y_n_N: " << caretCount(yn) << '\n'
          << "y_n_B: " << clusterCount(yn) << '\n'
          << "conjugation_literal: " << boolText(conj.literalHolds) << '\n'
          << "conjugation_mirrored: " << boolText(conj.mirroredHolds) << '\n'
          << "product: " << prod.product.str() << '\n'
          << "product_N: " << pn << '\n'
          << "product_B: " << pb << '\n'
          << "product_word: " << toString(prod.word) << '\n'
          << "product_word_length: " << prod.word.size() << '\n'
          << "product_word_matches: " << boolText(equals(evaluateWord(prod.word), prod.product))
          << '\n'
          << "birget_upper: " << fixed6(birgetUpper(pn)) << '\n'
          << "new_upper: " << fixed6(newUpper(pn, pb)) << '\n';
      if (radius > 0) {
        const LengthResult r = exactWordLength(prod.product, radius);
        out << "product_exact_length: " << (r.length ? std::to_string(*r.length) : "unknown")
            << '\n';
      }
    };
  });

  auto* surveyCmd = app.add_subcommand("survey", "CSV of random elements against both bounds");
  surveyCmd->add_option("--count", count, "number of elements")->check(CLI::Range(0UL, 1000000UL));
  surveyCmd->add_option("--carets", carets, "carets of the sampled trees")
      ->check(CLI::Range(1UL, 100000UL));
  surveyCmd->add_option("--radius", radius, "ball radius for exact lengths")
      ->check(CLI::Range(0U, 200U));
  surveyCmd->add_option("--seed", seed, "first seed");
  surveyCmd->callback([&] {
    action = [&] {
      experiments::writeSurveyCsv(out, experiments::surveyBounds(count, carets, radius, seed));
    };
  });

  auto* constantsCmd = app.add_subcommand("constants", "empirical constants over a full ball");
  constantsCmd->add_option("--radius", radius, "ball radius")->check(CLI::Range(1U, 200U));
  constantsCmd->callback([&] {
    action = [&] { experiments::writeConstantsReport(out, experiments::estimateConstants(radius)); };
  });

  auto* boundsCmd = app.add_subcommand("bounds", "evaluate both upper bounds for given N and B");
  boundsCmd->add_option("--n", n, "carets N")->required();
  boundsCmd->add_option("--b", clusters, "clusters B")->required();
  boundsCmd->callback([&] {
    action = [&] {
      out << "birget_upper=" << fixed6(birgetUpper(n)) << '\n'
          << "new_upper=" << fixed6(newUpper(n, clusters)) << '\n';
    };
  });

  if (args.size() >= 2 && !args[1].empty() && args[1][0] != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
      known = known || sub->get_name() == args[1];
    }
    if (!known) {
      err << "unknown subcommand '" << args[1] << "'\n";
      return kExitUsage;
    }
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitOk;
}

}  // namespace thompson::cli
