#include "thompson/experiments.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "thompson/bounds.h"
#include "thompson/synthesis.h"

namespace thompson::experiments {

namespace {

constexpr GeneratorSymbol kX0{Generator::X0, 1};

Element conjugate(const Element& y1, long exponent) {
  const Element shift = evaluateWord(power(kX0, exponent));
  return multiply(multiply(shift, y1), invert(shift));
}

std::string csvQuote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Element counterexampleY(std::size_t n) {
  if (n == 0) throw ContractViolation("counterexample index must be >= 1");
  const Tree comb = Tree::rightComb(2 * n + 1);
  std::vector<std::uint32_t> images(2 * n + 2);
  std::iota(images.begin(), images.end(), 1U);
  std::swap(images[2 * n - 1], images[2 * n]);
  return Element(comb, comb, Permutation::fromImages(std::move(images)));
}

std::string toString(Convention c) {
  return c == Convention::Literal ? "literal" : "mirrored";
}

ConjugationReport verifyConjugationIdentity(std::size_t n) {
  const Element y1 = counterexampleY(1);
  const Element yn = counterexampleY(n);
  const long e = 2 * static_cast<long>(n) - 2;
  ConjugationReport report;
  report.n = n;
  report.literalHolds = equals(conjugate(y1, -e), yn);
  report.mirroredHolds = equals(conjugate(y1, e), yn);
  return report;
}

Convention validatedConvention() {
  static const Convention convention = [] {
    const auto r = verifyConjugationIdentity(2);
    if (r.literalHolds == r.mirroredHolds) {
      throw std::logic_error("conjugation identity does not single out a convention");
    }
    return r.literalHolds ? Convention::Literal : Convention::Mirrored;
  }();
  return convention;
}

Word counterexampleProductWord(std::size_t n, Convention convention,
                               const Word& y1Word) {
  if (n == 0) throw ContractViolation("counterexample index must be >= 1");
  const long sign = convention == Convention::Literal ? 1 : -1;
  Word w = y1Word;
  for (std::size_t k = 1; k < n; ++k) {
    const Word shift = power(kX0, -2 * sign);
    w.insert(w.end(), shift.begin(), shift.end());
    w.insert(w.end(), y1Word.begin(), y1Word.end());
  }
  const Word tail = power(kX0, sign * (2 * static_cast<long>(n) - 2));
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

CounterexampleProduct counterexampleProduct(std::size_t n) {
  if (n == 0) throw ContractViolation("counterexample index must be >= 1");
  CounterexampleProduct out;
  for (std::size_t k = 1; k <= n; ++k) {
    out.product = multiply(out.product, counterexampleY(k));
  }
  out.word = counterexampleProductWord(n, validatedConvention(),
                                       synthesizeWord(counterexampleY(1)));
  return out;
}

Tree randomTree(std::size_t carets, std::mt19937_64& rng) {
  // Node k: children (-1 for a leaf) and parent (-1 for the root).
  struct Node {
    long left = -1;
    long right = -1;
    long parent = -1;
  };
  std::vector<Node> nodes(1);
  nodes.reserve(2 * carets + 1);
  long root = 0;
  for (std::size_t step = 0; step < carets; ++step) {
    std::uniform_int_distribution<std::size_t> pick(0, 2 * nodes.size() - 1);
    const std::size_t r = pick(rng);
    const long v = static_cast<long>(r / 2);
    const long u = static_cast<long>(nodes.size());
    const long leaf = u + 1;
    nodes.push_back({});
    nodes.push_back({});
    const long p = nodes[v].parent;
    if (p < 0) {
      root = u;
    } else if (nodes[p].left == v) {
      nodes[p].left = u;
    } else {
      nodes[p].right = u;
    }
    nodes[u].parent = p;
    nodes[v].parent = u;
    nodes[leaf].parent = u;
    if (r % 2 == 0) {
      nodes[u].left = v;
      nodes[u].right = leaf;
    } else {
      nodes[u].left = leaf;
      nodes[u].right = v;
    }
  }
  std::string code;
  code.reserve(nodes.size());
  std::vector<long> todo{root};
  while (!todo.empty()) {
    const long v = todo.back();
    todo.pop_back();
    if (nodes[v].left < 0) {
      code.push_back('0');
    } else {
      code.push_back('1');
      todo.push_back(nodes[v].right);
      todo.push_back(nodes[v].left);
    }
  }
  return Tree::fromCode(std::move(code));
}

namespace {

std::vector<std::uint32_t> iota1(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 1U);
  return v;
}

}  // namespace

Element randomElement(std::size_t carets, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tree domain = randomTree(carets, rng);
  Tree range = randomTree(carets, rng);
  auto images = iota1(carets + 1);
  std::shuffle(images.begin(), images.end(), rng);
  return reduce(Element(std::move(domain), std::move(range),
                        Permutation::fromImages(std::move(images))));
}

Element randomFElement(std::size_t carets, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tree domain = randomTree(carets, rng);
  Tree range = randomTree(carets, rng);
  return reduce(Element(std::move(domain), std::move(range),
                        Permutation::identity(carets + 1)));
}

Element randomTElement(std::size_t carets, std::uint64_t seed) {
  if (carets == 0) throw ContractViolation("carets must be >= 1");
  std::mt19937_64 rng(seed);
  Tree domain = randomTree(carets, rng);
  Tree range = randomTree(carets, rng);
  const std::size_t n = carets + 1;
  std::uniform_int_distribution<std::size_t> shift(1, n - 1);
  const std::size_t c = shift(rng);
  std::vector<std::uint32_t> images(n);
  for (std::size_t k = 0; k < n; ++k) {
    images[k] = static_cast<std::uint32_t>((k + c) % n + 1);
  }
  return reduce(Element(std::move(domain), std::move(range),
                        Permutation::fromImages(std::move(images))));
}

std::vector<SurveyRecord> surveyBounds(std::size_t count, std::size_t carets,
                                       unsigned radius, std::uint64_t seed,
                                       std::size_t memoryBudgetBytes) {
  CayleyBall ball(Element(), memoryBudgetBytes);
  ball.growTo(radius);
  std::vector<SurveyRecord> records;
  records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Element x = randomElement(carets, seed + i);
    SurveyRecord r;
    r.elementText = x.str();
    r.N = caretCount(x);
    r.B = clusterCount(x);
    r.exactLength = ball.distanceOf(x);
    r.birget = birgetUpper(r.N);
    r.newBound = newUpper(r.N, r.B);
    records.push_back(std::move(r));
  }
  return records;
}

void writeSurveyCsv(std::ostream& out, const std::vector<SurveyRecord>& records) {
  out << "element,N,B,exact_length,birget_upper,new_upper\n";
  for (const auto& r : records) {
    out << csvQuote(r.elementText) << ',' << r.N << ',' << r.B << ',';
    if (r.exactLength) out << *r.exactLength;
    out << ',' << fixed6(r.birget) << ',' << fixed6(r.newBound) << '\n';
  }
}

ConstantsReport estimateConstants(unsigned radius, std::size_t memoryBudgetBytes) {
  ConstantsReport report;
  report.radius = radius;
  report.stats.push_back({0, 1, 0});
  report.maxB = 1;
  report.c0 = newUpper(0, 1) - birgetUpper(0);
  CayleyBall ball(Element(), memoryBudgetBytes);
  ball.growTo(radius, [&](const Element& x, unsigned d) {
    const std::size_t n = x.domain().caretCount();
    const std::size_t b = clusterPartition(x.perm()).count();
    report.stats.push_back({static_cast<std::uint32_t>(n),
                            static_cast<std::uint32_t>(b), d});
    report.maxN = std::max(report.maxN, n);
    report.maxB = std::max(report.maxB, b);
    const double nb = newUpper(n, b);
    report.c0 = std::max(report.c0, nb - birgetUpper(n));
    const double r1 = static_cast<double>(n) / d;
    const double r2 = d / (nb + 1.0);
    if (r1 > report.c1) {
      report.c1 = r1;
      report.c1Witness = x.str();
    }
    if (r2 > report.c2) {
      report.c2 = r2;
      report.c2Witness = x.str();
    }
  });
  report.sphereSizes = ball.sphereSizes();
  return report;
}

void writeConstantsReport(std::ostream& out, const ConstantsReport& report) {
  std::size_t total = 0;
  for (std::size_t s : report.sphereSizes) total += s;
  out << "generators: " << generatorSetDescription() << '\n';
  out << "radius: " << report.radius << '\n';
  out << "ball_size: " << total << '\n';
  for (std::size_t d = 0; d < report.sphereSizes.size(); ++d) {
    out << "sphere_" << d << ": " << report.sphereSizes[d] << '\n';
  }
  out << "max_N: " << report.maxN << '\n';
  out << "max_B: " << report.maxB << '\n';
  out << "c1_max_N_over_length: " << fixed6(report.c1) << '\n';
  out << "c1_witness: " << report.c1Witness << '\n';
  out << "c2_max_length_over_new_bound: " << fixed6(report.c2) << '\n';
  out << "c2_witness: " << report.c2Witness << '\n';
  out << "c0_max_new_minus_birget: " << fixed6(report.c0) << '\n';
}

}  // namespace thompson::experiments
