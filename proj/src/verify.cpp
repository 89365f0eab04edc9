#include "hyperoct/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyperoct/bijection.hpp"
#include "hyperoct/characters.hpp"
#include "hyperoct/formula.hpp"
#include "hyperoct/series.hpp"

namespace hyperoct {

BigInt doubleFactorialOdd(int n) {
  BigInt result = 1;
  for (int k = 1; k < 2 * n; k += 2) result *= k;
  return result;
}

namespace {

std::string at(int n) { return " n=" + std::to_string(n); }

CheckResult compared(const std::string& name, const SeriesComparison& c) {
  if (c.equal) return {name, true, ""};
  return {name, false,
          "first difference at (" + c.firstDifference->first.toString() + "),(" +
              c.firstDifference->second.toString() + "): " + toString(c.left) +
              " vs " + toString(c.right)};
}

void mainChecks(int n, std::vector<CheckResult>& out) {
  const CountTable l = countL(n);
  BigInt mass = 0;
  bool symmetric = true;
  for (const auto& [key, count] : l) {
    mass += count;
    auto mirror = l.find({key.second, key.first});
    symmetric = symmetric && mirror != l.end() && mirror->second == count;
  }
  out.push_back({"pairing mass sum L" + at(n), mass == doubleFactorialOdd(n),
                 toString(mass)});
  out.push_back({"L symmetric" + at(n), symmetric, ""});

  const Partition full{n};
  Rational summands = 0;
  for (const auto& a : enumerateM(full, full)) {
    summands += closedFormSummand(a, n).value;
  }
  out.push_back({"closed-form mass over M((n),(n))" + at(n),
                 summands == Rational(doubleFactorialOdd(n)), toString(summands)});

  out.push_back(compared("main identity pp->mm" + at(n),
                         compareSeries(convertPPtoMM(seriesFromTable(
                                           n, Basis::power, l)),
                                       rhsSeries(n))));
}

void bijectionChecks(int n, std::vector<CheckResult>& out) {
  long total = 0, invalid = 0, degreeMismatch = 0, notInverse = 0;
  std::map<DegreeArray, BigInt> lp;
  std::set<PermutedForest> images;
  long collisions = 0;
  std::string firstFailure;
  forEachPartitionedHypermap(n, [&](const PartitionedHypermap& map) {
    ++total;
    const DegreeArray a = degreeStatistics(map);
    lp[a] += 1;
    const PermutedForest forest = thetaForward(map);
    if (!images.insert(forest).second) ++collisions;
    if (!validateForest(forest).empty()) {
      ++invalid;
      return;
    }
    if (forestDegree(forest) != a) ++degreeMismatch;
    bool same = false;
    try {
      same = thetaInverse(forest) == map;
    } catch (const std::exception& error) {
      if (firstFailure.empty()) firstFailure = error.what();
    }
    if (!same) ++notInverse;
  });
  const std::string count = std::to_string(total) + " hypermaps";
  out.push_back({"theta forward validates" + at(n), invalid == 0,
                 count + ", " + std::to_string(invalid) + " invalid"});
  out.push_back({"forest degree = degree statistics" + at(n),
                 degreeMismatch == 0,
                 std::to_string(degreeMismatch) + " mismatches"});
  out.push_back({"theta inverse after forward is identity" + at(n),
                 notInverse == 0,
                 std::to_string(notInverse) + " failures " + firstFailure});
  out.push_back({"theta forward injective" + at(n), collisions == 0,
                 std::to_string(collisions) + " collisions"});

  long summandMismatch = 0;
  std::string firstMismatch;
  for (const auto& [a, count] : lp) {
    Rational value = closedFormSummand(a, n).value;
    if (value != Rational(count)) {
      ++summandMismatch;
      if (firstMismatch.empty()) {
        firstMismatch = a.toString() + ": " + toString(count) + " vs " +
                        toString(value);
      }
    }
  }
  out.push_back({"LP(A) = closed-form summand" + at(n), summandMismatch == 0,
                 std::to_string(lp.size()) + " arrays " + firstMismatch});

  if (n <= 3) {
    long forestMismatch = 0;
    std::string first;
    for (const auto& [a, count] : lp) {
      auto forests = enumerateForests(a);
      bool sound = true;
      for (const auto& f : forests) {
        sound = sound && forestDegree(f) == a && validateForest(f).empty() &&
                images.count(f);
      }
      if (!sound || BigInt(long(forests.size())) != count) {
        ++forestMismatch;
        if (first.empty()) {
          first = a.toString() + ": " + std::to_string(forests.size()) +
                  " forests vs LP " + toString(count);
        }
      }
    }
    out.push_back({"|enumerateForests(A)| = LP(A)" + at(n), forestMismatch == 0,
                   first});
  }
}

void orientableChecks(int n, std::vector<CheckResult>& out) {
  out.push_back(compared("orientable c pp->mm = closed form" + at(n),
                         compareSeries(convertPPtoMM(bruteForceC(n)),
                                       orientableSeries(n))));
}

struct ReadingTally {
  bool perBeta = true;
  bool perNu = true;
};

void characterChecks(int n, std::vector<CheckResult>& out, ReadingTally& tally) {
  const auto partitions = enumeratePartitions(n);
  const CountTable l = countL(n);
  bool perBeta = true, perNu = true, symmetric = true, cosetsMatchL = true;
  for (const auto& nu : partitions) {
    const CountTable b = bruteForceBTable(nu);
    for (const auto& [key, count] : b) {
      const Rational hb = heckeB(nu, key.first, key.second, HookReading::perBeta);
      perBeta = perBeta && hb == Rational(count);
      perNu = perNu && heckeB(nu, key.first, key.second, HookReading::perNu) ==
                           Rational(count);
      symmetric = symmetric && hb == heckeB(nu, key.second, key.first);
      if (nu == Partition{n}) {
        auto it = l.find(key);
        BigInt expected = it == l.end() ? BigInt(0)
                                        : hyperoctahedralOrder(n) * it->second;
        cosetsMatchL = cosetsMatchL && expected == count;
      }
    }
  }
  tally.perBeta = tally.perBeta && perBeta;
  tally.perNu = tally.perNu && perNu;
  out.push_back({"cosets b((n)) = 2^n n! L" + at(n), cosetsMatchL, ""});
  out.push_back({"characters b (H_{2beta}) = cosets b" + at(n), perBeta,
                 perNu ? "H_{2nu} also matches" : "H_{2nu} differs"});
  out.push_back({"characters b symmetric in lambda, mu" + at(n), symmetric, ""});
}

}  // namespace

std::vector<CheckResult> runSuite(const std::string& suite, int n,
                                  std::ostream* progress) {
  static const std::vector<std::string> known = {"main", "bijection",
                                                 "orientable", "characters"};
  std::vector<std::string> selected;
  if (suite == "all") {
    selected = known;
  } else if (std::find(known.begin(), known.end(), suite) != known.end()) {
    selected = {suite};
  } else {
    throw std::invalid_argument("unknown suite \"" + suite + "\"");
  }
  std::vector<CheckResult> results;
  ReadingTally tally;
  for (const auto& name : selected) {
    for (int m = 1; m <= n; ++m) {
      if (progress) *progress << "[" << name << "] n=" << m << std::endl;
      if (name == "main") mainChecks(m, results);
      if (name == "bijection") bijectionChecks(m, results);
      if (name == "orientable") orientableChecks(m, results);
      if (name == "characters") characterChecks(m, results, tally);
    }
    if (name == "characters") {
      std::string reading = tally.perBeta && !tally.perNu ? "H_{2beta}"
                            : tally.perNu && !tally.perBeta ? "H_{2nu}"
                            : tally.perBeta ? "both" : "neither";
      results.push_back({"exactly one hook reading matches cosets for n<=" +
                             std::to_string(n),
                         tally.perBeta != tally.perNu, "reading " + reading});
    }
  }
  return results;
}

bool allPassed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

std::string formatResult(const CheckResult& result) {
  std::string line = (result.passed ? "PASS  " : "FAIL  ") + result.name;
  if (!result.detail.empty()) line += "  (" + result.detail + ")";
  return line;
}

}  // namespace hyperoct
