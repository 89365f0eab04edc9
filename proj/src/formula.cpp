#include "hyperoct/formula.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hyperoct/parallel.hpp"
#include "hyperoct/series.hpp"

namespace hyperoct {

namespace {

struct SideChoice {
  DegreeCounts plain;
  DegreeCounts primed;
  int loops = 0;         // Σ (j+k)
  int arrows = 0;        // Σ j
  int primedCount = 0;   // number of primed entries
  int plainCount = 0;
};

// Feasible (primed, j, k) labels for one block of half size i.
std::vector<std::pair<bool, DegreeKey>> entryOptions(int i, bool white) {
  std::vector<std::pair<bool, DegreeKey>> options;
  for (int loops = 0; 2 * loops <= i; ++loops) {
    for (int j = 0; j <= loops; ++j) {
      DegreeKey key{i, j, loops - j};
      if (2 * loops <= i - 1 || (white && 2 * loops <= i)) {
        options.emplace_back(false, key);
      }
      if (loops >= 1) options.emplace_back(true, key);
    }
  }
  return options;
}

std::vector<SideChoice> sideChoices(const Partition& partition, bool white) {
  std::vector<std::pair<int, int>> sizes;  // (part, multiplicity)
  for (auto [part, count] : multiplicities(partition)) {
    sizes.emplace_back(part, count);
  }
  std::vector<SideChoice> out;
  SideChoice current;
  std::function<void(std::size_t, int, std::size_t)> place =
      [&](std::size_t sizeIndex, int remaining, std::size_t optionFloor) {
        if (sizeIndex == sizes.size()) {
          out.push_back(current);
          return;
        }
        const int part = sizes[sizeIndex].first;
        if (remaining == 0) {
          std::size_t next = sizeIndex + 1;
          place(next, next < sizes.size() ? sizes[next].second : 0, 0);
          return;
        }
        const auto options = entryOptions(part, white);
        // Multisets: options chosen in nondecreasing index order.
        for (std::size_t o = optionFloor; o < options.size(); ++o) {
          const auto& [primed, key] = options[o];
          DegreeArray::add(primed ? current.primed : current.plain, key);
          current.loops += key.loops();
          current.arrows += key.arrows;
          (primed ? current.primedCount : current.plainCount) += 1;
          place(sizeIndex, remaining - 1, o);
          (primed ? current.primedCount : current.plainCount) -= 1;
          current.arrows -= key.arrows;
          current.loops -= key.loops();
          DegreeArray::add(primed ? current.primed : current.plain, key, -1);
        }
      };
  if (sizes.empty()) return {current};
  place(0, sizes[0].second, 0);
  return out;
}

std::vector<std::pair<DegreeKey, int>> degenerateWhiteEntries(
    const DegreeArray& a) {
  std::vector<std::pair<DegreeKey, int>> out;
  for (const auto& [key, count] : a.white) {
    if (key.degree == 2 * key.loops()) out.emplace_back(key, count);
  }
  return out;
}

// binom(i-1; j, k, j+k) for unprimed entries.
BigInt plainMultinomial(const DegreeKey& key) {
  return boundedMultinomial(key.degree - 1, key.arrows, key.extraLoops,
                            key.loops());
}

// binom(i-1; j, k, j+k-1) for primed entries.
BigInt primedMultinomial(const DegreeKey& key) {
  return boundedMultinomial(key.degree - 1, key.arrows, key.extraLoops,
                            key.loops() - 1);
}

BigInt power(const BigInt& base, int exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return result;
}

BigInt checkedFactorial(long m, const char* what) {
  if (m < 0) {
    throw std::out_of_range(std::string("negative factorial argument in ") +
                            what + ": degree array is outside M(λ,μ)");
  }
  return factorial(m);
}

// Sums that appear in N(A) and in the special-case expressions.
struct Statistics {
  int n = 0;
  int p = 0, pPrime = 0, q = 0, qPrime = 0, r = 0;
  long jQ = 0, jPprime = 0, jP = 0, jQprime = 0;
  long excessQ = 0;       // Σ (i-1-2j-2k) Q
  long excessP = 0;       // Σ (i-1-2j-2k) P
  long excessPprime = 0;  // Σ (i-2j-2k) P'
  long excessQprime = 0;  // Σ (i-2j-2k) Q'

  Statistics(const DegreeArray& a, int n_) : n(n_) {
    p = a.whiteCount();
    pPrime = a.whiteRootCount();
    q = a.blackCount();
    qPrime = a.blackRootCount();
    r = a.loopPairs();
    auto arrows = [](const DegreeKey& k) { return k.arrows; };
    auto excess = [](const DegreeKey& k) { return k.degree - 1 - 2 * k.loops(); };
    auto primedExcess = [](const DegreeKey& k) {
      return k.degree - 2 * k.loops();
    };
    jQ = weightedSum(a.black, arrows);
    jPprime = weightedSum(a.whiteRoots, arrows);
    jP = weightedSum(a.white, arrows);
    jQprime = weightedSum(a.blackRoots, arrows);
    excessQ = weightedSum(a.black, excess);
    excessP = weightedSum(a.white, excess);
    excessPprime = weightedSum(a.whiteRoots, primedExcess);
    excessQprime = weightedSum(a.blackRoots, primedExcess);
  }

  long blackFree() const { return n - q - 2 * r; }      // n - q - 2r
  long whiteFree() const { return n - p - 2 * r; }      // n - p - 2r
  long thorns() const { return n + 1 - p - q - 2 * r; }  // n + 1 - p - q - 2r

  // δ_{p'≠0} x / p'
  Rational overPprime(long x) const {
    return pPrime == 0 ? Rational(0) : Rational(x, pPrime);
  }

  // p'! q'! (r-p')! (r-q')! / 2^{2r-p'-q'}
  Rational rootFactor() const {
    Rational value(checkedFactorial(pPrime, "p'!") *
                   checkedFactorial(qPrime, "q'!") *
                   checkedFactorial(r - pPrime, "(r-p')!") *
                   checkedFactorial(r - qPrime, "(r-q')!"));
    return value / Rational(power(2, 2 * r - pPrime - qPrime));
  }

  // Bracket multiplying (t-2u-2v) in N(A).
  Rational firstBracket() const {
    return overPprime(jQ * jPprime) +
           Rational(excessQ * jP) / Rational(blackFree());
  }

  // Bracket multiplying u in N(A); `cancelPole` drops the vanishing factor
  // (1 + Σ(i-1-2j-2k)P) that cancels the pole of (n-p-2r)!.
  Rational secondBracket(bool cancelPole) const {
    Rational tail = cancelPole ? Rational(excessQprime)
                               : Rational(excessQprime * (1 + excessP));
    return overPprime(excessPprime * jQprime) + tail / Rational(blackFree());
  }
};

// Product of the multinomial factors, skipping the white entries in `skip`.
BigInt multinomialProduct(const DegreeArray& a, bool skipWhite,
                          const DegreeKey& skip, bool includeWhite = true) {
  BigInt product = 1;
  if (includeWhite) {
    for (const auto& [key, count] : a.white) {
      if (skipWhite && key == skip) continue;
      product *= power(plainMultinomial(key), count);
    }
  }
  for (const auto& [key, count] : a.black) {
    product *= power(plainMultinomial(key), count);
  }
  for (const DegreeCounts* primed : {&a.whiteRoots, &a.blackRoots}) {
    for (const auto& [key, count] : *primed) {
      product *= power(primedMultinomial(key), count);
    }
  }
  return product;
}

Summand singleWhiteSummand(const DegreeArray& a, const Statistics& s) {
  if (s.p != 1 || a.white.size() != 1) {
    throw std::out_of_range(
        "n - q - 2r = 0 requires a single white non-root entry");
  }
  const DegreeKey entry = a.white.begin()->first;
  const long t = entry.degree, u = entry.arrows, v = entry.extraLoops;
  const long free = s.n - 2L * s.r;
  Rational bracket = 0;
  if (free * s.pPrime != 0) {
    bracket += Rational((t - 2 * u - 2 * v) * s.jQ) /
               Rational(free * s.pPrime);
  }
  if (s.pPrime != 0) {
    bracket += Rational(u * s.jQprime) / Rational(long(s.pPrime) * s.qPrime);
  }
  if (s.pPrime == 0) bracket += 1;
  BigInt product = boundedMultinomial(t, u, v, u + v) *
                   multinomialProduct(a, false, entry, false);
  Rational value = bracket / Rational(a.automorphism()) *
                   Rational(checkedFactorial(free, "(n-2r)!")) *
                   s.rootFactor() * Rational(product);
  value.canonicalize();
  return {value, SummandRegime::singleWhite};
}

}  // namespace

std::string toString(SummandRegime regime) {
  switch (regime) {
    case SummandRegime::generic:
      return "generic";
    case SummandRegime::degenerateEntry:
      return "degenerate-entry";
    case SummandRegime::singleWhite:
      return "single-white";
    case SummandRegime::poleCancelled:
      return "pole-cancelled";
    case SummandRegime::vanishing:
      return "vanishing";
  }
  return "unknown";
}

BigInt boundedMultinomial(long m, long a, long b, long c) {
  if (m < 0 || a < 0 || b < 0 || c < 0 || a + b + c > m) return 0;
  return factorial(m) /
         (factorial(a) * factorial(b) * factorial(c) * factorial(m - a - b - c));
}

std::vector<DegreeArray> enumerateM(const Partition& lambda,
                                    const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("λ and μ must partition the same n");
  }
  const int n = lambda.size();
  // Black side keyed by (r, primed count q', Σ j) for the join.
  std::map<std::tuple<int, int, int>, std::vector<SideChoice>> blackByKey;
  for (auto& choice : sideChoices(mu, false)) {
    blackByKey[{choice.loops, choice.primedCount, choice.arrows}].push_back(
        std::move(choice));
  }
  std::vector<DegreeArray> out;
  for (const auto& white : sideChoices(lambda, true)) {
    if (white.plainCount == 0) continue;
    int degenerate = 0;
    bool repeated = false;
    for (const auto& [key, count] : white.plain) {
      if (key.degree == 2 * key.loops()) {
        ++degenerate;
        repeated = repeated || count > 1;
      }
    }
    if (degenerate > 1 || repeated) continue;
    // Black side must have r equal, Σ j (Q+Q') = p', and q' = Σ j (P+P').
    auto it = blackByKey.find({white.loops, white.arrows, white.primedCount});
    if (it == blackByKey.end()) continue;
    for (const auto& black : it->second) {
      if (n + 1 - white.plainCount - black.plainCount - 2 * white.loops < 0) {
        continue;
      }
      out.push_back({white.plain, white.primed, black.plain, black.primed});
    }
  }
  return out;
}

Rational nFactor(const DegreeArray& a, int n) {
  const Statistics s(a, n);
  if (s.qPrime == 0) {
    return Rational(weightedSum(a.white, [](const DegreeKey& k) {
      return k.degree;
    }));
  }
  if (!degenerateWhiteEntries(a).empty()) {
    throw std::domain_error(
        "N(A) has a zero denominator t-2u-2v; use closedFormSummand()");
  }
  if (s.blackFree() == 0) {
    throw std::domain_error(
        "N(A) has a zero denominator n-q-2r; use closedFormSummand()");
  }
  const bool pole = s.whiteFree() == -1;
  Rational total = 0;
  for (const auto& [key, count] : a.white) {
    const long t = key.degree, u = key.arrows, v = key.extraLoops;
    total += Rational(t * count) / Rational(t - 2 * u - 2 * v) *
             (Rational(t - 2 * u - 2 * v) * s.firstBracket() +
              Rational(u) * s.secondBracket(pole));
  }
  total /= s.qPrime;
  total.canonicalize();
  return total;
}

Summand closedFormSummand(const DegreeArray& a, int n) {
  const Statistics s(a, n);
  if (s.p < 1) throw std::out_of_range("degree array needs p >= 1");
  if (s.qPrime != 0 && s.blackFree() == 0) return singleWhiteSummand(a, s);

  const auto degenerate = degenerateWhiteEntries(a);
  if (degenerate.size() > 1 ||
      (degenerate.size() == 1 && degenerate[0].second > 1)) {
    throw std::out_of_range("more than one white entry with i = 2(j+k)");
  }
  const bool hasDegenerate = !degenerate.empty();
  const DegreeKey degenerateKey = hasDegenerate ? degenerate[0].first
                                                : DegreeKey{};

  if (s.qPrime == 0 || !hasDegenerate) {
    BigInt product = multinomialProduct(a, false, degenerateKey);
    if (product == 0) return {Rational(0), SummandRegime::vanishing};
  } else if (multinomialProduct(a, true, degenerateKey) == 0) {
    return {Rational(0), SummandRegime::vanishing};
  }

  const bool pole = s.whiteFree() == -1;
  if (pole && (s.q != 0 || s.thorns() != 0 || 1 + s.excessP != 0 ||
               s.overPprime(s.excessPprime * s.jQprime) != 0 ||
               !hasDegenerate || s.qPrime == 0)) {
    throw std::out_of_range("(n-p-2r)! = (-1)! without a cancelling factor");
  }

  // N(A) times the multinomial of the degenerate entry, if any.
  Rational weighted;
  SummandRegime regime = SummandRegime::generic;
  BigInt product;
  if (s.qPrime != 0 && hasDegenerate) {
    const long i0 = degenerateKey.degree, j0 = degenerateKey.arrows,
               k0 = degenerateKey.extraLoops;
    weighted = Rational(j0, s.qPrime) *
               Rational(boundedMultinomial(i0, j0, k0, i0 - j0 - k0)) *
               s.secondBracket(pole);
    product = multinomialProduct(a, true, degenerateKey);
    regime = pole ? SummandRegime::poleCancelled
                  : SummandRegime::degenerateEntry;
  } else {
    weighted = nFactor(a, n);
    product = multinomialProduct(a, false, degenerateKey);
  }

  Rational value = weighted / Rational(a.automorphism()) * s.rootFactor() *
                   Rational(product);
  if (pole) {
    // (n-q-2r)! · [(1+Σ(i-1-2j-2k)P) (n-p-2r)! / (n+1-p-q-2r)!] with the
    // bracketed ratio equal to 1 in the limit.
    value *= Rational(checkedFactorial(s.blackFree(), "(n-q-2r)!"));
  } else {
    if (s.thorns() < 0) return {Rational(0), SummandRegime::vanishing};
    value *= Rational(checkedFactorial(s.blackFree(), "(n-q-2r)!") *
                      checkedFactorial(s.whiteFree(), "(n-p-2r)!")) /
             Rational(checkedFactorial(s.thorns(), "(n+1-p-q-2r)!"));
  }
  value.canonicalize();
  return {value, regime};
}

SymSeries rhsSeries(int n) {
  const auto partitions = enumeratePartitions(n);
  const int count = int(partitions.size());
  std::vector<Rational> cells(count * count);
  parallelFor(count * count, [&](int cell) {
    const Partition& lambda = partitions[cell / count];
    const Partition& mu = partitions[cell % count];
    Rational sum = 0;
    for (const auto& a : enumerateM(lambda, mu)) {
      sum += closedFormSummand(a, n).value;
    }
    sum *= Rational(automorphismFactor(lambda) * automorphismFactor(mu));
    sum.canonicalize();
    cells[cell] = sum;
  });
  SymSeries series(n, Basis::monomial);
  for (int cell = 0; cell < count * count; ++cell) {
    if (!isInteger(cells[cell])) {
      throw std::logic_error(
          "NonIntegralTotal: coefficient of m_" +
          partitions[cell / count].toString() + " m_" +
          partitions[cell % count].toString() + " is " +
          toString(cells[cell]));
    }
    series.add(partitions[cell / count], partitions[cell % count],
               cells[cell]);
  }
  return series;
}

SymSeries orientableSeries(int n) {
  const auto partitions = enumeratePartitions(n);
  SymSeries series(n, Basis::monomial);
  for (const auto& lambda : partitions) {
    for (const auto& mu : partitions) {
      const long denominator = n + 1L - lambda.length() - mu.length();
      Rational value = 0;
      if (denominator >= 0) {
        value = Rational(BigInt(n) * factorial(n - lambda.length()) *
                         factorial(n - mu.length())) /
                Rational(factorial(denominator));
      }
      series.add(lambda, mu, value);
    }
  }
  return series;
}

namespace {

Partition cycleTypeOf(const std::vector<int>& image) {
  std::vector<char> seen(image.size(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int x = int(start); !seen[x]; x = image[x]) {
      seen[x] = 1;
      ++length;
    }
    lengths.push_back(length);
  }
  return Partition::fromUnsorted(std::move(lengths));
}

}  // namespace

SymSeries bruteForceC(int n) {
  std::vector<int> cycle(n);
  for (int x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
  std::vector<int> w1(n);
  std::iota(w1.begin(), w1.end(), 0);
  std::map<PartitionPair, long> counts;
  std::vector<int> inverse(n), w2(n);
  do {
    for (int x = 0; x < n; ++x) inverse[w1[x]] = x;
    // w1 ∘ w2 = cycle  ⇒  w2 = w1⁻¹ ∘ cycle.
    for (int x = 0; x < n; ++x) w2[x] = inverse[cycle[x]];
    ++counts[{cycleTypeOf(w1), cycleTypeOf(w2)}];
  } while (std::next_permutation(w1.begin(), w1.end()));
  SymSeries series(n, Basis::power);
  for (const auto& [key, count] : counts) {
    series.add(key.first, key.second, Rational(count));
  }
  return series;
}

}  // namespace hyperoct
