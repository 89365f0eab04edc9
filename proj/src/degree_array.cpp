#include "hyperoct/degree_array.hpp"

namespace hyperoct {

namespace {

int total(const DegreeCounts& counts) {
  int sum = 0;
  for (const auto& [key, count] : counts) sum += count;
  return sum;
}

std::string describe(const DegreeCounts& counts) {
  if (counts.empty()) return "0";
  std::string out;
  for (const auto& [key, count] : counts) {
    if (!out.empty()) out += '+';
    if (count != 1) out += std::to_string(count);
    out += "E_{" + std::to_string(key.degree) + "," +
           std::to_string(key.arrows) + "," + std::to_string(key.extraLoops) +
           "}";
  }
  return out;
}

}  // namespace

void DegreeArray::add(DegreeCounts& counts, DegreeKey key, int times) {
  if (times == 0) return;
  int& slot = counts[key];
  slot += times;
  if (slot == 0) counts.erase(key);
}

int DegreeArray::whiteCount() const { return total(white); }
int DegreeArray::whiteRootCount() const { return total(whiteRoots); }
int DegreeArray::blackCount() const { return total(black); }
int DegreeArray::blackRootCount() const { return total(blackRoots); }

int DegreeArray::loopPairs() const {
  auto loops = [](const DegreeKey& k) { return k.loops(); };
  return int(weightedSum(white, loops) + weightedSum(whiteRoots, loops));
}

int DegreeArray::loopPairsBlack() const {
  auto loops = [](const DegreeKey& k) { return k.loops(); };
  return int(weightedSum(black, loops) + weightedSum(blackRoots, loops));
}

int DegreeArray::halfSize() const {
  auto degree = [](const DegreeKey& k) { return k.degree; };
  return int(weightedSum(white, degree) + weightedSum(whiteRoots, degree));
}

BigInt DegreeArray::automorphism() const {
  BigInt result = 1;
  for (const DegreeCounts* counts : {&white, &whiteRoots, &black, &blackRoots}) {
    for (const auto& [key, count] : *counts) result *= factorial(count);
  }
  return result;
}

std::string DegreeArray::toString() const {
  return "P=" + describe(white) + ";P'=" + describe(whiteRoots) +
         ";Q=" + describe(black) + ";Q'=" + describe(blackRoots);
}

std::ostream& operator<<(std::ostream& out, const DegreeArray& a) {
  return out << a.toString();
}

}  // namespace hyperoct
