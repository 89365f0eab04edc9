#include "hyperoct/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>

#include "hyperoct/bijection.hpp"
#include "hyperoct/characters.hpp"
#include "hyperoct/formula.hpp"
#include "hyperoct/serialize.hpp"
#include "hyperoct/verify.hpp"

namespace hyperoct {

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Partition partitionOf(const std::string& text, int n, const char* flag) {
  Partition p;
  try {
    p = Partition::parse(text);
  } catch (const std::invalid_argument& error) {
    throw UsageError(std::string(flag) + ": " + error.what());
  }
  if (p.size() != n) {
    throw UsageError(std::string(flag) + " " + text + " is not a partition of " +
                     std::to_string(n));
  }
  return p;
}

CountTable integerTable(const SymSeries& series) {
  CountTable table;
  for (const auto& [key, value] : series.coefficients()) {
    table[key] = value.get_num();
  }
  return table;
}

void writeOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error(path + ": cannot open for writing");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Connection coefficients of the hyperoctahedral double-coset "
               "algebra, partitioned hypermaps and permuted forests"};
  app.require_subcommand(1);

  int n = 0;
  std::string stat, format = "csv", lambdaText, muText, nuText,
                    method = "formula", basis, side, direction, input, output,
                    suite = "all";
  const auto positive = CLI::PositiveNumber;

  auto* table = app.add_subcommand("table", "Print a coefficient table");
  table->add_option("--stat", stat, "L, LP, b or c")
      ->required()
      ->check(CLI::IsMember({"L", "LP", "b", "c"}));
  table->add_option("--n", n)->required()->check(positive);
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--nu", nuText, "double coset for --stat b (default n)");

  auto* coeff = app.add_subcommand(
      "coeff",
      "One coefficient: L^n_{lambda,mu} for formula/pairings, "
      "b^nu_{lambda,mu} for cosets/characters");
  coeff->add_option("--n", n)->required()->check(positive);
  coeff->add_option("--lambda", lambdaText)->required();
  coeff->add_option("--mu", muText)->required();
  coeff->add_option("--nu", nuText);
  coeff->add_option("--method", method)
      ->check(CLI::IsMember({"formula", "pairings", "cosets", "characters"}));

  auto* series = app.add_subcommand("series", "Print a generating series as JSON");
  series->add_option("--n", n)->required()->check(positive);
  series->add_option("--basis", basis)->required()->check(CLI::IsMember({"p", "m"}));
  series->add_option("--side", side)->required()->check(CLI::IsMember({"lhs", "rhs"}));

  auto* bijection =
      app.add_subcommand("bijection", "Convert between triples and forests");
  bijection->add_option("direction", direction, "forward or inverse")
      ->required()
      ->check(CLI::IsMember({"forward", "inverse"}));
  bijection->add_option("--input", input)->required();
  bijection->add_option("--output", output);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--n", n)->required()->check(positive);
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"main", "bijection", "orientable", "characters", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& error) {
    std::ostringstream help, message;
    const int code = app.exit(error, help, message);
    out << help.str();
    err << message.str();
    return code == 0 ? 0 : kUsage;
  }

  try {
    const Partition full{n > 0 ? n : 1};
    if (*table) {
      CountTable result;
      if (stat == "L") {
        result = countL(n);
      } else if (stat == "LP") {
        result = lpFromL(n);
      } else if (stat == "b") {
        const Partition nu = nuText.empty() ? full : partitionOf(nuText, n, "--nu");
        err << "scanning S_" << 2 * n << std::endl;
        result = bruteForceBTable(nu);
      } else {
        result = integerTable(bruteForceC(n));
      }
      if (format == "csv") {
        out << tableToCsv(result);
      } else {
        out << tableToJson(result).dump(2) << "\n";
      }
      return 0;
    }

    if (*coeff) {
      const Partition lambda = partitionOf(lambdaText, n, "--lambda");
      const Partition mu = partitionOf(muText, n, "--mu");
      const Partition nu = nuText.empty() ? full : partitionOf(nuText, n, "--nu");
      if ((method == "formula" || method == "pairings") && nu != full) {
        throw UsageError("--method " + method + " computes L^n and needs nu = (n)");
      }
      if (method == "pairings") {
        auto l = countL(n);
        auto it = l.find({lambda, mu});
        out << (it == l.end() ? "0" : toString(it->second)) << "\n";
      } else if (method == "formula") {
        out << toString(convertMMtoPP(rhsSeries(n)).coefficient(lambda, mu))
            << "\n";
      } else if (method == "cosets") {
        out << toString(bruteForceB(nu, lambda, mu)) << "\n";
      } else {
        const Rational value = heckeB(nu, lambda, mu);
        out << toString(value) << "\n";
        if (!isInteger(value) || value < 0) {
          err << "NonIntegral: characters gave " << toString(value) << "\n";
          return kFailed;
        }
      }
      return 0;
    }

    if (*series) {
      SymSeries result(n, Basis::power);
      if (side == "lhs") {
        result = lhsSeriesFromL(n);
        if (basis == "m") result = convertPPtoMM(result);
      } else {
        result = rhsSeries(n);
        if (basis == "p") result = convertMMtoPP(result);
      }
      out << toJson(result).dump(2) << "\n";
      return 0;
    }

    if (*bijection) {
      const Json json = parseJson(readFile(input), input);
      if (direction == "forward") {
        const PartitionedHypermap map = hypermapFromJson(json);
        const PermutedForest forest = thetaForward(map);
        err << "degree " << forestDegree(forest).toString() << "\n";
        writeOutput(output, toJson(forest).dump(2) + "\n", out);
      } else {
        PermutedForest forest;
        try {
          forest = forestFromJson(json);
        } catch (const ParseError& error) {
          err << input << ": " << error.what() << "\n";
          return kFailed;
        }
        if (auto violations = validateForest(forest); !violations.empty()) {
          err << input << ": invalid forest\n";
          for (const auto& v : violations) err << "  " << v << "\n";
          return kFailed;
        }
        err << "degree " << forestDegree(forest).toString() << "\n";
        writeOutput(output, toJson(thetaInverse(forest)).dump(2) + "\n", out);
      }
      return 0;
    }

    if (*verify) {
      const auto results = runSuite(suite, n, &err);
      for (const auto& r : results) out << formatResult(r) << "\n";
      return allPassed(results) ? 0 : kFailed;
    }
  } catch (const UsageError& error) {
    err << "usage error: " << error.what() << "\n";
    return kUsage;
  } catch (const ParseError& error) {
    err << error.what() << "\n";
    return kFailed;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace hyperoct
