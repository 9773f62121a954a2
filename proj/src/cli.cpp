#include "balancing/cli.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "balancing/laurent.hpp"
#include "balancing/linearize.hpp"
#include "balancing/sequences.hpp"
#include "balancing/serialize.hpp"
#include "balancing/summation.hpp"

namespace balancing::cli {

namespace {

enum class Format { kText, kJson, kCsv };
enum class Method { kRecurrence, kFast, kBinet };

const std::map<std::string, Format> kFormats{
    {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
const std::map<std::string, Method> kMethods{
    {"recurrence", Method::kRecurrence}, {"fast", Method::kFast}, {"binet", Method::kBinet}};
const std::map<std::string, Sequence> kSequences{
    {"B", Sequence::kBalancing}, {"C", Sequence::kLucasBalancing}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void require_not_csv(Format format) {
  if (format == Format::kCsv) throw UsageError("csv output is only available for gen and sum");
}

// gen

struct GenArgs {
  std::int64_t upto = 10;
  Method method = Method::kRecurrence;
  Sequence seq = Sequence::kBalancing;
  Format format = Format::kText;
};

Integer generate(Sequence seq, Method method, std::int64_t n) {
  const bool b = seq == Sequence::kBalancing;
  switch (method) {
    case Method::kFast:
      return b ? balancing_fast(n) : lucas_balancing_fast(n);
    case Method::kBinet:
      return b ? balancing_binet(n) : lucas_balancing_binet(n);
    case Method::kRecurrence:
      break;
  }
  return b ? balancing(n) : lucas_balancing(n);
}

std::string method_name(Method method) {
  for (const auto& [name, m] : kMethods) {
    if (m == method) return name;
  }
  return "recurrence";
}

int cmd_gen(const GenArgs& args, std::ostream& out) {
  const std::string seq_name = args.seq == Sequence::kBalancing ? "B" : "C";
  std::vector<Integer> values;
  if (args.method == Method::kRecurrence) {
    values = SeqTable(args.seq, args.upto).values();
  } else {
    for (std::int64_t n = 0; n <= args.upto; ++n) values.push_back(generate(args.seq, args.method, n));
  }

  switch (args.format) {
    case Format::kJson: {
      Json j;
      j["seq"] = seq_name;
      j["method"] = method_name(args.method);
      Json rows = Json::array();
      for (std::size_t n = 0; n < values.size(); ++n) {
        rows.push_back(Json{{"n", n}, {"value", values[n].get_str()}});
      }
      j["rows"] = std::move(rows);
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "n," << seq_name << '\n';
      for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n] << '\n';
      break;
    case Format::kText:
      for (std::size_t n = 0; n < values.size(); ++n) out << n << ' ' << values[n] << '\n';
      break;
  }
  return kExitOk;
}

// linearize

struct LinearizeArgs {
  std::int64_t power = 1;
  Format format = Format::kText;
};

int cmd_linearize(const LinearizeArgs& args, std::ostream& out) {
  require_not_csv(args.format);
  const LinearForm form = linearize(args.power);
  if (args.format == Format::kJson) {
    out << to_json(form).dump() << '\n';
  } else {
    out << render(form) << '\n';
  }
  return kExitOk;
}

// sum

struct SumArgs {
  std::int64_t m = 1;
  std::int64_t power = 1;
  std::int64_t upto = 0;
  bool oracle = false;
  bool sweep = false;
  Format format = Format::kText;
};

int cmd_sum(const SumArgs& args, std::ostream& out, std::ostream& err) {
  struct Row {
    std::int64_t n;
    Integer value;
    Integer oracle;
  };
  std::vector<Row> rows;
  bool match = true;
  for (std::int64_t n = args.sweep ? 0 : args.upto; n <= args.upto; ++n) {
    Row row{n, power_sum(args.m, args.power, n), 0};
    if (args.oracle) {
      row.oracle = brute_force_power_sum(args.m, args.power, n);
      if (row.oracle != row.value) {
        match = false;
        err << "oracle mismatch at n=" << n << ": closed form " << row.value << ", brute force "
            << row.oracle << '\n';
      }
    }
    rows.push_back(std::move(row));
  }

  switch (args.format) {
    case Format::kJson: {
      Json j;
      j["m"] = args.m;
      j["power"] = args.power;
      Json jrows = Json::array();
      for (const Row& r : rows) {
        Json jr;
        jr["n"] = r.n;
        jr["value"] = r.value.get_str();
        if (args.oracle) jr["oracle"] = r.oracle.get_str();
        jrows.push_back(std::move(jr));
      }
      j["rows"] = std::move(jrows);
      if (args.oracle) j["match"] = match;
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "m,power,n,value" << (args.oracle ? ",oracle" : "") << '\n';
      for (const Row& r : rows) {
        out << args.m << ',' << args.power << ',' << r.n << ',' << r.value;
        if (args.oracle) out << ',' << r.oracle;
        out << '\n';
      }
      break;
    case Format::kText:
      for (const Row& r : rows) {
        if (args.sweep) out << r.n << ' ';
        out << r.value;
        if (args.oracle) out << (args.sweep ? " " : "\noracle: ") << r.oracle;
        out << '\n';
      }
      if (args.oracle) out << (match ? "oracle agrees" : "ORACLE MISMATCH") << '\n';
      break;
  }
  return match ? kExitOk : kExitFailure;
}

// formula

struct FormulaArgs {
  std::int64_t m = 1;
  std::int64_t power = 1;
  Format format = Format::kText;
};

int cmd_formula(const FormulaArgs& args, std::ostream& out) {
  require_not_csv(args.format);
  const ClosedSumExpr expr = power_sum_formula(args.m, args.power);
  if (args.format == Format::kJson) {
    out << to_json(expr).dump() << '\n';
    return kExitOk;
  }
  out << render(expr) << '\n';
  const Integer at_zero = evaluate_closed_sum(expr, 0);
  const Integer brute = brute_force_power_sum(args.m, args.power, 0);
  out << "# check: n=0 gives " << at_zero << ", direct sum " << brute << '\n';
  return at_zero == brute ? kExitOk : kExitFailure;
}

// verify

struct VerifyArgs {
  std::int64_t lemma_max_m = -1;
  std::int64_t odd_max_l = -1;
  std::int64_t even_max_l = -1;
  Format format = Format::kText;
};

int cmd_verify(VerifyArgs args, std::ostream& out) {
  require_not_csv(args.format);
  if (args.lemma_max_m < 0 && args.odd_max_l < 0 && args.even_max_l < 0) {
    args.lemma_max_m = 20;
    args.odd_max_l = 10;
    args.even_max_l = 6;
  }

  struct Case {
    std::string identity;
    std::string param;
    std::int64_t value;
    bool pass;
  };
  std::vector<Case> cases;
  for (std::int64_t m = 2; m <= args.lemma_max_m; ++m) {
    cases.push_back({"lemma", "m", m, verify_lemma_identity(m)});
  }
  for (std::int64_t l = 0; l <= args.odd_max_l; ++l) {
    cases.push_back({"odd", "l", l, verify_odd_theorem(l)});
  }
  for (std::int64_t l = 1; l <= args.even_max_l; ++l) {
    cases.push_back({"even", "l", l, verify_even_theorem(l)});
  }

  std::size_t passed = 0;
  for (const Case& c : cases) passed += c.pass ? 1 : 0;

  if (args.format == Format::kJson) {
    Json j;
    Json jcases = Json::array();
    for (const Case& c : cases) {
      Json jc;
      jc["identity"] = c.identity;
      jc[c.param] = c.value;
      jc["pass"] = c.pass;
      jcases.push_back(std::move(jc));
    }
    j["cases"] = std::move(jcases);
    j["passed"] = passed;
    j["total"] = cases.size();
    out << j.dump() << '\n';
  } else {
    for (const Case& c : cases) {
      out << c.identity << ' ' << c.param << '=' << c.value << ": " << (c.pass ? "pass" : "FAIL")
          << '\n';
    }
    out << passed << '/' << cases.size() << " identities verified\n";
  }
  return passed == cases.size() ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balancing numbers: generation, power linearization and closed-form sums",
               "balancing"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Print (n, value) rows of B_n or C_n");
  gen->add_option("--upto", gen_args.upto, "Largest index")->check(CLI::NonNegativeNumber);
  gen->add_option("--method", gen_args.method, "recurrence, fast or binet")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  gen->add_option("--seq", gen_args.seq, "B (balancing) or C (Lucas-balancing)")
      ->transform(CLI::CheckedTransformer(kSequences));
  add_format(gen, gen_args.format);

  LinearizeArgs lin_args;
  auto* lin = app.add_subcommand("linearize", "Write B_n^power as a combination of B_{jn}");
  lin->add_option("--power", lin_args.power, "Exponent, at least 1")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  add_format(lin, lin_args.format);

  SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "Evaluate sum_{0<=k<=upto} B_{km}^power");
  sum->add_option("--m", sum_args.m, "Index stride, at least 1")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  sum->add_option("--power", sum_args.power, "Exponent, at least 1")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  sum->add_option("--upto", sum_args.upto, "Upper summation limit")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sum->add_flag("--oracle", sum_args.oracle, "Also compute the sum directly; exit 1 on mismatch");
  sum->add_flag("--sweep", sum_args.sweep, "Print every partial sum for n = 0..upto");
  add_format(sum, sum_args.format);

  FormulaArgs formula_args;
  auto* formula = app.add_subcommand("formula", "Print the closed form of the partial power sum");
  formula->add_option("--m", formula_args.m, "Index stride, at least 1")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  formula->add_option("--power", formula_args.power, "Exponent, at least 1")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  add_format(formula, formula_args.format);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Check the linearization and generating-function identities symbolically");
  verify->add_option("--lemma-max-m", verify_args.lemma_max_m, "Largest m for the GF recurrence")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--odd-max-l", verify_args.odd_max_l, "Largest l for odd powers 2l+1")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--even-max-l", verify_args.even_max_l, "Largest l for even powers 2l")
      ->check(CLI::NonNegativeNumber);
  add_format(verify, verify_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_args, out);
    if (*lin) return cmd_linearize(lin_args, out);
    if (*sum) return cmd_sum(sum_args, out, err);
    if (*formula) return cmd_formula(formula_args, out);
    if (*verify) return cmd_verify(verify_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"balancing"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace balancing::cli
