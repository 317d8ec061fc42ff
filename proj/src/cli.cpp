#include "grassmann/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "grassmann/buchberger_oracle.hpp"
#include "grassmann/cohomology.hpp"
#include "grassmann/dual_classes.hpp"
#include "grassmann/groebner_family.hpp"
#include "grassmann/steenrod.hpp"

namespace grassmann::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

MultiIndex parse_multi_index(const std::string& text, std::size_t k) {
  MultiIndex::Storage entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw UsageError("--only-m expects comma-separated nonnegative integers");
    entries.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (entries.size() != k - 1)
    throw UsageError("--only-m needs exactly k - 1 = " + std::to_string(k - 1) + " entries");
  return MultiIndex(std::move(entries));
}

std::string index_label(const MultiIndex& m) {
  std::string out = "g[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(m[i]);
  }
  return out + "]";
}

struct Options {
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t r = 0;
  std::string format = "text";
  std::string only_m;
  std::string poly;
  std::uint64_t cap = kDefaultOracleCap;
};

int do_generate(const Options& o, std::ostream& out) {
  const GrassmannContext ctx(o.k, o.n);
  GroebnerFamily family(ctx);
  std::vector<MultiIndex> wanted;
  if (!o.only_m.empty()) {
    wanted.push_back(parse_multi_index(o.only_m, o.k));
    if (wanted.front().sum() > o.n + 1) throw UsageError("--only-m index has S_M > n + 1");
  } else {
    family.materialize();
    wanted = family.indices();
  }
  if (o.format == "json") {
    std::vector<FamilyRecord> records;
    for (const auto& m : wanted) {
      const Polynomial& g = family.element(m);
      records.push_back({m, g.leading_term(), g});
    }
    out << family_records_to_json(records).dump() << '\n';
  } else {
    for (const auto& m : wanted) out << index_label(m) << " = " << family.element(m) << '\n';
  }
  return kExitOk;
}

int do_reduce(const Options& o, std::ostream& out) {
  const GrassmannContext ctx(o.k, o.n);
  const Polynomial f = parse_polynomial(o.poly, o.k);
  GroebnerFamily family(ctx);
  out << normal_form(f, family).value() << '\n';
  return kExitOk;
}

int do_dual(const Options& o, std::ostream& out) {
  if (o.k < 2) throw UsageError("-k must be at least 2");
  if (o.r < 1) throw UsageError("-r must be at least 1");
  out << wbar_recurrence(o.r, o.k) << '\n';
  return kExitOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const GrassmannContext ctx(o.k, o.n);
  const auto oracle = oracle_basis(ctx, o.cap);
  const auto family = build_family(ctx);
  std::vector<Polynomial> closed;
  for (const auto& m : family->indices()) closed.push_back(family->element(m));
  std::sort(closed.begin(), closed.end(), [](const Polynomial& a, const Polynomial& b) {
    return grlex_compare_unchecked(a.leading_term(), b.leading_term()) < 0;
  });
  if (oracle == closed) {
    out << "OK: reduced Groebner basis matches oracle (" << closed.size() << " elements)\n";
    return kExitOk;
  }
  out << "MISMATCH: oracle has " << oracle.size() << " elements, closed form has " << closed.size() << '\n';
  for (const auto& p : closed) {
    if (std::find(oracle.begin(), oracle.end(), p) == oracle.end()) out << "  closed form only: " << p << '\n';
  }
  for (const auto& p : oracle) {
    if (std::find(closed.begin(), closed.end(), p) == closed.end()) out << "  oracle only: " << p << '\n';
  }
  return kExitVerificationFailed;
}

int do_immersion_check(const Options& o, std::ostream& out) {
  if (o.n < 8 || o.n % 8 != 0) throw UsageError("-n must be a positive multiple of 8");
  GroebnerFamily family(GrassmannContext(5, o.n));
  const auto report = immersion_obstruction_check(o.n, family);
  out << "n: " << report.n << '\n';
  out << "w2_normal: " << report.w2_normal.value() << '\n';
  out << "sq1_value: " << report.sq1_value.value() << '\n';
  out << "k1_obstruction_value: " << report.k1_obstruction_value.value() << '\n';
  out << "lift_possible: " << (report.lift_possible ? "yes" : "no") << '\n';
  return kExitOk;
}

int do_basis(const Options& o, std::ostream& out) {
  const auto basis = standard_basis(GrassmannContext(o.k, o.n));
  out << "count: " << basis.size() << '\n';
  for (const auto& m : basis) out << m << '\n';
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the mod 2 cohomology of real Grassmann manifolds"};
  app.name("grassmann");
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Print the reduced Groebner basis of I_{k,n}");
  generate->add_option("-k", o.k, "rank k")->required();
  generate->add_option("-n", o.n, "codimension n")->required();
  generate->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  generate->add_option("--only-m", o.only_m, "print only g_M for M = m2,...,mk");

  auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a polynomial in H*(G_{k,n})");
  reduce_cmd->add_option("-k", o.k, "rank k")->required();
  reduce_cmd->add_option("-n", o.n, "codimension n")->required();
  reduce_cmd->add_option("poly", o.poly, "polynomial, e.g. \"w1^2*w2 + w2^2\"")->required();

  auto* dual = app.add_subcommand("dual", "Print the dual class wbar_r");
  dual->add_option("-k", o.k, "rank k")->required();
  dual->add_option("-r", o.r, "degree r")->required();

  auto* verify = app.add_subcommand("verify", "Compare the closed-form basis with a Buchberger run");
  verify->add_option("-k", o.k, "rank k")->required();
  verify->add_option("-n", o.n, "codimension n")->required();
  verify->add_option("--cap", o.cap, "largest basis size the oracle attempts");

  auto* immersion = app.add_subcommand("immersion-check", "Obstruction computations for G_{5,n}, n = 0 mod 8");
  immersion->add_option("-n", o.n, "codimension n")->required();

  auto* basis = app.add_subcommand("basis", "List the standard monomial basis");
  basis->add_option("-k", o.k, "rank k")->required();
  basis->add_option("-n", o.n, "codimension n")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return do_generate(o, out);
    if (reduce_cmd->parsed()) return do_reduce(o, out);
    if (dual->parsed()) return do_dual(o, out);
    if (verify->parsed()) return do_verify(o, out);
    if (immersion->parsed()) return do_immersion_check(o, out);
    if (basis->parsed()) return do_basis(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleCapExceeded& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

} // namespace grassmann::cli
