#include "hurwitz/cli.hh"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "hurwitz/family_file.hh"
#include "hurwitz/json_io.hh"

namespace hurwitz::cli {
namespace {

constexpr std::string_view kNative = "native";
constexpr std::string_view kCanonical = "canonical";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "bernoulli-carlitz";
  std::optional<std::uint64_t> p;
  int e = 1;
  std::string modulus;
  std::uint64_t ell = 1;
  std::uint64_t n_max = 10;
  std::vector<std::string> methods;
  std::string format = "text";
  std::string family_file;
  std::uint64_t seed = 0;
  std::optional<std::size_t> order;
};

// One column of output: a method, or a reference computation for BC/CC.
struct Column {
  std::string name;
  bool list = false;                 // produces every n at once
  std::optional<Method> method;      // unset for reference columns
  std::vector<std::uint64_t> indices; // n values this column covers
};

struct Job {
  Options opt;
  AppellFamily family;
  std::vector<Column> columns; // sorted by name
};

struct Cell {
  std::uint64_t n;
  std::string method;
  RatFunc value;
};

// Smallest prime factor q and exponent k when n = q^k, else nullopt.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n)
{
  if (n < 2) return std::nullopt;
  std::uint64_t q = n;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      q = d;
      break;
    }
  int k = 0;
  for (; n % q == 0; n /= q) ++k;
  if (n != 1) return std::nullopt;
  return std::pair{q, k};
}

// First monic irreducible polynomial of degree k over F_q, in text form.
std::optional<std::string> first_irreducible(std::uint64_t q, int k)
{
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) {
    count *= q;
    if (count > 65536) return std::nullopt;
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint64_t> coeffs(std::size_t(k) + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i, c /= q) coeffs[std::size_t(i)] = c % q;
    coeffs[std::size_t(k)] = 1;
    try {
      FieldSpec::make(q, k, coeffs);
    } catch (const Error&) {
      continue;
    }
    std::vector<Code> codes(coeffs.begin(), coeffs.end());
    std::string s = Poly(FieldSpec::make(q), codes).to_string();
    for (auto& ch : s)
      if (ch == 'T') ch = 'x';
    return s;
  }
  return std::nullopt;
}

FieldSpec field_from_options(const Options& opt)
{
  if (!opt.p) throw UsageError("--p is required for built-in families");
  const std::uint64_t p = *opt.p;
  if (!is_prime(p)) {
    std::string msg = "characteristic must be prime";
    if (auto pp = prime_power(p); pp && pp->second > 1) {
      msg += "; use --p " + std::to_string(pp->first) + " --e " + std::to_string(pp->second) + " --modulus ";
      auto m = first_irreducible(pp->first, pp->second);
      msg += m ? *m : "<irreducible polynomial in x>";
    }
    throw UsageError(msg);
  }
  if (opt.e < 1) throw UsageError("--e must be >= 1");
  if (opt.e > 1 && opt.modulus.empty()) throw UsageError("--e " + std::to_string(opt.e) + " needs --modulus");
  return field_from_parts(p, opt.e, opt.modulus);
}

Family parse_family_name(const std::string& name)
{
  if (name == "bernoulli-carlitz" || name == "bc" || name == "BC") return Family::BernoulliCarlitz;
  if (name == "cauchy-carlitz" || name == "cc" || name == "CC") return Family::CauchyCarlitz;
  if (name == "custom") return Family::Custom;
  throw UsageError("unknown family \"" + name + "\" (bernoulli-carlitz, cauchy-carlitz, custom)");
}

std::uint64_t method_cap(Method m)
{
  switch (m) {
  case Method::Closed: return kClosedMaxIndex;
  case Method::Partition: return kPartitionMaxIndex;
  case Method::Determinant: return kDeterminantMaxIndex;
  default: return std::numeric_limits<std::uint64_t>::max();
  }
}

// Validates options against module preconditions; nothing is computed yet
// beyond the lambda series.
Job make_job(const Options& opt, bool with_references)
{
  if (opt.format != "text" && opt.format != "json") throw UsageError("--format must be text or json");
  if (opt.ell == 0) throw UsageError("--ell must be >= 1");
  const Family family = parse_family_name(opt.family);

  std::optional<AppellFamily> fam;
  if (family == Family::Custom) {
    if (opt.family_file.empty()) throw UsageError("--family custom needs --family-file");
    if (opt.p || !opt.modulus.empty() || opt.e != 1)
      throw UsageError("the field of a custom family comes from its family file; drop --p/--e/--modulus");
    try {
      fam = parse_family_file(opt.family_file);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (opt.order) {
      if (*opt.order > fam->order())
        throw UsageError("OrderUnderflow: --order " + std::to_string(*opt.order) + " exceeds the family file order " +
                         std::to_string(fam->order()));
      fam = fam->with_order(*opt.order);
    }
  } else {
    if (!opt.family_file.empty()) throw UsageError("--family-file is only used with --family custom");
    FieldSpec spec = [&] {
      try {
        return field_from_options(opt);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }();
    const std::size_t order = opt.order.value_or(opt.n_max + 1);
    if (order < opt.n_max + 1)
      throw UsageError("OrderUnderflow: --order " + std::to_string(order) + " must exceed --n-max " +
                       std::to_string(opt.n_max));
    try {
      fam = AppellFamily::builtin(family, spec, order);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (fam->order() <= opt.n_max)
    throw UsageError("OrderUnderflow: --n-max " + std::to_string(opt.n_max) + " needs a series of order > " +
                     std::to_string(opt.n_max) + ", the family has order " + std::to_string(fam->order()));

  bool all = opt.methods.empty();
  std::set<Method> methods;
  for (const auto& name : opt.methods) {
    if (name == "all") {
      all = true;
      continue;
    }
    auto m = parse_method(name);
    if (!m) throw UsageError("unknown method \"" + name + "\" (closed, determinant, inversion, partition, recurrence, all)");
    methods.insert(*m);
  }

  Job job{opt, *fam, {}};
  auto span_to = [](std::uint64_t hi) {
    std::vector<std::uint64_t> v(hi + 1);
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  for (Method m : kAllMethods) {
    const bool explicit_request = methods.count(m) > 0;
    if (!explicit_request && !all) continue;
    if (m == Method::Partition && opt.ell != 1) {
      if (explicit_request) throw UsageError("IndexTooLarge: the partition method is defined for --ell 1 only");
      continue;
    }
    const std::uint64_t cap = method_cap(m);
    if (explicit_request && opt.n_max > cap) {
      const auto kind = m == Method::Closed ? ErrorKind::IndexTooLargeForLiteralEnumeration : ErrorKind::IndexTooLarge;
      throw UsageError(std::string(error_name(kind)) + ": method " + std::string(method_name(m)) + " is capped at n = " +
                       std::to_string(cap));
    }
    Column c{std::string(method_name(m)), m == Method::Inversion || m == Method::Recurrence, m,
             span_to(std::min(cap, opt.n_max))};
    job.columns.push_back(std::move(c));
  }
  if (with_references) {
    if (fam->label() == Family::BernoulliCarlitz && opt.ell == 1)
      job.columns.push_back({std::string(kNative), true, std::nullopt, span_to(opt.n_max)});
    if (!fam->is_builtin() && fam->label() != Family::Custom)
      job.columns.push_back({std::string(kCanonical), true, std::nullopt, span_to(opt.n_max)});
  }
  std::sort(job.columns.begin(), job.columns.end(), [](const Column& a, const Column& b) { return a.name < b.name; });
  return job;
}

struct Task {
  std::size_t column;
  std::optional<std::uint64_t> n; // unset for list columns
};

std::vector<Cell> run_task(const Job& job, const Task& task)
{
  const Column& col = job.columns[task.column];
  const auto& fam = job.family;
  const std::uint64_t ell = job.opt.ell, n_max = job.opt.n_max;
  std::vector<Cell> out;
  auto take = [&](const std::vector<ACResult>& rs) {
    for (const auto& r : rs) out.push_back({r.n, col.name, r.value});
  };
  if (!col.method) {
    if (col.name == kNative) take(bc_native_recurrence(fam.ctx(), n_max));
    else take(ac_inversion(AppellFamily::builtin(fam.label(), fam.spec(), n_max + 1), ell, n_max));
    return out;
  }
  switch (*col.method) {
  case Method::Inversion: take(ac_inversion(fam, ell, n_max)); break;
  case Method::Recurrence: take(ac_recurrence(fam, ell, n_max)); break;
  case Method::Closed: take({ac_closed(fam, ell, *task.n)}); break;
  case Method::Partition: take({ac_partition(fam, *task.n)}); break;
  case Method::Determinant: take({ac_determinant(fam, ell, *task.n)}); break;
  }
  return out;
}

// Evaluates every cell on a small worker pool; tasks are started in an order
// shuffled by the seed, results are returned sorted by (n, method).
std::vector<Cell> evaluate(const Job& job)
{
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < job.columns.size(); ++c) {
    if (job.columns[c].list) tasks.push_back({c, std::nullopt});
    else
      for (auto n : job.columns[c].indices) tasks.push_back({c, n});
  }
  std::vector<std::size_t> schedule(tasks.size());
  std::iota(schedule.begin(), schedule.end(), 0);
  std::mt19937_64 rng(job.opt.seed);
  std::shuffle(schedule.begin(), schedule.end(), rng);

  std::vector<std::vector<Cell>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < schedule.size();) {
      const std::size_t t = schedule[i];
      try {
        results[t] = run_task(job, tasks[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(tasks.size(), std::max(1u, std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<Cell> cells;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const Column& col = job.columns[tasks[t].column];
    for (auto& c : results[t])
      if (std::binary_search(col.indices.begin(), col.indices.end(), c.n)) cells.push_back(std::move(c));
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.n != b.n ? a.n < b.n : a.method < b.method;
  });
  return cells;
}

std::string value_label(const Job& job, std::uint64_t n)
{
  std::string s(family_symbol(job.family.label()));
  if (job.opt.ell != 1) s += "^(" + std::to_string(job.opt.ell) + ")";
  return s + "_" + std::to_string(n);
}

Json cell_json(const Job& job, const Cell& c)
{
  return record_to_json(job.family.label(), job.family.spec().r(), job.opt.ell, c.n, c.method, c.value);
}

void add_common_options(CLI::App& sub, Options& opt)
{
  sub.add_option("--family", opt.family, "bernoulli-carlitz, cauchy-carlitz or custom");
  sub.add_option("--p", opt.p, "field characteristic (prime)");
  sub.add_option("--e", opt.e, "extension degree");
  sub.add_option("--modulus", opt.modulus, "monic irreducible modulus in x over F_p, e.g. x^2+x+1");
  sub.add_option("--ell", opt.ell, "order l of the numbers");
  sub.add_option("--n-max", opt.n_max, "largest index n");
  sub.add_option("--method", opt.methods, "method name (repeatable) or all")->take_all()->allow_extra_args(false);
  sub.add_option("--format", opt.format, "text or json");
  sub.add_option("--family-file", opt.family_file, "lambda coefficients of a custom family");
  sub.add_option("--seed", opt.seed, "seed for the evaluation schedule");
  sub.add_option("--order", opt.order, "series truncation order (default n-max + 1)");
}

int cmd_compute(Options opt, std::ostream& out)
{
  if (opt.methods.empty()) opt.methods.push_back("recurrence");
  const Job job = make_job(opt, false);
  const auto cells = evaluate(job);
  const bool tag = job.columns.size() > 1;
  for (const auto& c : cells) {
    if (opt.format == "json") {
      out << cell_json(job, c).dump() << "\n";
      continue;
    }
    out << value_label(job, c.n) << " = " << c.value.to_string();
    if (tag) out << "  [" << c.method << "]";
    out << "\n";
  }
  return kOk;
}

// First index at which the columns disagree, with its cells.
std::optional<std::vector<Cell>> first_mismatch(const std::vector<Cell>& cells)
{
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    bool agree = true;
    while (j < cells.size() && cells[j].n == cells[i].n) {
      agree &= cells[j].value == cells[i].value;
      ++j;
    }
    if (!agree) return std::vector<Cell>(cells.begin() + std::ptrdiff_t(i), cells.begin() + std::ptrdiff_t(j));
    i = j;
  }
  return std::nullopt;
}

void report_mismatch(const Job& job, const std::vector<Cell>& diff, std::ostream& out)
{
  if (job.opt.format == "json") {
    Json j;
    j["status"] = "mismatch";
    j["n"] = diff.front().n;
    Json cells = Json::array();
    for (const auto& c : diff) cells.push_back(cell_json(job, c));
    j["cells"] = std::move(cells);
    out << j.dump() << "\n";
    return;
  }
  out << "MISMATCH at n=" << diff.front().n << "\n";
  for (const auto& c : diff) out << "n=" << c.n << " method=" << c.method << " value=" << c.value.to_string() << "\n";
}

int cmd_crosscheck(const Options& opt, std::ostream& out)
{
  std::size_t requested = 0;
  for (const auto& m : opt.methods) requested += m == "all" ? 5 : 1;
  if (!opt.methods.empty() && requested < 2) throw UsageError("crosscheck needs at least two methods");
  const Job job = make_job(opt, true);
  const auto cells = evaluate(job);
  if (auto diff = first_mismatch(cells)) {
    report_mismatch(job, *diff, out);
    return kMismatch;
  }
  if (opt.format == "json") {
    Json j;
    j["status"] = "ok";
    j["values"] = opt.n_max + 1;
    j["methods"] = job.columns.size();
    out << j.dump() << "\n";
  } else {
    out << "OK (" << opt.n_max + 1 << " values, " << job.columns.size() << " methods)\n";
  }
  return kOk;
}

int cmd_bench(const Options& opt, std::ostream& out)
{
  const Job job = make_job(opt, false);
  const auto cells = evaluate(job);
  if (auto diff = first_mismatch(cells)) {
    report_mismatch(job, *diff, out);
    return kMismatch;
  }

  // Buckets of ten indices; the last one absorbs the remainder.
  const std::uint64_t buckets = std::max<std::uint64_t>(1, (opt.n_max + 1) / 10);
  out << "n_lo,n_hi";
  for (const auto& c : job.columns) out << "," << c.name << "_ms";
  out << "\n";
  for (std::uint64_t b = 0; b < buckets; ++b) {
    const std::uint64_t lo = b * 10, hi = b + 1 == buckets ? opt.n_max : lo + 9;
    out << lo << "," << hi;
    for (std::size_t ci = 0; ci < job.columns.size(); ++ci) {
      const Column& col = job.columns[ci];
      std::vector<std::uint64_t> ns;
      for (auto n : col.indices)
        if (n >= lo && n <= hi) ns.push_back(n);
      out << ",";
      if (ns.empty()) continue;
      const auto t0 = std::chrono::steady_clock::now();
      if (col.list) {
        // Sequence methods cannot skip the prefix: time everything up to hi.
        Options sub = opt;
        sub.n_max = hi;
        Job j2 = job;
        j2.opt = sub;
        run_task(j2, {ci, std::nullopt});
      } else {
        for (auto n : ns) run_task(job, {ci, n});
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      out << buf;
    }
    out << "\n";
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Appell-Carlitz numbers over F_r(T)", args.empty() ? "hurwitz" : args[0]};
  app.require_subcommand(1);
  Options compute_opt, cross_opt, bench_opt;
  auto* compute = app.add_subcommand("compute", "print AC_n^(l) for n = 0..n-max");
  auto* cross = app.add_subcommand("crosscheck", "check that the methods agree");
  auto* bench = app.add_subcommand("bench", "time the methods per block of ten indices (CSV)");
  add_common_options(*compute, compute_opt);
  add_common_options(*cross, cross_opt);
  add_common_options(*bench, bench_opt);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_opt, out);
    if (cross->parsed()) return cmd_crosscheck(cross_opt, out);
    return cmd_bench(bench_opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kComputation;
  }
}

} // namespace hurwitz::cli
