// koszul-cli: exact Koszul cohomology tables and the closed-form checks
// around them, from the command line.
//
// Exit codes: 0 success / claim confirmed, 1 argument error, 2 resource cap
// hit, 3 claim refuted, 4 claim only partially checked.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "koszul/bounds.hpp"
#include "koszul/koszul.hpp"
#include "koszul/taut.hpp"

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;
using namespace koszul;

namespace {

constexpr const char* kEngineVersion = "0.1.0";

unsigned default_threads() {
  unsigned t = std::thread::hardware_concurrency();
  return t ? t : 1;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join(const std::vector<int>& v) {
  return join(std::vector<std::int64_t>(v.begin(), v.end()));
}

// ---------------------------------------------------------------------------
// per-entry result cache

class Cache {
 public:
  // flag > env KOSZUL_CACHE_DIR > platform cache dir; unusable dirs disable
  // the cache with a warning and computation proceeds
  static Cache open(const std::string& flag_dir, bool disabled) {
    Cache c;
    if (disabled) return c;
    fs::path dir;
    if (!flag_dir.empty()) {
      dir = flag_dir;
    } else if (const char* env = std::getenv("KOSZUL_CACHE_DIR")) {
      dir = env;
    } else if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
      dir = fs::path(xdg) / "koszul";
    } else if (const char* home = std::getenv("HOME")) {
      dir = fs::path(home) / ".cache" / "koszul";
    } else {
      dir = fs::path(".koszul-cache");
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
      std::cerr << "cache: cannot use directory " << dir
                << ", caching disabled\n";
      return c;
    }
    c.dir_ = dir;
    c.enabled_ = true;
    return c;
  }

  bool enabled() const { return enabled_; }
  const fs::path& dir() const { return dir_; }
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }

  std::optional<std::uint64_t> get(const std::string& canonical) {
    if (!enabled_) return std::nullopt;
    fs::path f = dir_ / (hash_name(canonical) + ".json");
    std::ifstream in(f);
    if (!in) {
      ++misses_;
      return std::nullopt;
    }
    try {
      json e = json::parse(in);
      if (e.at("key").get<std::string>() != canonical ||
          e.at("engine").get<std::string>() != kEngineVersion) {
        ++misses_;
        return std::nullopt;
      }
      ++hits_;
      return e.at("dim").get<std::uint64_t>();
    } catch (const std::exception&) {
      std::cerr << "cache: ignoring corrupted entry " << f.filename().string()
                << '\n';
      ++misses_;
      return std::nullopt;
    }
  }

  void put(const std::string& canonical, const std::vector<int>& spaces,
           const MultiDegree& b, const MultiDegree& l, std::uint32_t prime,
           int p, int q, std::uint64_t dim, double wall_ms) {
    if (!enabled_) return;
    json e;
    e["key"] = canonical;
    e["spaces"] = spaces;
    e["b"] = b;
    e["l"] = l;
    e["prime"] = prime;
    e["p"] = p;
    e["q"] = q;
    e["dim"] = dim;
    e["wall_ms"] = wall_ms;
    e["engine"] = kEngineVersion;
    atomic_write(dir_ / (hash_name(canonical) + ".json"), e.dump(2) + "\n");
  }

  // the betti sweep records its hit/miss tally for `cache stat`
  void write_session_stats() const {
    if (!enabled_) return;
    json s;
    s["hits"] = hits_;
    s["misses"] = misses_;
    atomic_write(dir_ / "stats.json", s.dump(2) + "\n");
  }

  static std::string canonical_key(const std::vector<int>& spaces,
                                   const MultiDegree& b, const MultiDegree& l,
                                   std::uint32_t prime, int p, int q) {
    return "spaces=" + join(spaces) + ";b=" + join(b) + ";l=" + join(l) +
           ";prime=" + std::to_string(prime) + ";p=" + std::to_string(p) +
           ";q=" + std::to_string(q);
  }

  static std::string hash_name(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
  }

  static void atomic_write(const fs::path& target, const std::string& text) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << text;
      if (!out) {
        std::cerr << "cache: failed to write " << tmp << '\n';
        return;
      }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) std::cerr << "cache: failed to publish " << target << '\n';
  }

 private:
  fs::path dir_;
  bool enabled_ = false;
  std::uint64_t hits_ = 0, misses_ = 0;
};

bool is_entry_file(const fs::directory_entry& de) {
  if (!de.is_regular_file()) return false;
  std::string name = de.path().filename().string();
  if (name.size() != 16 + 5 || name.substr(16) != ".json") return false;
  return name.find_first_not_of("0123456789abcdef") == 16;
}

// ---------------------------------------------------------------------------
// shared job plumbing

struct Job {
  std::vector<int> spaces;
  std::vector<std::int64_t> b, l;
  std::uint32_t prime = kDefaultPrime;
  int pmax = 0, qmin = 0, qmax = -1;  // qmax < 0: through dim X + 1
  unsigned threads = default_threads();
  std::uint64_t max_basis = ResourceLimits{}.max_basis_elements;
  std::string format = "table";
  std::string cache_dir;
  bool no_cache = false;
};

void add_instance_flags(CLI::App* cmd, Job& job) {
  cmd->add_option("--spaces", job.spaces, "factor dimensions, e.g. 1,1")
      ->delimiter(',')
      ->required();
  cmd->add_option("--b", job.b, "twist multidegree")->delimiter(',')->required();
  cmd->add_option("--l", job.l, "embedding multidegree")
      ->delimiter(',')
      ->required();
  cmd->add_option("--prime", job.prime, "field characteristic");
  cmd->add_option("--threads", job.threads, "worker count");
  cmd->add_option("--max-basis", job.max_basis,
                  "largest graded piece the engine will touch");
}

KoszulInstance make_instance(const Job& job) {
  ResourceLimits lim;
  lim.max_basis_elements = job.max_basis;
  return KoszulInstance(MultiProjSpace(job.spaces),
                        MultiDegree(job.b.begin(), job.b.end()),
                        MultiDegree(job.l.begin(), job.l.end()), job.prime,
                        lim);
}

// ---------------------------------------------------------------------------
// betti

// cell-by-cell sweep so cached entries are skipped individually
BettiTable sweep_table(const KoszulInstance& inst, const Job& job, int qmax,
                       Cache& cache) {
  BettiTable t;
  t.spaces = inst.space().factors;
  t.B = inst.twist();
  t.L = inst.bundle();
  t.prime = inst.field().characteristic();
  t.pmax = job.pmax;
  t.qmin = job.qmin;
  t.qmax = qmax;
  t.regularity_asserted =
      inst.regularity_hypothesis() && qmax >= inst.space().dim() + 2;
  for (int q = job.qmin; q <= qmax; ++q)
    for (int p = 0; p <= job.pmax; ++p) {
      std::string key = Cache::canonical_key(t.spaces, t.B, t.L, t.prime, p, q);
      if (auto hit = cache.get(key)) {
        t.entries[{p, q}] = BettiEntry{*hit, 0.0, 0};
        continue;
      }
      try {
        auto t0 = std::chrono::steady_clock::now();
        std::uint64_t dim = inst.koszul_dimension(p, q, job.threads);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        t.entries[{p, q}] = BettiEntry{dim, ms, 0};
        cache.put(key, t.spaces, t.B, t.L, t.prime, p, q, dim, ms);
      } catch (const resource_error& e) {
        t.failures.push_back({p, q, e.what()});
      }
    }
  return t;
}

void render_betti_human(const BettiTable& t, std::ostream& os) {
  os << "X = P^(" << join(t.spaces) << "), B = O" << degree_to_string(t.B)
     << ", L = O" << degree_to_string(t.L) << ", prime " << t.prime << "\n";
  std::size_t w = 1;
  for (const auto& [key, e] : t.entries)
    w = std::max(w, std::to_string(e.dim).size());
  os << "q\\p";
  for (int p = 0; p <= t.pmax; ++p)
    os << ' ' << std::setw(static_cast<int>(w)) << p;
  os << '\n';
  for (int q = t.qmin; q <= t.qmax; ++q) {
    os << std::setw(3) << q;
    for (int p = 0; p <= t.pmax; ++p) {
      auto v = t.value(p, q);
      os << ' ' << std::setw(static_cast<int>(w));
      if (!v)
        os << '?';
      else if (*v == 0)
        os << '.';
      else
        os << *v;
    }
    os << '\n';
  }
}

void render_betti_csv(const BettiTable& t, std::ostream& os) {
  os << "p,q,dim\n";
  for (const auto& [key, e] : t.entries)
    os << key.first << ',' << key.second << ',' << e.dim << '\n';
}

void render_betti_json(const BettiTable& t, std::ostream& os) {
  json out;
  out["spaces"] = t.spaces;
  out["b"] = t.B;
  out["l"] = t.L;
  out["prime"] = t.prime;
  out["entries"] = json::array();
  for (const auto& [key, e] : t.entries) {
    json cell;
    cell["p"] = key.first;
    cell["q"] = key.second;
    cell["dim"] = e.dim;
    out["entries"].push_back(std::move(cell));
  }
  json meta;
  meta["engine"] = kEngineVersion;
  meta["pmax"] = t.pmax;
  meta["qmin"] = t.qmin;
  meta["qmax"] = t.qmax;
  meta["regularity_asserted"] = t.regularity_asserted;
  json fails = json::array();
  for (const BettiFailure& f : t.failures) {
    json jf;
    jf["p"] = f.p;
    jf["q"] = f.q;
    jf["reason"] = f.reason;
    fails.push_back(std::move(jf));
  }
  meta["failures"] = std::move(fails);
  out["meta"] = std::move(meta);
  os << out.dump(2) << '\n';
}

int cmd_betti(const Job& job) {
  KoszulInstance inst = make_instance(job);
  int qmax = job.qmax >= 0 ? job.qmax : inst.space().dim() + 1;
  if (job.pmax < 0) throw argument_error("--pmax must be >= 0");
  if (job.qmin < 0 || job.qmin > qmax)
    throw argument_error("need 0 <= qmin <= qmax");

  Cache cache = Cache::open(job.cache_dir, job.no_cache);
  auto t0 = std::chrono::steady_clock::now();
  BettiTable t = sweep_table(inst, job, qmax, cache);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

  if (job.format == "json")
    render_betti_json(t, std::cout);
  else if (job.format == "csv")
    render_betti_csv(t, std::cout);
  else
    render_betti_human(t, std::cout);

  std::cerr << "computed " << t.entries.size() << " entries in " << std::fixed
            << std::setprecision(1) << ms << " ms";
  if (cache.enabled())
    std::cerr << " (cache: " << cache.hits() << " hits, " << cache.misses()
              << " misses)";
  std::cerr << '\n';
  cache.write_session_stats();

  for (const BettiFailure& f : t.failures)
    std::cerr << "resource cap at entry (" << f.p << "," << f.q
              << "): " << f.reason << '\n';
  return t.failures.empty() ? 0 : 2;
}

// ---------------------------------------------------------------------------
// verify

const char* overall_word(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "confirmed";
    case Verdict::Refuted: return "refuted";
    case Verdict::NotEvaluated: return "partially checked";
  }
  return "unknown";
}

int finish_report(const VerificationReport& rep, const std::string& format) {
  Verdict overall = aggregate(rep);
  if (format == "json") {
    json out;
    out["checks"] = json::array();
    for (const CheckResult& c : rep.checks) {
      json jc;
      jc["name"] = c.name;
      jc["verdict"] = to_string(c.verdict);
      jc["detail"] = c.detail;
      out["checks"].push_back(std::move(jc));
    }
    out["overall"] = overall_word(overall);
    std::cout << out.dump(2) << '\n';
  } else {
    for (const CheckResult& c : rep.checks) {
      std::cout << c.name << ": " << to_string(c.verdict);
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ')';
      std::cout << '\n';
    }
    std::cout << "overall: " << overall_word(overall) << '\n';
  }
  switch (overall) {
    case Verdict::Verified: return 0;
    case Verdict::Refuted: return 3;
    case Verdict::NotEvaluated: return 4;
  }
  return 4;
}

int cmd_verify_nk(const Job& job) {
  KoszulInstance inst = make_instance(job);
  int qmax = job.qmax >= 0 ? job.qmax : inst.space().dim() + 1;
  BettiTable t = betti_table(inst, job.pmax, 0, qmax, job.threads);
  NkResult r = property_Nk(t);
  switch (r.kind) {
    case NkResult::Kind::NotN0:
      std::cout << "normal generation fails: nonzero entry at (p,q)=("
                << r.witness_p << ',' << r.witness_q << ")\n";
      break;
    case NkResult::Kind::Certified:
      std::cout << "property N_" << r.k << " certified; N_" << r.k + 1
                << " fails with witness (p,q)=(" << r.witness_p << ','
                << r.witness_q << ")\n";
      break;
    case NkResult::Kind::Truncated:
      std::cout << "property N_" << r.k
                << " holds as far as computed (pmax=" << t.pmax << ")";
      if (r.witness_p >= 0)
        std::cout << "; later nonzero entry at (p,q)=(" << r.witness_p << ','
                  << r.witness_q << ") not linked by a complete row";
      std::cout << '\n';
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// stats

int cmd_stats(const Job& job, int q) {
  KoszulInstance inst = make_instance(job);
  Cache cache = Cache::open(job.cache_dir, job.no_cache);
  Job row = job;
  row.qmin = q;
  BettiTable t = sweep_table(inst, row, q, cache);
  cache.write_session_stats();
  if (!t.failures.empty()) {
    for (const BettiFailure& f : t.failures)
      std::cerr << "resource cap at entry (" << f.p << "," << f.q
                << "): " << f.reason << '\n';
    return 2;
  }
  RowStats s = row_distribution_stats(t, q);
  std::cout << "p,mass\n";
  for (std::size_t p = 0; p < s.mass.size(); ++p)
    std::cout << p << ',' << s.mass[p] << '\n';
  std::cerr << "row q=" << q << ": total " << s.total << ", mean " << s.mean
            << ", variance " << s.variance << ", sup deviation "
            << s.sup_deviation << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// taut

int cmd_taut_split(int n, std::int64_t k) {
  SplitVerdict v = splitting_test(n, k);
  if (v.splits)
    std::cout << "splits: O^" << v.trivial_mult << " + O(-1)^"
              << v.twisted_mult << '\n';
  else
    std::cout << "does not split: h^" << v.witness_i << "(E(" << v.witness_m
              << ")) != 0\n";
  return 0;
}

int cmd_taut_cohomology(int n, std::int64_t k, std::int64_t m) {
  std::cout << "h^i(E_" << k << '(' << m << ")) on P^" << n << ", i = 0.." << n
            << ':';
  for (int i = 0; i <= n; ++i) std::cout << ' ' << taut_cohomology(n, k, m, i);
  std::cout << '\n';
  return 0;
}

int cmd_taut_rank(int n, std::int64_t k) {
  std::cout << "rank " << taut_rank_probe(n, k) << '\n';
  return 0;
}

int cmd_taut_ses(int n, std::int64_t d, std::uint64_t h0y) {
  SesRankCheck c = ses_rank_check(n, d, h0y);
  std::cout << "main rank identity: " << (c.main ? "holds" : "fails")
            << "\ndivided power sub-flag: "
            << (c.divided_power ? "holds" : "fails") << '\n';
  return c.ok() ? 0 : 3;
}

// ---------------------------------------------------------------------------
// cache maintenance

int cmd_cache_list(const std::string& dir_flag) {
  Cache cache = Cache::open(dir_flag, false);
  if (!cache.enabled()) return 1;
  std::size_t count = 0;
  for (const auto& de : fs::directory_iterator(cache.dir())) {
    if (!is_entry_file(de)) continue;
    std::ifstream in(de.path());
    try {
      json e = json::parse(in);
      std::cout << de.path().filename().string() << "  "
                << e.at("key").get<std::string>() << "  dim "
                << e.at("dim").get<std::uint64_t>() << '\n';
      ++count;
    } catch (const std::exception&) {
      std::cerr << "cache: ignoring corrupted entry "
                << de.path().filename().string() << '\n';
    }
  }
  std::cerr << count << " entries in " << cache.dir().string() << '\n';
  return 0;
}

int cmd_cache_clear(const std::string& dir_flag) {
  Cache cache = Cache::open(dir_flag, false);
  if (!cache.enabled()) return 1;
  std::size_t removed = 0;
  for (const auto& de : fs::directory_iterator(cache.dir())) {
    std::string name = de.path().filename().string();
    if (is_entry_file(de) || name == "stats.json") {
      std::error_code ec;
      fs::remove(de.path(), ec);
      if (!ec) ++removed;
    }
  }
  std::cerr << "removed " << removed << " files\n";
  return 0;
}

int cmd_cache_stat(const std::string& dir_flag) {
  Cache cache = Cache::open(dir_flag, false);
  if (!cache.enabled()) return 1;
  std::size_t count = 0;
  for (const auto& de : fs::directory_iterator(cache.dir()))
    if (is_entry_file(de)) ++count;
  std::uint64_t hits = 0, misses = 0;
  std::ifstream in(cache.dir() / "stats.json");
  if (in) {
    try {
      json s = json::parse(in);
      hits = s.at("hits").get<std::uint64_t>();
      misses = s.at("misses").get<std::uint64_t>();
    } catch (const std::exception&) {
    }
  }
  std::cout << "entries: " << count << "\nlast session: " << hits << " hits, "
            << misses << " misses\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Koszul cohomology of embedded products of projective "
               "spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("koszul-cli ") + kEngineVersion);

  int rc = 0;
  Job job;

  // betti
  CLI::App* betti = app.add_subcommand("betti", "compute a Betti table");
  add_instance_flags(betti, job);
  betti->add_option("--pmax", job.pmax, "largest column")->required();
  betti->add_option("--qmin", job.qmin, "first row");
  betti->add_option("--qmax", job.qmax, "last row (default: dim X + 1)");
  betti->add_option("--format", job.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  betti->add_option("--cache-dir", job.cache_dir, "cache directory");
  betti->add_flag("--no-cache", job.no_cache, "skip the result cache");
  betti->callback([&] { rc = cmd_betti(job); });

  // verify <claim>
  CLI::App* verify = app.add_subcommand("verify", "check a stated claim");
  verify->require_subcommand(1);
  std::string vformat = "table";
  int vq = 2;
  std::int64_t vd = 3, vp = 0, vb = 0;
  int vn = 2;

  CLI::App* v_van = verify->add_subcommand(
      "vanishing", "row q vanishes through its proven bound");
  add_instance_flags(v_van, job);
  v_van->add_option("--q", vq, "row")->required();
  v_van->add_option("--format", vformat)->check(CLI::IsMember({"table", "json"}));
  v_van->callback([&] {
    rc = finish_report(verify_vanishing_bound(make_instance(job), vq, job.threads),
                       vformat);
  });

  CLI::App* v_non = verify->add_subcommand(
      "nonvanishing", "row q is nonzero across its proven window");
  add_instance_flags(v_non, job);
  v_non->add_option("--q", vq, "row")->required();
  v_non->add_option("--format", vformat)->check(CLI::IsMember({"table", "json"}));
  v_non->callback([&] {
    rc = finish_report(
        verify_nonvanishing_range(make_instance(job), vq, job.threads), vformat);
  });

  CLI::App* v_win = verify->add_subcommand(
      "plane-window", "full q=2 window shape on the plane, trivial twist");
  v_win->add_option("--d", vd, "embedding degree")->required();
  v_win->add_option("--prime", job.prime);
  v_win->add_option("--threads", job.threads);
  v_win->add_option("--format", vformat)->check(CLI::IsMember({"table", "json"}));
  v_win->callback([&] {
    rc = finish_report(verify_plane_q2_window(vd, job.prime, job.threads),
                       vformat);
  });

  CLI::App* v_dual = verify->add_subcommand(
      "duality", "k_{p,q} equals its dual position, both sides computed");
  v_dual->add_option("--n", vn, "P^n")->required();
  v_dual->add_option("--b", vb, "twist")->required();
  v_dual->add_option("--d", vd, "embedding degree")->required();
  v_dual->add_option("--p", vp, "column")->required();
  v_dual->add_option("--q", vq, "row")->required();
  v_dual->add_option("--prime", job.prime);
  v_dual->add_option("--threads", job.threads);
  v_dual->add_option("--max-basis", job.max_basis);
  v_dual->add_option("--format", vformat)->check(CLI::IsMember({"table", "json"}));
  v_dual->callback([&] {
    job.spaces = {vn};
    job.b = {vb};
    job.l = {vd};
    rc = finish_report(verify_duality(make_instance(job), vp, vq, job.threads),
                       vformat);
  });

  CLI::App* v_nk = verify->add_subcommand(
      "nk", "largest certified k with a linear resolution prefix");
  add_instance_flags(v_nk, job);
  v_nk->add_option("--pmax", job.pmax, "sweep columns through pmax")->required();
  v_nk->add_option("--qmax", job.qmax, "last row (default: dim X + 1)");
  v_nk->callback([&] { rc = cmd_verify_nk(job); });

  CLI::App* v_reg = verify->add_subcommand(
      "regularity", "rows dim X + 2 and dim X + 3 vanish through pmax");
  add_instance_flags(v_reg, job);
  v_reg->add_option("--pmax", job.pmax, "check columns through pmax")->required();
  v_reg->add_option("--format", vformat)->check(CLI::IsMember({"table", "json"}));
  v_reg->callback([&] {
    rc = finish_report(
        regularity_row_check(make_instance(job), job.pmax, job.threads), vformat);
  });

  // taut <op>
  CLI::App* taut = app.add_subcommand(
      "taut", "pushforward bundle of the degree-n cover of P^n");
  taut->require_subcommand(1);
  int tn = 2, ti = -1;
  std::int64_t tk = 0, tm = 0, ta = 0;
  std::uint64_t th0y = 1;
  int tq = 0;
  std::vector<int> ty;
  std::vector<std::int64_t> tay;

  CLI::App* t_split = taut->add_subcommand("split", "direct sum test");
  t_split->add_option("--n", tn)->required();
  t_split->add_option("--k", tk)->required();
  t_split->callback([&] { rc = cmd_taut_split(tn, tk); });

  CLI::App* t_coh = taut->add_subcommand("cohomology", "h^i(E_k(m)) for all i");
  t_coh->add_option("--n", tn)->required();
  t_coh->add_option("--k", tk)->required();
  t_coh->add_option("--m", tm)->required();
  t_coh->callback([&] { rc = cmd_taut_cohomology(tn, tk, tm); });

  CLI::App* t_rank = taut->add_subcommand(
      "rank", "rank recovered from the section growth of E_k");
  t_rank->add_option("--n", tn)->required();
  t_rank->add_option("--k", tk)->required();
  t_rank->callback([&] { rc = cmd_taut_rank(tn, tk); });

  CLI::App* t_cover = taut->add_subcommand(
      "cover", "line bundle pushforward identity on Y x P^n");
  t_cover->add_option("--y", ty, "factors of Y, empty for a point")
      ->delimiter(',');
  t_cover->add_option("--ay", tay, "multidegree on Y")->delimiter(',');
  t_cover->add_option("--n", tn)->required();
  t_cover->add_option("--a", ta)->required();
  t_cover->add_option("--q", tq)->required();
  t_cover->add_option("--format", vformat)->check(CLI::IsMember({"table", "json"}));
  t_cover->callback([&] {
    rc = finish_report(
        verify_finite_cover_linebundle(
            ty, MultiDegree(tay.begin(), tay.end()), tn, ta, tq),
        vformat);
  });

  CLI::App* t_ses = taut->add_subcommand(
      "ses", "rank additivity across the syzygy bundle sequence");
  t_ses->add_option("--n", tn)->required();
  t_ses->add_option("--d", vd)->required();
  t_ses->add_option("--h0y", th0y)->required();
  t_ses->callback([&] { rc = cmd_taut_ses(tn, vd, th0y); });
  (void)ti;

  // stats
  CLI::App* stats = app.add_subcommand(
      "stats", "row mass distribution as CSV for external plotting");
  add_instance_flags(stats, job);
  stats->add_option("--pmax", job.pmax)->required();
  stats->add_option("--q", vq, "row")->required();
  stats->add_option("--cache-dir", job.cache_dir);
  stats->add_flag("--no-cache", job.no_cache);
  stats->callback([&] { rc = cmd_stats(job, vq); });

  // cache
  CLI::App* cachecmd = app.add_subcommand("cache", "result cache maintenance");
  cachecmd->require_subcommand(1);
  std::string cdir;
  CLI::App* c_list = cachecmd->add_subcommand("list", "entries with parameters");
  c_list->add_option("--cache-dir", cdir);
  c_list->callback([&] { rc = cmd_cache_list(cdir); });
  CLI::App* c_clear = cachecmd->add_subcommand("clear", "remove all entries");
  c_clear->add_option("--cache-dir", cdir);
  c_clear->callback([&] { rc = cmd_cache_clear(cdir); });
  CLI::App* c_stat = cachecmd->add_subcommand("stat", "entry count and session tally");
  c_stat->add_option("--cache-dir", cdir);
  c_stat->callback([&] { rc = cmd_cache_stat(cdir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const argument_error& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
