// sqtile: decide, solve, verify, render and analyze tilings of m x n
// rectangles by integer squares of side >= 2.
//
// Exit codes: 0 success / tileable, 1 not tileable or invalid, 2 usage
// error, 3 search gave up at the node limit.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sqtile/sqtile.hpp"

namespace fs = std::filesystem;
using namespace sqtile;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes via a sibling temp file and rename, so readers never see a partial file.
void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw UsageError("cannot write " + tmp.string());
    os << content;
    if (!os.flush()) throw UsageError("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    write_atomically(out_path, content);
  }
}

Tiling load_tiling(const std::string& path) {
  if (path == "-") return read_tiling(std::cin);
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot open " + path);
  return read_tiling(is);
}

std::string rect_name(int m, int n) { return std::to_string(m) + "x" + std::to_string(n); }

int cmd_decide(int m, int n) {
  if (m < 1 || n < 1) throw UsageError("dimensions must be >= 1");
  const Verdict v = decide_tileable(m, n);
  std::cout << (v.tileable ? "tileable (" : "not tileable (") << rule_name(v.rule) << ")\n";
  return v.tileable ? kOk : kNo;
}

struct SolveOptions {
  int m = 0, n = 0;
  int min_side = kDefaultMinSide;
  std::string engine = "search";
  std::string order = "asc";
  std::string out;
  std::uint64_t node_limit = 0;
};

int cmd_solve(const SolveOptions& o) {
  if (o.m < 1 || o.n < 1) throw UsageError("dimensions must be >= 1");
  if (o.min_side < 2) throw UsageError("--min-side must be >= 2");
  std::optional<Tiling> tiling;
  if (o.engine == "construct") {
    if (o.min_side != kDefaultMinSide) throw UsageError("--engine construct only supports --min-side 2");
    tiling = construct(o.m, o.n);
  } else {
    SearchConfig cfg;
    cfg.min_side = o.min_side;
    cfg.size_order = o.order == "desc" ? SizeOrder::descending : SizeOrder::ascending;
    if (o.node_limit > 0) cfg.node_limit = o.node_limit;
    auto result = find_tiling({o.m, o.n}, cfg);
    if (result.status == SearchStatus::inconclusive) {
      std::cerr << "inconclusive: node limit " << o.node_limit << " reached\n";
      return kInconclusive;
    }
    tiling = std::move(result.tiling);
  }
  if (!tiling) {
    std::cout << "no tiling\n";
    return kNo;
  }
  emit(o.out, to_text(*tiling));
  return kOk;
}

int cmd_verify(const std::string& path, int min_side) {
  Tiling t;
  try {
    t = load_tiling(path);
  } catch (const ParseError& e) {
    std::cout << "PARSE_ERROR " << e.what() << '\n';
    return kNo;
  }
  const auto report = verify(t, min_side);
  std::cout << describe(report) << '\n';
  return report.valid() ? kOk : kNo;
}

int cmd_table(int max_dim, bool raw, const std::string& engine) {
  if (max_dim < 2) throw UsageError("--max must be >= 2");
  TileTable table(max_dim, kDefaultMinSide);
  if (engine == "theory") {
    for (int m = 2; m <= max_dim; ++m)
      for (int n = 2; n <= max_dim; ++n) table.set(m, n, decide_tileable(m, n).tileable);
  } else {
    table = build_table(max_dim);
  }
  if (raw) {
    write_table(std::cout, table);
  } else {
    write_pretty_table(std::cout, table);
  }
  return kOk;
}

int cmd_render(const std::string& path, const std::string& out, bool ascii, int cell_px) {
  const Tiling t = load_tiling(path);
  if (ascii) {
    emit(out, to_ascii(t));
  } else {
    RenderStyle style;
    style.cell_px = cell_px;
    emit(out, to_svg(t, style));
  }
  return kOk;
}

int cmd_closure(int max_dim, const std::vector<int>& seeds, bool all_squares,
                const std::vector<int>& witness) {
  if (max_dim < 2) throw UsageError("--max must be >= 2");
  SeedSet seed_set;
  if (all_squares) {
    seed_set = SeedSet::all_squares(max_dim);
  } else if (!seeds.empty()) {
    seed_set.sides = {seeds.begin(), seeds.end()};
  }
  for (int k : seed_set.sides)
    if (k < 2) throw UsageError("seed sides must be >= 2");

  if (!witness.empty()) {
    if (witness.size() != 2 || witness[0] < 1 || witness[1] < 1) throw UsageError("--witness takes M N");
    const auto tree = guillotine_witness(witness[0], witness[1], seed_set);
    if (!tree) {
      std::cout << "no guillotine witness for " << rect_name(witness[0], witness[1]) << '\n';
      return kNo;
    }
    std::cout << tree->to_string() << '\n';
    return kOk;
  }

  const auto exceptions = find_exceptions(max_dim, seed_set);
  std::cout << "exceptions: ";
  if (exceptions.empty()) std::cout << "none";
  for (std::size_t i = 0; i < exceptions.size(); ++i) {
    std::cout << (i ? ", " : "") << rect_name(exceptions[i].first, exceptions[i].second);
  }
  std::cout << '\n';
  return kOk;
}

// Searched tilings for every tileable m < n <= max_dim with gcd(m, n) = 1;
// the rest are grids of gcd x gcd squares.
int cmd_figures(const std::string& outdir, int max_dim, int cell_px) {
  fs::create_directories(outdir);
  RenderStyle style;
  style.cell_px = cell_px;
  int count = 0;
  for (int m = 2; m <= max_dim; ++m) {
    for (int n = m + 1; n <= max_dim; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const auto found = find_tiling({m, n});
      if (!found.tiling) continue;
      write_atomically(fs::path(outdir) / (rect_name(m, n) + ".svg"), to_svg(*found.tiling, style));
      ++count;
    }
  }
  std::cout << count << " figures written to " << outdir << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tilings of integer rectangles by squares of side >= 2"};
  app.require_subcommand(1);

  int m = 0, n = 0;
  auto* decide = app.add_subcommand("decide", "Decide tileability from the characterization");
  decide->add_option("m", m)->required();
  decide->add_option("n", n)->required();

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Produce a witness tiling");
  solve->add_option("m", solve_opts.m)->required();
  solve->add_option("n", solve_opts.n)->required();
  solve->add_option("--min-side", solve_opts.min_side, "Smallest allowed side (search only)");
  solve->add_option("--engine", solve_opts.engine)->check(CLI::IsMember({"search", "construct"}));
  solve->add_option("--order", solve_opts.order, "Side order tried by search")->check(CLI::IsMember({"asc", "desc"}));
  solve->add_option("--node-limit", solve_opts.node_limit, "Give up after this many search nodes");
  solve->add_option("-o,--output", solve_opts.out, "Output file (default stdout)");

  std::string verify_path;
  int verify_min_side = kDefaultMinSide;
  auto* verify_cmd = app.add_subcommand("verify", "Check a tiling file");
  verify_cmd->add_option("file", verify_path, "Tiling file, or - for stdin")->required();
  verify_cmd->add_option("--min-side", verify_min_side);

  int table_max = 19;
  bool table_raw = false;
  std::string table_engine = "search";
  auto* table = app.add_subcommand("table", "Print the tileability table for 2 <= m, n <= max");
  table->add_option("--max", table_max);
  table->add_flag("--raw", table_raw, "Machine-readable '#'/'.' rows");
  table->add_option("--engine", table_engine)->check(CLI::IsMember({"search", "theory"}));

  std::string render_path, render_out;
  bool render_ascii = false;
  int cell_px = 20;
  auto* render = app.add_subcommand("render", "Draw a tiling as SVG or ASCII");
  render->add_option("file", render_path)->required();
  render->add_option("-o,--output", render_out);
  render->add_flag("--ascii", render_ascii);
  render->add_option("--cell-px", cell_px)->check(CLI::PositiveNumber);

  int closure_max = 19;
  std::vector<int> seeds;
  bool all_squares = false;
  std::vector<int> witness;
  auto* closure = app.add_subcommand("closure", "Rectangles not reachable by guillotine joins");
  closure->add_option("--max", closure_max);
  closure->add_option("--seeds", seeds, "Seed square sides")->delimiter(',');
  closure->add_flag("--all-squares", all_squares, "Seed every k x k, k >= 2");
  closure->add_option("--witness", witness, "Print the join tree for M N")->expected(2);

  std::string outdir;
  int figures_max = 19;
  auto* figures = app.add_subcommand("figures", "Write SVGs of the coprime searched tilings");
  figures->add_option("--outdir", outdir)->required();
  figures->add_option("--max", figures_max);
  figures->add_option("--cell-px", cell_px)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*decide) return cmd_decide(m, n);
    if (*solve) return cmd_solve(solve_opts);
    if (*verify_cmd) return cmd_verify(verify_path, verify_min_side);
    if (*table) return cmd_table(table_max, table_raw, table_engine);
    if (*render) return cmd_render(render_path, render_out, render_ascii, cell_px);
    if (*closure) return cmd_closure(closure_max, seeds, all_squares, witness);
    if (*figures) return cmd_figures(outdir, figures_max, cell_px);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
