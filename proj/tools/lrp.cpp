// lrp: classification, tables, verification suites and examples for
// l-reflexive polygons.

#include "lrp/io.hpp"
#include "lrp/polytope3.hpp"
#include "lrp/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned resolve_jobs(unsigned requested) {
  if (const char* env = std::getenv("LRP_JOBS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("LRP_JOBS", "must be a positive integer");
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

lrp::Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return lrp::Json::parse(in);
  } catch (const lrp::Json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const lrp::Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(1) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

void check_range(long long max_l, bool extended) {
  if (max_l < 1) throw CLI::ValidationError("--max-index", "must be at least 1");
  if (max_l > 59 && !extended) throw CLI::ValidationError("--max-index", "values above 59 require --extended");
  if (max_l > 200) throw CLI::ValidationError("--max-index", "at most 200 is supported");
}

int print_report(const lrp::SuiteReport& rep) {
  for (const auto& f : rep.failures) std::cout << "FAIL " << f << '\n';
  std::cout << rep.suite << ": " << rep.checked << " checks, " << rep.failures.size() << " failures\n";
  return rep.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"l-reflexive polygons: classification, tables and verification"};
  app.require_subcommand(1);

  long long max_l = 59;
  unsigned jobs = 0;
  bool extended = false;
  std::string out_path, in_path, which, suite, loop_path;

  auto* classify = app.add_subcommand("classify", "classify l-reflexive polygons of odd index up to L");
  classify->add_option("--max-index", max_l, "largest index")->capture_default_str();
  classify->add_option("--jobs", jobs, "worker threads (LRP_JOBS overrides)");
  classify->add_option("--out", out_path, "write records as JSON");
  classify->add_flag("--extended", extended, "allow indices above 59");

  auto* tables = app.add_subcommand("tables", "print a table as CSV");
  tables->add_option("--which", which, "table name")
      ->required()
      ->check(CLI::IsMember({"n", "self-dual", "3k", "orders", "hexagon-i"}));
  tables->add_option("--max-index", max_l, "largest index l (3k for 3k and hexagon-i)")->capture_default_str();
  tables->add_option("--jobs", jobs, "worker threads (LRP_JOBS overrides)");
  tables->add_flag("--extended", extended, "allow indices above 59");

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"twelve", "duality", "lattice", "odd", "ehrhart", "loops", "dim3"}));
  verify->add_option("--max-index", max_l, "largest index")->capture_default_str();
  verify->add_option("--input", in_path, "records JSON written by classify");
  verify->add_option("--jobs", jobs, "worker threads (LRP_JOBS overrides)");
  verify->add_flag("--extended", extended, "allow indices above 59");

  auto* oracle = app.add_subcommand("oracle16", "enumerate the 1-reflexive polygons by brute force");
  oracle->add_option("--out", out_path, "write the polygons as JSON");

  auto* loop = app.add_subcommand("loop", "check an l-reflexive loop");
  loop->add_option("--check", loop_path, "loop JSON {\"l\": l, \"points\": [[x,y],...]}")->required();

  auto* dim3 = app.add_subcommand("dim3", "three-dimensional examples");
  bool examples = false;
  dim3->add_flag("--examples", examples, "run the examples")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) {
      check_range(max_l, extended);
      auto c = lrp::classify_up_to(max_l, resolve_jobs(jobs));
      for (const auto& [l, records] : c) std::cout << "n(" << l << ") = " << records.size() << '\n';
      if (!out_path.empty()) write_json(out_path, lrp::classification_to_json(c));
      return kOk;
    }
    if (*tables) {
      check_range(max_l, extended);
      const unsigned j = resolve_jobs(jobs);
      if (which == "hexagon-i") {
        std::cout << lrp::table_hexagon_i(max_l);
      } else if (which == "3k") {
        lrp::Classification c;
        for (long long l = 3; l <= max_l; l += 6) c[l] = lrp::classify(l, j);
        std::cout << lrp::table_3k(c);
      } else {
        auto c = lrp::classify_up_to(max_l, j);
        if (which == "n") std::cout << lrp::table_counts(c);
        else if (which == "self-dual") std::cout << lrp::table_self_dual(c);
        else std::cout << lrp::table_orders(c);
      }
      return kOk;
    }
    if (*verify) {
      check_range(max_l, extended);
      const unsigned j = resolve_jobs(jobs);
      if (suite == "odd") return print_report(lrp::verify_odd(max_l, j));
      if (suite == "dim3") return print_report(lrp::verify_dim3());
      lrp::Classification c;
      if (!in_path.empty()) {
        auto all = lrp::classification_from_json(read_json(in_path));
        for (auto& [l, records] : all)
          if (l <= max_l) c[l] = std::move(records);
      } else {
        c = lrp::classify_up_to(max_l, j);
      }
      if (suite == "twelve") return print_report(lrp::verify_twelve(c));
      if (suite == "duality") return print_report(lrp::verify_duality(c));
      if (suite == "lattice") return print_report(lrp::verify_lattice(c));
      if (suite == "ehrhart") return print_report(lrp::verify_ehrhart(c));
      return print_report(lrp::verify_loops(c));
    }
    if (*oracle) {
      auto polygons = lrp::enumerate_1_reflexive();
      lrp::Json out = lrp::Json::array();
      for (std::size_t k = 0; k < polygons.size(); ++k) {
        std::cout << k + 1 << ' ' << lrp::to_json(polygons[k]).dump() << '\n';
        out.push_back(lrp::to_json(polygons[k]));
      }
      std::cout << "count = " << polygons.size() << '\n';
      if (!out_path.empty()) write_json(out_path, out);
      return kOk;
    }
    if (*loop) {
      auto j = read_json(loop_path);
      try {
        auto l = lrp::loop_from_json(j);
        auto m = lrp::metrics(l);
        auto d = lrp::dual_loop(l);
        long long dual_length = lrp::loop_length(d);
        std::cout << "l = " << l.index << ", points = " << m.boundary_count << ", length = " << m.length
                  << ", winding = " << m.winding << '\n'
                  << "dual " << lrp::to_json(d).dump() << '\n'
                  << "dual length = " << dual_length << ", length + dual length = " << m.length + dual_length
                  << ", 12w = " << 12 * m.winding << '\n';
        return lrp::twelve_w_check(l) ? kOk : kFailed;
      } catch (const lrp::GeometryError& e) {
        std::cout << "invalid loop: " << e.what() << '\n';
        return kFailed;
      } catch (const lrp::Json::exception& e) {
        throw IoError(loop_path + ": " + e.what());
      }
    }
    if (*dim3) {
      for (long long l = 1; l <= 10; ++l) {
        std::vector<lrp::LatticeVector> v{{-l, -1, 0}, {l, 0, -1}, {0, 1, 0}, {0, 0, 1}};
        auto idx = lrp::is_l_reflexive_3(lrp::build_polytope3(v));
        std::cout << "tetrahedron l = " << l << ": index " << (idx ? std::to_string(*idx) : "none") << '\n';
      }
      std::vector<lrp::LatticeVector> p{{1, 0, 0}, {3, 4, 0}, {5, 0, 8}, {-9, -4, -8}};
      auto pp = lrp::build_polytope3(p);
      std::cout << "P: sum = " << lrp::sum_24(pp, 2) << ", boundary lattice index "
                << lrp::boundary_lattice(pp).index << ", edge lattice index " << lrp::edge_lattice(pp).index
                << ", vertex lattice index " << lrp::vertex_lattice(pp).index << '\n';
      std::vector<lrp::LatticeVector> s{{-8, -12, -17}, {4, 0, 1}, {0, 4, 3}, {0, 0, 1}};
      auto ss = lrp::build_polytope3(s);
      std::cout << "S: sum = " << lrp::sum_24(ss, 2) << ", edge lattice index " << lrp::edge_lattice(ss).index
                << ", 1-reflexive on edge lattice: "
                << (lrp::is_l_reflexive_3(lrp::restrict_polytope(ss, lrp::edge_lattice(ss))) == 1 ? "yes" : "no")
                << '\n';
      return print_report(lrp::verify_dim3());
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const lrp::GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const lrp::Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
