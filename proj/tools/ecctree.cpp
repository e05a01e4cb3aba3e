// ecctree: eccentric sequences, extremal trees and Wiener-type indices.
//
// Exit status: 0 success / all checks pass, 1 semantic failure (invalid
// sequence, failed check, library error), 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ecctree/canonical.hpp"
#include "ecctree/ecc_sequence.hpp"
#include "ecctree/edge_list.hpp"
#include "ecctree/enumeration.hpp"
#include "ecctree/indices.hpp"
#include "ecctree/transforms.hpp"
#include "ecctree/verify.hpp"

using namespace ecctree;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Tree read_tree(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out;
}

int cmd_validate(const std::string& text) {
  auto v = parse_and_validate(text);
  if (!v) {
    std::cout << "INVALID " << to_string(v.reason) << '\n';
    return kFailure;
  }
  std::cout << "VALID " << v.sequence->to_string() << '\n';
  return kOk;
}

struct BuildArgs {
  std::string sequence;
  std::vector<std::size_t> tdn;
  std::vector<std::size_t> counterexample;
  int pick = 0;
};

int cmd_build(const BuildArgs& a) {
  const int modes = !a.sequence.empty() + !a.tdn.empty() + !a.counterexample.empty();
  if (modes != 1) throw UsageError("build takes exactly one of SEQUENCE, --tdn or --counterexample");
  if (!a.sequence.empty()) {
    auto s = parse_sequence(a.sequence);
    std::vector<std::string> header{"T(" + s.to_string() + ") n=" + std::to_string(s.order()) +
                                    " d=" + std::to_string(s.diameter())};
    write_edge_list(std::cout, build_extremal(s), header);
    return kOk;
  }
  if (!a.tdn.empty()) {
    auto n = a.tdn[0];
    auto d = static_cast<std::uint32_t>(a.tdn[1]);
    std::vector<std::string> header{"T_{d,n} n=" + std::to_string(n) + " d=" + std::to_string(d)};
    write_edge_list(std::cout, build_Tdn(n, d), header);
    return kOk;
  }
  auto n = a.counterexample[0];
  auto d = static_cast<std::uint32_t>(a.counterexample[1]);
  auto [t1, t2] = counterexample_pair(n, d);
  if (a.pick != 2) write_edge_list(std::cout, t1, std::vector<std::string>{"T1 n=" + std::to_string(n) + " d=" + std::to_string(d)});
  if (a.pick != 1) write_edge_list(std::cout, t2, std::vector<std::string>{"T2 n=" + std::to_string(n) + " d=" + std::to_string(d)});
  return kOk;
}

int cmd_index(const std::string& path, const std::string& spec, bool all_k) {
  auto t = read_tree(path);
  if (all_k) {
    if (spec != "steiner" && spec.rfind("steiner:", 0) != 0) throw UsageError("--all-k needs a steiner index");
    for (std::uint32_t k = 1; k <= t.order(); ++k) {
      std::cout << "k=" << k << " SW=" << sw_k_formula(t, k).str() << '\n';
    }
    return kOk;
  }
  std::cout << IndexSpec::parse(spec).evaluate(t).to_string() << '\n';
  return kOk;
}

struct VerifyArgs {
  std::size_t order = 0;
  std::string index;
  std::optional<std::uint32_t> diameter;
  std::string json;
  unsigned jobs = 0;
};

int cmd_verify(const VerifyArgs& a) {
  auto index = IndexSpec::parse(a.index);
  VerifyOptions options;
  options.jobs = a.jobs;
  auto report = a.diameter ? verify_diameter(a.order, *a.diameter, index, options)
                           : verify_sequence_classes(a.order, index, options);

  const bool json_to_stdout = a.json == "-";
  if (!a.json.empty() && !json_to_stdout) {
    std::ofstream out(a.json);
    if (!out) throw UsageError("cannot write '" + a.json + "'");
    out << to_json(report) << '\n';
  }
  if (json_to_stdout) {
    std::cout << to_json(report) << '\n';
  } else {
    std::cout << "order=" << report.order << " index=" << report.index_spec;
    if (report.diameter) std::cout << " diameter=" << *report.diameter;
    std::cout << " classes=" << report.classes.size() << " trees=" << report.tree_count()
              << " failures=" << report.failures() << '\n';
    for (const auto& c : report.classes) {
      std::cout << c.key << " size=" << c.size << " extremum=" << c.extremal_value.to_string()
                << " attainers=" << c.attainers.size() << " constructor=" << (c.extremal_is_constructor ? "yes" : "no")
                << " unique=" << (c.unique ? "yes" : "no") << " required=" << (c.uniqueness_required ? "yes" : "no")
                << " tie=" << (c.tie ? "yes" : "no") << " status=" << to_string(c.status) << '\n';
    }
  }
  return report.passed() ? kOk : kFailure;
}

int cmd_transform(const std::vector<std::string>& args, const std::string& seq) {
  const std::string& op = args.back();
  if (!seq.empty()) {
    if (args.size() != 1 || op != "seq-reduce") throw UsageError("--seq only works with seq-reduce and no file");
    auto s = parse_sequence(seq);
    std::cout << "# seq-reduce: i=" << reduction_index(s).value_or(0) << '\n' << seq_reduce(s).to_string() << '\n';
    return kOk;
  }
  if (args.size() != 2) throw UsageError("transform needs FILE and OPERATION");
  auto t = read_tree(args[0]);
  if (op == "mate") {
    auto [result, trace] = mate(t);
    std::vector<std::string> header{
        "mate: j=" + std::to_string(trace.j) + " u=" + std::to_string(trace.u) +
            " v_j=" + std::to_string(trace.path[trace.j]) + " v_j+1=" + std::to_string(trace.path[trace.j + 1]),
        "path: " + join(trace.path),
        "moved: " + join(trace.moved),
        "leaves: " + std::to_string(leaves(t).size()) + " -> " + std::to_string(leaves(result).size()),
    };
    write_edge_list(std::cout, result, header);
  } else if (op == "caterpillarize") {
    auto [result, steps] = caterpillarize(t);
    std::vector<std::string> header{"caterpillarize: steps=" + std::to_string(steps),
                                    "sequence: " + of_tree(result).to_string()};
    write_edge_list(std::cout, result, header);
  } else if (op == "seq-reduce") {
    auto s = of_tree(t);
    std::cout << "# seq-reduce: from " << s.to_string() << " i=" << reduction_index(s).value_or(0) << '\n'
              << seq_reduce(s).to_string() << '\n';
  } else {
    throw UsageError("unknown transform '" + op + "'");
  }
  return kOk;
}

int cmd_profile(const std::string& path) {
  auto t = read_tree(path);
  auto p = ecc_profile(t);
  auto backbone = caterpillar_backbone(t);
  std::cout << "order " << t.order() << '\n'
            << "radius " << p.radius << '\n'
            << "diameter " << p.diameter << '\n'
            << "center " << join(p.center) << '\n'
            << "sequence " << of_tree(t).to_string() << '\n'
            << "leaves " << leaves(t).size() << '\n'
            << "caterpillar " << (backbone ? "yes" : "no") << '\n'
            << "canonical " << canonical_form(t).hex() << '\n';
  return kOk;
}

int cmd_random(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  write_edge_list(std::cout, random_tree(n, rng),
                  std::vector<std::string>{"random labeled tree n=" + std::to_string(n) + " seed=" + std::to_string(seed)});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eccentric sequences, extremal trees and distance-based indices of trees"};
  app.require_subcommand(1);

  std::string seq_text;
  auto* validate = app.add_subcommand("validate", "Check whether a sequence is a tree eccentric sequence");
  validate->add_option("sequence", seq_text, "Sorted list '2,2,3,3,3' or compact form '2;3'")->required();

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Write an extremal tree as an edge list");
  build->add_option("sequence", build_args.sequence, "Eccentric sequence; builds T(r; m2,...,ml)");
  build->add_option("--tdn", build_args.tdn, "Build T_{d,n}")->expected(2)->type_name("N D");
  build->add_option("--counterexample", build_args.counterexample, "Build the equal-SW_k pair")
      ->expected(2)
      ->type_name("N D");
  build->add_option("--pick", build_args.pick, "With --counterexample, print only tree 1 or 2")
      ->check(CLI::Range(1, 2));

  std::string index_file, index_spec;
  bool all_k = false;
  auto* index = app.add_subcommand("index", "Evaluate an index on a tree");
  index->add_option("file", index_file, "Edge-list file ('-' for stdin)")->required();
  index->add_option("index", index_spec, "wiener|hyper|harary|rcw|genw:<lambda>|steiner:<k>")->required();
  index->add_flag("--all-k", all_k, "Print SW_k for every k = 1..n");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Exhaustively check extremality over all trees of an order");
  verify->add_option("--order", verify_args.order, "Tree order n")->required();
  verify->add_option("--index", verify_args.index, "Index specification")->required();
  verify->add_option("--diameter", verify_args.diameter, "Restrict to trees of this diameter");
  verify->add_option("--json", verify_args.json, "Write the JSON report to this file ('-' for stdout)");
  verify->add_option("--jobs", verify_args.jobs, "Worker threads (0 = all cores)");

  std::vector<std::string> transform_args;
  std::string transform_seq;
  auto* transform = app.add_subcommand("transform", "Apply mate, caterpillarize or seq-reduce");
  transform->add_option("args", transform_args, "[FILE] OPERATION")->required()->expected(1, 2);
  transform->add_option("--seq", transform_seq, "Sequence input for seq-reduce");

  std::string profile_file;
  auto* profile = app.add_subcommand("profile", "Print radius, diameter, center and eccentric sequence");
  profile->add_option("file", profile_file, "Edge-list file ('-' for stdin)")->required();

  std::size_t random_order = 0;
  std::uint64_t seed = 1;
  auto* random = app.add_subcommand("random", "Write a uniformly random labeled tree");
  random->add_option("--order", random_order, "Tree order n")->required();
  random->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(seq_text);
    if (*build) return cmd_build(build_args);
    if (*index) return cmd_index(index_file, index_spec, all_k);
    if (*verify) return cmd_verify(verify_args);
    if (*transform) return cmd_transform(transform_args, transform_seq);
    if (*profile) return cmd_profile(profile_file);
    if (*random) return cmd_random(random_order, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kUsage : kFailure;
  }
  return kUsage;
}
