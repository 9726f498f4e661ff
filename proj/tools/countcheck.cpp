// countcheck: decides whether two counting functions on a free monoid are
// equivalent modulo a bounded function, with a brute-force oracle, instance
// generator, exhaustive scans, and a scaling benchmark.
//
// Exit codes: 0 equivalent / success, 1 not equivalent, 2 usage or input
// error, 3 work budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "countcheck/encoding.hpp"
#include "countcheck/errors.hpp"
#include "countcheck/fastcheck.hpp"
#include "countcheck/genbench.hpp"
#include "countcheck/io.hpp"
#include "countcheck/normalize.hpp"
#include "countcheck/oracle.hpp"

namespace cc = countcheck;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cc::ReduceBackend backend_from(const std::string& name) {
  return name == "radix" ? cc::ReduceBackend::radix : cc::ReduceBackend::hash;
}

cc::Word parse_word_arg(const std::string& text, std::int32_t rank) {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) tokens.push_back(tok);
  if (tokens.empty()) {
    throw std::runtime_error("empty word argument; use 'e' for the empty word");
  }
  if (tokens.size() == 1 && tokens[0] == "e") return {};
  cc::Word w;
  for (const std::string& tok : tokens) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (...) {
      throw std::runtime_error("bad word token '" + tok + "'");
    }
    if (used != tok.size() || v < 1 || v > rank) {
      throw std::runtime_error("generator index '" + tok + "' outside [1, " +
                               std::to_string(rank) + "]");
    }
    w.push_back(static_cast<cc::Letter>(v));
  }
  return w;
}

// Small witnesses get expanded so the offending basis element is readable.
void print_witness(std::ostream& os, const cc::Witness& w, std::int32_t rank) {
  os << "witness: " << w.text << "  coefficient " << w.coefficient.str() << "\n";
  if (w.key.empty()) return;
  const auto parsed = cc::parse_reduced_key(w.key);
  if (const auto* rk = std::get_if<cc::RectKey>(&parsed)) {
    if (rk->width * rk->height <= 8 && rk->core.size() <= 6) {
      const cc::CountingFunction expansion = cc::expand_interval_sum(
          cc::MonoidSpec{rank}, cc::SumKind::both, cc::core_word(rk->core, rank), rk->width,
          rk->height, rk->first, rk->last);
      os << "  =";
      for (std::size_t i = 0; i < expansion.terms.size(); ++i) {
        os << (i ? " + " : " ") << "rho(" << cc::render_word(expansion.terms[i].word) << ")";
      }
      os << "\n";
    }
  }
}

int report_verdict(const cc::Verdict& v, bool show_witness, bool as_json, std::int32_t rank) {
  if (as_json) {
    json out;
    out["equivalent"] = v.equivalent;
    if (v.witness) {
      out["witness"] = {{"text", v.witness->text},
                        {"coefficient", v.witness->coefficient.str()}};
    } else {
      out["witness"] = nullptr;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (v.equivalent ? "EQUIVALENT" : "NOT_EQUIVALENT") << "\n";
    if (!v.equivalent && show_witness && v.witness) {
      print_witness(std::cout, *v.witness, rank);
    }
  }
  return v.equivalent ? 0 : 1;
}

const cc::CountingFunction& pick_side(const cc::Instance& inst, const std::string& side) {
  if (side == "g") return inst.g;
  return inst.f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivalence checker for subword-counting functions on free monoids"};
  app.require_subcommand(1);
  int rc = 0;

  // check
  std::string check_file, check_backend = "hash";
  bool check_witness = false, check_json = false;
  auto* check = app.add_subcommand("check", "fast equivalence check of [f] vs [g]");
  check->add_option("file", check_file, "instance file")->required();
  check->add_flag("--witness", check_witness, "print a nonzero basis element when not equivalent");
  check->add_flag("--json", check_json, "machine-readable verdict");
  check->add_option("--backend", check_backend, "key grouping backend")
      ->check(CLI::IsMember({"hash", "radix"}));
  check->callback([&] {
    const cc::Instance inst = cc::parse_instance(read_file(check_file));
    cc::CheckOptions opts;
    opts.backend = backend_from(check_backend);
    const cc::Verdict v = cc::check_equivalent(inst.f, inst.g, opts);
    rc = report_verdict(v, check_witness, check_json, inst.spec.rank);
  });

  // oracle
  std::string oracle_file;
  bool oracle_witness = false, oracle_json = false;
  std::uint64_t oracle_max_size = 1'000'000;
  std::uint64_t oracle_budget = 10'000'000;
  auto* oracle = app.add_subcommand("oracle", "brute-force basis-rewriting check (slow)");
  oracle->add_option("file", oracle_file, "instance file")->required();
  oracle->add_flag("--witness", oracle_witness, "print a nonzero basis word when not equivalent");
  oracle->add_flag("--json", oracle_json, "machine-readable verdict");
  oracle->add_option("--max-size", oracle_max_size, "refuse inputs larger than this many bytes");
  oracle->add_option("--budget", oracle_budget, "intermediate term cap");
  oracle->callback([&] {
    const cc::Instance inst = cc::parse_instance(read_file(oracle_file));
    const std::uint64_t size = cc::input_size(inst.f) + cc::input_size(inst.g);
    if (size > oracle_max_size) {
      throw cc::BudgetError("input size " + std::to_string(size) + " exceeds --max-size " +
                            std::to_string(oracle_max_size));
    }
    cc::OracleOptions opts;
    opts.max_intermediate_terms = oracle_budget;
    const cc::Verdict v = cc::oracle_equivalent(inst.f, inst.g, opts);
    rc = report_verdict(v, oracle_witness, oracle_json, inst.spec.rank);
  });

  // eval
  std::string eval_file, eval_side = "f", eval_word;
  auto* eval = app.add_subcommand("eval", "evaluate one side at a word");
  eval->add_option("file", eval_file, "instance file")->required();
  eval->add_option("--side", eval_side, "f or g")->check(CLI::IsMember({"f", "g"}));
  eval->add_option("--word", eval_word, "space-separated generator indices, or 'e'")->required();
  eval->callback([&] {
    const cc::Instance inst = cc::parse_instance(read_file(eval_file));
    const cc::Word w = parse_word_arg(eval_word, inst.spec.rank);
    std::cout << cc::evaluate(pick_side(inst, eval_side), w).str() << "\n";
  });

  // decompose
  std::string dec_file, dec_side = "f", dec_backend = "hash";
  auto* dec = app.add_subcommand("decompose", "print the reduced basis representation of one side");
  dec->add_option("file", dec_file, "instance file")->required();
  dec->add_option("--side", dec_side, "f or g")->check(CLI::IsMember({"f", "g"}));
  dec->add_option("--backend", dec_backend, "key grouping backend")
      ->check(CLI::IsMember({"hash", "radix"}));
  dec->callback([&] {
    const cc::Instance inst = cc::parse_instance(read_file(dec_file));
    const cc::BasisDecomposition d =
        cc::basis_decomposition(pick_side(inst, dec_side), backend_from(dec_backend));
    std::cout << "power basis (" << d.power.size() << " terms)\n";
    for (const auto& t : d.power) {
      std::cout << "  " << cc::render_key(t.key) << ": " << t.coef.str() << "\n";
    }
    std::cout << "rectangles (" << d.rect.size() << " terms)\n";
    for (const auto& t : d.rect) {
      std::cout << "  " << cc::render_key(t.key) << ": " << t.coef.str() << "\n";
    }
  });

  // gen
  cc::GenParams gen_params;
  std::string gen_out, gen_pair = "random";
  std::uint32_t gen_perturb = 2;
  auto* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("--rank", gen_params.rank, "alphabet rank (>= 2)");
  gen->add_option("--terms", gen_params.term_count, "terms per function");
  gen->add_option("--max-word-len", gen_params.max_word_len, "maximum word length");
  gen->add_option("--coef-bits", gen_params.coef_bits, "maximum coefficient bits");
  gen->add_option("--seed", gen_params.seed, "RNG seed");
  gen->add_option("--pair", gen_pair, "relation between f and g")
      ->check(CLI::IsMember({"random", "equivalent", "inequivalent"}));
  gen->add_option("--perturb-count", gen_perturb, "relation terms added in equivalent mode");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");
  gen->callback([&] {
    cc::Instance inst;
    inst.spec.rank = gen_params.rank;
    inst.f = cc::gen_random(gen_params);
    if (gen_pair == "equivalent") {
      inst.g = cc::perturb_equivalent(inst.f, gen_params.seed ^ 0x5bd1e995, gen_perturb);
    } else if (gen_pair == "inequivalent") {
      inst.g = cc::perturb_inequivalent(inst.f, gen_params.seed ^ 0x5bd1e995);
    } else {
      cc::GenParams q = gen_params;
      q.seed ^= 0x9e3779b9;
      inst.g = cc::gen_random(q);
    }
    const std::string text = cc::serialize_instance(inst);
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(gen_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write file: " + gen_out);
      out << text;
    }
  });

  // scan
  std::string scan_file;
  std::uint32_t scan_max_len = 8;
  auto* scan = app.add_subcommand("scan", "exhaustive |f - g| bound up to a word length");
  scan->add_option("file", scan_file, "instance file")->required();
  scan->add_option("--max-len", scan_max_len, "maximum word length");
  scan->callback([&] {
    const cc::Instance inst = cc::parse_instance(read_file(scan_file));
    std::cout << cc::exhaustive_bound_scan(inst.f, inst.g, scan_max_len).str() << "\n";
  });

  // bench
  std::vector<std::uint64_t> bench_sizes{10000, 40000, 160000, 640000};
  std::uint64_t bench_seed = 1;
  cc::BenchOptions bench_opts;
  std::string bench_backend = "hash";
  bool bench_csv = false;
  auto* bench = app.add_subcommand("bench", "scaling benchmark on equivalent pairs");
  bench->add_option("--sizes", bench_sizes, "target input sizes in bytes")->delimiter(',');
  bench->add_option("--seed", bench_seed, "RNG seed");
  bench->add_option("--reps", bench_opts.reps, "timed repetitions per size");
  bench->add_option("--oracle-cutoff", bench_opts.oracle_cutoff_bytes,
                    "skip oracle timing above this size");
  bench->add_option("--backend", bench_backend, "key grouping backend")
      ->check(CLI::IsMember({"hash", "radix"}));
  bench->add_flag("--csv", bench_csv, "CSV output");
  bench->callback([&] {
    bench_opts.backend = backend_from(bench_backend);
    const cc::BenchReport report = cc::bench_scaling(bench_sizes, bench_seed, bench_opts);
    std::cout << (bench_csv ? report.to_csv() : report.to_table());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cc::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const cc::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
