// Command-line front end: load scheme and plane descriptions, compute
// spans, socle dimensions and reductions, and run the brute-force
// verification suites.
//
// Exit codes: 0 success/pass, 1 domain failure (validation violation,
// plane outside the span, failed verification), 2 usage/parse/IO errors,
// violated preconditions, and exceeded budgets.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cactus/fixtures.hpp"
#include "cactus/io.hpp"
#include "cactus/oracle.hpp"
#include "cactus/reduce.hpp"
#include "cactus/sample.hpp"

using namespace cactus;
using io::json;

namespace {

struct JobSpec {
  std::string command;
  std::string input;
  std::string plane;
  std::string claim;
  std::string field = "rational";
  std::size_t k = 1;
  unsigned d = 1;
  std::size_t degree = 3;
  std::size_t ambient = 3;
  std::uint64_t seed = oracle::kDefaultSeed;
  unsigned long long budget = oracle::kDefaultBudget;
  unsigned jobs = 1;
  std::size_t samples = 100;
  bool budget_set = false;
  std::string output = "human";
};

bool json_mode(const JobSpec& job) { return job.output == "json"; }

void emit(const json& j, const JobSpec& job) {
  if (json_mode(job))
    std::cout << j.dump() << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

io::ParsedScheme load_scheme(const std::string& path) {
  return io::scheme_from_json(read_json_file(path));
}

// Returns the validated scheme or prints the violation and exits with 1.
io::ParsedScheme load_validated(const JobSpec& job) {
  io::ParsedScheme ps = load_scheme(job.input);
  ValidationReport rep = validate_scheme(ps.scheme);
  if (!rep.ok) {
    if (json_mode(job)) {
      json j;
      j["status"] = "violation";
      j["violation"] = rep.violation;
      j["witness"] = rep.witness;
      emit(j, job);
    } else {
      std::cout << "violation: " << rep.violation << "\n";
    }
    std::exit(1);
  }
  return ps;
}

Subspace resolve_plane(const io::ParsedScheme& ps, const JobSpec& job) {
  FieldSpec fs = ps.scheme.field();
  std::size_t ambient = ps.scheme.ambient_dim();
  if (!job.plane.empty()) {
    if (std::filesystem::exists(job.plane)) {
      json j = read_json_file(job.plane);
      if (j.is_array()) return io::plane_from_rows(j, fs, ambient);
      return io::plane_from_rows(j.at("plane"), fs, ambient);
    }
    return io::plane_from_inline(job.plane, fs, ambient);
  }
  if (ps.plane) return *ps.plane;
  throw std::invalid_argument("no plane given: pass --plane or embed one in the scheme file");
}

FieldSpec parse_field(const std::string& text) {
  if (text == "rational" || text == "0" || text == "QQ") return FieldSpec::rationals();
  return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(text)));
}

void print_human_trace(const EmbeddedFiniteScheme& scheme, const ShrinkTrace& trace) {
  std::cout << "steps: " << trace.steps.size() << "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ShrinkStep& s = trace.steps[i];
    std::cout << "  " << i + 1 << ". component " << s.component << ", " << to_string(s.tag)
              << ", socle element [";
    for (std::size_t j = 0; j < s.socle_element.size(); ++j) {
      if (j) std::cout << " ";
      std::cout << s.socle_element[j].str();
    }
    std::cout << "], degree " << s.degree_before << " -> " << s.degree_after << "\n";
  }
  std::cout << "final degree " << degree(scheme) << ", socle dimension "
            << scheme.algebra().socdim() << "\n";
}

int run_reduction(const JobSpec& job) {
  io::ParsedScheme ps = load_validated(job);
  Subspace e = resolve_plane(ps, job);
  EmbeddedFiniteScheme result = ps.scheme;
  ShrinkTrace trace;
  if (job.command == "shrink") {
    ShrinkOutcome out = shrink_once(ps.scheme, e);
    trace.initial_digest = io::digest(ps.scheme);
    trace.final_digest = io::digest(out.scheme);
    trace.steps.push_back(out.step);
    result = std::move(out.scheme);
  } else {
    ReduceResult res =
        job.command == "reduce" ? reduce_to_socdim(ps.scheme, e) : prune_minimal(ps.scheme, e);
    trace = std::move(res.trace);
    result = std::move(res.scheme);
  }
  if (json_mode(job)) {
    json j;
    j["scheme"] = io::scheme_to_json(result);
    j["trace"] = io::trace_to_json(trace);
    emit(j, job);
  } else {
    print_human_trace(result, trace);
    std::cout << io::scheme_to_json(result).dump(2) << "\n";
  }
  return 0;
}

int run_verify(const JobSpec& job) {
  io::ParsedScheme ps = load_validated(job);
  oracle::CheckOptions opts;
  opts.budget = job.budget;
  opts.jobs = job.jobs;
  opts.seed = job.seed;
  opts.samples = job.samples;
  std::vector<oracle::VerificationReport> reports;
  if (job.claim == "subschemes") {
    for (std::size_t c = 0; c < ps.scheme.component_count(); ++c)
      reports.push_back(oracle::check_lemma_subschemes(ps.scheme.algebra().component(c), opts));
  } else if (job.claim == "union") {
    reports.push_back(oracle::check_union(ps.scheme, job.k, opts));
  } else if (job.claim == "cactus") {
    reports.push_back(oracle::check_cactus_finite(ps.scheme, job.k, opts));
  } else {
    reports.push_back(oracle::check_reduce(ps.scheme, job.k, opts));
  }
  bool pass = true;
  for (const auto& r : reports) pass &= r.pass;
  if (json_mode(job)) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(r.to_json());
    emit(j, job);
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " claim=" << r.claim << " " << r.instance;
      for (const auto& [k, v] : r.counts) std::cout << " " << k << "=" << v;
      std::cout << "\n";
      if (!r.pass) std::cout << "counterexample: " << r.counterexample.dump() << "\n";
    }
  }
  return pass ? 0 : 1;
}

int run(const JobSpec& job) {
  if (job.command == "validate") {
    io::ParsedScheme ps = load_scheme(job.input);
    ValidationReport rep = validate_scheme(ps.scheme);
    if (json_mode(job)) {
      json j;
      j["status"] = rep.ok ? "ok" : "violation";
      if (!rep.ok) {
        j["violation"] = rep.violation;
        j["witness"] = rep.witness;
      }
      emit(j, job);
    } else {
      std::cout << (rep.ok ? "ok" : "violation: " + rep.violation) << "\n";
    }
    return rep.ok ? 0 : 1;
  }
  if (job.command == "span" || job.command == "supports") {
    io::ParsedScheme ps = load_validated(job);
    json rows = job.command == "span" ? io::subspace_to_json(span(ps.scheme)) : [&] {
      json a = json::array();
      for (const Subspace& p : support_points(ps.scheme)) a.push_back(io::vec_to_json(p.basis().row(0)));
      return a;
    }();
    if (json_mode(job)) {
      json j;
      j[job.command] = rows;
      emit(j, job);
    } else {
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          std::cout << (i ? " " : "") << (row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (job.command == "socdim" || job.command == "degree") {
    io::ParsedScheme ps = load_validated(job);
    std::size_t value =
        job.command == "socdim" ? ps.scheme.algebra().socdim() : degree(ps.scheme);
    if (json_mode(job)) {
      json j;
      j[job.command] = value;
      emit(j, job);
    } else {
      std::cout << value << "\n";
    }
    return 0;
  }
  if (job.command == "shrink" || job.command == "reduce" || job.command == "prune")
    return run_reduction(job);
  if (job.command == "verify") return run_verify(job);
  if (job.command == "veronese") {
    io::ParsedScheme ps = load_validated(job);
    emit(io::scheme_to_json(veronese(ps.scheme, job.d)), job);
    return 0;
  }
  if (job.command == "sample") {
    EmbeddedFiniteScheme r =
        sample::random_scheme(parse_field(job.field), job.degree, job.ambient, job.seed);
    emit(io::scheme_to_json(r), job);
    return 0;
  }
  throw std::invalid_argument("unknown command " + job.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact socle-guided computations with finite schemes in projective space"};
  app.require_subcommand(1);
  JobSpec job;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", job.output, "output format")
        ->check(CLI::IsMember({"human", "json"}));
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", job.input, "scheme JSON file")->required();
  };

  for (const char* name : {"validate", "span", "socdim", "degree", "supports"}) {
    CLI::App* cmd = app.add_subcommand(name);
    add_input(cmd);
    add_output(cmd);
  }
  for (const char* name : {"shrink", "reduce", "prune"}) {
    CLI::App* cmd = app.add_subcommand(name);
    add_input(cmd);
    add_output(cmd);
    cmd->add_option("--plane", job.plane, "plane file or inline rows \"a,b,c;d,e,f\"");
  }
  {
    CLI::App* cmd = app.add_subcommand("verify");
    add_input(cmd);
    add_output(cmd);
    cmd->add_option("--claim", job.claim, "claim to verify")
        ->required()
        ->check(CLI::IsMember({"subschemes", "union", "cactus", "theorem"}));
    cmd->add_option("--k", job.k, "plane dimension");
    cmd->add_option("--budget", job.budget, "enumeration budget")->capture_default_str();
    cmd->add_option("--seed", job.seed, "sampling seed")->capture_default_str();
    cmd->add_option("--jobs", job.jobs, "parallel enumeration workers");
    cmd->add_option("--samples", job.samples, "rational-field plane samples");
    cmd->parse_complete_callback([&] { job.budget_set = cmd->count("--budget") > 0; });
  }
  {
    CLI::App* cmd = app.add_subcommand("veronese");
    add_input(cmd);
    add_output(cmd);
    cmd->add_option("--d", job.d, "re-embedding degree")->required();
  }
  {
    CLI::App* cmd = app.add_subcommand("sample");
    add_output(cmd);
    cmd->add_option("--degree", job.degree, "total degree")->required();
    cmd->add_option("--ambient", job.ambient, "dim V")->required();
    cmd->add_option("--field", job.field, "\"rational\" or a prime modulus");
    cmd->add_option("--seed", job.seed, "generator seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  job.command = app.get_subcommands().front()->get_name();

  if (const char* env = std::getenv("CACTUS_BUDGET"); env && !job.budget_set) {
    try {
      job.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: CACTUS_BUDGET is not a number\n";
      return 2;
    }
  }

  try {
    return run(job);
  } catch (const domain_failure& e) {
    if (json_mode(job)) {
      json j;
      j["error"] = e.what();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "error: " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
