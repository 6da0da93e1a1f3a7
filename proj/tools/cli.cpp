#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "exh/exh.hpp"

namespace exh::cli {

Vector parse_direction(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) throw InvalidInput("empty direction");

  Vector out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = compact.find(',', start);
    const std::string_view tok =
        std::string_view(compact).substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start);
    double x = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, x);
    if (tok.empty() || ec != std::errc() || ptr != last || !std::isfinite(x))
      throw InvalidInput("bad direction component \"" + std::string(tok) + "\"");
    out.push_back(x);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x + 0.0);
  return std::string(buf, res.ptr);
}

namespace {

std::string format_vector(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_number(v[i]);
  }
  return s;
}

void emit_family(const Family& f, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << format_family(f);
  else
    write_family(f, path);
}

// Summary lines go to stdout unless the family itself is being written there.
std::ostream& summary_stream(const std::string& path, std::ostream& out, std::ostream& err) {
  return (path.empty() || path == "-") ? err : out;
}

struct SamplingFlags {
  std::size_t dirs = 1000;
  std::uint64_t seed = 42;
  double tol = kEqTol;
  double radius = 1.0;
};

void add_sampling_flags(CLI::App* cmd, SamplingFlags& s) {
  cmd->add_option("--dirs", s.dirs, "Number of sampled directions")->capture_default_str();
  cmd->add_option("--seed", s.seed, "Sampler seed")->envname("EXH_SEED")->capture_default_str();
  cmd->add_option("--tol", s.tol, "Comparison tolerance")->envname("EXH_TOL")->capture_default_str();
  cmd->add_option("--radius", s.radius, "Norm of sampled directions")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate, convert and verify exhausters and coexhausters"};
  app.require_subcommand(1);
  std::string isa;
  app.add_option("--isa", isa, "Force kernel variant: scalar, avx2, neon");

  // eval
  std::string eval_file, eval_dir;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a family at a direction");
  eval_cmd->add_option("file", eval_file, "Family JSON file")->required();
  eval_cmd->add_option("-d,--direction", eval_dir, "Comma-separated direction")->required();

  // convert
  std::string conv_in, conv_out;
  bool conv_dedup = false;
  std::uint64_t conv_cap = kDefaultProductCap;
  auto* conv_cmd = app.add_subcommand("convert", "Convert to the dual kind by vertex selection");
  conv_cmd->add_option("input", conv_in, "Family JSON file")->required();
  conv_cmd->add_option("-o,--output", conv_out, "Output file (stdout if omitted)");
  conv_cmd->add_flag("--dedup", conv_dedup, "Merge identical output sets");
  conv_cmd->add_option("--cap", conv_cap, "Maximum number of selections")->capture_default_str();

  // verify
  std::string ver_a, ver_b;
  SamplingFlags ver_s;
  auto* ver_cmd = app.add_subcommand("verify", "Check two families represent the same function");
  ver_cmd->add_option("first", ver_a, "Family JSON file")->required();
  ver_cmd->add_option("second", ver_b, "Family JSON file")->required();
  add_sampling_flags(ver_cmd, ver_s);

  // reduce
  std::string red_in, red_out;
  SamplingFlags red_s;
  bool red_no_prune = false;
  auto* red_cmd = app.add_subcommand("reduce", "Merge duplicate sets and prune on a sample");
  red_cmd->add_option("input", red_in, "Family JSON file")->required();
  red_cmd->add_option("-o,--output", red_out, "Output file (stdout if omitted)");
  red_cmd->add_flag("--no-prune", red_no_prune, "Only merge duplicate sets");
  add_sampling_flags(red_cmd, red_s);

  // demyanov
  std::string dem_in, dem_out, dem_mode = "auto";
  std::size_t dem_dirs = 360;
  std::uint64_t dem_seed = 42;
  double dem_active = kActiveTol;
  auto* dem_cmd = app.add_subcommand("demyanov", "Direction-sampled classical converter");
  dem_cmd->add_option("input", dem_in, "Family JSON file")->required();
  dem_cmd->add_option("-o,--output", dem_out, "Output file (stdout if omitted)");
  dem_cmd->add_option("--dirs", dem_dirs, "Number of sampled directions")->capture_default_str();
  dem_cmd->add_option("--seed", dem_seed, "Sampler seed")->envname("EXH_SEED")->capture_default_str();
  dem_cmd->add_option("--mode", dem_mode, "auto, full, half or angles2d")
      ->check(CLI::IsMember({"auto", "full", "half", "angles2d"}))
      ->capture_default_str();
  dem_cmd->add_option("--active-tol", dem_active, "Active vertex tolerance")->capture_default_str();

  // gen
  std::size_t gen_n = 0, gen_k = 0, gen_m = 0;
  std::string gen_kind, gen_out;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random family");
  gen_cmd->add_option("--n", gen_n, "Space dimension")->required();
  gen_cmd->add_option("--k", gen_k, "Number of sets")->required();
  gen_cmd->add_option("--max-vertices", gen_m, "Maximum vertices per set")->required();
  gen_cmd->add_option("--kind", gen_kind, "Family kind")
      ->check(CLI::IsMember({"upper_exhauster", "lower_exhauster", "upper_coexhauster",
                             "lower_coexhauster"}))
      ->required();
  gen_cmd->add_option("--seed", gen_seed, "Generator seed")->envname("EXH_SEED")->required();
  gen_cmd->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (!isa.empty()) {
      kernels::Isa which;
      if (!kernels::parse_isa(isa, which) || !kernels::set_active(which)) {
        err << "error: kernel variant \"" << isa << "\" is not available\n";
        return kInputError;
      }
    }

    if (*eval_cmd) {
      const Family f = read_family(eval_file);
      const Vector d = parse_direction(eval_dir);
      out << std::setprecision(12) << (eval(f, d) + 0.0) << "\n";
      return kOk;
    }

    if (*conv_cmd) {
      const Family f = read_family(conv_in);
      const Family g = convert(f, {.dedup = conv_dedup, .cap = conv_cap});
      emit_family(g, conv_out, out);
      summary_stream(conv_out, out, err)
          << "p: " << selection_count(f) << "\nsets: " << g.size() << "\n";
      return kOk;
    }

    if (*ver_cmd) {
      const Family a = read_family(ver_a);
      const Family b = read_family(ver_b);
      const DirectionSampler sampler{a.space_dim(), ver_s.dirs, ver_s.seed,
                                     SamplerMode::FullSphere, ver_s.radius};
      const EquivalenceReport r = check_equivalence(a, b, sampler, ver_s.tol);
      out << "passed: " << (r.passed ? "true" : "false") << "\n"
          << "max_abs_deviation: " << format_number(r.max_abs_deviation) << "\n"
          << "worst_direction: " << format_vector(r.worst_direction) << "\n"
          << "directions_tested: " << r.directions_tested << "\n"
          << "tolerance: " << format_number(r.tolerance) << "\n";
      return r.passed ? kOk : kVerifyFailed;
    }

    if (*red_cmd) {
      const Family f = read_family(red_in);
      Family g = dedup_sets(f);
      if (!red_no_prune) {
        const DirectionSampler sampler{f.space_dim(), red_s.dirs, red_s.seed,
                                       SamplerMode::FullSphere, red_s.radius};
        g = prune_sampled(g, sampler, red_s.tol);
      }
      emit_family(g, red_out, out);
      summary_stream(red_out, out, err) << "sets: " << f.size() << " -> " << g.size() << "\n";
      return kOk;
    }

    if (*dem_cmd) {
      const Family f = read_family(dem_in);
      SamplerMode mode = default_demyanov_mode(f);
      if (dem_mode == "full") mode = SamplerMode::FullSphere;
      if (dem_mode == "half") mode = SamplerMode::HalfSphereFirstCoordNonneg;
      if (dem_mode == "angles2d") mode = SamplerMode::UniformAngles2D;
      const DirectionSampler sampler{set_dim(f.kind(), f.space_dim()), dem_dirs, dem_seed, mode};
      const Family g = demyanov_convert(f, sampler, dem_active);
      emit_family(g, dem_out, out);
      summary_stream(dem_out, out, err) << "directions: " << dem_dirs << "\nsets: " << g.size()
                                        << "\n";
      return kOk;
    }

    if (*gen_cmd) {
      const Family f = random_family(gen_n, gen_k, gen_m, *parse_kind(gen_kind), gen_seed);
      emit_family(f, gen_out, out);
      return kOk;
    }
  } catch (const CombinatorialBlowUp& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace exh::cli
