#include "adhm/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adhm/classify.hpp"
#include "adhm/io.hpp"
#include "adhm/monad.hpp"
#include "adhm/rng.hpp"
#include "adhm/strata.hpp"
#include "adhm/sweep.hpp"
#include "adhm/uhlenbeck.hpp"

namespace adhm {
namespace {

PointP2 parse_point(const std::string& text) {
  std::vector<std::string> parts(1);
  for (char ch : text) {
    if (ch == ',') {
      parts.emplace_back();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      parts.back().push_back(ch);
    }
  }
  if (parts.size() != 3) {
    throw std::invalid_argument("point must be three comma-separated rationals, got '" + text +
                                "'");
  }
  return PointP2(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

void emit(const Json& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.dump(2) << "\n";
  } else {
    out << render_text(report);
  }
}

Json family_report(const AdhmDatum& x) {
  Json doc = classification_to_json(classify(x));
  const Subspace algebra = stabilizer_lie(x);
  Json basis = Json::array();
  for (std::size_t k = 0; k < algebra.dim(); ++k) {
    basis.push_back(matrix_to_json(unvec(column(algebra.basis, k), x.c, x.c)));
  }
  doc["stabilizer_basis"] = std::move(basis);
  const auto witness = stabilizer_nontrivial_witness(x);
  doc["witness_found"] = witness.has_value();
  if (witness) {
    doc["witness"] = matrix_to_json(*witness);
    doc["witness_fixes_datum"] = group_action(*witness, x) == x;
  }
  return doc;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with framed matrix data (A, B, I, J)", "adhm"};
  app.require_subcommand(1);

  int exit_code = 0;
  bool as_json = false;

  auto* check_cmd = app.add_subcommand("check", "test whether a datum solves [A,B] + IJ = 0");
  std::string check_path;
  check_cmd->add_option("--in", check_path, "datum JSON file")->required();
  check_cmd->add_flag("--json", as_json, "emit JSON instead of text");
  check_cmd->callback([&] {
    const AdhmDatum x = load_datum(check_path);
    const Matrix value = mu(x);
    const bool solution = value.is_zero();
    emit(Json{{"c", x.c}, {"r", x.r}, {"mu", matrix_to_json(value)}, {"solution", solution}},
         as_json, out);
    if (!solution) exit_code = 1;
  });

  auto* classify_cmd =
      app.add_subcommand("classify", "stability, costability, derivative and stabilizer report");
  std::string classify_path;
  classify_cmd->add_option("--in", classify_path, "datum JSON file")->required();
  classify_cmd->add_flag("--json", as_json, "emit JSON instead of text");
  classify_cmd->callback(
      [&] { emit(classification_to_json(classify(load_datum(classify_path))), as_json, out); });

  auto* sample_cmd =
      app.add_subcommand("sample", "draw random solutions with prescribed stabilizing dimension");
  std::size_t sample_r = 0;
  std::size_t sample_c = 0;
  long long sample_s = -1;
  std::uint64_t sample_seed = 1;
  int sample_count = 1;
  bool sample_conjugate = false;
  std::string sample_prefix;
  sample_cmd->add_option("--r", sample_r, "framing size, at least 1")->required();
  sample_cmd->add_option("--c", sample_c, "matrix size")->required();
  sample_cmd->add_option("--s", sample_s, "stabilizing dimension (default: c, i.e. stable)");
  sample_cmd->add_option("--seed", sample_seed, "generator seed")->envname("ADHM_SEED");
  sample_cmd->add_option("--count", sample_count, "number of samples");
  sample_cmd->add_flag("--conjugate", sample_conjugate,
                       "apply a random change of basis to each sample");
  sample_cmd->add_option("--out", sample_prefix, "write PREFIX_k.json files instead of stdout");
  sample_cmd->callback([&] {
    if (sample_r < 1) throw std::invalid_argument("--r must be at least 1");
    if (sample_s < 0) sample_s = static_cast<long long>(sample_c);
    if (static_cast<std::size_t>(sample_s) > sample_c) {
      throw std::invalid_argument("--s must be at most --c");
    }
    if (sample_count < 1) throw std::invalid_argument("--count must be at least 1");
    Rng rng(sample_seed);
    for (int k = 0; k < sample_count; ++k) {
      AdhmDatum x =
          sample_stratum(sample_r, sample_c, static_cast<std::size_t>(sample_s), rng).x;
      if (sample_conjugate && sample_c > 0) {
        x = group_action(random_invertible(sample_c, 3, rng), x);
      }
      const Json doc = datum_to_json(x);
      if (sample_prefix.empty()) {
        out << doc.dump() << "\n";
      } else {
        const std::string name = sample_prefix + "_" + std::to_string(k) + ".json";
        std::ofstream file(name);
        if (!file) throw std::runtime_error("cannot open " + name + " for writing");
        file << doc.dump(2) << "\n";
        out << "wrote " << name << "\n";
      }
    }
  });

  auto* audit_cmd = app.add_subcommand(
      "audit-dimensions", "compare the closed-form stratum dimension with the parametrization");
  std::size_t audit_rmax = 5;
  std::size_t audit_cmax = 6;
  audit_cmd->add_option("--rmax", audit_rmax, "largest framing size");
  audit_cmd->add_option("--cmax", audit_cmax, "largest matrix size");
  audit_cmd->add_flag("--json", as_json, "emit JSON instead of text");
  audit_cmd->callback([&] {
    const auto audits = audit_dimensions(audit_rmax, audit_cmax);
    const bool all = std::all_of(audits.begin(), audits.end(),
                                 [](const DimensionAudit& a) { return a.consistent; });
    if (as_json) {
      out << audit_to_json(audits).dump(2) << "\n";
    } else {
      out << "r c s formula parametrization consistent\n";
      for (const DimensionAudit& a : audits) {
        out << a.r << " " << a.c << " " << a.s << " " << a.formula << " " << a.parametrization
            << " " << (a.consistent ? "yes" : "no") << "\n";
      }
      out << (all ? "all rows consistent" : "inconsistent rows present") << "\n";
    }
    if (!all) exit_code = 1;
  });

  auto* monad_cmd = app.add_subcommand("monad", "three-term complex attached to a solution");
  monad_cmd->require_subcommand(1);
  std::string monad_path;
  monad_cmd->add_option("--in", monad_path, "datum JSON file")->required();

  auto* fiber_cmd =
      monad_cmd->add_subcommand("fiber", "ranks and fiber cohomology at one point of the plane");
  std::string point_text;
  fiber_cmd->add_option("--point", point_text, "homogeneous coordinates, e.g. '1,2,1'")
      ->required();
  fiber_cmd->add_flag("--json", as_json, "emit JSON instead of text");
  fiber_cmd->callback([&] {
    const AdhmDatum x = load_datum(monad_path);
    const PointP2 point = parse_point(point_text);
    emit(fiber_to_json(evaluate_fiber(x, point), point), as_json, out);
  });

  auto* support_cmd = monad_cmd->add_subcommand(
      "support", "points where the first map drops rank, and the quotient support");
  support_cmd->add_flag("--json", as_json, "emit JSON instead of text");
  support_cmd->callback([&] {
    const AdhmDatum x = load_datum(monad_path);
    Json report;
    report["non_costable_locus"] = support_to_json(non_costable_locus(x));
    report["singular_support"] = support_to_json(singular_support(x));
    emit(report, as_json, out);
  });

  auto* h0_cmd = monad_cmd->add_subcommand("h0", "twisted section count of the middle cohomology");
  int h0_n = 0;
  int h0_cap = 8;
  h0_cmd->add_option("--n", h0_n, "twist degree, at least 0")->required();
  h0_cmd->add_option("--cap", h0_cap, "largest twist accepted (guards matrix sizes)");
  h0_cmd->add_flag("--json", as_json, "emit JSON instead of text");
  h0_cmd->callback([&] {
    const AdhmDatum x = load_datum(monad_path);
    const std::size_t sections = h0_twisted(x, h0_n, h0_cap);
    emit(Json{{"n", h0_n},
              {"sections", sections},
              {"euler", euler_characteristic(x, h0_n)}},
         as_json, out);
  });

  auto* invariants_cmd =
      monad_cmd->add_subcommand("invariants", "rank, charge and length of the complex");
  invariants_cmd->add_flag("--json", as_json, "emit JSON instead of text");
  invariants_cmd->callback([&] {
    emit(invariants_to_json(perverse_invariants(load_datum(monad_path))), as_json, out);
  });

  auto* uhlenbeck_cmd = app.add_subcommand(
      "uhlenbeck", "split a stable solution into a regular part and a point cloud");
  std::string uhlenbeck_path;
  std::string uhlenbeck_out;
  uhlenbeck_cmd->add_option("--in", uhlenbeck_path, "datum JSON file")->required();
  uhlenbeck_cmd->add_option("--out", uhlenbeck_out, "also write the regular part to this file");
  uhlenbeck_cmd->add_flag("--json", as_json, "emit JSON instead of text");
  uhlenbeck_cmd->callback([&] {
    const UhlenbeckImage image = uhlenbeck_image(load_datum(uhlenbeck_path));
    emit(uhlenbeck_to_json(image), as_json, out);
    if (!uhlenbeck_out.empty()) {
      std::ofstream file(uhlenbeck_out);
      if (!file) throw std::runtime_error("cannot open " + uhlenbeck_out + " for writing");
      file << serialize_datum(image.regular_part) << "\n";
      out << "wrote " << uhlenbeck_out << "\n";
    }
  });

  auto* remark_cmd = app.add_subcommand(
      "remark-experiment", "reports on the two hand-built borderline families");
  remark_cmd->add_flag("--json", as_json, "emit JSON instead of text");
  remark_cmd->callback([&] {
    out << "family one\n";
    emit(family_report(sweep::borderline_family_one()), as_json, out);
    out << "family two\n";
    emit(family_report(sweep::borderline_family_two()), as_json, out);
  });

  auto* sweep_cmd = app.add_subcommand("sweep", "run the full acceptance sweep");
  std::uint64_t sweep_seed = 424242;
  sweep_cmd->add_option("--seed", sweep_seed, "generator seed")->envname("ADHM_SEED");
  sweep_cmd->callback([&] {
    sweep::Options options;
    options.seed = sweep_seed;
    const auto results = sweep::run_all(options, out);
    if (!sweep::all_passed(results)) exit_code = 1;
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace adhm
