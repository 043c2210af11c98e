#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "commands.hpp"

namespace {

using poncelet::cli::Command;
using poncelet::cli::RunConfig;

std::vector<poncelet::CenterId> parse_centers(const std::string& list) {
  std::vector<poncelet::CenterId> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto id = poncelet::parse_center_id(item);
    if (!id) throw CLI::ValidationError("--centers", "unknown center '" + item + "'");
    out.push_back(*id);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poncelet triangle families: sampling, invariants, loci, similarity, circles"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string family = "homothetic";
  std::string centers;
  std::string out_path = "-";
  std::vector<double> seed_point;
  double target_cot = 0.0;
  CLI::Option* target_cot_option = nullptr;

  const std::map<std::string, Command> commands{
      {"sample", Command::Sample},         {"invariants", Command::Invariants},
      {"svg", Command::Svg},               {"loci", Command::Loci},
      {"similarity", Command::Similarity}, {"circles", Command::Circles},
      {"moses", Command::Moses},           {"closed-form", Command::ClosedForm},
  };
  const std::map<std::string, std::string> help{
      {"sample", "CSV of triangle vertices (and centers) over the family"},
      {"invariants", "JSON invariant reports; exit 1 if any fails"},
      {"svg", "static SVG of family snapshots, conics, centers and loci"},
      {"loci", "fit the locus of a center and compare with its closed form"},
      {"similarity", "map homothetic <-> brocard triangles by the variable similarity"},
      {"circles", "stationary circles of the Brocard porism"},
      {"moses", "construct triangles from prescribed Brocard points"},
      {"closed-form", "closed-form vs constructed vertex discrepancy (informational)"},
  };

  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--family", family, "homothetic | brocard | confocal")
        ->check(CLI::IsMember({"homothetic", "brocard", "confocal"}));
    sub->add_option("--a", cfg.family.a, "caustic (or outer) semi-major axis");
    sub->add_option("--b", cfg.family.b, "semi-minor axis");
    sub->add_option("--lambda", cfg.family.lambda, "confocal offset (confocal family)");
    sub->add_option("--n", cfg.n, "number of samples");
    sub->add_option("--tol", cfg.tol, "relative tolerance");
    sub->add_option("--k", cfg.k, "similarity: target minor semi-axis");
    sub->add_option("--out", out_path, "output path, - for stdout");
    sub->add_option("--format", cfg.format, "csv | json | svg (command dependent)");
    sub->add_option("--snapshots", cfg.snapshots, "triangles drawn in figures");
    sub->add_option("--centers", centers, "comma separated: X2,X3,X6,X39,X182");
    sub->add_option("--seed", cfg.seed, "random seed");
    if (command == Command::Loci) sub->add_option("--model", cfg.model, "circle | ellipse | auto");
    if (command == Command::Moses) {
      sub->add_option("--A", seed_point, "explicit vertex A as two numbers")->expected(2);
      target_cot_option = sub->add_option("--target-cot", target_cot, "choose the member with this cot of the Brocard angle");
    }
    sub->callback([&cfg, command = command] { cfg.command = command; });
  }

  try {
    app.parse(argc, argv);
    cfg.centers = parse_centers(centers);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : poncelet::cli::kInvalidInput;
  }

  if (family == "brocard") cfg.family.kind = poncelet::FamilyKind::BrocardPorism;
  if (family == "confocal") cfg.family.kind = poncelet::FamilyKind::ConfocalLambda;
  if (seed_point.size() == 2) cfg.seed_point = poncelet::Point{seed_point[0], seed_point[1]};
  if (target_cot_option != nullptr && target_cot_option->count() > 0) cfg.target_cot_omega = target_cot;

  if (out_path == "-") return poncelet::cli::run(cfg, std::cout, std::cerr);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << '\n';
    return poncelet::cli::kInvalidInput;
  }
  const int code = poncelet::cli::run(cfg, file, std::cerr);
  file.close();
  if (!file) {
    std::cerr << "error: failed writing " << out_path << '\n';
    return poncelet::cli::kInternal;
  }
  return code;
}
