#include "mber/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mber/construct.hpp"
#include "mber/errors.hpp"
#include "mber/inference.hpp"
#include "mber/io.hpp"
#include "mber/report.hpp"

namespace mber::cli {

namespace {

struct Common {
  std::string format = "human";
  bool machine() const { return format == "machine"; }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
}

Mask mask_of(int n, const std::vector<int>& vars) {
  return mask_of_vars(n, std::span(vars.data(), vars.size()));
}

std::vector<std::string> select_columns(const std::vector<std::string>& columns,
                                        const std::vector<int>& keep) {
  std::vector<std::string> out;
  for (int v : keep) out.push_back(columns[static_cast<std::size_t>(v - 1)]);
  return out;
}

void print_model_report(std::ostream& out, const std::vector<std::string>& columns,
                        const ProbabilityTable& table, const DependenceParams& params,
                        const DependenceMeasures& measures, bool machine) {
  if (machine) {
    out << machine_model(table, params, measures, columns) << '\n';
    return;
  }
  print_legend(out, columns);
  print_probabilities(out, table);
  print_params(out, params);
  print_measures(out, measures);
}

void print_full_report(std::ostream& out, const std::vector<std::string>& columns,
                       const ProbabilityTable& table, bool machine) {
  const DependenceParams params = dependence_params(table);
  const DependenceMeasures measures(params);
  print_model_report(out, columns, table, params, measures, machine);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dependence analysis of multivariate binary data"};
  app.require_subcommand(1);

  // dep: full dependence report of a model
  auto dep = app.add_subcommand("dep", "probabilities, dependence parameters and measures");
  struct {
    std::string model;
    Common common;
  } dep_opts;
  dep->add_option("--model", dep_opts.model, "model file (JSON)")->required();
  add_format(dep, dep_opts.common);
  dep->callback([&] {
    const ModelSpec model = load_model(dep_opts.model);
    const DependenceMeasures measures(model.params);
    print_model_report(out, model.columns, model.table, model.params, measures,
                       dep_opts.common.machine());
  });

  // margin: report of a variable subset
  auto margin = app.add_subcommand("margin", "marginal table of a variable subset");
  struct {
    std::string model;
    std::vector<int> keep;
    Common common;
  } margin_opts;
  margin->add_option("--model", margin_opts.model, "model file (JSON)")->required();
  margin->add_option("--keep", margin_opts.keep, "variables to keep, e.g. 1,3")
      ->required()
      ->delimiter(',');
  add_format(margin, margin_opts.common);
  margin->callback([&] {
    const ModelSpec model = load_model(margin_opts.model);
    const ProbabilityTable marg =
        model.table.marginal(mask_of(model.table.dim(), margin_opts.keep));
    std::vector<int> sorted = margin_opts.keep;
    std::sort(sorted.begin(), sorted.end());
    print_full_report(out, select_columns(model.columns, sorted), marg,
                      margin_opts.common.machine());
  });

  // cond: conditional distribution of targets given fixed values
  auto cond = app.add_subcommand("cond", "conditional table of targets given fixed values");
  struct {
    std::string model;
    std::vector<int> target;
    std::vector<int> given;
    std::vector<int> values;
    Common common;
  } cond_opts;
  cond->add_option("--model", cond_opts.model, "model file (JSON)")->required();
  cond->add_option("--target", cond_opts.target, "target variables")->required()->delimiter(',');
  cond->add_option("--given", cond_opts.given, "conditioning variables")
      ->required()
      ->delimiter(',');
  cond->add_option("--values", cond_opts.values,
                   "conditioning values (ascending variable order)")
      ->required()
      ->delimiter(',');
  add_format(cond, cond_opts.common);
  cond->callback([&] {
    const ModelSpec model = load_model(cond_opts.model);
    const int n = model.table.dim();
    const ProbabilityTable conditional =
        model.table.conditional(mask_of(n, cond_opts.target), mask_of(n, cond_opts.given),
                                std::span(cond_opts.values.data(), cond_opts.values.size()));
    std::vector<int> sorted = cond_opts.target;
    std::sort(sorted.begin(), sorted.end());
    print_full_report(out, select_columns(model.columns, sorted), conditional,
                      cond_opts.common.machine());
  });

  // sim: write a simulated data set
  auto sim = app.add_subcommand("sim", "simulate observations from a model into a CSV file");
  struct {
    std::string model;
    std::string out_path;
    std::uint64_t m = 0;
    std::uint64_t seed = 1234;
    std::uint64_t stream = 0;
    Common common;
  } sim_opts;
  sim->add_option("--model", sim_opts.model, "model file (JSON)")->required();
  sim->add_option("--m", sim_opts.m, "number of rows")->required();
  sim->add_option("--out", sim_opts.out_path, "output CSV path")->required();
  sim->add_option("--seed", sim_opts.seed, "master seed")->capture_default_str();
  sim->add_option("--stream", sim_opts.stream, "stream id")->capture_default_str();
  add_format(sim, sim_opts.common);
  sim->callback([&] {
    const ModelSpec model = load_model(sim_opts.model);
    const SampleMatrix rows =
        simulate(model.table, sim_opts.m, SeedSpec{sim_opts.seed, sim_opts.stream});
    write_csv(sim_opts.out_path, Dataset{model.columns, rows});
    if (sim_opts.common.machine())
      out << nlohmann::json{{"rows", rows.rows()}, {"path", sim_opts.out_path}}.dump() << '\n';
    else
      out << "wrote " << rows.rows() << " rows to " << sim_opts.out_path << '\n';
  });

  // fit: posterior point estimates from data
  auto fit = app.add_subcommand("fit", "posterior mean estimates from a data set");
  struct {
    std::string data;
    std::vector<int> keep;
    double prior = 0.5;
    Common common;
  } fit_opts;
  fit->add_option("--data", fit_opts.data, "CSV data file")->required();
  fit->add_option("--keep", fit_opts.keep, "restrict to these columns")->delimiter(',');
  fit->add_option("--prior", fit_opts.prior, "Dirichlet prior concentration per cell")
      ->capture_default_str();
  add_format(fit, fit_opts.common);
  fit->callback([&] {
    Dataset dataset = read_csv(fit_opts.data);
    std::vector<std::string> columns = dataset.columns;
    SampleMatrix data = dataset.data;
    if (!fit_opts.keep.empty()) {
      data = data.select(mask_of(data.dim(), fit_opts.keep));
      std::vector<int> sorted = fit_opts.keep;
      std::sort(sorted.begin(), sorted.end());
      columns = select_columns(columns, sorted);
    }
    const PointEstimates est = point_estimates(posterior(counts(data), fit_opts.prior));
    print_model_report(out, columns, est.table, est.params, est.measures,
                       fit_opts.common.machine());
  });

  // infer: posterior intervals from data
  auto infer_cmd = app.add_subcommand("infer", "posterior intervals from a data set");
  struct {
    std::string data;
    std::vector<int> keep;
    double prior = 0.5;
    std::uint64_t nsim = 10000;
    double probint = 0.95;
    std::uint64_t seed = 1234;
    std::uint64_t stream = 0;
    Common common;
  } infer_opts;
  infer_cmd->add_option("--data", infer_opts.data, "CSV data file")->required();
  infer_cmd->add_option("--keep", infer_opts.keep, "restrict to these columns")->delimiter(',');
  infer_cmd->add_option("--prior", infer_opts.prior, "Dirichlet prior concentration per cell")
      ->capture_default_str();
  infer_cmd->add_option("--nsim", infer_opts.nsim, "posterior draws")->capture_default_str();
  infer_cmd->add_option("--probint", infer_opts.probint, "interval probability")
      ->capture_default_str();
  infer_cmd->add_option("--seed", infer_opts.seed, "master seed")->capture_default_str();
  infer_cmd->add_option("--stream", infer_opts.stream, "stream id")->capture_default_str();
  add_format(infer_cmd, infer_opts.common);
  infer_cmd->callback([&] {
    Dataset dataset = read_csv(infer_opts.data);
    std::vector<std::string> columns = dataset.columns;
    SampleMatrix data = dataset.data;
    if (!infer_opts.keep.empty()) {
      data = data.select(mask_of(data.dim(), infer_opts.keep));
      std::vector<int> sorted = infer_opts.keep;
      std::sort(sorted.begin(), sorted.end());
      columns = select_columns(columns, sorted);
    }
    const InferenceReport report = infer(data, infer_opts.prior, infer_opts.nsim,
                                         infer_opts.probint,
                                         SeedSpec{infer_opts.seed, infer_opts.stream});
    if (infer_opts.common.machine()) {
      out << machine_inference(report, columns) << '\n';
    } else {
      print_legend(out, columns);
      print_inference(out, report);
    }
  });

  // bounds: admissible intervals and region membership
  auto bounds = app.add_subcommand("bounds", "admissible parameter intervals and regions");
  struct {
    std::vector<double> theta;
    std::vector<double> pairwise;
    double theta12 = -1.0;
    std::vector<double> point;
    Common common;
  } bounds_opts;
  bounds->add_option("--theta", bounds_opts.theta, "singleton parameters")->delimiter(',');
  bounds->add_option("--pairwise", bounds_opts.pairwise,
                     "pairwise parameters th12,th13,th23 (needs --theta with 3 values)")
      ->delimiter(',');
  bounds->add_option("--theta12", bounds_opts.theta12, "fixed pairwise parameter (region mode)");
  bounds->add_option("--point", bounds_opts.point, "candidate th1,th2 for the region test")
      ->delimiter(',');
  add_format(bounds, bounds_opts.common);
  bounds->callback([&] {
    const bool region_mode = bounds->count("--theta12") > 0;
    if (region_mode) {
      if (!bounds_opts.theta.empty() || !bounds_opts.pairwise.empty())
        throw DomainError("--theta12 cannot be combined with --theta or --pairwise");
      const double t = bounds_opts.theta12;
      if (!(t > 0.0 && t < 1.0))
        throw DomainError("--theta12 must lie strictly between 0 and 1");
      if (bounds->count("--point")) {
        if (bounds_opts.point.size() != 2) throw DomainError("--point needs two values th1,th2");
        const bool inside =
            bivariate_admissible_region_contains(t, bounds_opts.point[0], bounds_opts.point[1]);
        if (bounds_opts.common.machine())
          out << nlohmann::json{{"inside", inside}}.dump() << '\n';
        else
          out << (inside ? "inside" : "outside") << '\n';
      } else {
        // the admissible (th1, th2) region is the triangle with these corners
        if (bounds_opts.common.machine())
          out << nlohmann::json{{"vertices", {{t, t}, {t, 1.0}, {1.0, t}}}}.dump() << '\n';
        else
          out << "vertices: (" << trimmed4(t) << "," << trimmed4(t) << ") (" << trimmed4(t)
              << ",1) (1," << trimmed4(t) << ")\n";
      }
      return;
    }
    if (bounds_opts.theta.empty())
      throw DomainError("bounds needs --theta values or --theta12");
    FrechetBounds interval{0.0, 1.0};
    if (!bounds_opts.pairwise.empty()) {
      if (bounds_opts.theta.size() != 3 || bounds_opts.pairwise.size() != 3)
        throw DomainError("the pairwise mode needs --theta th1,th2,th3 and --pairwise "
                          "th12,th13,th23");
      interval = trivariate_admissible_interval(bounds_opts.theta[0], bounds_opts.theta[1],
                                                bounds_opts.theta[2], bounds_opts.pairwise[0],
                                                bounds_opts.pairwise[1], bounds_opts.pairwise[2]);
    } else if (bounds_opts.theta.size() == 2) {
      interval = bivariate_admissible_interval(bounds_opts.theta[0], bounds_opts.theta[1]);
    } else {
      const int n = static_cast<int>(bounds_opts.theta.size());
      interval = frechet_bounds(
          n, std::span(bounds_opts.theta.data(), bounds_opts.theta.size()), full_mask(n));
    }
    if (bounds_opts.common.machine())
      out << machine_bounds(interval) << '\n';
    else
      print_bounds(out, interval);
  });

  // build: resolve and validate a layered model file
  auto build = app.add_subcommand("build", "validate a model file and report what it builds");
  struct {
    std::string model;
    Common common;
  } build_opts;
  build->add_option("--model", build_opts.model, "model file (JSON)")->required();
  add_format(build, build_opts.common);
  build->callback([&] {
    const ModelSpec model = load_model(build_opts.model);
    const DependenceMeasures measures(model.params);
    print_model_report(out, model.columns, model.table, model.params, measures,
                       build_opts.common.machine());
  });

  // coverage: repeated-sampling interval check
  auto coverage = app.add_subcommand("coverage", "interval coverage under repeated sampling");
  struct {
    std::string model;
    std::uint64_t m = 0;
    std::uint64_t reps = 0;
    double prior = 0.5;
    std::uint64_t nsim = 10000;
    double probint = 0.95;
    std::uint64_t seed = 1234;
    std::uint64_t stream = 0;
    Common common;
  } cov_opts;
  coverage->add_option("--model", cov_opts.model, "model file (JSON)")->required();
  coverage->add_option("--m", cov_opts.m, "rows per replication")->required();
  coverage->add_option("--reps", cov_opts.reps, "number of replications")->required();
  coverage->add_option("--prior", cov_opts.prior, "Dirichlet prior concentration per cell")
      ->capture_default_str();
  coverage->add_option("--nsim", cov_opts.nsim, "posterior draws per replication")
      ->capture_default_str();
  coverage->add_option("--probint", cov_opts.probint, "interval probability")
      ->capture_default_str();
  coverage->add_option("--seed", cov_opts.seed, "master seed")->capture_default_str();
  coverage->add_option("--stream", cov_opts.stream, "base stream id")->capture_default_str();
  add_format(coverage, cov_opts.common);
  coverage->callback([&] {
    const ModelSpec model = load_model(cov_opts.model);
    const CoverageReport report =
        coverage_study(model.table, cov_opts.m, cov_opts.reps, cov_opts.prior, cov_opts.nsim,
                       cov_opts.probint, SeedSpec{cov_opts.seed, cov_opts.stream});
    if (cov_opts.common.machine()) {
      out << machine_coverage(report, model.columns) << '\n';
    } else {
      print_legend(out, model.columns);
      print_coverage(out, report);
    }
  });

  // accuracy: prediction-rule hit rate
  auto accuracy = app.add_subcommand("accuracy", "expected hit rate of a prediction rule");
  struct {
    std::string model;
    std::string data;
    int target = 0;
    std::vector<int> given;
    std::uint64_t nsim = 1000;
    std::uint64_t seed = 1234;
    std::uint64_t stream = 0;
    bool zero_triple = false;
    Common common;
  } acc_opts;
  accuracy->add_option("--model", acc_opts.model, "model file (JSON)")->required();
  accuracy->add_option("--data", acc_opts.data, "CSV data file to score")->required();
  accuracy->add_option("--target", acc_opts.target, "variable to predict")->required();
  accuracy->add_option("--given", acc_opts.given, "conditioning variables")->delimiter(',');
  accuracy->add_option("--nsim", acc_opts.nsim, "randomized predictions per row")
      ->capture_default_str();
  accuracy->add_option("--seed", acc_opts.seed, "master seed")->capture_default_str();
  accuracy->add_option("--stream", acc_opts.stream, "stream id")->capture_default_str();
  accuracy->add_flag("--zero-triple", acc_opts.zero_triple,
                     "for 3-variable models, zero the triple dependence measure first");
  add_format(accuracy, acc_opts.common);
  accuracy->callback([&] {
    const ModelSpec model = load_model(acc_opts.model);
    ProbabilityTable table = model.table;
    if (acc_opts.zero_triple) {
      if (table.dim() != 3)
        throw DomainError("--zero-triple needs a 3-variable model");
      const DependenceParams& p = model.params;
      const DependenceMeasures m(p);
      table = trivariate_from_measures(p.singleton(1), p.singleton(2), p.singleton(3),
                                       m.at(0b110), m.at(0b101), m.at(0b011), 0.0);
    }
    const Dataset dataset = read_csv(acc_opts.data);
    const Mask given = acc_opts.given.empty() ? 0 : mask_of(table.dim(), acc_opts.given);
    const double value = rule_accuracy(table, dataset.data, acc_opts.target, given, acc_opts.nsim,
                                       SeedSpec{acc_opts.seed, acc_opts.stream});
    if (acc_opts.common.machine())
      out << nlohmann::json{{"accuracy", value}}.dump() << '\n';
    else
      out << "accuracy " << fixed4(value) << '\n';
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace mber::cli
