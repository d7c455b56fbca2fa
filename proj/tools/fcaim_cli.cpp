// fcaim: interestingness measures -> property matrix -> formal context ->
// concept lattice -> clusters -> lattice-based cluster validation.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fcaim/config.hpp"
#include "fcaim/pipeline.hpp"

namespace {

struct Common {
    std::string config;
    std::optional<std::string> out;
    std::optional<unsigned long> seed;
    std::optional<std::size_t> k;
    std::optional<std::string> catalog;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config, "key = value configuration file");
    cmd->add_option("--out", c.out, "output directory (default: out)");
    cmd->add_option("--seed", c.seed, "K-means seed row");
    cmd->add_option("--k", c.k, "number of clusters");
    cmd->add_option("--catalog", c.catalog, "measure catalog file");
}

fcaim::PipelineConfig resolve(const Common& c) {
    fcaim::PipelineConfig cfg = c.config.empty() ? fcaim::PipelineConfig{} : fcaim::PipelineConfig::load(c.config);
    if (c.out) cfg.out = *c.out;
    if (c.seed) cfg.seed = *c.seed;
    if (c.k) cfg.k = *c.k;
    if (c.catalog) cfg.catalog = *c.catalog;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Property matrix, concept lattice and cluster validation for interestingness measures"};
    app.require_subcommand(1);

    Common common;
    std::string matrix_csv, cxt, partition_csv, highlight;
    bool fixtures = false;

    auto* matrix = app.add_subcommand("matrix", "evaluate the catalog and write matrix.csv");
    add_common(matrix, common);

    auto* context = app.add_subcommand("context", "convert a matrix CSV to a Burmeister context");
    add_common(context, common);
    context->add_option("matrix", matrix_csv, "matrix CSV")->required();

    auto* lattice = app.add_subcommand("lattice", "enumerate concepts and write lattice.dot");
    add_common(lattice, common);
    lattice->add_option("context", cxt, "CXT file")->required();
    lattice->add_option("--highlight", highlight, "names (one per line) or partition CSV to color");

    auto* cluster = app.add_subcommand("cluster", "run AHC and K-means and compare them");
    add_common(cluster, common);
    cluster->add_option("matrix", matrix_csv, "matrix CSV");
    cluster->add_flag("--fixtures", fixtures, "use the bundled reference partitions");

    auto* validate = app.add_subcommand("validate", "validate a partition through the lattice");
    add_common(validate, common);
    validate->add_option("context", cxt, "CXT file")->required();
    validate->add_option("partition", partition_csv, "partition CSV (object,label)")->required();

    auto* pipeline = app.add_subcommand("pipeline", "run every step on the catalog");
    add_common(pipeline, common);
    pipeline->add_flag("--fixtures", fixtures, "validate the bundled reference clusters");

    CLI11_PARSE(app, argc, argv);

    try {
        fcaim::PipelineConfig cfg = resolve(common);
        fcaim::CommandResult result;
        if (*matrix)
            result = fcaim::cmd_matrix(cfg);
        else if (*context)
            result = fcaim::cmd_context(cfg, matrix_csv);
        else if (*lattice)
            result = fcaim::cmd_lattice(cfg, cxt, highlight);
        else if (*cluster) {
            if (!fixtures && matrix_csv.empty()) throw fcaim::input_error("cluster needs a matrix CSV or --fixtures");
            result = fcaim::cmd_cluster(cfg, matrix_csv, fixtures);
        } else if (*validate)
            result = fcaim::cmd_validate(cfg, cxt, partition_csv);
        else
            result = fcaim::cmd_pipeline(cfg, fixtures);
        result.commit(cfg.out);
        std::cout << result.summary;
        for (const auto& [name, _] : result.files) std::cout << "wrote " << cfg.out << "/" << name << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "fcaim: " << e.what() << "\n";
        return 1;
    }
}
