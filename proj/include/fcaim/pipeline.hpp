#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fcaim/clustering.hpp"
#include "fcaim/config.hpp"
#include "fcaim/context.hpp"
#include "fcaim/lattice.hpp"
#include "fcaim/properties.hpp"

namespace fcaim {

/// Files produced by a command, written only after every step succeeded.
struct CommandResult {
    std::string summary;
    std::vector<std::pair<std::string, std::string>> files;  // (name under out, content)

    /// Atomically writes every file below `out_dir`.
    void commit(const std::string& out_dir) const;
};

/// Context of a matrix: every column except P14.2 and P14.3.
FormalContext context_from_matrix(const PropertyMatrix& m);
/// 0/1 rows of the matrix for clustering, optionally without some measures.
Rows clustering_rows(const PropertyMatrix& m, const std::vector<std::size_t>& keep);

/// Graphviz rendering with reduced labeling: each attribute at its attribute
/// concept, each object at its object concept. `groups` colors the object
/// concepts of each group.
std::string lattice_dot(const ConceptLattice& lattice,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& groups = {});

/// Highlight file: a partition CSV ("object,label"), or one name per line.
std::vector<std::pair<std::string, std::vector<std::string>>> read_highlight(const std::string& path);

/// p restricted to `keep` (by name); cluster names survive, empty clusters vanish.
Partition restrict_partition(const Partition& p, const std::vector<std::string>& keep);

CommandResult cmd_matrix(const PipelineConfig& cfg);
CommandResult cmd_context(const PipelineConfig& cfg, const std::string& matrix_csv);
CommandResult cmd_lattice(const PipelineConfig& cfg, const std::string& cxt, const std::string& highlight = "");
/// With `fixtures` the bundled reference partitions replace the computed ones
/// and `matrix_csv` may be empty.
CommandResult cmd_cluster(const PipelineConfig& cfg, const std::string& matrix_csv, bool fixtures);
CommandResult cmd_validate(const PipelineConfig& cfg, const std::string& cxt, const std::string& partition_csv);
CommandResult cmd_pipeline(const PipelineConfig& cfg, bool fixtures);

}  // namespace fcaim
