#include "fcaim/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "fcaim/catalog.hpp"
#include "fcaim/textio.hpp"
#include "fcaim/validation.hpp"

namespace fcaim {

namespace {

const char* const kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5"};

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
    return out;
}

std::string csv_of(const PropertyMatrix& m) {
    std::ostringstream os;
    m.write_csv(os);
    return os.str();
}

PropertyMatrix load_matrix(const std::string& path) {
    std::istringstream in(read_file(path, "matrix"));
    return PropertyMatrix::read_csv(in);
}

FormalContext load_context(const std::string& path) { return FormalContext::parse_cxt(read_file(path, "context")); }

Catalog load_catalog(const PipelineConfig& cfg) {
    return cfg.catalog.empty() ? Catalog::load_default() : Catalog::load(cfg.catalog);
}

ReferenceClusters load_reference(const PipelineConfig& cfg) {
    return cfg.reference.empty() ? ReferenceClusters::load_default() : ReferenceClusters::load(cfg.reference);
}

std::string concept_count(std::size_t n) { return std::to_string(n) + (n == 1 ? " concept" : " concepts"); }

template <class F>
std::string render(F&& f) {
    std::ostringstream os;
    f(os);
    return os.str();
}

std::string lines_of(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += s + "\n";
    return out;
}

void add_matrix_files(CommandResult& r, const Catalog& cat, const PropertyMatrix& m) {
    r.files.emplace_back("matrix.csv", csv_of(m));
    r.files.emplace_back("evidence.tsv", render([&](std::ostream& os) { m.write_evidence(os); }));
    std::string undecided = render([&](std::ostream& os) { m.write_undecided(os); });
    r.files.emplace_back("undecided.txt", undecided);
    std::size_t computable = 0;
    for (const auto& d : cat.entries()) computable += d.computable();
    auto undecided_count = std::count(undecided.begin(), undecided.end(), '\n');
    r.summary += std::to_string(m.size()) + " measures (" + std::to_string(computable) + " computable) x " +
                 std::to_string(matrix_columns().size()) + " columns; " + std::to_string(undecided_count) +
                 " undecided properties\n";
}

struct Clustered {
    Partition ahc, kmeans;
    std::optional<Dendrogram> dendrogram;
    PartitionComparison comparison;
};

Clustered cluster_matrix(const PipelineConfig& cfg, const PropertyMatrix& m) {
    std::set<std::string> excluded(cfg.exclude.begin(), cfg.exclude.end());
    for (const auto& e : excluded)
        if (std::find(m.measures.begin(), m.measures.end(), e) == m.measures.end())
            throw input_error("excluded measure '" + e + "' is not in the matrix");
    std::vector<std::size_t> keep;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!excluded.count(m.measures[i])) keep.push_back(i), names.push_back(m.measures[i]);
    if (keep.empty()) throw input_error("no measures left to cluster");
    if (cfg.k > keep.size())
        throw input_error("k = " + std::to_string(cfg.k) + " exceeds the " + std::to_string(keep.size()) +
                          " objects to cluster");
    Rows rows = clustering_rows(m, keep);
    Clustered c;
    c.dendrogram = ahc_ward(rows);
    c.ahc = cut_dendrogram(*c.dendrogram, cfg.k, names);
    c.kmeans = fcaim::kmeans(rows, cfg.k, cfg.seed, cfg.max_iterations, names).partition;
    c.comparison = compare_partitions(c.ahc, c.kmeans);
    return c;
}

Clustered cluster_fixtures(const PipelineConfig& cfg) {
    auto ref = load_reference(cfg);
    Clustered c;
    c.ahc = ref.ahc();
    c.kmeans = ref.kmeans();
    c.comparison = compare_partitions(c.ahc, c.kmeans);
    return c;
}

void add_cluster_files(CommandResult& r, const Clustered& c) {
    r.files.emplace_back("ahc_partition.csv", render([&](std::ostream& os) { c.ahc.write_csv(os); }));
    r.files.emplace_back("kmeans_partition.csv", render([&](std::ostream& os) { c.kmeans.write_csv(os); }));
    if (c.dendrogram) r.files.emplace_back("dendrogram.csv", render([&](std::ostream& os) { c.dendrogram->write_csv(os); }));
    r.files.emplace_back("disagreement.txt", lines_of(c.comparison.disagreement_names));
}

std::string cluster_summary(const Clustered& c) {
    std::ostringstream os;
    os << "AHC: " << c.ahc.k << " clusters over " << c.ahc.size() << " objects\n";
    os << "K-means: " << c.kmeans.k << " clusters over " << c.kmeans.size() << " objects\n";
    os << "disagreement (" << c.comparison.disagreement_names.size()
       << "): " << join(c.comparison.disagreement_names, ", ") << "\n";
    return os.str();
}

struct Validated {
    Membership membership;
    ValidationReport report;
};

Validated validate_with(const ConceptLattice& lattice, const Partition& p, const PipelineConfig& cfg) {
    Validated v{Membership::align(lattice.context(), p), {}};
    v.report = validate_partition(lattice, v.membership, cfg.thresholds);
    return v;
}

void add_validation_files(CommandResult& r, const ConceptLattice& lattice, const Validated& v) {
    r.files.emplace_back("validation.txt",
                         render([&](std::ostream& os) { v.report.write_text(os, lattice, v.membership); }));
    r.files.emplace_back("validation.csv", render([&](std::ostream& os) { v.report.write_csv(os, lattice); }));
    r.files.emplace_back("assignments.csv", render([&](std::ostream& os) {
                             v.report.write_assignments_csv(os, lattice, v.membership);
                         }));
}

std::string validation_summary(const ConceptLattice& lattice, const Validated& v) {
    std::ostringstream os;
    for (const auto& c : v.report.clusters)
        os << c.name << ": " << verdict_name(c.verdict) << " (cohesion " << c.cohesion << ", intent " << c.intent_size
           << ", " << c.intruders.size() << (c.intruders.size() == 1 ? " intruder)\n" : " intruders)\n");
    for (const auto& a : v.report.assignments)
        os << lattice.context().objects()[a.object] << " -> "
           << (a.assigned ? v.membership.cluster_names[*a.assigned] : std::string("unresolved")) << "\n";
    return os.str();
}

}  // namespace

void CommandResult::commit(const std::string& out_dir) const {
    for (const auto& [name, content] : files) atomic_write((std::filesystem::path(out_dir) / name).string(), content);
}

FormalContext context_from_matrix(const PropertyMatrix& m) {
    const auto& cols = matrix_columns();
    std::vector<std::string> attributes;
    std::vector<std::size_t> source;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] == "P14.2" || cols[j] == "P14.3") continue;
        attributes.push_back(cols[j]);
        source.push_back(j);
    }
    std::vector<Bitset> rows;
    for (const auto& r : m.rows) {
        if (r.size() != cols.size()) throw input_error("matrix row has " + std::to_string(r.size()) + " columns");
        Bitset b(attributes.size());
        for (std::size_t j = 0; j < source.size(); ++j)
            if (r[source[j]]) b.set(j);
        rows.push_back(std::move(b));
    }
    return FormalContext(m.measures, std::move(attributes), std::move(rows));
}

Rows clustering_rows(const PropertyMatrix& m, const std::vector<std::size_t>& keep) {
    Rows rows;
    for (std::size_t i : keep) {
        std::vector<double> r;
        for (bool b : m.rows.at(i)) r.push_back(b ? 1.0 : 0.0);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string lattice_dot(const ConceptLattice& lattice,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& groups) {
    const auto& ctx = lattice.context();
    std::vector<std::vector<std::string>> attr_labels(lattice.size()), obj_labels(lattice.size());
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        attr_labels[lattice.attribute_concept(m)].push_back(ctx.attributes()[m]);
    for (std::size_t g = 0; g < ctx.object_count(); ++g) obj_labels[lattice.object_concept(g)].push_back(ctx.objects()[g]);

    std::map<std::size_t, std::size_t> color_of;  // concept -> group
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (const auto& name : groups[gi].second) color_of.emplace(lattice.object_concept(ctx.object_index(name)), gi);

    std::ostringstream os;
    os << "digraph lattice {\n";
    os << "  node [shape=box, style=rounded, fontsize=10];\n";
    os << "  edge [arrowhead=none];\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        std::string label = join(attr_labels[i], "\\n");
        if (!obj_labels[i].empty()) label += (label.empty() ? "" : "\\n---\\n") + join(obj_labels[i], "\\n");
        os << "  c" << i << " [label=\"" << dot_escape(label) << "\"";
        if (auto it = color_of.find(i); it != color_of.end())
            os << ", style=\"rounded,filled\", fillcolor=\"" << kPalette[it->second % std::size(kPalette)] << "\"";
        os << "];\n";
    }
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (std::size_t j : lattice.upper_covers(i)) os << "  c" << j << " -> c" << i << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<std::pair<std::string, std::vector<std::string>>> read_highlight(const std::string& path) {
    std::string text = read_file(path, "highlight file");
    std::vector<std::pair<std::string, std::vector<std::string>>> groups;
    if (text.rfind("object,label", 0) == 0) {
        std::istringstream in(text);
        Partition p = Partition::read_csv(in);
        for (std::size_t c = 0; c < p.k; ++c) {
            std::vector<std::string> names;
            for (std::size_t i : p.members(c)) names.push_back(p.objects[i]);
            groups.emplace_back(p.cluster_name(c), std::move(names));
        }
        return groups;
    }
    std::istringstream in(text);
    std::vector<std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        names.push_back(line);
    }
    groups.emplace_back("highlight", std::move(names));
    return groups;
}

Partition restrict_partition(const Partition& p, const std::vector<std::string>& keep) {
    std::set<std::string> k(keep.begin(), keep.end());
    std::vector<std::size_t> raw;
    std::vector<std::string> objects;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (k.count(p.objects[i])) raw.push_back(p.labels[i]), objects.push_back(p.objects[i]);
    Partition out;
    out.method = p.method;
    out.objects = std::move(objects);
    std::map<std::size_t, std::size_t> renumber;
    for (std::size_t l = 0; l < p.k; ++l)
        if (std::find(raw.begin(), raw.end(), l) != raw.end()) {
            renumber.emplace(l, renumber.size());
            out.cluster_names.push_back(p.cluster_name(l));
        }
    for (std::size_t l : raw) out.labels.push_back(renumber.at(l));
    out.k = renumber.size();
    out.validate();
    return out;
}

CommandResult cmd_matrix(const PipelineConfig& cfg) {
    cfg.validate();
    Catalog cat = load_catalog(cfg);
    CommandResult r;
    add_matrix_files(r, cat, build_matrix(cat, cfg.grid));
    return r;
}

CommandResult cmd_context(const PipelineConfig& cfg, const std::string& matrix_csv) {
    (void)cfg;
    FormalContext ctx = context_from_matrix(load_matrix(matrix_csv));
    CommandResult r;
    r.files.emplace_back("context.cxt", ctx.to_cxt());
    r.summary = std::to_string(ctx.object_count()) + " objects x " + std::to_string(ctx.attribute_count()) +
                " attributes\n";
    return r;
}

CommandResult cmd_lattice(const PipelineConfig& cfg, const std::string& cxt, const std::string& highlight) {
    (void)cfg;
    ConceptLattice lattice(load_context(cxt));
    CommandResult r;
    auto groups = highlight.empty() ? decltype(read_highlight("")){} : read_highlight(highlight);
    r.files.emplace_back("lattice.dot", lattice_dot(lattice, groups));
    r.summary = concept_count(lattice.size()) + ", " + std::to_string(lattice.edge_count()) + " cover edges\n";
    return r;
}

CommandResult cmd_cluster(const PipelineConfig& cfg, const std::string& matrix_csv, bool fixtures) {
    cfg.validate();
    Clustered c = fixtures ? cluster_fixtures(cfg) : cluster_matrix(cfg, load_matrix(matrix_csv));
    CommandResult r;
    add_cluster_files(r, c);
    r.summary = cluster_summary(c);
    return r;
}

CommandResult cmd_validate(const PipelineConfig& cfg, const std::string& cxt, const std::string& partition_csv) {
    cfg.validate();
    ConceptLattice lattice(load_context(cxt));
    std::istringstream in(read_file(partition_csv, "partition"));
    Partition p = Partition::read_csv(in);
    Validated v = validate_with(lattice, p, cfg);
    CommandResult r;
    add_validation_files(r, lattice, v);
    r.summary = validation_summary(lattice, v);
    return r;
}

CommandResult cmd_pipeline(const PipelineConfig& cfg, bool fixtures) {
    cfg.validate();
    Catalog cat = load_catalog(cfg);
    PropertyMatrix m = build_matrix(cat, cfg.grid);
    CommandResult r;
    add_matrix_files(r, cat, m);
    FormalContext ctx = context_from_matrix(m);
    ConceptLattice lattice(ctx);
    r.files.emplace_back("context.cxt", ctx.to_cxt());

    Clustered c = fixtures ? cluster_fixtures(cfg) : cluster_matrix(cfg, m);
    add_cluster_files(r, c);

    // Validate the clusters both methods agree on; the rest float.
    Partition validated;
    if (fixtures) {
        validated = load_reference(cfg).core();
    } else {
        std::set<std::string> drop(c.comparison.disagreement_names.begin(), c.comparison.disagreement_names.end());
        std::vector<std::string> keep;
        for (const auto& o : c.ahc.objects)
            if (!drop.count(o)) keep.push_back(o);
        validated = restrict_partition(c.ahc, keep);
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> groups;
    for (std::size_t l = 0; l < validated.k; ++l) {
        std::vector<std::string> names;
        for (std::size_t i : validated.members(l)) names.push_back(validated.objects[i]);
        groups.emplace_back(validated.cluster_name(l), std::move(names));
    }
    r.files.emplace_back("lattice.dot", lattice_dot(lattice, groups));
    r.files.emplace_back("validated_partition.csv", render([&](std::ostream& os) { validated.write_csv(os); }));
    Validated v = validate_with(lattice, validated, cfg);
    add_validation_files(r, lattice, v);

    r.summary += concept_count(lattice.size()) + ", " + std::to_string(lattice.edge_count()) + " cover edges\n";
    r.summary += cluster_summary(c);
    r.summary += validation_summary(lattice, v);
    return r;
}

}  // namespace fcaim
