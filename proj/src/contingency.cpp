#include "fcaim/contingency.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace fcaim {

namespace {

// Cells computed from real-valued marginals may come out a few ulps below
// zero; anything beyond this relative slack is a genuine violation.
constexpr double kSlack = 1e-12;

double settle(double v, double scale) {
    if (v < 0 && v >= -kSlack * scale) return 0.0;
    return v;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

ContingencyTable::ContingencyTable(double n, double n_x, double n_y, double n_xy) {
    for (double v : {n, n_x, n_y, n_xy})
        if (!std::isfinite(v)) throw domain_error("table entries must be finite");
    if (!(n > 0)) throw domain_error("n must be positive (n = " + fmt(n) + ")");
    if (n_x < 0 || n_y < 0 || n_xy < 0) throw domain_error("counts must be non-negative");
    double tol = kSlack * n;
    if (n_x > n + tol) throw domain_error("n_x exceeds n");
    if (n_y > n + tol) throw domain_error("n_y exceeds n");
    if (n_xy > std::min(n_x, n_y) + tol) throw domain_error("n_xy exceeds min(n_x, n_y)");
    if (n_xy < n_x + n_y - n - tol) throw domain_error("n_xy below n_x + n_y - n");
    n_ = n;
    cells_.xy = n_xy;
    cells_.x_ny = settle(n_x - n_xy, n);
    cells_.nx_y = settle(n_y - n_xy, n);
    cells_.nx_ny = settle(n - n_x - n_y + n_xy, n);
}

ContingencyTable ContingencyTable::from_cells(const Cells& c) {
    for (double v : {c.xy, c.x_ny, c.nx_y, c.nx_ny}) {
        if (!std::isfinite(v)) throw domain_error("table entries must be finite");
        if (v < 0) throw domain_error("cells must be non-negative");
    }
    ContingencyTable t;
    t.n_ = c.xy + c.x_ny + c.nx_y + c.nx_ny;
    if (!(t.n_ > 0)) throw domain_error("n must be positive (n = " + fmt(t.n_) + ")");
    t.cells_ = c;
    return t;
}

ContingencyTable ContingencyTable::scaled_rows(double row_x, double row_nx) const {
    return from_cells({cells_.xy * row_x, cells_.x_ny * row_x, cells_.nx_y * row_nx, cells_.nx_ny * row_nx});
}

ContingencyTable ContingencyTable::scaled_columns(double col_y, double col_ny) const {
    return from_cells({cells_.xy * col_y, cells_.x_ny * col_ny, cells_.nx_y * col_y, cells_.nx_ny * col_ny});
}

ContingencyTable ContingencyTable::converse() const {
    return from_cells({cells_.xy, cells_.nx_y, cells_.x_ny, cells_.nx_ny});
}

ContingencyTable ContingencyTable::negated_consequent() const {
    return from_cells({cells_.x_ny, cells_.xy, cells_.nx_ny, cells_.nx_y});
}

ContingencyTable ContingencyTable::negated_antecedent() const {
    return from_cells({cells_.nx_y, cells_.nx_ny, cells_.xy, cells_.x_ny});
}

ContingencyTable ContingencyTable::negated_both() const {
    return from_cells({cells_.nx_ny, cells_.nx_y, cells_.x_ny, cells_.xy});
}

ContingencyTable ContingencyTable::contrapositive() const {
    return from_cells({cells_.nx_ny, cells_.x_ny, cells_.nx_y, cells_.xy});
}

FullTable derive_cells(const ContingencyTable& t) {
    FullTable f;
    const Cells& c = t.cells();
    f.n = t.n();
    f.n_xy = c.xy;
    f.n_x_ny = c.x_ny;
    f.n_nx_y = c.nx_y;
    f.n_nx_ny = c.nx_ny;
    f.n_x = c.xy + c.x_ny;
    f.n_y = c.xy + c.nx_y;
    f.n_nx = c.nx_y + c.nx_ny;
    f.n_ny = c.x_ny + c.nx_ny;
    f.p_xy = f.n_xy / f.n;
    f.p_x_ny = f.n_x_ny / f.n;
    f.p_nx_y = f.n_nx_y / f.n;
    f.p_nx_ny = f.n_nx_ny / f.n;
    f.p_x = f.n_x / f.n;
    f.p_y = f.n_y / f.n;
    f.p_nx = f.n_nx / f.n;
    f.p_ny = f.n_ny / f.n;
    return f;
}

TransactionSet::TransactionSet(std::vector<std::string> universe,
                               std::vector<std::vector<std::string>> records)
    : universe_(std::move(universe)) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < universe_.size(); ++i)
        if (!index.emplace(universe_[i], i).second)
            throw input_error("duplicate attribute in universe: " + universe_[i]);
    records_.reserve(records.size());
    for (const auto& r : records) {
        Bitset row(universe_.size());
        for (const auto& name : r) {
            auto it = index.find(name);
            if (it == index.end()) throw input_error("record attribute not in universe: " + name);
            row.set(it->second);
        }
        records_.push_back(std::move(row));
    }
}

TransactionSet TransactionSet::parse(std::istream& in) {
    std::vector<std::string> universe;
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<std::vector<std::string>> records;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        std::vector<std::string> rec;
        std::size_t pos = 0;
        while (pos < line.size()) {
            std::size_t sp = line.find(' ', pos);
            if (sp == std::string::npos) sp = line.size();
            if (sp == pos) throw input_error("empty attribute name (double space?) in: " + line);
            std::string name = line.substr(pos, sp - pos);
            if (seen.emplace(name, universe.size()).second) universe.push_back(name);
            rec.push_back(std::move(name));
            pos = sp + 1;
            if (sp + 1 == line.size() && sp < line.size()) throw input_error("trailing space in: " + line);
        }
        records.push_back(std::move(rec));
    }
    return TransactionSet(std::move(universe), std::move(records));
}

TransactionSet TransactionSet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open transaction file: " + path);
    return parse(in);
}

std::size_t TransactionSet::index_of(const std::string& name) const {
    auto it = std::find(universe_.begin(), universe_.end(), name);
    if (it == universe_.end()) throw input_error("unknown attribute: " + name);
    return static_cast<std::size_t>(it - universe_.begin());
}

ContingencyTable table_from_transactions(const TransactionSet& data, const RuleQuery& q) {
    if (q.antecedent.empty() || q.consequent.empty())
        throw input_error("antecedent and consequent must be non-empty");
    Bitset x(data.universe().size()), y(data.universe().size());
    for (const auto& a : q.antecedent) x.set(data.index_of(a));
    for (const auto& a : q.consequent) y.set(data.index_of(a));
    if (x.intersects(y)) throw input_error("antecedent and consequent overlap");
    if (data.size() == 0) throw domain_error("empty dataset");
    double n_x = 0, n_y = 0, n_xy = 0;
    for (const auto& r : data.records()) {
        bool hx = x.is_subset_of(r), hy = y.is_subset_of(r);
        n_x += hx;
        n_y += hy;
        n_xy += hx && hy;
    }
    return ContingencyTable(static_cast<double>(data.size()), n_x, n_y, n_xy);
}

RuleValidity is_valid_rule(const ContingencyTable& t, const RuleQuery& q) {
    if (t.n_x() == 0) throw domain_error("confidence undefined: n_x = 0");
    RuleValidity r;
    r.support = t.n_xy() / t.n();
    r.confidence = t.n_xy() / t.n_x();
    r.exact = t.n_xy() == t.n_x();
    r.valid = r.support >= q.minsupp && r.confidence >= q.minconf;
    return r;
}

}  // namespace fcaim
