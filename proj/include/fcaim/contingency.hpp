#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcaim/bitset.hpp"

namespace fcaim {

/// Input that cannot satisfy a mathematical precondition (infeasible table,
/// empty data set, undefined ratio).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (unknown names, bad syntax).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The four joint cells of a 2x2 table. Real-valued so that sampling points
/// such as the independence count n_x*n_y/n need not be integral.
struct Cells {
    double xy = 0;      // X and Y
    double x_ny = 0;    // X and not Y (counter-examples)
    double nx_y = 0;    // not X and Y
    double nx_ny = 0;   // neither
};

/// 2x2 contingency table of a rule X -> Y, parameterized by (n, n_x, n_y, n_xy).
class ContingencyTable {
public:
    /// Throws domain_error naming the violated inequality.
    ContingencyTable(double n, double n_x, double n_y, double n_xy);

    /// Builds the table from four non-negative joint cells.
    static ContingencyTable from_cells(const Cells& c);

    double n() const noexcept { return n_; }
    double n_x() const noexcept { return cells_.xy + cells_.x_ny; }
    double n_y() const noexcept { return cells_.xy + cells_.nx_y; }
    double n_xy() const noexcept { return cells_.xy; }
    const Cells& cells() const noexcept { return cells_; }

    /// Cell-wise multiplication: (xy, x_ny) by row_x and (nx_y, nx_ny) by row_nx.
    ContingencyTable scaled_rows(double row_x, double row_nx) const;
    /// Cell-wise multiplication: (xy, nx_y) by col_y and (x_ny, nx_ny) by col_ny.
    ContingencyTable scaled_columns(double col_y, double col_ny) const;
    ContingencyTable scaled(double k) const { return scaled_rows(k, k); }

    // Role transformations. Each returns the table of a related rule.
    ContingencyTable converse() const;              // Y -> X
    ContingencyTable negated_consequent() const;    // X -> not Y
    ContingencyTable negated_antecedent() const;    // not X -> Y
    ContingencyTable negated_both() const;          // not X -> not Y
    ContingencyTable contrapositive() const;        // not Y -> not X

private:
    ContingencyTable() = default;
    double n_ = 0;
    Cells cells_;
};

/// Every cell, marginal and probability of a table.
struct FullTable {
    double n = 0;
    double n_xy = 0, n_x_ny = 0, n_nx_y = 0, n_nx_ny = 0;
    double n_x = 0, n_y = 0, n_nx = 0, n_ny = 0;
    double p_xy = 0, p_x_ny = 0, p_nx_y = 0, p_nx_ny = 0;
    double p_x = 0, p_y = 0, p_nx = 0, p_ny = 0;
};

FullTable derive_cells(const ContingencyTable& t);

struct RuleQuery {
    std::vector<std::string> antecedent;
    std::vector<std::string> consequent;
    double minsupp = 0.0;
    double minconf = 0.0;
};

/// Records over a named attribute universe.
class TransactionSet {
public:
    TransactionSet() = default;
    TransactionSet(std::vector<std::string> universe, std::vector<std::vector<std::string>> records);

    /// One record per line, names separated by single spaces, '#' lines skipped.
    static TransactionSet parse(std::istream& in);
    static TransactionSet load(const std::string& path);

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    const std::vector<Bitset>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }

    /// Index of an attribute name; throws input_error when unknown.
    std::size_t index_of(const std::string& name) const;

private:
    std::vector<std::string> universe_;
    std::vector<Bitset> records_;
};

ContingencyTable table_from_transactions(const TransactionSet& data, const RuleQuery& q);

struct RuleValidity {
    bool valid = false;
    double support = 0;
    double confidence = 0;
    /// Confidence exactly 1: an exact rule (implication), otherwise approximate.
    bool exact = false;
};

/// Throws domain_error when n_x = 0 (confidence undefined).
RuleValidity is_valid_rule(const ContingencyTable& t, const RuleQuery& q);

}  // namespace fcaim
