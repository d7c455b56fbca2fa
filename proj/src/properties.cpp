#include "fcaim/properties.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fcaim/textio.hpp"

namespace fcaim {

namespace {

bool close(double u, double v, double eps) {
    return std::fabs(u - v) <= eps * std::max({1.0, std::fabs(u), std::fabs(v)});
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

Verdict undecided(int p, std::string why) { return {p, false, false, std::move(why)}; }
Verdict decided(int p, bool holds, std::string evidence) { return {p, true, holds, std::move(evidence)}; }

std::vector<ContingencyTable> all_symmetry_tables(const SamplingGrid& g) {
    auto out = interior_tables(g);
    for (auto s : {Situation::independence, Situation::implication, Situation::equilibrium}) {
        auto extra = situation_tables(g, s);
        out.insert(out.end(), extra.begin(), extra.end());
    }
    return out;
}

// "some table differs" properties (P3, P4).
Verdict exists_difference(int p, const MeasureExpr& m, const SamplingGrid& g,
                          const std::vector<ContingencyTable>& tables,
                          ContingencyTable (ContingencyTable::*transform)() const, const char* label) {
    std::size_t defined = 0;
    for (const auto& t : tables) {
        auto u = m.evaluate(t);
        auto v = m.evaluate((t.*transform)());
        if (!u.defined() || !v.defined()) continue;
        ++defined;
        if (!close(u.value, v.value, g.epsilon))
            return decided(p, true, std::string("m(X->Y) = ") + num(u.value) + " vs m(" + label + ") = " +
                                        num(v.value) + " at " + describe(t));
    }
    if (defined < g.min_samples) return undecided(p, "only " + std::to_string(defined) + " defined table pairs");
    return decided(p, false, std::string("m(X->Y) = m(") + label + ") on all " + std::to_string(defined) + " tables");
}

// "identity holds everywhere" properties (P5, P16, P17, P18).
Verdict identity_everywhere(int p, const MeasureExpr& m, const SamplingGrid& g,
                            const std::vector<ContingencyTable>& tables,
                            ContingencyTable (ContingencyTable::*transform)() const, double sign,
                            const char* label) {
    std::size_t defined = 0;
    for (const auto& t : tables) {
        auto u = m.evaluate(t);
        auto v = m.evaluate((t.*transform)());
        if (!u.defined() || !v.defined()) continue;
        ++defined;
        if (!close(u.value, sign * v.value, g.epsilon))
            return decided(p, false, std::string("m(X->Y) = ") + num(u.value) + " but m(" + label + ") = " +
                                         num(v.value) + " at " + describe(t));
    }
    if (defined < g.min_samples) return undecided(p, "only " + std::to_string(defined) + " defined table pairs");
    return decided(p, true, std::string("identity with ") + (sign < 0 ? "-" : "") + "m(" + label + ") on all " +
                                std::to_string(defined) + " tables");
}

// Checks a family of ordered sequences for monotone behaviour in the given
// direction (+1: non-decreasing, -1: non-increasing) with a strict step somewhere.
Verdict monotone(int p, const MeasureExpr& m, const SamplingGrid& g,
                 const std::vector<std::vector<ContingencyTable>>& sequences, int direction,
                 const char* what) {
    std::size_t steps = 0;
    std::string strict;
    for (const auto& seq : sequences) {
        double prev = 0;
        const ContingencyTable* prev_t = nullptr;  // null after an undefined point
        for (const auto& t : seq) {
            auto e = m.evaluate(t);
            if (!e.defined()) {
                prev_t = nullptr;
                continue;
            }
            if (prev_t) {
                ++steps;
                double delta = direction * (e.value - prev);
                double tol = g.epsilon * std::max({1.0, std::fabs(e.value), std::fabs(prev)});
                if (delta < -tol)
                    return decided(p, false, std::string("not monotone in ") + what + ": " + num(prev) + " at " +
                                                 describe(*prev_t) + " then " + num(e.value) + " at " + describe(t));
                if (delta > tol && strict.empty())
                    strict = num(prev) + " -> " + num(e.value) + " from " + describe(*prev_t) + " to " + describe(t);
            }
            prev = e.value;
            prev_t = &t;
        }
    }
    if (steps < g.min_samples) return undecided(p, "only " + std::to_string(steps) + " defined steps");
    if (strict.empty()) return decided(p, false, std::string("constant in ") + what);
    return decided(p, true, std::string("monotone in ") + what + ", strict step " + strict);
}

}  // namespace

void SamplingGrid::validate() const {
    if (totals.empty()) throw input_error("grid: totals must be non-empty");
    for (double n : totals)
        if (!(n > 0)) throw input_error("grid: totals must be positive");
    if (fractions.empty()) throw input_error("grid: fractions must be non-empty");
    for (double f : fractions)
        if (!(f > 0 && f < 1)) throw input_error("grid: fractions must lie in (0, 1)");
    if (interior_points < 3) throw input_error("grid: at least 3 interior points are required");
    if (scale_factors.empty()) throw input_error("grid: scale factors must be non-empty");
    for (double k : scale_factors)
        if (!(k > 0)) throw input_error("grid: scale factors must be positive");
    if (growth_factors.size() < 2) throw input_error("grid: at least 2 growth factors are required");
    for (std::size_t i = 0; i < growth_factors.size(); ++i)
        if (!(growth_factors[i] >= 1) || (i && !(growth_factors[i] > growth_factors[i - 1])))
            throw input_error("grid: growth factors must be >= 1 and strictly increasing");
    if (!(epsilon > 0)) throw input_error("grid: epsilon must be positive");
    if (!(shape_epsilon > 0)) throw input_error("grid: shape epsilon must be positive");
    if (!(discriminant_n > 0 && discriminant_base_n > 0)) throw input_error("grid: discriminant totals must be positive");
    if (!(discriminant_ratio > 0)) throw input_error("grid: discriminant ratio must be positive");
    if (min_samples < 1) throw input_error("grid: min samples must be >= 1");
}

std::string_view situation_name(Situation s) {
    switch (s) {
    case Situation::independence: return "independence";
    case Situation::implication: return "implication";
    case Situation::equilibrium: return "equilibrium";
    }
    return "?";
}

std::string describe(const ContingencyTable& t) {
    return "(n=" + num(t.n()) + ", n_x=" + num(t.n_x()) + ", n_y=" + num(t.n_y()) + ", n_xy=" + num(t.n_xy()) + ")";
}

std::vector<std::vector<ContingencyTable>> grid_lines(const SamplingGrid& g, double n) {
    std::vector<std::vector<ContingencyTable>> lines;
    for (double fx : g.fractions) {
        for (double fy : g.fractions) {
            double nx = fx * n, ny = fy * n;
            double lo = std::max(0.0, nx + ny - n), hi = std::min(nx, ny);
            if (!(hi > lo)) continue;
            std::vector<ContingencyTable> line;
            for (int i = 1; i <= g.interior_points; ++i)
                line.emplace_back(n, nx, ny, lo + (hi - lo) * i / (g.interior_points + 1));
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

std::vector<ContingencyTable> interior_tables(const SamplingGrid& g) {
    std::vector<ContingencyTable> out;
    for (double n : g.totals)
        for (auto& line : grid_lines(g, n)) out.insert(out.end(), line.begin(), line.end());
    return out;
}

std::vector<ContingencyTable> situation_tables(const SamplingGrid& g, Situation s) {
    std::vector<ContingencyTable> out;
    for (double n : g.totals) {
        for (double fx : g.fractions) {
            for (double fy : g.fractions) {
                double nx = fx * n, ny = fy * n;
                switch (s) {
                case Situation::independence: out.emplace_back(n, nx, ny, nx * ny / n); break;
                case Situation::implication:
                    if (nx <= ny) out.emplace_back(n, nx, ny, nx);
                    break;
                case Situation::equilibrium:
                    if (nx / 2 <= ny && nx / 2 >= nx + ny - n) out.emplace_back(n, nx, ny, nx / 2);
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<Verdict> check_symmetry_family(const MeasureExpr& m, const SamplingGrid& g) {
    auto tables = all_symmetry_tables(g);
    auto implication = situation_tables(g, Situation::implication);
    using CT = ContingencyTable;
    return {
        exists_difference(3, m, g, tables, &CT::converse, "Y->X"),
        exists_difference(4, m, g, tables, &CT::negated_consequent, "X->notY"),
        identity_everywhere(5, m, g, implication, &CT::contrapositive, 1.0, "notY->notX"),
        identity_everywhere(16, m, g, tables, &CT::negated_antecedent, -1.0, "notX->Y"),
        identity_everywhere(17, m, g, tables, &CT::negated_consequent, -1.0, "X->notY"),
        identity_everywhere(18, m, g, tables, &CT::negated_both, 1.0, "notX->notY"),
    };
}

std::vector<Verdict> check_monotonicity_family(const MeasureExpr& m, const SamplingGrid& g) {
    // P6: n_xy increasing along each line.
    std::vector<std::vector<ContingencyTable>> lines;
    for (double n : g.totals)
        for (auto& l : grid_lines(g, n)) lines.push_back(std::move(l));

    // P7: n grows with n_x, n_y, n_xy held.
    std::vector<std::vector<ContingencyTable>> growth;
    // P8: n_y grows with n, n_x, n_xy held.
    std::vector<std::vector<ContingencyTable>> consequent;
    for (const auto& t : interior_tables(g)) {
        std::vector<ContingencyTable> seq;
        for (double s : g.growth_factors) seq.emplace_back(t.n() * s, t.n_x(), t.n_y(), t.n_xy());
        growth.push_back(std::move(seq));

        double top = t.n() - t.n_x() + t.n_xy();
        double step = (top - t.n_y()) / 5;
        if (step > 0) {
            std::vector<ContingencyTable> up;
            for (int j = 0; j < 5; ++j) up.emplace_back(t.n(), t.n_x(), t.n_y() + j * step, t.n_xy());
            consequent.push_back(std::move(up));
        }
    }
    return {
        monotone(6, m, g, lines, +1, "n_xy"),
        monotone(7, m, g, growth, +1, "n"),
        monotone(8, m, g, consequent, -1, "n_y"),
    };
}

FixedValueResult check_fixed_value(const MeasureExpr& m, const SamplingGrid& g, Situation s) {
    int p = s == Situation::independence ? 9 : s == Situation::implication ? 10 : 11;
    double lo = INFINITY, hi = -INFINITY, sum = 0;
    std::size_t count = 0;
    const ContingencyTable* lo_t = nullptr;
    const ContingencyTable* hi_t = nullptr;
    auto tables = situation_tables(g, s);
    for (const auto& t : tables) {
        auto e = m.evaluate(t);
        if (!e.defined()) continue;
        ++count;
        sum += e.value;
        if (e.value < lo) lo = e.value, lo_t = &t;
        if (e.value > hi) hi = e.value, hi_t = &t;
    }
    std::string where(situation_name(s));
    if (count < g.min_samples)
        return {undecided(p, "only " + std::to_string(count) + " defined " + where + " samples"), std::nullopt};
    double mean = sum / static_cast<double>(count);
    if (hi - lo <= g.epsilon * std::max(1.0, std::fabs(mean)))
        return {decided(p, true, "value " + num(mean) + " on all " + std::to_string(count) + " " + where + " samples"),
                mean};
    return {decided(p, false, where + " values range from " + num(lo) + " at " + describe(*lo_t) + " to " + num(hi) +
                                  " at " + describe(*hi_t)),
            std::nullopt};
}

ZoneResult check_zones(const MeasureExpr& m, const SamplingGrid& g, std::optional<double> independence_value) {
    ZoneResult r;
    if (!independence_value) {
        r.attraction = decided(12, false, "forced to 0: no fixed value at independence (P9 = 0)");
        r.repulsion = decided(13, false, "forced to 0: no fixed value at independence (P9 = 0)");
        return r;
    }
    const double a = *independence_value;
    const double tol = g.epsilon * std::max(1.0, std::fabs(a));

    struct Side {
        std::size_t count = 0;
        bool all_above = true, all_below = true;
        std::string witness;
        int sign() const { return count == 0 ? 0 : all_above ? 1 : all_below ? -1 : 0; }
    };
    Side att, rep;
    for (const auto& t : interior_tables(g)) {
        double lift_gap = t.n_xy() * t.n() - t.n_x() * t.n_y();
        if (std::fabs(lift_gap) <= 1e-9 * t.n() * t.n()) continue;
        Side& side = lift_gap > 0 ? att : rep;
        auto e = m.evaluate(t);
        if (!e.defined()) continue;
        ++side.count;
        bool above = e.value > a + tol, below = e.value < a - tol;
        if ((!above || !below) && side.witness.empty() && !(above && side.all_above) && !(below && side.all_below))
            side.witness = num(e.value) + " at " + describe(t);
        side.all_above = side.all_above && above;
        side.all_below = side.all_below && below;
    }
    bool att_ok = att.count >= g.min_samples, rep_ok = rep.count >= g.min_samples;
    int sa = att_ok ? att.sign() : 0, sr = rep_ok ? rep.sign() : 0;
    r.inverted = sa == -1 && sr == 1;
    bool p12 = (sa == 1 && sr != 1) || r.inverted;
    bool p13 = (sr == -1 && sa != -1) || r.inverted;

    auto explain = [&](const Side& s, int sign, const char* zone) {
        std::string what = sign > 0 ? "above" : sign < 0 ? "below" : "on both sides of";
        std::string out = std::string(zone) + " values " + what + " a = " + num(a) + " (" + std::to_string(s.count) +
                          " samples)";
        if (sign == 0 && !s.witness.empty()) out += ", e.g. " + s.witness;
        return out;
    };
    std::string inv = r.inverted ? " [inverted orientation]" : "";
    r.attraction = att_ok ? decided(12, p12, explain(att, sa, "attraction") + inv)
                          : undecided(12, "only " + std::to_string(att.count) + " defined attraction samples");
    r.repulsion = rep_ok ? decided(13, p13, explain(rep, sr, "repulsion") + inv)
                         : undecided(13, "only " + std::to_string(rep.count) + " defined repulsion samples");
    return r;
}

ShapeResult check_shape(const MeasureExpr& m, const SamplingGrid& g) {
    std::size_t lines_used = 0, concave = 0, linear = 0, convex = 0, total = 0;
    std::string first_mixed;
    for (double n : g.totals) {
        for (const auto& line : grid_lines(g, n)) {
            // Longest run of consecutive defined points.
            std::vector<double> best, cur;
            for (const auto& t : line) {
                auto e = m.evaluate(t);
                if (e.defined()) {
                    cur.push_back(e.value);
                    if (cur.size() > best.size()) best = cur;
                } else {
                    cur.clear();
                }
            }
            if (best.size() < 5) continue;
            ++lines_used;
            auto [mn, mx] = std::minmax_element(best.begin(), best.end());
            double tol = g.shape_epsilon * (*mx - *mn);
            for (std::size_t i = 1; i + 1 < best.size(); ++i) {
                double d2 = best[i - 1] - 2 * best[i] + best[i + 1];
                ++total;
                if (std::fabs(d2) <= tol)
                    ++linear;
                else if (d2 <= -tol)
                    ++concave;
                else
                    ++convex;
            }
            if (first_mixed.empty() && concave && convex)
                first_mixed = "curvature changes sign by " + describe(line.front());
        }
    }
    if (lines_used == 0) return {false, Shape::mixed, "no line with 5 consecutive defined points"};
    std::string stats = std::to_string(total) + " second differences over " + std::to_string(lines_used) +
                        " lines: " + std::to_string(concave) + " concave, " + std::to_string(linear) + " flat, " +
                        std::to_string(convex) + " convex";
    Shape s = Shape::mixed;
    if (concave == total)
        s = Shape::concave;
    else if (linear == total)
        s = Shape::linear;
    else if (convex == total)
        s = Shape::convex;
    return {true, s, stats};
}

std::vector<Verdict> check_invariance(const MeasureExpr& m, const SamplingGrid& g) {
    auto tables = interior_tables(g);
    std::size_t p15_count = 0, p20_count = 0;
    std::string p15_fail, p20_fail;
    for (const auto& t : tables) {
        auto base = m.evaluate(t);
        if (!base.defined()) continue;
        for (double k1 : g.scale_factors) {
            for (double k2 : g.scale_factors) {
                if (!p15_fail.empty()) break;
                // Scheme 1: rows (X: k1, notX: k2). Scheme 2: columns (notY: k1, Y: k2).
                for (int scheme = 0; scheme < 2; ++scheme) {
                    auto s = scheme == 0 ? t.scaled_rows(k1, k2) : t.scaled_columns(k2, k1);
                    auto e = m.evaluate(s);
                    if (!e.defined()) continue;
                    ++p15_count;
                    if (!close(base.value, e.value, g.epsilon)) {
                        p15_fail = "scheme " + std::to_string(scheme + 1) + " K1=" + num(k1) + " K2=" + num(k2) +
                                   " moves " + num(base.value) + " to " + num(e.value) + " at " + describe(t);
                        break;
                    }
                }
            }
        }
        for (double k : g.scale_factors) {
            if (!p20_fail.empty()) break;
            auto e = m.evaluate(t.scaled(k));
            if (!e.defined()) continue;
            ++p20_count;
            if (!close(base.value, e.value, g.epsilon))
                p20_fail = "k=" + num(k) + " moves " + num(base.value) + " to " + num(e.value) + " at " + describe(t);
        }
    }
    auto make = [&](int p, std::size_t count, const std::string& fail, const char* ok) {
        if (!fail.empty()) return decided(p, false, fail);
        if (count < g.min_samples) return undecided(p, "only " + std::to_string(count) + " defined dilations");
        return decided(p, true, std::string(ok) + " on " + std::to_string(count) + " dilations");
    };
    return {make(15, p15_count, p15_fail, "invariant under K1/K2 row and column dilation"),
            make(20, p20_count, p20_fail, "invariant under uniform dilation")};
}

Verdict check_discriminant(const MeasureExpr& m, const SamplingGrid& g) {
    auto small = grid_lines(g, g.discriminant_base_n);
    auto large = grid_lines(g, g.discriminant_n);
    std::size_t compared = 0;
    double worst_ratio = INFINITY;
    std::string worst;
    auto spread = [&](const std::vector<ContingencyTable>& line, double& maxabs) -> std::optional<double> {
        double lo = INFINITY, hi = -INFINITY;
        std::size_t count = 0;
        maxabs = 0;
        for (const auto& t : line) {
            auto e = m.evaluate(t);
            if (!e.defined()) continue;
            ++count;
            lo = std::min(lo, e.value);
            hi = std::max(hi, e.value);
            maxabs = std::max(maxabs, std::fabs(e.value));
        }
        if (count < 2) return std::nullopt;
        return hi - lo;
    };
    for (std::size_t i = 0; i < small.size() && i < large.size(); ++i) {
        double abs_small = 0, abs_large = 0;
        auto s = spread(small[i], abs_small);
        auto l = spread(large[i], abs_large);
        if (!s || !l) continue;
        ++compared;
        double ratio = *s > g.epsilon * std::max(1.0, abs_small) ? *l / *s : 0.0;
        if (ratio < worst_ratio) {
            worst_ratio = ratio;
            worst = "spread " + num(*l) + " at n=" + num(g.discriminant_n) + " vs " + num(*s) + " at n=" +
                    num(g.discriminant_base_n) + " on line " + describe(small[i].front());
        }
    }
    if (compared == 0) return undecided(21, "no line with 2 defined points at both totals");
    bool ok = worst_ratio >= g.discriminant_ratio;
    return decided(21, ok, (ok ? "smallest ratio " : "collapses: ratio ") + num(worst_ratio) + ", " + worst);
}

PropertyVector evaluate_all(const MeasureDef& def, const SamplingGrid& g) {
    if (!def.computable()) {
        PropertyVector v = *def.declared;
        v.set(19, def.random_antecedent);
        return v;
    }
    const MeasureExpr& m = *def.expr;
    PropertyVector v;
    auto apply = [&](const Verdict& r) {
        v.set(r.property, r.decided && r.holds);
        v.evidence[property_slot(r.property)] = r.evidence;
        if (!r.decided) v.undecided.push_back({r.property, r.evidence});
    };
    for (const auto& r : check_symmetry_family(m, g)) apply(r);
    for (const auto& r : check_monotonicity_family(m, g)) apply(r);

    auto ind = check_fixed_value(m, g, Situation::independence);
    auto imp = check_fixed_value(m, g, Situation::implication);
    auto eq = check_fixed_value(m, g, Situation::equilibrium);
    apply(ind.verdict);
    apply(imp.verdict);
    apply(eq.verdict);
    v.independence_value = ind.value;
    v.implication_value = imp.value;
    v.equilibrium_value = eq.value;

    auto zones = check_zones(m, g, v.get(9) ? ind.value : std::nullopt);
    apply(zones.attraction);
    apply(zones.repulsion);
    v.zones_inverted = zones.inverted;

    auto shape = check_shape(m, g);
    v.shape = shape.shape;
    v.evidence[property_slot(14)] = std::string(shape_name(shape.shape)) + ": " + shape.evidence;
    if (!shape.decided) v.undecided.push_back({14, shape.evidence});

    for (const auto& r : check_invariance(m, g)) apply(r);
    apply(check_discriminant(m, g));

    v.set(19, def.random_antecedent);
    v.evidence[property_slot(19)] = def.random_antecedent ? "declared: random antecedent" : "declared: fixed antecedent";

    if (!v.get(4) && v.get(17)) {
        v.set(17, false);
        v.evidence[property_slot(17)] += " [forced to 0 by P4 = 0]";
    }
    return v;
}

bool PropertyMatrix::at(std::size_t row, const std::string& column) const {
    const auto& cols = matrix_columns();
    auto it = std::find(cols.begin(), cols.end(), column);
    if (it == cols.end()) throw input_error("unknown matrix column '" + column + "'");
    return rows.at(row)[static_cast<std::size_t>(it - cols.begin())];
}

void PropertyMatrix::write_csv(std::ostream& out) const {
    std::vector<std::string> header{"measure"};
    for (const auto& c : matrix_columns()) header.push_back(c);
    write_csv_row(out, header);
    for (std::size_t i = 0; i < measures.size(); ++i) {
        std::vector<std::string> cells{measures[i]};
        for (bool b : rows[i]) cells.push_back(b ? "1" : "0");
        write_csv_row(out, cells);
    }
}

PropertyMatrix PropertyMatrix::read_csv(std::istream& in) {
    auto table = read_csv_table(in);
    if (table.empty()) throw input_error("matrix CSV: missing header row");
    const auto& header = table.front();
    if (header.empty() || header[0] != "measure") throw input_error("matrix CSV: first column must be 'measure'");
    std::vector<int> column_of(matrix_columns().size(), -1);
    for (std::size_t j = 1; j < header.size(); ++j) {
        const auto& cols = matrix_columns();
        auto it = std::find(cols.begin(), cols.end(), header[j]);
        if (it == cols.end()) throw input_error("matrix CSV: unknown column '" + header[j] + "'");
        auto k = static_cast<std::size_t>(it - cols.begin());
        if (column_of[k] >= 0) throw input_error("matrix CSV: duplicate column '" + header[j] + "'");
        column_of[k] = static_cast<int>(j);
    }
    for (std::size_t k = 0; k < column_of.size(); ++k)
        if (column_of[k] < 0) throw input_error("matrix CSV: missing column " + matrix_columns()[k]);
    PropertyMatrix m;
    for (std::size_t i = 1; i < table.size(); ++i) {
        const auto& r = table[i];
        if (r.size() != header.size())
            throw input_error("matrix CSV: row " + std::to_string(i + 1) + " has " + std::to_string(r.size()) +
                              " cells, expected " + std::to_string(header.size()));
        std::vector<bool> bits(column_of.size());
        for (std::size_t k = 0; k < column_of.size(); ++k) {
            const auto& cell = r[static_cast<std::size_t>(column_of[k])];
            if (cell != "0" && cell != "1")
                throw input_error("matrix CSV: row " + std::to_string(i + 1) + " column " + matrix_columns()[k] +
                                  " must be 0 or 1, got '" + cell + "'");
            bits[k] = cell == "1";
        }
        if (std::find(m.measures.begin(), m.measures.end(), r[0]) != m.measures.end())
            throw input_error("matrix CSV: duplicate measure '" + r[0] + "'");
        m.measures.push_back(r[0]);
        m.rows.push_back(std::move(bits));
    }
    return m;
}

void PropertyMatrix::write_evidence(std::ostream& out) const {
    for (std::size_t i = 0; i < vectors.size() && i < measures.size(); ++i) {
        const auto& v = vectors[i];
        for (int p = kFirstProperty; p <= kLastProperty; ++p) {
            std::string value = p == 14 ? std::string(shape_name(v.shape)) : (v.get(p) ? "1" : "0");
            out << measures[i] << "\tP" << p << "\t" << value << "\t" << v.evidence[property_slot(p)] << "\n";
        }
    }
}

void PropertyMatrix::write_undecided(std::ostream& out) const {
    for (std::size_t i = 0; i < vectors.size() && i < measures.size(); ++i)
        for (const auto& u : vectors[i].undecided)
            out << measures[i] << "\tP" << u.property << "\t" << u.reason << "\n";
}

PropertyMatrix build_matrix(const Catalog& c, const SamplingGrid& g) {
    g.validate();
    PropertyMatrix m;
    for (const auto& def : c.entries()) {
        m.measures.push_back(def.name);
        m.vectors.push_back(evaluate_all(def, g));
        m.rows.push_back(matrix_row(m.vectors.back()));
    }
    return m;
}

}  // namespace fcaim
