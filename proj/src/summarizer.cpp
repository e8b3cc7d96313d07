#include "fuzzquant/summarizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzquant/errors.hpp"

namespace fq {

std::string SummaryStatement::quantifier_text() const {
    std::string out;
    for (std::size_t i = 0; i < quantifiers.size(); ++i) {
        if (i) out += '+';
        out += quantifiers[i];
    }
    return out;
}

EvaluationMatrix build_matrix(std::span<const double> values, const LinguisticVariable& lv,
                              const ProportionalPartition& pp,
                              const FuzzificationMethod& method, std::string data_id) {
    if (values.empty()) throw ArgumentError("evaluation matrix needs a nonempty dataset");

    EvaluationMatrix m;
    m.method = method.label();
    m.data_id = std::move(data_id);
    for (const auto& l : lv.labels()) m.row_labels.push_back(l.name);
    for (const auto& c : pp.members()) m.col_labels.push_back(c.name);

    std::vector<FuzzifiedQuantifier> fqs;
    fqs.reserve(pp.size());
    for (const auto& member : pp.members())
        fqs.push_back(fuzzify(q_prop_unary(member.fn), method));

    m.cells.resize(lv.labels().size());
    for (std::size_t j = 0; j < lv.labels().size(); ++j) {
        const FuzzySet x = fuzzify_values(values, lv.labels()[j].fn);
        m.cells[j].resize(pp.size());
        for (std::size_t i = 0; i < pp.size(); ++i) m.cells[j][i] = fqs[i]({x});
    }
    return m;
}

BestSingleResult best_single(const EvaluationMatrix& m, double tau, double margin) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw ArgumentError("tau must lie in [0,1]");
    if (!(margin >= 0.0)) throw ArgumentError("margin must be nonnegative");
    if (m.rows() == 0 || m.cols() == 0) throw ArgumentError("matrix must be nonempty");

    bool have_best = false;
    std::size_t bj = 0, bi = 0;
    bool have_runner = false;
    std::size_t rj = 0, ri = 0;
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) {
            const double d = m.cells[j][i];
            if (!have_best || d > m.cells[bj][bi]) {
                if (have_best) {
                    rj = bj;
                    ri = bi;
                    have_runner = true;
                }
                bj = j;
                bi = i;
                have_best = true;
            } else if (!have_runner || d > m.cells[rj][ri]) {
                rj = j;
                ri = i;
                have_runner = true;
            }
        }

    BestSingleResult out;
    out.best = {m.col_labels[bi], m.row_labels[bj], m.cells[bj][bi]};
    if (have_runner) out.runner_up = CellRef{m.col_labels[ri], m.row_labels[rj], m.cells[rj][ri]};
    const double lead = have_runner ? out.best.degree - out.runner_up->degree
                                    : std::numeric_limits<double>::infinity();
    out.adequate = out.best.degree >= tau && lead >= margin;
    return out;
}

std::vector<MergedCell> merge_adjacent(std::span<const double> row, double tau_merge) {
    std::vector<MergedCell> out;
    std::size_t i = 0;
    const std::size_t n = row.size();
    while (i < n) {
        if (row[i] >= tau_merge) {
            std::size_t j = i;
            while (j + 1 < n && row[j + 1] >= tau_merge) ++j;
            if (j > i) {
                double sum = 0.0;
                for (std::size_t k = i; k <= j; ++k) sum += row[k];
                out.push_back({i, j, std::min(1.0, sum)});
                i = j + 1;
                continue;
            }
        }
        out.push_back({i, i, row[i]});
        ++i;
    }
    return out;
}

SemiFuzzyQuantifier merged_partition_quantifier(const ProportionalPartition& pp,
                                                std::size_t first, std::size_t last) {
    if (first > last || last >= pp.size())
        throw ArgumentError("merged span out of partition range");
    std::vector<FuzzyNumber> fns;
    std::string name;
    for (std::size_t i = first; i <= last; ++i) {
        fns.push_back(pp[i].fn);
        if (i > first) name += '+';
        name += pp[i].name;
    }
    return q_prop_unary_map(std::move(name), [fns](double r) {
        double sum = 0.0;
        for (const auto& fn : fns) sum += fn(r);
        return std::min(1.0, sum);
    });
}

std::vector<SummaryStatement> greedy_extract(const EvaluationMatrix& m,
                                             const GreedyParams& params) {
    if (!(params.tau >= 0.0 && params.tau <= 1.0))
        throw ArgumentError("tau must lie in [0,1]");

    struct Ranked {
        SummaryStatement statement;
        std::size_t label_index;
        std::size_t strength;  // highest member column of the chosen cell
    };
    std::vector<Ranked> picked;

    for (std::size_t j = 0; j < m.rows(); ++j) {
        std::vector<MergedCell> cells;
        if (params.merge) {
            cells = merge_adjacent(m.cells[j], params.tau_merge);
        } else {
            cells.reserve(m.cols());
            for (std::size_t i = 0; i < m.cols(); ++i) cells.push_back({i, i, m.cells[j][i]});
        }

        std::size_t best = 0;
        for (std::size_t i = 1; i < cells.size(); ++i)
            if (cells[i].degree > cells[best].degree) best = i;

        const MergedCell& cell = cells[best];
        if (cell.degree < params.tau) continue;
        if (params.suppress_bottom && !cell.merged() && cell.first == 0) continue;

        SummaryStatement s;
        for (std::size_t i = cell.first; i <= cell.last; ++i)
            s.quantifiers.push_back(m.col_labels[i]);
        s.label = m.row_labels[j];
        s.degree = cell.degree;
        s.merged = cell.merged();
        picked.push_back({std::move(s), j, cell.last});
    }

    std::sort(picked.begin(), picked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.statement.degree != b.statement.degree)
            return a.statement.degree > b.statement.degree;
        if (a.strength != b.strength) return a.strength > b.strength;
        return a.label_index < b.label_index;
    });

    std::vector<SummaryStatement> out;
    out.reserve(picked.size());
    for (auto& r : picked) out.push_back(std::move(r.statement));
    return out;
}

RateSearchResult rate_search(const FuzzySet& x1, const FuzzySet& x2, double delta_max,
                             double step, const FuzzificationMethod& method) {
    if (!(delta_max > 0.0 && delta_max <= 1.0))
        throw ArgumentError("delta_max must lie in (0,1]");
    if (!(step > 0.0 && step <= delta_max))
        throw ArgumentError("step must lie in (0, delta_max]");
    if (!same_base(x1.base(), x2.base()))
        throw ArgumentError("rate search arguments must share one base set");

    const auto count = static_cast<long>(std::floor((1.0 - delta_max) / step + 1e-9));
    RateSearchResult best{0.0, 0.0, -1.0, step, false};
    for (long k = 0; k <= count; ++k) {
        const double h = static_cast<double>(k) * step;
        const double r2 = std::min(1.0, h + delta_max);
        const double degree = fuzzify(q_rate(h, r2), method)({x1, x2});
        if (degree > best.degree) {
            best.r1 = h;
            best.r2 = r2;
            best.degree = degree;
        }
    }
    best.all_zero = best.degree == 0.0;
    return best;
}

}  // namespace fq
