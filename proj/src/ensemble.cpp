#include "stumpbounds/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "stumpbounds/csv.hpp"
#include "stumpbounds/errors.hpp"
#include "stumpbounds/kernels.hpp"

namespace stumpbounds {

ConvexCombination ConvexCombination::normalized(std::vector<WeightedStump> terms) {
    double total = 0.0;
    for (const auto& t : terms) total += std::abs(t.weight);
    if (!(total > 0.0)) throw NumericError("cannot normalize an all-zero combination");
    ConvexCombination c;
    c.terms_ = std::move(terms);
    for (auto& t : c.terms_) t.weight /= total;
    return c;
}

double ConvexCombination::value(std::span<const double> x) const {
    double f = 0.0;
    for (const auto& t : terms_) f += t.weight * t.stump.predict(x);
    return f;
}

double ConvexCombination::total_abs_weight() const {
    double total = 0.0;
    for (const auto& t : terms_) total += std::abs(t.weight);
    return total;
}

bool ConvexCombination::all_one_dimensional() const {
    for (const auto& t : terms_)
        if (t.stump.feature != 0) return false;
    return true;
}

void ConvexCombination::save(const std::string& path) const {
    CsvWriter w(path);
    w.write_row({"weight", "feature", "threshold", "orientation"});
    for (const auto& t : terms_)
        w.write_row({format_number(t.weight), std::to_string(t.stump.feature),
                     format_number(t.stump.threshold),
                     orientation_name(t.stump.orient)});
}

ConvexCombination ConvexCombination::load(const std::string& path) {
    CsvTable table = read_csv(path);
    if (table.rows.empty()) throw DataError(path + ": no rows");
    std::vector<WeightedStump> terms;
    for (std::size_t r = 1; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != 4)
            throw DataError(path + ": row " + std::to_string(r + 1) +
                            ": expected weight,feature,threshold,orientation");
        WeightedStump t;
        t.weight = std::stod(row[0]);
        t.stump.feature = std::stoi(row[1]);
        t.stump.threshold = std::stod(row[2]);
        t.stump.orient = orientation_from_name(row[3]);
        terms.push_back(t);
    }
    return normalized(std::move(terms));
}

ConvexCombination TrainingTrace::combination_at(std::size_t t) const {
    if (t < 1 || t > rounds_.size())
        throw ConfigError("round index out of range");
    std::vector<WeightedStump> terms;
    terms.reserve(t);
    for (std::size_t s = 0; s < t; ++s)
        terms.push_back({rounds_[s].weight, rounds_[s].stump});
    return ConvexCombination::normalized(std::move(terms));
}

ConvexCombination TrainingTrace::final_combination() const {
    return combination_at(rounds_.size());
}

void TrainingTrace::save(const std::string& trace_path,
                         const std::string& stumps_path) const {
    CsvWriter tr(trace_path);
    tr.write_row({"round", "eps", "beta", "weight"});
    for (const auto& r : rounds_)
        tr.write_row({std::to_string(r.round), format_number(r.eps),
                      format_number(r.beta), format_number(r.weight)});
    CsvWriter st(stumps_path);
    for (const auto& r : rounds_)
        st.write_row({std::to_string(r.stump.feature),
                      format_number(r.stump.threshold),
                      orientation_name(r.stump.orient)});
}

TrainingTrace TrainingTrace::load(const std::string& trace_path,
                                  const std::string& stumps_path) {
    CsvTable tr = read_csv(trace_path);
    CsvTable st = read_csv(stumps_path);
    if (tr.rows.size() < 2) throw DataError(trace_path + ": no rounds");
    if (st.rows.size() + 1 != tr.rows.size())
        throw DataError(stumps_path + ": stump count does not match trace");
    std::vector<TraceRound> rounds;
    for (std::size_t r = 1; r < tr.rows.size(); ++r) {
        const auto& row = tr.rows[r];
        const auto& srow = st.rows[r - 1];
        if (row.size() != 4 || srow.size() != 3)
            throw DataError(trace_path + ": malformed row " + std::to_string(r + 1));
        TraceRound t;
        t.round = std::stoi(row[0]);
        t.eps = std::stod(row[1]);
        t.beta = std::stod(row[2]);
        t.weight = std::stod(row[3]);
        t.stump.feature = std::stoi(srow[0]);
        t.stump.threshold = std::stod(srow[1]);
        t.stump.orient = orientation_from_name(srow[2]);
        rounds.push_back(t);
    }
    return TrainingTrace(std::move(rounds), StopReason::Completed);
}

TrainingTrace adaboost(const LabeledDataset& ds, int rounds) {
    if (rounds < 1) throw ConfigError("adaboost rounds must be >= 1");
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < ds.size(); ++i)
        (ds.y(i) == 1 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg)
        throw ConfigError("adaboost requires both labels in the training set");

    const std::size_t n = ds.size();
    const auto order = kernels::FeatureOrder::build(ds);
    std::vector<double> dist(n, 1.0 / static_cast<double>(n));
    std::vector<TraceRound> trace;
    trace.reserve(rounds);
    StopReason reason = StopReason::Completed;

    for (int t = 1; t <= rounds; ++t) {
        TraceRound rec;
        rec.round = t;
        rec.dist_sum = 0.0;
        for (double w : dist) rec.dist_sum += w;

        const TrainedStump learned = kernels::best_stump_parallel(ds, dist, order);
        rec.stump = learned.stump;
        rec.eps = learned.weighted_error;
        if (rec.eps >= 0.5) {
            reason = StopReason::WeakLearnerFailed;
            break;
        }
        if (rec.eps <= 0.0) {
            rec.eps = 1e-10;
            rec.eps_clamped = true;
        }
        rec.beta = rec.eps / (1.0 - rec.eps);
        rec.weight = std::log(1.0 / rec.beta);

        // D_{t+1}(i) = D_t(i)/Z * (1 + (beta - 1) * 1{h(X_i) = Y_i}):
        // correct examples scale by beta, mistakes keep their weight.
        double z = 0.0;
        std::vector<char> correct(n);
        for (std::size_t i = 0; i < n; ++i) {
            correct[i] = rec.stump.predict(ds.row(i)) == ds.y(i);
            if (correct[i]) dist[i] *= rec.beta;
            z += dist[i];
        }
        double miscl = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dist[i] /= z;
            if (!correct[i]) miscl += dist[i];
        }
        rec.miscl_mass_after = miscl;
        trace.push_back(rec);
    }
    if (trace.empty())
        throw NumericError("adaboost: first stump already has weighted error >= 1/2");
    return TrainingTrace(std::move(trace), reason);
}

TrainingTrace bagging(const LabeledDataset& ds, int rounds, const Rng& rng) {
    if (rounds < 1) throw ConfigError("bagging rounds must be >= 1");
    std::vector<TraceRound> trace;
    trace.reserve(rounds);
    for (int t = 1; t <= rounds; ++t) {
        Rng round_rng = rng.child("bagging-round", static_cast<std::uint64_t>(t));
        const LabeledDataset sample = bootstrap(ds, round_rng);
        const std::vector<double> uniform(sample.size(), 1.0 / static_cast<double>(sample.size()));
        const auto order = kernels::FeatureOrder::build(sample);
        const TrainedStump learned = kernels::best_stump_parallel(sample, uniform, order);

        TraceRound rec;
        rec.round = t;
        rec.stump = learned.stump;
        rec.eps = learned.weighted_error;
        rec.beta = rec.eps / (1.0 - rec.eps);
        rec.weight = 1.0;  // majority vote
        rec.dist_sum = 1.0;
        trace.push_back(rec);
    }
    return TrainingTrace(std::move(trace), StopReason::Completed);
}

Evaluation evaluate(const ConvexCombination& f, const LabeledDataset& ds) {
    std::vector<Stump> stumps;
    std::vector<double> weights;
    stumps.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        stumps.push_back(t.stump);
        weights.push_back(t.weight);
        if (t.stump.feature < 0 || static_cast<std::size_t>(t.stump.feature) >= ds.dim())
            throw NumericError("combination references a feature outside the dataset");
    }
    Evaluation ev;
    ev.margins.resize(ds.size());
    kernels::margins_parallel(ds, stumps, weights, ev.margins);
    std::size_t wrong = 0;
    for (double m : ev.margins)
        if (m <= 0.0) ++wrong;
    ev.zero_one_error = static_cast<double>(wrong) / static_cast<double>(ds.size());
    return ev;
}

std::vector<MarginSegment> exact_margin_segments(const ConvexCombination& f,
                                                 const IntervalsConcept& target_concept) {
    if (!f.all_one_dimensional())
        throw NumericError("exact oracle requires 1-D stumps only");

    std::vector<double> cuts{0.0, 1.0};
    for (const auto& t : f.terms()) {
        const double c = t.stump.threshold;
        if (c > 0.0 && c < 1.0) cuts.push_back(c);
    }
    for (const auto& iv : target_concept.intervals()) {
        if (iv.lo > 0.0 && iv.lo < 1.0) cuts.push_back(iv.lo);
        if (iv.hi > 0.0 && iv.hi < 1.0) cuts.push_back(iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // f and f0 are both constant strictly between consecutive cuts; endpoints
    // carry no Lebesgue mass.
    std::vector<MarginSegment> segs;
    segs.reserve(cuts.size());
    double point[1];
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double mid = 0.5 * (cuts[s] + cuts[s + 1]);
        point[0] = mid;
        const double margin = target_concept.label(mid) * f.value(point);
        segs.push_back({margin, cuts[s + 1] - cuts[s]});
    }
    std::sort(segs.begin(), segs.end(),
              [](const MarginSegment& a, const MarginSegment& b) {
                  return a.value < b.value;
              });
    return segs;
}

double exact_oracle_1d(const ConvexCombination& f,
                       const IntervalsConcept& target_concept, double delta) {
    if (delta < 0.0) throw ConfigError("oracle delta must be >= 0");
    double mass = 0.0;
    for (const auto& seg : exact_margin_segments(f, target_concept))
        if (seg.value <= delta) mass += seg.length;
    return mass;
}

}  // namespace stumpbounds
