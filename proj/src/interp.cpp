#include "fermat/interp.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fermat/error.hpp"

namespace fermat {

const char* library_version() { return FERMAT_VERSION; }

RankKernel rank_kernel(const ConditionMatrix& mat) {
    const int order = lcm_order(mat.root_order, common_order(mat.rows));
    RowReducer rr(mat.ncols, order);
    for (const auto& row : mat.rows) {
        rr.add_row(row);
        if (rr.full()) break;
    }
    RankKernel out;
    out.rank = rr.rank();
    const MonomialIndex index(monomial_basis(mat.ambient + 1, mat.degree));
    for (const auto& v : rr.kernel_basis()) out.kernel.push_back(MultiPoly::from_vector(v, index, mat.ambient + 1));
    return out;
}

bool kernel_is_sound(const ConditionMatrix& mat, const std::vector<MultiPoly>& kernel) {
    const MonomialIndex index(monomial_basis(mat.ambient + 1, mat.degree));
    for (const auto& f : kernel) {
        const auto v = f.to_vector(index);
        for (const auto& row : mat.rows)
            if (!dot(row, v).is_zero()) return false;
    }
    return true;
}

std::size_t system_dimension(const FatScheme& Z, int d) {
    const auto mat = conditions_rows(Z, d);
    return mat.ncols - matrix_rank(mat.rows, mat.ncols, lcm_order(mat.root_order, common_order(mat.rows)));
}

std::vector<std::size_t> hilbert_function(const FatScheme& Z, int d_max) {
    if (d_max < 0) throw std::invalid_argument("hilbert_function: d_max must be >= 0");
    std::vector<std::size_t> out;
    for (int d = 0; d <= d_max; ++d) {
        const auto mat = conditions_rows(Z, d);
        out.push_back(matrix_rank(mat.rows, mat.ncols, lcm_order(mat.root_order, common_order(mat.rows))));
    }
    return out;
}

LinearSystem::LinearSystem(const FatScheme& Z, int d)
    : ambient_(Z.ambient), degree_(d), order_(Z.root_order), index_(monomial_basis(Z.ambient + 1, d)),
      span_(index_.size(), Z.root_order) {
    const auto mat = conditions_rows(Z, d);
    order_ = lcm_order(order_, common_order(mat.rows));
    RowReducer rr(mat.ncols, order_);
    for (const auto& row : mat.rows) {
        rr.add_row(row);
        if (rr.full()) break;
    }
    basis_ = rr.kernel_basis();
    span_ = RowReducer(index_.size(), order_);
    for (const auto& v : basis_) span_.add_row(v);
}

std::vector<MultiPoly> LinearSystem::polynomials() const {
    std::vector<MultiPoly> out;
    for (const auto& v : basis_) out.push_back(MultiPoly::from_vector(v, index_, ambient_ + 1));
    return out;
}

std::size_t LinearSystem::restricted_dimension(const CycloMatrix& rows) const {
    if (basis_.empty()) return 0;
    CycloMatrix reduced;
    reduced.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Cyclo> r;
        r.reserve(basis_.size());
        bool nonzero = false;
        for (const auto& b : basis_) {
            r.push_back(dot(row, b));
            nonzero = nonzero || !r.back().is_zero();
        }
        if (nonzero) reduced.push_back(std::move(r));
    }
    return basis_.size() - matrix_rank(reduced, basis_.size(), lcm_order(order_, common_order(reduced)));
}

bool LinearSystem::contains(const MultiPoly& f) const {
    if (f.nvars() != ambient_ + 1) throw std::invalid_argument("polynomial has the wrong number of variables");
    if (f.is_zero()) return true;
    if (f.degree() != degree_ || !f.is_homogeneous()) return false;
    return span_.in_span(f.to_vector(index_));
}

long TrialRng::uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Flat random_flat(int ambient, int dim, TrialRng& rng, const FatScheme& avoid, const std::vector<Flat>& taken,
                 long box) {
    if (dim < 0 || dim >= ambient) throw std::invalid_argument("random_flat: need 0 <= dim < N");
    for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
        CycloMatrix vecs(dim + 1, std::vector<Cyclo>(ambient + 1));
        for (auto& v : vecs)
            for (auto& c : v) c = Cyclo(rng.uniform(-box, box));
        if (matrix_rank(vecs, ambient + 1, 1) != static_cast<std::size_t>(dim + 1)) continue;
        Flat f = Flat::from_span(ambient, vecs);
        if (avoid.contains_flat(f) || std::find(taken.begin(), taken.end(), f) != taken.end()) continue;
        return f;
    }
    throw ComputationError("random flat: degenerate draws exhausted after " + std::to_string(kMaxRedraws) +
                           " redraws");
}

UnexpectednessReport decide_unexpected(const FatScheme& Z, const std::vector<FlatTemplate>& X, int d, int trials,
                                       std::uint64_t seed, const std::string& scheme_name, long box) {
    const LinearSystem VZ(Z, d);
    return decide_unexpected(VZ, Z, X, trials, seed, scheme_name, box);
}

UnexpectednessReport decide_unexpected(const LinearSystem& VZ, const FatScheme& Z, const std::vector<FlatTemplate>& X,
                                       int trials, std::uint64_t seed, const std::string& scheme_name, long box) {
    if (trials < 1) throw std::invalid_argument("decide_unexpected: trials must be >= 1");
    if (X.empty()) throw std::invalid_argument("decide_unexpected: empty template");
    const int N = Z.ambient;
    const int d = VZ.degree();
    UnexpectednessReport r;
    r.scheme = scheme_name;
    r.ambient = N;
    r.degree = d;
    r.templ = X;
    r.trials = trials;
    r.seed = seed;
    r.box = box;
    r.version = library_version();
    r.dim_Z = VZ.dimension();

    bool all_points = true;
    std::size_t alt = 0;
    for (const auto& t : X) {
        if (t.dim < 0 || t.dim >= N) throw std::invalid_argument("flat dimension must lie in [0, N-1]");
        if (t.mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
        r.conditions_X += conditions_count(N, t.dim, t.mult, d).get_ui();
        all_points = all_points && t.dim == 0;
        alt += binomial(t.mult + 1, 2).get_ui();
    }
    r.expected = r.dim_Z > r.conditions_X ? r.dim_Z - r.conditions_X : 0;
    if (all_points && alt != r.conditions_X) {
        r.conditions_X_alt = alt;
        r.expected_alt = r.dim_Z > alt ? r.dim_Z - alt : 0;
    }

    TrialRng rng(seed);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Flat> flats;
        CycloMatrix rows;
        for (const auto& t : X) {
            flats.push_back(random_flat(N, t.dim, rng, Z, flats, box));
            auto part = component_rows(N, flats.back().parametrization(), t.mult, d);
            for (auto& row : part) rows.push_back(std::move(row));
        }
        const std::size_t value = VZ.restricted_dimension(rows);
        r.trial_actuals.push_back(value);
        if (value < best) {
            best = value;
            r.trials_at_min = 1;
        } else if (value == best) {
            ++r.trials_at_min;
        }
    }
    r.actual = best;
    r.unexpected = r.actual > r.expected;
    return r;
}

namespace {

nlohmann::ordered_json report_json(const UnexpectednessReport& r) {
    nlohmann::ordered_json j;
    j["record"] = "unexpectedness";
    j["version"] = r.version;
    j["scheme"] = r.scheme;
    j["ambient"] = r.ambient;
    j["degree"] = r.degree;
    auto templ = nlohmann::ordered_json::array();
    for (const auto& t : r.templ) templ.push_back({{"flat_dim", t.dim}, {"mult", t.mult}});
    j["template"] = templ;
    j["dim_Z"] = r.dim_Z;
    j["conditions_X"] = r.conditions_X;
    j["expected"] = r.expected;
    if (r.conditions_X_alt) {
        j["conditions_X_alt"] = *r.conditions_X_alt;
        j["expected_alt"] = *r.expected_alt;
    }
    j["actual"] = r.actual;
    j["unexpected"] = r.unexpected;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["box"] = r.box;
    j["trial_actuals"] = r.trial_actuals;
    j["trials_at_min"] = r.trials_at_min;
    j["certified"] = r.certified;
    return j;
}

}  // namespace

std::string report_to_json(const UnexpectednessReport& r, int indent) { return report_json(r).dump(indent); }

std::string report_to_text(const UnexpectednessReport& r) {
    std::ostringstream out;
    out << "scheme        " << r.scheme << "\n";
    out << "ambient       P^" << r.ambient << "\n";
    out << "degree        " << r.degree << "\n";
    out << "template      ";
    for (std::size_t i = 0; i < r.templ.size(); ++i)
        out << (i ? ", " : "") << "(dim " << r.templ[i].dim << ", mult " << r.templ[i].mult << ")";
    out << "\n";
    out << "dim_Z         " << r.dim_Z << "\n";
    out << "conditions_X  " << r.conditions_X << "\n";
    out << "expected      " << r.expected << "\n";
    if (r.conditions_X_alt) {
        out << "conditions_X_alt " << *r.conditions_X_alt << " (sum of C(m+1,2))\n";
        out << "expected_alt  " << *r.expected_alt << "\n";
    }
    out << "actual        " << r.actual << "\n";
    out << "unexpected    " << (r.unexpected ? "true" : "false") << "\n";
    out << "trials        " << r.trials << " (at minimum: " << r.trials_at_min << ")\n";
    out << "trial_actuals ";
    for (std::size_t i = 0; i < r.trial_actuals.size(); ++i) out << (i ? " " : "") << r.trial_actuals[i];
    out << "\n";
    out << "seed          " << r.seed << "\n";
    out << "certified     " << (r.certified ? "true" : "false") << "\n";
    out << "version       " << r.version << "\n";
    return out.str();
}

}  // namespace fermat
