#include "octarep/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "octarep/parkingspace.hpp"

namespace octarep {

namespace {

MultiplicityVector checked(MultiplicityVector ext, int n, int m, const char* what) {
    VerifyReport report = verify_extension(ext, ParkingSpec(n, m));
    if (!report.ok)
        throw std::logic_error(std::string(what) + ": candidate failed verification");
    return ext;
}

ExtensionResult from_outcome(const FeasibilityOutcome& out, int n, int m,
                             EncodingSpace space) {
    ExtensionResult r;
    r.status = out.status;
    r.method = space == EncodingSpace::multiplicity ? "ilp-multiplicity" : "ilp-character";
    r.nodes = out.nodes;
    r.note = out.certificate_note;
    if (out.status == FeasStatus::feasible) {
        MultiplicityVector ext(n + 1);
        for (const auto& [label, count] : *out.witness)
            ext.set(Bipartition::parse(label), count);
        r.extension = checked(std::move(ext), n, m, "ilp extension");
    }
    return r;
}

}  // namespace

std::string status_name(FeasStatus s) {
    switch (s) {
        case FeasStatus::feasible: return "feasible";
        case FeasStatus::infeasible: return "infeasible";
        case FeasStatus::resource_limit: return "resource-limit";
    }
    throw std::logic_error("status_name: bad status");
}

std::string witness_digest(const MultiplicityVector& v) {
    std::ostringstream text;
    for (const auto& [label, count] : v.entries())
        text << label.str() << ':' << count << ';';
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExtensionResult find_extension(int n, int m, ExtendStrategy strategy, EncodingSpace space,
                               const SolveBudget& budget) {
    ParkingSpec spec(n, m);  // validates the pair

    if (strategy == ExtendStrategy::automatic) {
        if (m == 3) {
            ExtensionResult r;
            r.status = FeasStatus::feasible;
            r.method = "closed-form";
            r.extension = checked(closed_form_m3(n), n, m, "closed_form_m3");
            return r;
        }
        if (n == 2 && m % 2 == 0) {
            ExtensionResult r;
            r.status = FeasStatus::feasible;
            r.method = "closed-form";
            r.extension = checked(ep2_extension(m / 2), n, m, "ep2_extension");
            return r;
        }
    }

    if (strategy != ExtendStrategy::ilp) {
        TildeSolveResult tilde = solve_tilde_extension(n, m);
        if (tilde.nonnegative) {
            ExtensionResult r;
            r.status = FeasStatus::feasible;
            r.method = "tilde-solve";
            r.extension = checked(*tilde.extension, n, m, "tilde extension");
            return r;
        }
        if (strategy == ExtendStrategy::tilde) {
            ExtensionResult r;
            r.status = FeasStatus::infeasible;
            r.method = "tilde-solve";
            r.note = "unique tilde solution has a negative entry; "
                     "no extension supported on first-row extensions";
            return r;
        }
    }

    return from_outcome(extension_exists(n, m, space, budget), n, m, space);
}

std::vector<SweepRecord> run_sweep(int n_max, int m_max, int jobs,
                                   const SolveBudget& budget) {
    if (n_max < 1 || m_max < 1)
        throw std::invalid_argument("run_sweep: bounds must be at least 1");
    int total = n_max * m_max;
    std::vector<SweepRecord> records(static_cast<size_t>(total));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 1 ? jobs : 1)
#endif
    for (int idx = 0; idx < total; ++idx) {
        int n = idx / m_max + 1;
        int m = idx % m_max + 1;
        auto start = std::chrono::steady_clock::now();
        ExtensionResult r = find_extension(n, m, ExtendStrategy::automatic,
                                           EncodingSpace::multiplicity, budget);
        auto stop = std::chrono::steady_clock::now();
        SweepRecord& rec = records[static_cast<size_t>(idx)];
        rec.n = n;
        rec.m = m;
        rec.status = r.status;
        rec.method = r.method;
        if (r.extension) rec.digest = witness_digest(*r.extension);
        rec.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        rec.nodes = r.nodes;
    }
    return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << "n,m,status,method,wall_ms,nodes\n";
    for (const SweepRecord& r : records)
        out << r.n << ',' << r.m << ',' << status_name(r.status) << ',' << r.method << ','
            << r.wall_ms << ',' << r.nodes << '\n';
}

}  // namespace octarep
