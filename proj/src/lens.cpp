#include "reebcert/lens.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "reebcert/errors.hpp"

namespace reebcert {

LensSpace make_lens_space(const CoprimePair& pair) {
    ContinuedFraction cf = neg_cfrac(pair);
    QSequence qs = q_sequence(cf);
    bool odd = is_odd_lens(cf);
    return LensSpace{pair, std::move(cf), std::move(qs), odd};
}

LensSpace make_lens_space(Int p, Int q) {
    return make_lens_space(CoprimePair(std::move(p), std::move(q)));
}

std::vector<Int> allowed_rotations(const Int& n) {
    if (n > -2) {
        std::ostringstream os;
        os << "expansion coefficient must be <= -2, got " << n;
        throw InputError(os.str());
    }
    std::vector<Int> values;
    for (Int r = n + 2; r <= -n - 2; r += 2) values.push_back(r);
    return values;
}

Int tight_count(const LensSpace& lens) {
    Int count = 1;
    for (const Int& n : lens.cf.coefficients) count *= abs(n + 1);
    return count;
}

void for_each_tight(const LensSpace& lens, const std::function<bool(const RotationTuple&)>& fn) {
    const std::size_t k = lens.cf.coefficients.size();
    std::vector<std::vector<Int>> choices;
    choices.reserve(k);
    for (const Int& n : lens.cf.coefficients) choices.push_back(allowed_rotations(n));

    RotationTuple tuple;
    tuple.values.resize(k);
    std::vector<std::size_t> index(k, 0);
    for (std::size_t j = 0; j < k; ++j) tuple.values[j] = choices[j][0];
    for (;;) {
        if (!fn(tuple)) return;
        // lexicographic odometer: rightmost coordinate varies fastest
        std::size_t j = k;
        while (j-- > 0) {
            if (++index[j] < choices[j].size()) {
                tuple.values[j] = choices[j][index[j]];
                break;
            }
            index[j] = 0;
            tuple.values[j] = choices[j][0];
        }
        if (j == static_cast<std::size_t>(-1)) return;  // odometer wrapped
    }
}

std::vector<RotationTuple> enumerate_tight(const LensSpace& lens) {
    std::vector<RotationTuple> tuples;
    for_each_tight(lens, [&](const RotationTuple& t) {
        tuples.push_back(t);
        return true;
    });
    return tuples;
}

ESequence e_sequence(const LensSpace& lens) {
    const Int& p = lens.pair.p;
    ESequence es;
    es.values.reserve(lens.qseq.values.size());
    for (const Int& q : lens.qseq.values) es.values.push_back(mod_nonneg(q, p));
    return es;
}

namespace {

void require_admissible(const LensSpace& lens, const RotationTuple& rot) {
    const auto& n = lens.cf.coefficients;
    if (rot.values.size() != n.size()) {
        std::ostringstream os;
        os << "rotation tuple has length " << rot.values.size() << ", expansion has length "
           << n.size();
        throw InputError(os.str());
    }
    for (std::size_t j = 0; j < n.size(); ++j) {
        const Int& r = rot.values[j];
        if ((n[j] + r) % 2 != 0 || abs(r) > -n[j] - 2) {
            std::ostringstream os;
            os << "rotation r" << (j + 1) << " = " << r << " is not admissible for n" << (j + 1)
               << " = " << n[j];
            throw InputError(os.str());
        }
    }
}

}  // namespace

Int reeb_class(const LensSpace& lens, const RotationTuple& rot) {
    require_admissible(lens, rot);
    const std::size_t k = lens.cf.coefficients.size();
    const ESequence es = e_sequence(lens);
    Int sum = 0;
    // class of the Reeb link: -(sum_j rj e(k+1-j)) * ck
    for (std::size_t j = 1; j <= k; ++j) sum += rot.values[j - 1] * es.values[k + 1 - j];
    return mod_nonneg(-sum, lens.pair.p);
}

NoncontractibleCertificate noncontractible_certificate(const LensSpace& lens,
                                                       const RotationTuple& rot) {
    NoncontractibleCertificate cert;
    cert.reeb_class_mod_p = reeb_class(lens, rot);
    cert.noncontractible = cert.reeb_class_mod_p != 0;
    std::ostringstream os;
    if (cert.noncontractible) {
        os << "Reeb-link class " << cert.reeb_class_mod_p << " * ck is nonzero in H1 = Z_"
           << lens.pair.p << "; since pi1 = H1 for this lens space, some component of the "
           << "Reeb link is non-contractible.";
    } else {
        os << "Reeb-link class is zero mod " << lens.pair.p
           << "; this criterion certifies nothing for the tuple.";
    }
    cert.statement = os.str();
    return cert;
}

FramedLinkDiagram lens_to_diagram(const LensSpace& lens, const RotationTuple& rot) {
    require_admissible(lens, rot);
    const auto& n = lens.cf.coefficients;
    const std::size_t k = n.size();
    FramedLinkDiagram d;
    d.knots.reserve(k);
    d.linking = IntMatrix(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        d.knots.push_back({"K" + std::to_string(j + 1), n[j] + 1, rot.values[j], true});
        d.linking.at(j, j) = n[j];
        if (j + 1 < k) {
            d.linking.at(j, j + 1) = 1;
            d.linking.at(j + 1, j) = 1;
        }
    }
    return d;
}

Int chain_bound_lhs(const LensSpace& lens, const RotationTuple& rot) {
    require_admissible(lens, rot);
    const std::size_t k = lens.cf.coefficients.size();
    Int sum = 0;
    for (std::size_t j = 1; j <= k; ++j) sum += abs(rot.values[j - 1]) * lens.qseq.values[k + 1 - j];
    return sum;
}

namespace {

SurveyRow survey_cell(const Int& p, const Int& q, const Int& tuple_cap) {
    LensSpace lens = make_lens_space(p, q);
    SurveyRow row{p,      q,      lens.cf.coefficients, lens.odd, tight_count(lens),
                  0,      p,      0,                    0,        false};
    if (row.tight > tuple_cap) {
        row.capped = true;
        return row;
    }
    const ESequence es = e_sequence(lens);
    const std::size_t k = lens.cf.coefficients.size();
    const Int bound_rhs = p - q - 1;
    for_each_tight(lens, [&](const RotationTuple& rot) {
        Int sum = 0;
        Int bound_lhs = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            sum += rot.values[j - 1] * es.values[k + 1 - j];
            bound_lhs += abs(rot.values[j - 1]) * lens.qseq.values[k + 1 - j];
        }
        Int cls = mod_nonneg(-sum, p);
        row.tuples_checked += 1;
        if (cls < row.min_class) row.min_class = cls;
        if (lens.odd && cls == 0) row.class_violations += 1;
        if (bound_lhs > bound_rhs) row.bound_violations += 1;
        return true;
    });
    return row;
}

}  // namespace

SurveyReport survey(const Int& pmax, const SurveyOptions& options) {
    if (pmax < 2) throw InputError("survey needs pmax >= 2");

    std::vector<std::pair<Int, Int>> cells;
    for (Int p = 2; p <= pmax; ++p)
        for (Int q = 1; q < p; ++q)
            if (gcd(p, q) == 1) cells.emplace_back(p, q);

    std::vector<SurveyRow> rows(cells.size(), SurveyRow{0, 0, {}, false, 0, 0, 0, 0, 0, false});
    auto run_cell = [&](std::size_t i) {
        rows[i] = survey_cell(cells[i].first, cells[i].second, options.tuple_cap);
    };

    if (options.parallel && cells.size() > 1) {
        const std::size_t workers =
            std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), cells.size());
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    run_cell(i);
            });
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    }

    SurveyReport report{pmax, std::move(rows), Int(cells.size()), 0, 0, 0, 0};
    for (const SurveyRow& row : report.rows) {
        if (row.odd) report.odd_lens_spaces += 1;
        report.tuples_checked += row.tuples_checked;
        report.violations += row.class_violations + row.bound_violations;
        if (row.capped) report.capped_cells += 1;
    }
    return report;
}

}  // namespace reebcert
