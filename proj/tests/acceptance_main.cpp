// Acceptance suite: every check the project must pass, one line per
// criterion, exact arithmetic throughout. Usage:
//   acceptance <cli_path> <repo_root>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "golden_cases.hpp"
#include "reebcert/cfrac.hpp"
#include "reebcert/lens.hpp"
#include "reebcert/matrix.hpp"
#include "reebcert/seifert.hpp"
#include "reebcert/smith.hpp"
#include "reebcert/surgery.hpp"

using namespace reebcert;

namespace {

using Clock = std::chrono::steady_clock;

class Harness {
  public:
    void criterion(int number, const std::string& label, bool ok, double seconds,
                   const std::string& detail = "") {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << number << "  " << label
                  << "  [" << std::fixed << std::setprecision(2) << seconds << "s]";
        if (!ok && !detail.empty()) std::cout << "  -- " << detail;
        std::cout << std::endl;
        if (!ok) ++failures_;
    }

    int failures() const { return failures_; }

  private:
    int failures_ = 0;
};

std::vector<std::pair<int, int>> coprime_pairs(int pmax) {
    std::vector<std::pair<int, int>> pairs;
    for (int p = 2; p <= pmax; ++p)
        for (int q = 1; q < p; ++q)
            if (gcd(Int(p), Int(q)) == 1) pairs.emplace_back(p, q);
    return pairs;
}

IntMatrix chain_matrix(const std::vector<Int>& coefficients) {
    const std::size_t k = coefficients.size();
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        m.at(i, i) = coefficients[i];
        if (i + 1 < k) {
            m.at(i, i + 1) = 1;
            m.at(i + 1, i) = 1;
        }
    }
    return m;
}

ClassImage scale_class(const AbelianGroupPresentation& g, const Int& scalar,
                       const ClassImage& img) {
    ClassImage out;
    out.coordinates.reserve(img.coordinates.size());
    for (std::size_t i = 0; i < img.coordinates.size(); ++i) {
        Int c = mod_nonneg(scalar * img.coordinates[i], g.invariant_factors()[i]);
        if (c != 0) out.zero = false;
        out.coordinates.push_back(std::move(c));
    }
    return out;
}

FramedLinkDiagram random_diagram(std::mt19937_64& rng, std::size_t max_knots) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_knots);
    std::uniform_int_distribution<int> framing_dist(-6, -2);
    std::uniform_int_distribution<int> link_dist(-3, 3);
    const std::size_t n = size_dist(rng);
    FramedLinkDiagram d;
    d.linking = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        int framing = framing_dist(rng);
        std::vector<Int> rots = allowed_rotations(framing);
        std::uniform_int_distribution<std::size_t> rot_dist(0, rots.size() - 1);
        d.knots.push_back({"K" + std::to_string(i + 1), framing + 1, rots[rot_dist(rng)], true});
        d.linking.at(i, i) = framing;
        for (std::size_t j = 0; j < i; ++j) {
            int lk = link_dist(rng);
            d.linking.at(i, j) = lk;
            d.linking.at(j, i) = lk;
        }
    }
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <cli> <repo_root>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string repo_root = argv[2];
    Harness h;

    // 1. continued-fraction round trip, p <= 500
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& [p, q] : coprime_pairs(500)) {
            ContinuedFraction cf = neg_cfrac(CoprimePair(p, q));
            for (const Int& n : cf.coefficients)
                if (n > -2) ok = false;
            if (eval_cfrac(cf.coefficients) != Rational(-p, q)) {
                ok = false;
                detail = "round trip failed at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                break;
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs >= 2.0) {
            ok = false;
            detail = "exceeded 2s budget";
        }
        h.criterion(1, "continued-fraction round trip exact for all coprime p <= 500", ok, secs,
                    detail);
    }

    // 2. q-sequence endpoints and monotonicity, p <= 500
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& [p, q] : coprime_pairs(500)) {
            ContinuedFraction cf = neg_cfrac(CoprimePair(p, q));
            QSequence qs = q_sequence(cf);
            const std::size_t k = cf.coefficients.size();
            if (qs.values.size() != k + 2 || qs.values[0] != 0 || qs.values[1] != 1 ||
                qs.values[k] != q || qs.values[k + 1] != p) {
                ok = false;
                detail = "endpoints failed at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                break;
            }
            for (std::size_t j = 1; j <= k; ++j)
                if (!(qs.values[j] >= 1 && qs.values[j + 1] > qs.values[j])) {
                    ok = false;
                    detail = "monotonicity failed at (" + std::to_string(p) + "," +
                             std::to_string(q) + ")";
                    break;
                }
            if (!ok) break;
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs >= 2.0) {
            ok = false;
            detail = "exceeded 2s budget";
        }
        h.criterion(2, "q-sequence endpoints q_k=q, q_(k+1)=p and strict growth, p <= 500", ok,
                    secs, detail);
    }

    // 3. chain determinant +-p and smith diagonal (1,...,1,p), p <= 200
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& [p, q] : coprime_pairs(200)) {
            ContinuedFraction cf = neg_cfrac(CoprimePair(p, q));
            IntMatrix chain = chain_matrix(cf.coefficients);
            if (abs(det(chain)) != p) {
                ok = false;
                detail = "determinant failed at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                break;
            }
            SmithDecomposition s = smith_normal_form(chain);
            const std::size_t k = cf.coefficients.size();
            for (std::size_t i = 0; i + 1 < k; ++i)
                if (s.diagonal(i) != 1) ok = false;
            if (s.diagonal(k - 1) != p) ok = false;
            if (!ok) {
                detail = "smith diagonal failed at (" + std::to_string(p) + "," +
                         std::to_string(q) + ")";
                break;
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs >= 10.0) {
            ok = false;
            detail = "exceeded 10s budget";
        }
        h.criterion(3, "chain |det| = p and cokernel Z_p with smith diagonal (1,...,1,p), p <= 200",
                    ok, secs, detail);
    }

    // 4. Honda count, p <= 100
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& [p, q] : coprime_pairs(100)) {
            LensSpace lens = make_lens_space(p, q);
            Int expected = 1;
            for (const Int& n : lens.cf.coefficients) expected *= abs(n + 1);
            if (tight_count(lens) != expected ||
                Int(enumerate_tight(lens).size()) != expected) {
                ok = false;
                detail = "count failed at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                break;
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs >= 30.0) {
            ok = false;
            detail = "exceeded 30s budget";
        }
        h.criterion(4, "tight-structure enumeration matches |(n1+1)...(nk+1)| for p <= 100", ok,
                    secs, detail);
    }

    // 5 and 6 share one survey over p <= 200
    {
        auto t0 = Clock::now();
        SurveyOptions options;
        options.parallel = false;
        SurveyReport report = survey(200, options);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();

        Int class_violations = 0, bound_violations = 0;
        bool min_ok = true;
        for (const SurveyRow& row : report.rows) {
            class_violations += row.class_violations;
            bound_violations += row.bound_violations;
            if (row.odd && !row.capped && row.min_class < 1) min_ok = false;
        }
        bool ok5 = class_violations == 0 && min_ok && report.capped_cells == 0;
        std::string detail5;
        if (report.capped_cells != 0) detail5 = "unexpected capped cells";
        if (class_violations != 0) detail5 = class_violations.str() + " zero classes on odd spaces";
        if (secs >= 120.0) {
            ok5 = false;
            detail5 = "exceeded 2min budget";
        }
        h.criterion(5, "nonzero Reeb-link class for every tuple on every odd L(p,q), p <= 200",
                    ok5, secs, detail5);

        h.criterion(6, "chain bound sum |rj| q_(k+1-j) <= p-q-1 for every tuple, p <= 200",
                    bound_violations == 0, secs,
                    bound_violations == 0 ? "" : bound_violations.str() + " violations");
    }

    // 7. oracle equivalence: recurrence class vs smith-form class, p <= 100
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& [p, q] : coprime_pairs(100)) {
            LensSpace lens = make_lens_space(p, q);
            const std::size_t k = lens.cf.coefficients.size();
            AbelianGroupPresentation g = cokernel(chain_matrix(lens.cf.coefficients));
            std::vector<Int> last(k, 0);
            last[k - 1] = 1;
            ClassImage ck = g.class_image(last);  // the generator the recurrence reports against
            for (const RotationTuple& rot : enumerate_tight(lens)) {
                Int t = reeb_class(lens, rot);
                std::vector<Int> minus_v(k);
                for (std::size_t j = 0; j < k; ++j) minus_v[j] = -rot.values[j];
                ClassImage via_smith = g.class_image(minus_v);
                if (via_smith.zero != (t == 0) || via_smith != scale_class(g, t, ck)) {
                    ok = false;
                    detail = "mismatch at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                    break;
                }
            }
            if (!ok) break;
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        h.criterion(7, "recurrence Reeb class agrees with the smith-form class for p <= 100", ok,
                    secs, detail);
    }

    // 8. e-sequence congruence e_j == q_j (mod p), p <= 200
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& [p, q] : coprime_pairs(200)) {
            LensSpace lens = make_lens_space(p, q);
            ESequence es = e_sequence(lens);
            if (es.values.size() != lens.qseq.values.size()) ok = false;
            for (std::size_t j = 0; ok && j < es.values.size(); ++j)
                if (mod_nonneg(es.values[j] - lens.qseq.values[j], Int(p)) != 0) ok = false;
            if (es.values.back() != 0) ok = false;
            if (!ok) {
                detail = "congruence failed at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                break;
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        h.criterion(8, "e_j == q_j (mod p) for all j, exhaustively for p <= 200", ok, secs, detail);
    }

    // 9. degeneracy: class 0 only for the all-zero tuple on all-even expansions
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& [p, q] : coprime_pairs(100)) {
            LensSpace lens = make_lens_space(p, q);
            for (const RotationTuple& rot : enumerate_tight(lens)) {
                if (reeb_class(lens, rot) != 0) continue;
                for (const Int& r : rot.values)
                    if (r != 0) ok = false;
                for (const Int& n : lens.cf.coefficients)
                    if (n % 2 != 0) ok = false;
                if (!ok) {
                    detail = "zero class with data at (" + std::to_string(p) + "," +
                             std::to_string(q) + ")";
                    break;
                }
            }
            if (!ok) break;
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        h.criterion(9, "zero Reeb class forces all rj = 0 and all nj even, p <= 100", ok, secs,
                    detail);
    }

    // 10. Brieskorn suite, 2 <= n <= 50
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 50; ++n) {
            BrieskornRecord rec = brieskorn(n);
            if (h1_order_indicator(rec.seifert) != 1 || rec.milnor_b2_plus != 2 * (n - 1) ||
                !rec.is_homology_sphere) {
                ok = false;
                detail = "failed at n = " + std::to_string(n);
                break;
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs >= 1.0) {
            ok = false;
            detail = "exceeded 1s budget";
        }
        h.criterion(10, "homology-sphere indicator 1 and b2+ = 2(n-1) for 2 <= n <= 50", ok, secs,
                    detail);
    }

    // 11. verdict invariants on 10,000 random diagrams
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        std::mt19937_64 rng(987654321);
        for (int trial = 0; trial < 10000 && ok; ++trial) {
            FramedLinkDiagram d = random_diagram(rng, 8);
            if (!validate_diagram(d).empty()) {
                ok = false;
                detail = "generator produced an invalid diagram";
                break;
            }
            WeinsteinVerdict before = weinstein_verdict(d);
            if (before.chen1_applies && !before.chen2_applies) {
                ok = false;
                detail = "chen1 without chen2";
            }
            if (!before.boundary_h1.add(before.reeb_link_class, before.c1_contact_class).zero) {
                ok = false;
                detail = "reeb class is not minus the contact class";
            }
            std::uniform_int_distribution<std::size_t> pick(0, d.knots.size() - 1);
            std::size_t j = pick(rng);
            d.knots[j].rot = -d.knots[j].rot;
            for (std::size_t i = 0; i < d.knots.size(); ++i) {
                if (i == j) continue;
                d.linking.at(i, j) = -d.linking.at(i, j);
                d.linking.at(j, i) = -d.linking.at(j, i);
            }
            WeinsteinVerdict after = weinstein_verdict(d);
            if (before.chen1_applies != after.chen1_applies ||
                before.chen2_applies != after.chen2_applies ||
                before.boundary_h1.invariant_factors() != after.boundary_h1.invariant_factors()) {
                ok = false;
                detail = "orientation flip changed a verdict";
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        h.criterion(11, "verdict invariants and orientation-flip stability on 10000 diagrams", ok,
                    secs, detail);
    }

    // 12. CLI determinism against the golden files, both formats
    {
        auto t0 = Clock::now();
        std::ostringstream err;
        int mismatches = golden::check_all(cli, repo_root, err);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        h.criterion(12, "golden-file byte equality for the pinned CLI invocations", mismatches == 0,
                    secs, err.str());
    }

    if (h.failures()) {
        std::cout << h.failures() << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
