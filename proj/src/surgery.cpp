#include "reebcert/surgery.hpp"

#include <sstream>

#include "reebcert/errors.hpp"

namespace reebcert {

std::vector<std::string> validate_diagram(const FramedLinkDiagram& d) {
    std::vector<std::string> violations;
    auto complain = [&](const std::string& msg) { violations.push_back(msg); };

    if (d.ambient != "S3")
        complain("ambient must be S3 (surgery presentations with 1-handles are not supported), got '" +
                 d.ambient + "'");

    const std::size_t n = d.knots.size();
    if (d.linking.rows() != n || d.linking.cols() != n) {
        std::ostringstream os;
        os << "linking matrix is " << d.linking.rows() << "x" << d.linking.cols()
           << " but the diagram has " << n << " knots";
        complain(os.str());
        return violations;  // shape is broken, nothing below is meaningful
    }
    if (!d.linking.is_symmetric()) complain("linking matrix is not symmetric");

    for (std::size_t i = 0; i < n; ++i) {
        const LegendrianKnotData& k = d.knots[i];
        const std::string name = k.id.empty() ? "knot " + std::to_string(i + 1) : k.id;
        if (d.linking.at(i, i) != k.tb - 1) {
            std::ostringstream os;
            os << name << ": surgery framing " << d.linking.at(i, i) << " differs from tb-1 = "
               << (k.tb - 1);
            complain(os.str());
        }
        if (mod_nonneg(k.tb + k.rot, 2) != 1) {
            std::ostringstream os;
            os << name << ": tb + rot = " << (k.tb + k.rot) << " must be odd";
            complain(os.str());
        }
        if (k.is_unknot && k.tb + abs(k.rot) > -1) {
            std::ostringstream os;
            os << name << ": Bennequin bound violated, tb + |rot| = " << (k.tb + abs(k.rot))
               << " exceeds -1 for an unknot";
            complain(os.str());
        }
    }
    return violations;
}

void require_valid(const FramedLinkDiagram& d) {
    auto violations = validate_diagram(d);
    if (violations.empty()) return;
    std::ostringstream os;
    os << "invalid diagram:";
    for (const auto& v : violations) os << "\n  " << v;
    throw InputError(os.str());
}

std::vector<Int> c1_filling(const FramedLinkDiagram& d) {
    std::vector<Int> rots;
    rots.reserve(d.knots.size());
    for (const auto& k : d.knots) rots.push_back(k.rot);
    return rots;
}

AbelianGroupPresentation boundary_h1(const FramedLinkDiagram& d) {
    return cokernel(d.linking);
}

ClassImage c1_contact(const FramedLinkDiagram& d) {
    return boundary_h1(d).class_image(c1_filling(d));
}

WeinsteinVerdict weinstein_verdict(const FramedLinkDiagram& d) {
    require_valid(d);

    std::vector<Int> rots = c1_filling(d);
    bool some_rot = false;
    for (const Int& r : rots)
        if (r != 0) some_rot = true;

    AbelianGroupPresentation h1 = boundary_h1(d);
    ClassImage contact_class = h1.class_image(rots);
    ClassImage reeb_class = h1.negate(contact_class);

    WeinsteinVerdict verdict{std::move(rots),      some_rot,   std::move(h1),
                             contact_class,        !contact_class.zero,
                             reeb_class,           !reeb_class.zero,
                             std::string()};

    if (verdict.chen1_applies && !verdict.chen2_applies)
        throw InternalError("contact Chern class nonzero while filling class vanishes");

    if (verdict.chen1_applies) {
        verdict.notes =
            "c1 of the contact structure is nonzero: every defining contact form carries a "
            "Reeb link dual to -c1, its homology class is nonzero, and some component of it "
            "is non-contractible.";
    } else if (verdict.chen2_applies) {
        verdict.notes =
            "c1 of the Stein filling is nonzero and its symplectic form is exact: every "
            "defining contact form carries a closed Reeb orbit. The certified Reeb-link "
            "class is zero in this presentation.";
    } else {
        verdict.notes =
            "criterion does not apply: all rotation numbers vanish, so both Chern-class "
            "tests are inconclusive.";
    }
    return verdict;
}

}  // namespace reebcert
