#include "reebcert/abelian.hpp"

#include <sstream>

#include "reebcert/errors.hpp"

namespace reebcert {

AbelianGroupPresentation::AbelianGroupPresentation(IntMatrix relations,
                                                   std::vector<std::string> generator_labels)
    : generators_(std::move(generator_labels)),
      relations_(std::move(relations)),
      smith_(smith_normal_form(relations_)),
      v_transposed_(smith_.v.transposed()) {
    if (generators_.size() != relations_.cols())
        throw InputError("generator label count does not match relation matrix width");
    // One factor per generator; columns beyond the diagonal are free.
    factors_.reserve(relations_.cols());
    for (std::size_t i = 0; i < relations_.cols(); ++i) factors_.push_back(smith_.diagonal(i));
}

bool AbelianGroupPresentation::is_finite() const {
    for (const Int& d : factors_)
        if (d == 0) return false;
    return true;
}

Int AbelianGroupPresentation::order() const {
    Int prod = 1;
    for (const Int& d : factors_) {
        if (d == 0) return 0;
        prod *= d;
    }
    return prod;
}

ClassImage AbelianGroupPresentation::class_image(const std::vector<Int>& v) const {
    if (v.size() != generators_.size())
        throw InputError("class vector length does not match generator count");
    ClassImage img;
    img.coordinates = v_transposed_.apply(v);
    for (std::size_t i = 0; i < img.coordinates.size(); ++i) {
        img.coordinates[i] = mod_nonneg(img.coordinates[i], factors_[i]);
        if (img.coordinates[i] != 0) img.zero = false;
    }
    return img;
}

ClassImage AbelianGroupPresentation::add(const ClassImage& a, const ClassImage& b) const {
    if (a.coordinates.size() != factors_.size() || b.coordinates.size() != factors_.size())
        throw InputError("normal-form coordinate length mismatch");
    ClassImage out;
    out.coordinates.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int c = mod_nonneg(a.coordinates[i] + b.coordinates[i], factors_[i]);
        if (c != 0) out.zero = false;
        out.coordinates.push_back(std::move(c));
    }
    return out;
}

ClassImage AbelianGroupPresentation::negate(const ClassImage& a) const {
    if (a.coordinates.size() != factors_.size())
        throw InputError("normal-form coordinate length mismatch");
    ClassImage out;
    out.coordinates.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int c = mod_nonneg(-a.coordinates[i], factors_[i]);
        if (c != 0) out.zero = false;
        out.coordinates.push_back(std::move(c));
    }
    return out;
}

std::string AbelianGroupPresentation::description() const {
    std::ostringstream os;
    bool first = true;
    for (const Int& d : factors_) {
        if (d == 1) continue;
        if (!first) os << " x ";
        if (d == 0)
            os << "Z";
        else
            os << "Z_" << d;
        first = false;
    }
    return first ? "trivial" : os.str();
}

AbelianGroupPresentation cokernel(const IntMatrix& relations,
                                  std::vector<std::string> generator_labels) {
    return AbelianGroupPresentation(relations, std::move(generator_labels));
}

AbelianGroupPresentation cokernel(const IntMatrix& relations) {
    std::vector<std::string> labels;
    labels.reserve(relations.cols());
    for (std::size_t i = 0; i < relations.cols(); ++i)
        labels.push_back("dC" + std::to_string(i + 1));
    return AbelianGroupPresentation(relations, std::move(labels));
}

}  // namespace reebcert
