#ifndef REEBCERT_ABELIAN_HPP
#define REEBCERT_ABELIAN_HPP

#include <string>
#include <vector>

#include "reebcert/matrix.hpp"
#include "reebcert/smith.hpp"

namespace reebcert {

// Coordinates of a group element in normal form: one residue per invariant
// factor, reduced into [0, d_i) when d_i > 0, a plain integer when d_i = 0.
struct ClassImage {
    std::vector<Int> coordinates;
    bool zero = true;

    bool operator==(const ClassImage&) const = default;
};

// A finitely generated abelian group presented as Z^n modulo the rows of a
// relation matrix, diagonalized once at construction. Invariant factors are
// listed in divisibility order, unit factors kept (they pad the coordinate
// vector), zeros meaning infinite cyclic factors.
class AbelianGroupPresentation {
  public:
    AbelianGroupPresentation(IntMatrix relations, std::vector<std::string> generator_labels);

    const std::vector<std::string>& generators() const { return generators_; }
    const IntMatrix& relation_matrix() const { return relations_; }
    const SmithDecomposition& smith() const { return smith_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    bool is_finite() const;
    Int order() const;  // product of the invariant factors; 0 when infinite

    // Reduce an integer combination of the generators into normal form.
    ClassImage class_image(const std::vector<Int>& v) const;

    // Sum in normal-form arithmetic (componentwise mod the factors).
    ClassImage add(const ClassImage& a, const ClassImage& b) const;
    ClassImage negate(const ClassImage& a) const;

    // "trivial", "Z_5", "Z x Z_2", ...; unit factors are omitted.
    std::string description() const;

  private:
    std::vector<std::string> generators_;
    IntMatrix relations_;
    SmithDecomposition smith_;
    IntMatrix v_transposed_;
    std::vector<Int> factors_;
};

// H1-style cokernel of a relation matrix whose rows are relations among the
// labelled generators.
AbelianGroupPresentation cokernel(const IntMatrix& relations,
                                  std::vector<std::string> generator_labels);

// Convenience overload labelling the generators dC1..dCn.
AbelianGroupPresentation cokernel(const IntMatrix& relations);

}  // namespace reebcert

#endif
