#pragma once

#include "hopfbraid/tensor.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hopfbraid {

/// Parse the canonical series rendering "c0 + c1*h + c2*h^2 + ...".
/// Zero terms may be omitted and terms may appear in any order; rationals
/// are "p" or "p/q", possibly negative.  Coefficients at or beyond the
/// order are rejected.
Series parse_series(const std::string& text, int order);

/// Parse "F^a H^b E^c".
Monomial parse_monomial(const std::string& text);

/// Parse one canonical term line "m1 | m2 | ... | mn : <series>".
void parse_tensor_line(const std::string& line, TensorElement& into);

/// Named elements and tensors used as suite inputs.
struct SampleSet {
    std::vector<std::pair<std::string, AlgebraElement>> elements;
    std::vector<std::pair<std::string, TensorElement>> tensors;

    std::vector<TensorElement> tensors_of_rank(int rank) const;
};

/// Sample file format: blank lines and '#' comments are skipped;
/// blocks are
///   element <name>            or   tensor <name> rank <k>
///   <one canonical term line per stored term>
///   end
/// Monomial lines inside an element block omit the "|" (single leg).
SampleSet parse_samples(std::istream& in, const HopfAlgebra& alg);
SampleSet parse_sample_file(const std::string& path, const HopfAlgebra& alg);

/// The built-in sample set: the canonical H' generators
/// {1, hE, hF, hH, hE*hF, hH*hE, h^2*E^2} and a matching family of
/// (H(x)H)' tensors (pure tensors of those plus one non-pure sum).
SampleSet default_samples(const HopfAlgebra& alg);

} // namespace hopfbraid
