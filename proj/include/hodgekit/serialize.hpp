#pragma once

#include "hodgekit/geometry.hpp"
#include "hodgekit/mhc.hpp"

#include <json.hpp>

#include <map>
#include <string>

/// JSON forms of the library objects. Rationals are "p/q" strings, Gaussian
/// scalars {"re": "p/q", "im": "r/s"}; degrees and bidegrees used as keys are
/// decimal strings ("3", "1,0"). Output is canonical: serializing a parsed
/// canonical document reproduces it byte for byte.
///
/// Parsers throw InvalidInput with the JSON path of the offending field.
namespace hodgekit::io {

using Json = nlohmann::json;

/// Parses text, reporting line and column on syntax errors.
Json parse_text(const std::string& text, const std::string& source = "input");
/// Canonical text: two-space indentation, sorted keys, trailing newline.
std::string dump(const Json& j);

Json to_json(const Scalar& s);
Scalar scalar_from(const Json& j, const std::string& path);
Json to_json(const Mat& m);
/// `rows`/`cols` fix the shape when the document gives an empty matrix.
Mat mat_from(const Json& j, std::size_t rows, std::size_t cols, const std::string& path);
Json to_json(const filt::Filtration& f);
filt::Filtration filtration_from(const Json& j, const std::string& path);

Json to_json(const hodge::HodgeStructure& h);
hodge::HodgeStructure hs_from(const Json& j, const std::string& path);
Json to_json(const mhs::MixedHodgeStructure& h);
mhs::MixedHodgeStructure mhs_from(const Json& j, const std::string& path);
Json hodge_numbers_json(const hodge::HodgeNumbers& h);
Json weight_dims_json(const std::map<int, std::size_t>& d);

/// {"range": [lo, hi], "dims": {...}, "d": {...}} plus optional "W"/"F".
Json to_json(const ss::Complex& k);
ss::Complex complex_from(const Json& j, const std::string& path);
Json to_json(const ss::FilteredComplex& k);  ///< "F" or "W" by direction
ss::FilteredComplex filtered_complex_from(const Json& j, const std::string& path);
Json to_json(const ss::BiFilteredComplex& k);
ss::BiFilteredComplex bifiltered_complex_from(const Json& j, const std::string& path);
/// Degree-keyed matrices of a chain map between known complexes.
Json maps_json(const std::map<int, Mat>& maps);
std::map<int, Mat> maps_from(const Json& j, const ss::Complex& source, const ss::Complex& target, int degree_shift,
                             const std::string& path);

Json to_json(const mhc::HodgeComplexData& k);
mhc::HodgeComplexData hc_from(const Json& j, const std::string& path);
/// "hodge" may omit its complex (then K_C = K_Q) and W (then β(W)), and
/// "comparison" may be omitted (identity).
Json to_json(const mhc::MixedHodgeComplexData& m);
mhc::MixedHodgeComplexData mhc_from(const Json& j, const std::string& path);

struct ConeInput {
    mhc::MHCMorphism morphism;
    mhc::ConeHomotopies homotopies;
    std::optional<mhc::ConeHomotopies> alternative;  ///< second choice to compare against
};
Json to_json(const ConeInput& c);
ConeInput cone_from(const Json& j, const std::string& path);

Json to_json(const mhs::MHSMorphism& f);
mhs::MHSMorphism morphism_from(const Json& j, const std::string& path);

Json to_json(const geometry::NCDInput& in);
geometry::NCDInput ncd_from(const Json& j, const std::string& path);
Json to_json(const geometry::OpenSmoothInput& in);
geometry::OpenSmoothInput open_from(const Json& j, const std::string& path);

/// {"type": "mhs_bundle", "degrees": {"k": mhs}}.
Json bundle_json(const std::map<int, mhs::MixedHodgeStructure>& b);
std::map<int, mhs::MixedHodgeStructure> bundle_from(const Json& j, const std::string& path);

}  // namespace hodgekit::io
