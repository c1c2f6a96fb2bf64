#pragma once

#include <optional>
#include <string>

#include "gaend/endo.hpp"

namespace gaend {

enum class LinRepTag { FullGL, KleinFour, PlusMinusIdentity, LowerTriangularGL2, CentralizerInGL, MembershipOnly };
const char* linrep_tag_name(LinRepTag t);
std::optional<LinRepTag> linrep_tag_from_name(const std::string& s);

struct LinRepDescription {
    LinRepTag tag = LinRepTag::MembershipOnly;
    Integer diagonalizer_det;  // KleinFour / PlusMinusIdentity
    IntPoly field_poly;        // CentralizerInGL
    bool finite = false;       // CentralizerInGL with n = 2 and no real roots
    std::string statement;
    std::string reason;

    bool operator==(const LinRepDescription&) const = default;
};

/// NO when det T != +-1; otherwise is_endomorphism(A^t, T^t).
Decision in_linear_rep_group(const IntMatrix& A, const IntMatrix& T, unsigned precision = 0);

LinRepDescription linear_rep_group_description(const IntMatrix& A);

/// T = sum a_i A^i for xi = sum a_i lambda^i; throws unless N(xi) = +-1.
IntMatrix unit_to_matrix(const IntMatrix& A, const IntVector& unit_coords, bool assert_monogenic = false);

}  // namespace gaend
