#include "atlas/groups.hpp"

namespace atlas {
namespace groups {

// Static transcription of the exceptional-group data; every other code path
// reads scalars from here. The adjacent checksum test pins all 19 rows.
const std::array<ExceptionalRow, 19>& exceptional_rows() {
    static const std::array<ExceptionalRow, 19> rows = {{
        // no, IdSmallGroup, lambda, mu, k1, k2, k3, k, d1, d2, parent
        {4, "[24,3]", "-1", "-zeta(3)", 1, 2, 2, 2, 4, 6, "A4"},
        {5, "[72,25]", "-zeta(3)", "-zeta(3)", 1, 6, 6, 6, 6, 12, "A4"},
        {6, "[48,33]", "zeta(4)", "-zeta(3)", 4, 4, 1, 4, 4, 12, "A4"},
        {7, "[144,157]", "zeta(4)*zeta(3)", "-zeta(3)", 8, 12, 3, 12, 12, 12, "A4"},
        {8, "[96,67]", "zeta(8)^3", "1", 1, 2, 4, 4, 8, 12, "S4"},
        {9, "[192,963]", "zeta(4)", "zeta(8)", 8, 7, 8, 8, 8, 24, "S4"},
        {10, "[288,400]", "zeta(8)^7*zeta(3)^2", "-zeta(3)", 7, 12, 12, 12, 12, 24, "S4"},
        {11, "[576,5472]", "zeta(4)", "zeta(8)*zeta(3)", 24, 21, 8, 24, 24, 24, "S4"},
        {12, "[48,29]", "zeta(4)", "1", 2, 1, 1, 2, 6, 8, "S4"},
        {13, "[96,192]", "zeta(4)", "zeta(4)", 4, 1, 2, 4, 8, 12, "S4"},
        {14, "[144,122]", "zeta(4)", "-zeta(3)", 6, 6, 5, 6, 6, 24, "S4"},
        {15, "[288,903]", "zeta(4)", "zeta(4)*zeta(3)", 12, 3, 10, 12, 12, 24, "S4"},
        {16, "[600,54]", "-zeta(5)^3", "1", 7, 10, 10, 10, 20, 30, "A5"},
        {17, "[1200,483]", "zeta(4)", "zeta(4)*zeta(5)^3", 20, 11, 20, 20, 20, 60, "A5"},
        {18, "[1800,328]", "-zeta(3)*zeta(5)^3", "zeta(3)^2", 11, 30, 30, 30, 30, 60, "A5"},
        {19, "[3600, ]", "zeta(4)*zeta(3)", "zeta(4)*zeta(5)^3", 40, 33, 40, 60, 60, 60, "A5"},
        {20, "[360,51]", "1", "zeta(3)^2", 3, 6, 5, 6, 12, 30, "A5"},
        {21, "[720,420]", "zeta(4)", "zeta(3)^2", 12, 12, 1, 12, 12, 60, "A5"},
        {22, "[240, 93]", "zeta(4)", "1", 4, 4, 3, 4, 12, 20, "A5"},
    }};
    return rows;
}

const ExceptionalRow& exceptional_row(int no) {
    if (no < 4 || no > 22) raise(Errc::SpecInvalid, "exceptional group number must be 4..22");
    return exceptional_rows()[no - 4];
}

} // namespace groups
} // namespace atlas
