#pragma once

// Transcribed reference values: edge restrictions of B_c (scaled by
// (5-k)!/5!), the smoothness relations and the dimension table. Only the
// B-spline index j of B_j^{5-k} is recorded.

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ps12::testing {

/// entry = list of (j, polynomial in a1,a2,a3); rows 1..25, one list per order
using RestrictionRow = std::array<std::vector<std::pair<int, std::string>>, 4>;

inline const std::vector<RestrictionRow>& expected_restrictions()
{
    static const std::vector<RestrictionRow> rows{
        {{{{1, "4"}}, {{1, "8*a1"}}, {{1, "16*a1^2"}}, {{1, "32*a1^3"}}}},
        {{{{2, "4"}}, {{1, "8*a2"}, {2, "8*a1"}}, {{1, "32*a1*a2"}, {2, "16*a1^2"}}, {{1, "96*a1^2*a2"}, {2, "32*a1^3"}}}},
        {{{{3, "2"}},
          {{2, "4*a2"}, {3, "2*(2*a1+a2)"}},
          {{1, "8*a2^2"}, {2, "4*a2*(4*a1+a2)"}, {3, "2*(2*a1+a2)^2"}},
          {{1, "8*a2^2*(6*a1+a2)"}, {2, "4*a2*(12*a1^2+6*a1*a2+a2^2)"}, {3, "2*(2*a1+a2)^3"}}}},
        {{{{4, "2"}},
          {{3, "2*a2"}, {4, "2*(2*a1+a2)"}},
          {{2, "4*a2^2"}, {3, "4*a2*(2*a1+a2)"}, {4, "2*(2*a1+a2)^2"}},
          {{1, "8*a2^3"}, {2, "8*a2^2*(3*a1+a2)"}, {3, "6*a2*(2*a1+a2)^2"}, {4, "4*(2*a1+a2)^3"}}}},
        {{{{5, "2"}},
          {{4, "2*(a1+2*a2)"}, {5, "2*a1"}},
          {{3, "2*(a1+2*a2)^2"}, {4, "4*a1*(a1+2*a2)"}, {5, "4*a1^2"}},
          {{2, "4*(a1+2*a2)^3"}, {3, "6*a1*(a1+2*a2)^2"}, {4, "8*a1^2*(a1+3*a2)"}, {5, "8*a1^3"}}}},
        {{{{6, "2"}},
          {{5, "2*(a1+2*a2)"}, {6, "4*a1"}},
          {{4, "2*(a1+2*a2)^2"}, {5, "4*a1*(a1+4*a2)"}, {6, "8*a1^2"}},
          {{3, "2*(a1+2*a2)^3"}, {4, "4*a1*(a1^2+6*a1*a2+12*a2^2)"}, {5, "8*a1^2*(a1+6*a2)"}}}},
        {{{{7, "4"}}, {{6, "8*a2"}, {7, "8*a1"}}, {{5, "16*a2^2"}, {6, "32*a1*a2"}}, {{4, "32*a2^3"}, {5, "96*a1*a2^2"}}}},
        {{{{8, "4"}}, {{7, "8*a2"}}, {{6, "16*a2^2"}}, {{5, "32*a2^3"}}}},
        {{{}, {{1, "8*a3"}}, {{1, "32*a1*a3"}}, {{1, "96*a1^2*a3"}}}},
        {{{},
          {{2, "2*a3"}, {3, "a3"}},
          {{1, "8*a2*a3"}, {2, "2*a3*(3*a1+a2)"}, {3, "a3*(3*a1+a2)"}},
          {{1, "36*a1*a2*a3"}, {2, "2*a3*(7*a1^2+5*a1*a2+a2^2)"}, {3, "a3*(7*a1^2+5*a1*a2+a2^2)"}}}},
        {{{},
          {{3, "2*a3"}},
          {{2, "8*a2*a3"}, {3, "2*a3*(3*a1+a2)"}},
          {{1, "24*a2^2*a3"}, {2, "36*a1*a2*a3"}, {3, "2*a3*(7*a1^2+5*a1*a2+a2^2)"}}}},
        {{{},
          {{4, "4*a3"}},
          {{3, "4*a3*(a1+3*a2)"}, {4, "4*a3*(3*a1+a2)"}},
          {{2, "8*a3*(a1^2+5*a1*a2+7*a2^2)"}, {3, "8*a3*(2*a1^2+7*a1*a2+2*a2^2)"}, {4, "8*a3*(7*a1^2+5*a1*a2+a2^2)"}}}},
        {{{},
          {{5, "2*a3"}},
          {{4, "2*a3*(a1+3*a2)"}, {5, "8*a1*a3"}},
          {{3, "2*a3*(a1^2+5*a1*a2+7*a2^2)"}, {4, "36*a1*a2*a3"}, {5, "24*a1^2*a3"}}}},
        {{{},
          {{5, "a3"}, {6, "2*a3"}},
          {{4, "a3*(a1+3*a2)"}, {5, "2*a3*(a1+3*a2)"}, {6, "8*a1*a3"}},
          {{3, "a3*(a1^2+5*a1*a2+7*a2^2)"}, {4, "2*a3*(a1^2+5*a1*a2+7*a2^2)"}, {5, "36*a1*a2*a3"}}}},
        {{{}, {{7, "8*a3"}}, {{6, "32*a2*a3"}}, {{5, "96*a2^2*a3"}}}},
        {{{}, {}, {{1, "8*a3^2"}}, {{1, "8*a3^2*(5*a1-a2)"}}}},
        {{{}, {}, {{2, "4*a3^2"}, {3, "2*a3^2"}}, {{1, "24*a2*a3^2"}, {2, "4*a3^2*(5*a1+2*a2)"}, {3, "2*a3^2*(5*a1+2*a2)"}}}},
        {{{}, {}, {{3, "4*a3^2"}}, {{2, "8*a3^2*(a1+4*a2)"}, {3, "4*a3^2*(4*a1+a2)"}}}},
        {{{}, {}, {{4, "4*a3^2"}}, {{3, "4*a3^2*(a1+4*a2)"}, {4, "8*a3^2*(4*a1+a2)"}}}},
        {{{}, {}, {{4, "2*a3^2"}, {5, "4*a3^2"}}, {{3, "2*a3^2*(5*a2+2*a1)"}, {4, "4*a3^2*(5*a2+2*a1)"}, {5, "24*a1*a3^2"}}}},
        {{{}, {}, {{6, "8*a3^2"}}, {{5, "8*a3^2*(5*a2-a1)"}}}},
        {{{}, {}, {}, {{1, "8*a3^3"}}}},
        {{{}, {}, {}, {{2, "8*a3^3"}, {3, "4*a3^3"}}}},
        {{{}, {}, {}, {{3, "4*a3^3"}, {4, "8*a3^3"}}}},
        {{{}, {}, {}, {{5, "8*a3^3"}}}},
    };
    return rows;
}

/// c~_i for i = 9..25 in b1,b2,b3 and c1..c25; c~_i = c_i for i <= 8.
inline const std::map<int, std::string>& expected_relations()
{
    static const std::map<int, std::string> r{
        {9, "b1*c1 + b2*c2 + b3*c9"},
        {10, "b1*c2 + b2*c3 + b3*c10"},
        {11, "b1*(2*c3 - c2) + b2*c4 + b3*c11"},
        {12, "b1*(2*c4 + c5)/3 + b2*(c4 + 2*c5)/3 + b3*c12"},
        {13, "b1*c5 + b2*(2*c6 - c7) + b3*c13"},
        {14, "b1*c6 + b2*c7 + b3*c14"},
        {15, "b1*c7 + b2*c8 + b3*c15"},
        {16, "b1^2*c1 + 2*b1*b2*c2 + b2^2*c3 + 2*b1*b3*c9 + 2*b2*b3*c10 + b3^2*c16"},
        {17, "b1^2*c2 + b2^2*c4 + b3^2*c17 + 2*b1*b2*(3*c3 - c2)/2 + 2*b1*b3*(3*c10 - c2)/2"
             " + 2*b2*b3*(c10 + 2*c11 - c3)/2"},
        {18, "b1^2*(2*c3 + 2*c4 - c2)/3 + b2^2*(c4 + 2*c5)/3 + b3^2*c18 + 2*b1*b2*(c2 - 2*c3 + 6*c4 + c5)/6"
             " + 2*b1*b3*(c2 - 2*c3 + 2*c4 - c5 + 3*c11 + 3*c12)/6 + 2*b2*b3*(9*c12 - 2*c5 - c11)/6"},
        {19, "b1^2*(2*c4 + c5)/3 + b2^2*(2*c5 + 2*c6 - c7)/3 + b3^2*c19 + 2*b1*b2*(c4 + 6*c5 - 2*c6 + c7)/6"
             " + 2*b2*b3*(c7 - 2*c6 + 2*c5 - c4 + 3*c13 + 3*c12)/6 + 2*b1*b3*(9*c12 - 2*c4 - c13)/6"},
        {20, "b1^2*c5 + b2^2*c7 + b3^2*c20 + 2*b1*b2*(3*c6 - c7)/2 + 2*b1*b3*(c14 + 2*c13 - c6)/2"
             " + 2*b2*b3*(3*c14 - c7)/2"},
        {21, "b1^2*c6 + 2*b1*b2*c7 + b2^2*c8 + 2*b1*b3*c14 + 2*b2*b3*c15 + b3^2*c21"},
        {22, "b1^3*c1 + 3*b1^2*b2*(4*c2 - c1)/3 + 3*b1*b2^2*(5*c3 - 2*c2)/3 + b2^3*c4"
             " + 3*b2^2*b3*(c10 - c3 + 3*c11)/3 + 3*b2*b3^2*(c10 - c16 + 3*c17)/3 + b3^3*c22"
             " + 3*b3^2*b1*(5*c16 - 2*c9)/3 + 3*b3*b1^2*(4*c9 - c1)/3 + 6*b1*b2*b3*(5*c10 - c2 - c9)/3"},
        {23, "b1^3*(c2 + 2*c3)/3 + 3*b1^2*b2*(-2*c2 + 8*c3 + 3*c4)/9 + 3*b1*b2^2*(c2 - c3 + 8*c4 + c5)/9"
             " + b2^3*(c4 + 2*c5)/3 + 3*b2^2*b3*(c10 + 15*c12 - c3 - 2*c4 - 4*c5)/9"
             " + 3*b2*b3^2*(-6*c12 + 2*c17 + 12*c18 - c4 + 2*c5)/9"
             " + 3*b1*b3^2*(c10 + 3*c11 - 3*c12 + 5*c17 + 3*c18 + c2 - 2*c3 + c5)/9"
             " + 3*b1^2*b3*(8*c10 + 3*c11 - 2*c2)/9"
             " + 6*b1*b2*b3*(3*c10 + 6*c11 + 3*c12 + c2 - 4*c3 + c4 - c5)/9 + b3^3*c23"},
        {24, "b1^3*(2*c4 + c5)/3 + 3*b1^2*b2*(c4 + 8*c5 - c6 + c7)/9 + 3*b1*b2^2*(3*c5 + 8*c6 - 2*c7)/9"
             " + b2^3*(2*c6 + c7)/3 + 3*b2^2*b3*(3*c13 + 8*c14 - 2*c7)/9"
             " + 3*b2*b3^2*(-3*c12 + 3*c13 + c14 + 3*c19 + 5*c20 + c4 - 2*c6 + c7)/9"
             " + 3*b1*b3^2*(-6*c12 + 12*c19 + 2*c20 + 2*c4 - c5)/9"
             " + 3*b1^2*b3*(15*c12 + c14 - 4*c4 - 2*c5 - c6)/9"
             " + 6*b1*b2*b3*(3*c12 + 6*c13 + 3*c14 - c4 + c5 - 4*c6 + c7)/9 + b3^3*c24"},
        {25, "b1^3*c5 + 3*b1^2*b2*(5*c6 - 2*c7)/3 + 3*b1*b2^2*(4*c7 - c8)/3 + b2^3*c8"
             " + 3*b2^2*b3*(4*c15 - c8)/3 + 3*b2*b3^2*(5*c21 - 2*c15)/3 + 3*b3^2*b1*(c14 + 3*c20 - c21)/3"
             " + 3*b3*b1^2*(3*c13 + c14 - c6)/3 + 6*b1*b2*b3*(5*c14 - c7 - c15)/3 + b3^3*c25"},
    };
    return r;
}

/// The C^3 side condition (= 0).
inline const std::string& expected_c3_condition()
{
    static const std::string s =
        "(3*b1^2*b2 - 3*b1*b2^2)*(c2 - 2*c3 + 2*c4 - 2*c5 + 2*c6 - c7)/3"
        " + 3*b1^2*b3*(c11 - 3*c12 + c13 + c2 - 2*c3 + 2*c4)/3"
        " + 3*b2^2*b3*(c11 - 3*c12 + c13 + c7 - 2*c6 + 2*c5)/3"
        " + 3*b1*b3^2*(-5*c11 + 6*c12 + c13 + 9*c18 - 9*c19 - 2*c2 + 4*c3 - 4*c4)/6"
        " + 3*b2*b3^2*(-5*c13 + 6*c12 + c11 + 9*c19 - 9*c18 - 2*c7 + 4*c6 - 4*c5)/6"
        " + 6*b1*b2*b3*(-2*c11 + 6*c12 - 2*c13 - c2 + 2*c3 - 2*c4 - 2*c5 + 2*c6 - c7)/3";
    return s;
}

/// dim S^r_d on the 12-split for d = 0..9 and r = -1..d.
inline const std::vector<std::vector<long>>& expected_dims()
{
    static const std::vector<std::vector<long>> d{
        {12, 1},
        {36, 10, 3},
        {72, 31, 12, 6},
        {120, 64, 30, 16, 10},
        {180, 109, 60, 34, 21, 15},
        {252, 166, 102, 61, 39, 27, 21},
        {336, 235, 156, 100, 66, 46, 34, 28},
        {432, 316, 222, 151, 102, 73, 54, 42, 36},
        {540, 409, 300, 214, 150, 109, 81, 63, 51, 45},
        {660, 514, 390, 289, 210, 154, 117, 91, 73, 61, 55},
    };
    return d;
}

} // namespace ps12::testing
