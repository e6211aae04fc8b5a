/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Reference values, shared by the verify command and the tests.

#include <cstdint>
#include <utility>
#include <vector>

namespace gijswijt::golden {

// Rows are levels 1.., columns are t = 1..
inline const std::vector<std::vector<const char*>> kBWords = {
    {"1", "112", "112112223", "1121122231121122232"},
    {"2", "2223", "2223222322233", "222322232223322232223222332223222322233334"},
    {"3", "33334", "(33334)^44", "(333343333433334333344)^44"},
    {"4", "444445", "(444445)^55", "((444445)^55)^55"},
};

inline const std::vector<std::vector<const char*>> kSWords = {
    {"2", "223", "2", "223222332", "2232", "223222332223222322233334", "2"},
    {"3", "3", "334", "3", "3", "334", "3"},
    {"4", "4", "4", "445", "4", "4", "4"},
    {"5", "5", "5", "5", "556", "5", "5"},
};

inline const std::vector<std::vector<const char*>> kTWords = {
    {"", "2", "2223", "22232", "22232223222332", "222322232223322232"},
    {"", "3", "33", "33334", "333343", "3333433"},
    {"", "4", "44", "444", "444445", "4444454"},
    {"", "5", "55", "555", "5555", "5555556"},
};

inline const std::vector<std::vector<const char*>> kPWords = {
    {"1", "112", "112112223", "1121122231121122232"},
    {"2", "223", "22322233", "223222332223222322233334"},
    {"3", "334", "334333344", "334333344(33334)^444"},
    {"4", "445", "4454444455", "4454444455(444445)^555"},
};

inline const std::vector<std::vector<std::uint64_t>> kBeta = {
    {1, 3, 9, 19, 47, 98, 220, 441},
    {1, 4, 13, 42, 127, 382, 1149, 3448},
    {1, 5, 21, 85, 343, 1373, 5493, 21973},
    {1, 6, 31, 156, 781, 3908, 19541, 97706},
    {1, 7, 43, 259, 1555, 9331, 55989, 335935},
};

inline const std::vector<std::vector<std::uint64_t>> kSigma = {
    {1, 3, 1, 9, 4, 24, 1, 3, 1},
    {1, 1, 3, 1, 1, 3, 1, 1, 9},
    {1, 1, 1, 3, 1, 1, 1, 3, 1},
    {1, 1, 1, 1, 3, 1, 1, 1, 1},
};

inline const std::vector<std::vector<std::uint64_t>> kTau = {
    {0, 1, 4, 5, 14, 18, 42, 43, 46, 47},
    {0, 1, 2, 5, 6, 7, 10, 11, 12, 21},
    {0, 1, 2, 3, 6, 7, 8, 9, 12, 13},
    {0, 1, 2, 3, 4, 7, 8, 9, 10, 11},
};

inline const std::vector<std::uint64_t> kIota1 = {0,  1,  2,  3,  5,  7,  8,  9,  10, 11, 13, 15,
                                                  16, 17, 18, 19, 21, 23, 24, 25, 26, 27, 29, 31};

// V_2 .. V_10.
inline const std::vector<std::vector<std::uint64_t>> kV = {
    {0,  1,  2,  4,  5,  6,  8,  9,  10, 16, 17, 18, 20, 21,
     22, 24, 25, 26, 32, 33, 34, 36, 37, 38, 40, 41, 42, 65},
    {0, 1, 2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 15, 16, 17, 18, 25, 26, 27, 28, 30, 31, 32, 33, 35},
    {0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 24, 25, 26, 27, 28},
    {0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 18, 19, 21, 22, 23, 24, 25, 26, 28},
    {0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20, 21, 22, 24, 25, 26, 27},
    {0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 18, 19, 20, 21, 22, 23, 24, 25, 27},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25, 26},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 24, 25, 26},
};

inline const std::vector<std::uint64_t> kQ = {0,  1,  3,  4,  10, 13, 27,  29,  30,  36,  39,
                                              79, 80, 82, 83, 89, 92, 106, 108, 109, 115, 118};

inline const std::vector<std::pair<std::uint64_t, std::uint64_t>> kR = {
    {0, 1}, {0, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {3, 4}, {0, 5}, {1, 5}, {3, 5}, {0, 6}, {1, 6}};

// nu_1 .. nu_10 and epsilon_1 .. epsilon_10, truncated to 20 decimals.
inline const std::vector<const char*> kNu = {"0.69167220878112615338", "0.97499818801525412389",
                                             "0.99706744867944596417", "0.99974398361495135688",
                                             "0.99998213871077214353", "0.99999895920066611157",
                                             "0.99999994784593543295", "0.99999999770562240670",
                                             "0.99999999990999999999", "0.99999999999681369182"};

inline const std::vector<const char*> kEpsilon = {
    "3.48669886438365597023", "1.57722792399450069410", "1.34117647221804980007",
    "1.25064020486555700507", "1.20004286785982209838", "1.16666909520097335655",
    "1.14285726206643951335", "1.12500000516234959675", "1.11111111131111111113",
    "1.10000000000700987798"};

inline const char* const kPrefix1 = "112112223112112223211211222311211222322232223321";
inline const char* const kPrefix2 = "2223222322233222322232223322232223222333342";
inline const char* const kPrefix3 = "33334333343333433334433334333343333433334433";

inline const char* const kIota1InvPow79 = "418090195952691922788354";
inline const char* const kPhi25 = "77709404388415370160829246932345692180";
inline const char* const kBeta1At356 =
    "25589564863481820837006445230476955826170017081747282339808165552443802180662080981329500828"
    "1436789493636146";

}  // namespace gijswijt::golden
