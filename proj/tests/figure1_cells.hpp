/* Copyright 2026 The ydfusion Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Reference cells of the p = 5 classification table for a = 0, 1, 4:
// the module generated from V^{a,b}_{0,t}, with the raw (signed) braiding
// index.

#pragma once

#include <array>

namespace ydf::testdata {

struct Figure1Cell {
  int a, t, b;
  char kind;
  int r, nu;
};

inline constexpr std::array<Figure1Cell, 75> kFigure1Cells{{
    {0, 0, 0, 'X', 1, 0}, {0, 1, 0, 'X', 4, 1}, {0, 2, 0, 'L', 2, 1},
    {0, 3, 0, 'S', 5, 2}, {0, 4, 0, 'B', 3, 2}, {0, 0, 1, 'X', 2, 0},
    {0, 1, 1, 'S', 5, 1}, {0, 2, 1, 'X', 3, 1}, {0, 3, 1, 'L', 1, 1},
    {0, 4, 1, 'B', 4, 2}, {0, 0, 2, 'X', 3, 0}, {0, 1, 2, 'L', 1, 0},
    {0, 2, 2, 'B', 4, 1}, {0, 3, 2, 'X', 2, 1}, {0, 4, 2, 'S', 5, 2},
    {0, 0, 3, 'X', 4, 0}, {0, 1, 3, 'L', 2, 0}, {0, 2, 3, 'S', 5, 1},
    {0, 3, 3, 'B', 3, 1}, {0, 4, 3, 'X', 1, 1}, {0, 0, 4, 'S', 5, 0},
    {0, 1, 4, 'L', 3, 0}, {0, 2, 4, 'L', 1, 0}, {0, 3, 4, 'B', 4, 1},
    {0, 4, 4, 'B', 2, 1}, {1, 0, 0, 'X', 2, 0}, {1, 1, 0, 'S', 5, 1},
    {1, 2, 0, 'X', 3, 1}, {1, 3, 0, 'L', 1, 1}, {1, 4, 0, 'B', 4, 2},
    {1, 0, 1, 'X', 3, 0}, {1, 1, 1, 'X', 1, 0}, {1, 2, 1, 'X', 4, 1},
    {1, 3, 1, 'X', 2, 1}, {1, 4, 1, 'S', 5, 2}, {1, 0, 2, 'X', 4, 0},
    {1, 1, 2, 'X', 2, 0}, {1, 2, 2, 'S', 5, 1}, {1, 3, 2, 'X', 3, 1},
    {1, 4, 2, 'X', 1, 1}, {1, 0, 3, 'S', 5, 0}, {1, 1, 3, 'X', 3, 0},
    {1, 2, 3, 'L', 1, 0}, {1, 3, 3, 'B', 4, 1}, {1, 4, 3, 'X', 2, 1},
    {1, 0, 4, 'L', 1, -1}, {1, 1, 4, 'B', 4, 0}, {1, 2, 4, 'L', 2, 0},
    {1, 3, 4, 'S', 5, 1}, {1, 4, 4, 'B', 3, 1}, {4, 0, 0, 'S', 5, 0},
    {4, 1, 0, 'L', 3, 0}, {4, 2, 0, 'L', 1, 0}, {4, 3, 0, 'B', 4, 1},
    {4, 4, 0, 'B', 2, 1}, {4, 0, 1, 'L', 1, -1}, {4, 1, 1, 'B', 4, 0},
    {4, 2, 1, 'L', 2, 0}, {4, 3, 1, 'S', 5, 1}, {4, 4, 1, 'B', 3, 1},
    {4, 0, 2, 'L', 2, -1}, {4, 1, 2, 'S', 5, 0}, {4, 2, 2, 'B', 3, 0},
    {4, 3, 2, 'L', 1, 0}, {4, 4, 2, 'B', 4, 1}, {4, 0, 3, 'L', 3, -1},
    {4, 1, 3, 'L', 1, -1}, {4, 2, 3, 'B', 4, 0}, {4, 3, 3, 'B', 2, 0},
    {4, 4, 3, 'S', 5, 1}, {4, 0, 4, 'L', 4, -1}, {4, 1, 4, 'L', 2, -1},
    {4, 2, 4, 'S', 5, 0}, {4, 3, 4, 'B', 3, 0}, {4, 4, 4, 'B', 1, 0},
}};

}  // namespace ydf::testdata
