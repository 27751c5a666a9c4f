// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON encodings of matroids, designs, Tutte polynomials, h-vectors and
// multicomplex witnesses.

#ifndef PAVING_IO_H_
#define PAVING_IO_H_

#include <string>

#include <json.hpp>

#include "paving/complex_hvec.h"
#include "paving/designs.h"
#include "paving/matroid.h"
#include "paving/multicomplex.h"
#include "paving/tutte.h"

namespace paving {

using Json = nlohmann::ordered_json;

// {"n": 4, "bases": [[0, 1], ...]}. Bases are written in lexicographic order.
Json MatroidToJson(const Matroid& m);
// Validates the matroid axioms. Throws ParseError on malformed input.
Matroid MatroidFromJson(const Json& j);

// {"n": 7, "k": 3, "blocks": [[0, 1, 3], ...]}
Json DesignToJson(const BlockDesign& design);
BlockDesign DesignFromJson(const Json& j);

// {"terms": [{"i": 1, "j": 0, "c": 2}, ...]} sorted by (i, j).
Json TutteToJson(const TuttePolynomial& t);

// {"d": 2, "maximal": [[1, 1]], "o_sequence": [1, 2, 1], "pure": true}, with
// d the number of variables.
Json WitnessToJson(const Multicomplex& mc);

// {"f": [...], "h": [...], "bounds": {"S": .., "hibi": .., "brown_colbourn": ..}}
// brown_colbourn is only evaluated for connected matroids on at least two
// elements and is null otherwise.
Json HVectorReport(const Matroid& m);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json BigIntToJson(const BigInt& value);
// Integral values as numbers, others as "p/q".
Json RationalToJson(const Rational& value);

// Parses a file; throws ParseError when it cannot be read or parsed.
Json ReadJsonFile(const std::string& path);

}  // namespace paving

#endif  // PAVING_IO_H_
