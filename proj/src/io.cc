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


#include "paving/io.h"

#include <fstream>
#include <limits>
#include <sstream>

namespace paving {
namespace {

std::vector<std::vector<int>> SetLists(const std::vector<ElementSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (ElementSet s : sets) out.push_back(ToElements(s));
  return out;
}

std::vector<ElementSet> ReadSetList(const Json& list, int n,
                                    const char* field) {
  if (!list.is_array()) {
    throw Error(ErrorCode::kParseError,
                std::string("\"") + field + "\" must be an array");
  }
  std::vector<ElementSet> out;
  for (const Json& entry : list) {
    if (!entry.is_array()) {
      throw Error(ErrorCode::kParseError,
                  std::string("entries of \"") + field + "\" must be arrays");
    }
    ElementSet s = 0;
    int previous = -1;
    for (const Json& e : entry) {
      if (!e.is_number_integer()) {
        throw Error(ErrorCode::kParseError, "elements must be integers");
      }
      const int value = e.get<int>();
      if (value < 0 || value >= n) {
        throw Error(ErrorCode::kElementOutOfRange,
                    "element " + std::to_string(value) + " out of range");
      }
      if (value <= previous) {
        throw Error(ErrorCode::kParseError,
                    "element lists must be strictly increasing");
      }
      previous = value;
      s |= Singleton(value);
    }
    out.push_back(s);
  }
  return out;
}

int ReadInt(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    throw Error(ErrorCode::kParseError,
                std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

Json BigIntToJson(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return ToString(value);
}

Json RationalToJson(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return BigIntToJson(boost::multiprecision::numerator(value));
  }
  return ToString(value);
}

Json MatroidToJson(const Matroid& m) {
  Json j;
  j["n"] = m.size();
  j["bases"] = SetLists(m.bases());
  return j;
}

Matroid MatroidFromJson(const Json& j) {
  const int n = ReadInt(j, "n");
  if (n < 0 || n > kMaxStoredElements) {
    throw Error(ErrorCode::kCapExceeded, "ground set size out of range");
  }
  if (!j.contains("bases")) {
    throw Error(ErrorCode::kParseError, "missing field \"bases\"");
  }
  return Matroid::FromBases(n, ReadSetList(j["bases"], n, "bases"));
}

Json DesignToJson(const BlockDesign& design) {
  Json j;
  j["n"] = design.n;
  j["k"] = design.k;
  j["blocks"] = SetLists(design.blocks);
  return j;
}

BlockDesign DesignFromJson(const Json& j) {
  BlockDesign design;
  design.n = ReadInt(j, "n");
  design.k = ReadInt(j, "k");
  if (design.n < 0 || design.n > kMaxStoredElements) {
    throw Error(ErrorCode::kCapExceeded, "point count out of range");
  }
  if (!j.contains("blocks")) {
    throw Error(ErrorCode::kParseError, "missing field \"blocks\"");
  }
  design.blocks = ReadSetList(j["blocks"], design.n, "blocks");
  return design;
}

Json TutteToJson(const TuttePolynomial& t) {
  Json terms = Json::array();
  for (const auto& [exponents, c] : t.terms()) {
    terms.push_back(
        {{"i", exponents.first}, {"j", exponents.second}, {"c", BigIntToJson(c)}});
  }
  Json j;
  j["terms"] = terms;
  return j;
}

Json WitnessToJson(const Multicomplex& mc) {
  const OSequence census = OSequenceOf(mc);
  Json maximal = Json::array();
  for (const Monomial& m : mc.MaximalElements()) maximal.push_back(m.exponents());
  Json j;
  j["d"] = mc.num_variables();
  j["maximal"] = maximal;
  j["o_sequence"] = census.entries;
  j["pure"] = census.pure;
  return j;
}

Json HVectorReport(const Matroid& m) {
  const FVector f = FVectorOf(m);
  const HVector h = HFromF(f);
  Json fj = Json::array();
  for (const BigInt& v : f.entries) fj.push_back(BigIntToJson(v));
  Json hj = Json::array();
  for (const BigInt& v : h.entries) hj.push_back(BigIntToJson(v));
  Json bounds;
  if (m.rank() >= 1) {
    bounds["S"] = BigIntToJson(BrownColbournBound(m.rank(), m.size()));
  } else {
    bounds["S"] = nullptr;
  }
  bounds["hibi"] = HibiCheck(h);
  if (m.size() >= 2 && IsConnected(m)) {
    bounds["brown_colbourn"] = BrownColbournCheck(h);
  } else {
    bounds["brown_colbourn"] = nullptr;
  }
  Json j;
  j["f"] = fj;
  j["h"] = hj;
  j["bounds"] = bounds;
  return j;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

}  // namespace paving
