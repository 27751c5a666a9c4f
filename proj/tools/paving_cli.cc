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


// Command-line front end: paving <subcommand> [options].

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paving/complex_hvec.h"
#include "paving/designs.h"
#include "paving/domination.h"
#include "paving/io.h"
#include "paving/isomorphism.h"
#include "paving/matroid.h"
#include "paving/multicomplex.h"
#include "paving/necklace.h"
#include "paving/paving_enum.h"
#include "paving/tutte.h"

namespace paving {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitValidation = 3;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapExceeded:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kSizeCap:
      return kExitBudget;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidRank:
    case ErrorCode::kInvalidLambda:
    case ErrorCode::kBasisCountOutOfRange:
    case ErrorCode::kNotCoprime:
    case ErrorCode::kDimensionMismatch:
      return kExitUsage;
    default:
      return kExitValidation;
  }
}

std::string Scalar(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const Json& e : v) {
      if (!out.empty()) out += " ";
      out += e.is_array() ? "(" + Scalar(e) + ")" : Scalar(e);
    }
    return out;
  }
  return v.dump();
}

bool IsRowArray(const Json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(),
                     [](const Json& e) { return e.is_object(); });
}

void RenderRows(const Json& rows, std::ostream& out) {
  std::vector<std::string> columns;
  for (const auto& [key, value] : rows.front().items()) columns.push_back(key);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const Json& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? Scalar(row[columns[c]]) : "-");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) text += "  ";
      text += line[c] + std::string(width[c] - line[c].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << "  " << text << "\n";
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
}

void RenderTable(const Json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix + key;
    if (value.is_object()) {
      RenderTable(value, name + ".", out);
    } else if (IsRowArray(value)) {
      out << name << ":\n";
      RenderRows(value, out);
    } else {
      out << name << ": " << Scalar(value) << "\n";
    }
  }
}

std::string CsvCell(const Json& v) {
  std::string text = Scalar(v);
  if (v.is_array()) {
    std::replace(text.begin(), text.end(), ' ', ';');
  }
  if (text.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  return text;
}

void RenderCsv(const Json& j, const std::string& rows_key, std::ostream& out) {
  if (!rows_key.empty() && j.contains(rows_key) && j[rows_key].is_array()) {
    const Json& rows = j[rows_key];
    if (rows.empty()) return;
    std::vector<std::string> columns;
    for (const auto& [key, value] : rows.front().items()) columns.push_back(key);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << columns[c];
    }
    out << "\n";
    for (const Json& row : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << CsvCell(row.value(columns[c], Json()));
      }
      out << "\n";
    }
    return;
  }
  out << "key,value\n";
  std::function<void(const Json&, const std::string&)> walk =
      [&](const Json& node, const std::string& prefix) {
        for (const auto& [key, value] : node.items()) {
          if (value.is_object()) {
            walk(value, prefix + key + ".");
          } else {
            out << prefix << key << "," << CsvCell(value) << "\n";
          }
        }
      };
  walk(j, "");
}

struct Output {
  std::string format = "table";
  int threads = 1;
};

void Emit(const Output& output, const Json& result,
          const std::string& rows_key = "") {
  if (output.format == "json") {
    std::cout << result.dump(2) << "\n";
  } else if (output.format == "csv") {
    RenderCsv(result, rows_key, std::cout);
  } else {
    RenderTable(result, "", std::cout);
  }
}

Json HVectorJson(const HVector& h) {
  Json out = Json::array();
  for (const BigInt& v : h.entries) out.push_back(BigIntToJson(v));
  return out;
}

std::vector<std::int64_t> ToInt64(const HVector& h) {
  std::vector<std::int64_t> out;
  for (const BigInt& v : h.entries) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::kCapExceeded, "h-vector entry exceeds 64 bits");
    }
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

// Loops never lie in a face and each coloop is a cone point, so removing
// both leaves the h-vector unchanged up to trailing zeros.
Matroid StripLoopsAndColoops(const Matroid& m) {
  return Minor(m, Coloops(m), Loops(m));
}

Json CertifyJson(const Matroid& m, const SearchBudget& budget,
                 std::int64_t general_budget, int& exit_code) {
  const Matroid core = StripLoopsAndColoops(m);
  const HVector h = HFromF(FVectorOf(m));
  Json result;
  result["h"] = HVectorJson(h);
  std::optional<Multicomplex> witness;
  const int n = core.size();
  const int r = core.rank();
  if (IsPaving(core) && r >= 1 && n - r >= 1) {
    result["route"] = "paving";
    const DominationResult dom = FExact(r, n - r, budget);
    if (!dom.optimal) {
      exit_code = kExitBudget;
    }
    witness = CertifyPavingH(n, r, BigInt(core.num_bases()), dom);
  } else {
    result["route"] = "general";
    witness = CertifyGeneralH(ToInt64(h), general_budget);
  }
  result["certified"] = witness.has_value();
  if (witness) {
    result["witness"] = WitnessToJson(*witness);
  } else {
    result["reason"] = "no pure multicomplex has this degree census";
  }
  return result;
}

Json DominationJson(const DominationResult& dom) {
  Json j;
  j["r"] = dom.r;
  j["d"] = dom.d;
  j["f"] = dom.value;
  j["optimal"] = dom.optimal;
  j["lower_bound"] = dom.lower_bound;
  j["nodes"] = dom.nodes_explored;
  j["witness"] = WitnessToJson(Multicomplex::DownwardClosure(dom.d, dom.witness));
  return j;
}

Json EnumerateJson(int r, int n, bool sparse, const EnumerationOptions& options,
                   const std::string& out_dir) {
  const std::vector<Matroid> members =
      sparse ? EnumerateSparsePaving(r, n, options)
             : EnumeratePaving(r, n, options);
  Json rows = Json::array();
  std::ostringstream summary;
  summary << "n,r,bases,paving,sparse,h-vector\n";
  std::int64_t min_bases = -1;
  for (const Matroid& m : members) {
    const std::string hash = CanonicalFormOf(m).Hash();
    const HVector h = HFromF(FVectorOf(m));
    const bool paving = IsPaving(m);
    const bool sparse_paving = IsSparsePaving(m);
    Json row;
    row["hash"] = hash;
    row["bases"] = m.num_bases();
    row["paving"] = paving;
    row["sparse"] = sparse_paving;
    row["h"] = HVectorJson(h);
    rows.push_back(row);
    if (min_bases < 0 || m.num_bases() < min_bases) min_bases = m.num_bases();
    summary << n << "," << r << "," << m.num_bases() << ","
            << (paving ? "true" : "false") << ","
            << (sparse_paving ? "true" : "false") << "," << CsvCell(row["h"])
            << "\n";
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      std::ofstream file(std::filesystem::path(out_dir) / (hash + ".json"));
      file << MatroidToJson(m).dump() << "\n";
    }
  }
  if (!out_dir.empty()) {
    std::ofstream file(std::filesystem::path(out_dir) / "summary.csv");
    file << summary.str();
  }
  Json result;
  result["r"] = r;
  result["n"] = n;
  result["count"] = static_cast<std::int64_t>(members.size());
  result["min_bases"] = min_bases < 0 ? Json() : Json(min_bases);
  result["matroids"] = rows;
  return result;
}

Json BoundsJson(int r, int n, const SearchBudget& budget, int& exit_code) {
  if (r < 1 || r > n) throw Error(ErrorCode::kInvalidRank, "need 1 <= r <= n");
  const BigInt s = BrownColbournBound(r, n);
  const BigInt base = Binomial(n - 1, r - 1);
  Json result;
  result["r"] = r;
  result["n"] = n;
  result["S"] = BigIntToJson(s);
  result["s_bound"] = BigIntToJson(base + s);
  result["sparse_bound"] = RationalToJson(SparseBasisBound(n, r));
  if (n - r >= 1) {
    const DominationResult dom = FExact(r, n - r, budget);
    if (!dom.optimal) exit_code = kExitBudget;
    result["f"] = dom.value;
    result["f_optimal"] = dom.optimal;
    result["f_bound"] = BigIntToJson(base + dom.value);
  } else {
    result["f"] = nullptr;
    result["f_optimal"] = nullptr;
    result["f_bound"] = nullptr;
  }
  return result;
}

int Run(int argc, char** argv) {
  CLI::App app{"h-vectors of paving matroids and monomial covering numbers"};
  app.require_subcommand(1);
  Output output;
  app.add_option("--format", output.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", output.threads, "worker threads for scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  SearchBudget budget;
  std::int64_t max_nodes = -1;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget.seconds,
                    "seconds per branch-and-bound search")
        ->capture_default_str();
    cmd->add_option("--max-nodes", max_nodes,
                    "node limit per search (negative: unlimited)")
        ->capture_default_str();
  };
  int r = 0, n = 0, d = 0, lambda = 0, r_max = 0, d_max = 0;
  std::string b_text;
  std::string path;
  std::string out_dir;
  bool brute = false, sparse = false, no_caps = false;
  bool allow_loops = false, allow_coloops = false;
  std::int64_t general_budget = 10'000'000;

  auto* hvector = app.add_subcommand("hvector", "f-vector, h-vector and bounds");
  hvector->add_option("matroid", path, "matroid JSON file")->required();

  auto* paving_h = app.add_subcommand("paving-h", "h-vector of a paving matroid");
  paving_h->add_option("--n", n)->required();
  paving_h->add_option("--r", r)->required();
  paving_h->add_option("--b", b_text, "number of bases")->required();

  auto* certify = app.add_subcommand("certify", "pure O-sequence witness");
  certify->add_option("matroid", path, "matroid JSON file")->required();
  certify->add_option("--search-budget", general_budget,
                      "node limit for the general search")
      ->capture_default_str();
  add_budget(certify);

  auto* f_solve = app.add_subcommand("f-solve", "exact f(r, d)");
  f_solve->add_option("--r", r)->required();
  f_solve->add_option("--d", d)->required();
  add_budget(f_solve);

  auto* fbar = app.add_subcommand("fbar", "standard colouring bound");
  fbar->add_option("--r", r)->required();
  fbar->add_option("--d", d)->required();

  auto* necklaces = app.add_subcommand("necklaces", "aperiodic necklaces L2");
  necklaces->add_option("--r", r)->required();
  necklaces->add_option("--d", d)->required();
  necklaces->add_flag("--brute", brute, "also count by enumeration");

  auto* scan = app.add_subcommand("scan", "compare f, f_bar and L2 on a grid");
  scan->add_option("--rmax", r_max)->required();
  scan->add_option("--dmax", d_max)->required();
  add_budget(scan);

  auto* enumerate = app.add_subcommand("enumerate", "paving matroids up to isomorphism");
  enumerate->add_option("--r", r)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_flag("--sparse", sparse, "sparse paving only");
  enumerate->add_flag("--allow-loops", allow_loops, "keep matroids with loops");
  enumerate->add_flag("--allow-coloops", allow_coloops,
                      "keep matroids with coloops");
  enumerate->add_flag("--no-caps", no_caps, "lift the rank cap at n = 8");
  enumerate->add_option("--out", out_dir, "write matroid files and summary.csv");

  auto* g = app.add_subcommand("g", "minimum h_r over the paving class");
  g->add_option("--r", r)->required();
  g->add_option("--n", n)->required();
  g->add_flag("--no-caps", no_caps, "lift the rank cap at n = 8");
  g->add_option("--out", out_dir, "write the witness matroid to this file");

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial");
  tutte->add_option("matroid", path, "matroid JSON file")->required();

  auto* tutte_sparse = app.add_subcommand("tutte-sparse",
                                          "closed-form sparse paving Tutte polynomial");
  tutte_sparse->add_option("--n", n)->required();
  tutte_sparse->add_option("--r", r)->required();
  tutte_sparse->add_option("--lambda", lambda)->required();

  auto* steiner = app.add_subcommand("steiner", "sparse paving matroid from a Steiner system");
  steiner->add_option("design", path, "design JSON file");
  bool fano = false;
  steiner->add_flag("--fano", fano, "use the built-in Fano plane");

  auto* bounds = app.add_subcommand("bounds", "basis-count lower bounds");
  bounds->add_option("--r", r)->required();
  bounds->add_option("--n", n)->required();
  add_budget(bounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  budget.max_nodes = max_nodes;

  int exit_code = kExitOk;
  try {
    if (*hvector) {
      Emit(output, HVectorReport(MatroidFromJson(ReadJsonFile(path))));
    } else if (*paving_h) {
      BigInt b;
      try {
        b = BigInt(b_text);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidArgument, "--b must be an integer");
      }
      Json result;
      result["n"] = n;
      result["r"] = r;
      result["b"] = BigIntToJson(b);
      result["h"] = HVectorJson(PavingHVector(n, r, b));
      Emit(output, result);
    } else if (*certify) {
      const Matroid m = MatroidFromJson(ReadJsonFile(path));
      Emit(output, CertifyJson(m, budget, general_budget, exit_code));
    } else if (*f_solve) {
      const DominationResult dom = FExact(r, d, budget);
      if (!dom.optimal) exit_code = kExitBudget;
      Emit(output, DominationJson(dom));
    } else if (*fbar) {
      Json result;
      result["r"] = r;
      result["d"] = d;
      result["f_bar"] = FBar(r, d);
      result["class_sizes"] = ColourClassSizes(r, d);
      Emit(output, result);
    } else if (*necklaces) {
      Json result;
      result["r"] = r;
      result["d"] = d;
      result["L2"] = BigIntToJson(NecklacesL2(r, d));
      if (brute) result["brute"] = NecklacesBruteForce(r, d);
      Emit(output, result);
    } else if (*scan) {
      const std::vector<ScanRow> rows =
          ConjectureScan(r_max, d_max, budget, output.threads);
      Json table = Json::array();
      for (const ScanRow& row : rows) {
        if (row.status == ScanStatus::kTimeout) exit_code = kExitBudget;
        table.push_back({{"r", row.r},
                         {"d", row.d},
                         {"f", row.f},
                         {"f_optimal", row.f_optimal},
                         {"f_bar", row.f_bar},
                         {"L2", BigIntToJson(row.l2)},
                         {"status", std::string(ScanStatusName(row.status))}});
      }
      Json result;
      result["rows"] = table;
      Emit(output, result, "rows");
    } else if (*enumerate) {
      EnumerationOptions options;
      options.loopless = !allow_loops;
      options.coloopless = !allow_coloops;
      options.enforce_caps = !no_caps;
      Emit(output, EnumerateJson(r, n, sparse, options, out_dir), "matroids");
    } else if (*g) {
      EnumerationOptions options;
      options.enforce_caps = !no_caps;
      const GResult value = G(r, n, options);
      Json result;
      result["r"] = r;
      result["n"] = n;
      result["g"] = value.value;
      result["min_bases"] = value.witness.num_bases();
      result["class_size"] = value.class_size;
      result["witness"] = MatroidToJson(value.witness);
      if (!out_dir.empty()) {
        std::ofstream file(out_dir);
        file << MatroidToJson(value.witness).dump() << "\n";
      }
      Emit(output, result);
    } else if (*tutte) {
      Emit(output, TutteToJson(Tutte(MatroidFromJson(ReadJsonFile(path)))),
           "terms");
    } else if (*tutte_sparse) {
      Emit(output, TutteToJson(TutteSparseClosedForm(n, r, lambda)), "terms");
    } else if (*steiner) {
      if (fano == !path.empty()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "give exactly one of a design file or --fano");
      }
      const BlockDesign design =
          fano ? FanoPlane() : DesignFromJson(ReadJsonFile(path));
      const Matroid m = SparseFromSteiner(design);
      const Rational bound = SparseBasisBound(design.n, design.k);
      Json result;
      result["n"] = design.n;
      result["k"] = design.k;
      result["blocks"] = static_cast<std::int64_t>(design.blocks.size());
      result["bases"] = m.num_bases();
      result["bound"] = RationalToJson(bound);
      result["tight"] = Rational(m.num_bases()) == bound;
      result["h"] = HVectorJson(HFromF(FVectorOf(m)));
      result["matroid"] = MatroidToJson(m);
      Emit(output, result);
    } else if (*bounds) {
      Emit(output, BoundsJson(r, n, budget, exit_code));
    }
  } catch (const Error& e) {
    if (output.format == "json") {
      Json err;
      err["error"] = {{"code", std::string(ErrorCodeName(e.code()))},
                      {"message", e.what()}};
      std::cerr << err.dump() << "\n";
    } else {
      std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what()
                << "\n";
    }
    return ExitCodeFor(e.code());
  }
  return exit_code;
}

}  // namespace
}  // namespace paving

int main(int argc, char** argv) { return paving::Run(argc, argv); }
