#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellcalc/algebra.hpp"
#include "cellcalc/bimodcat.hpp"
#include "cellcalc/cells.hpp"
#include "cellcalc/errors.hpp"
#include "cellcalc/families.hpp"
#include "cellcalc/json_io.hpp"
#include "cellcalc/tworep.hpp"

namespace {

using cellcalc::Algebra;
using cellcalc::json;
using cellcalc::MorLabel;
using cellcalc::Subcat;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInputError = 3;

struct SourceOptions {
  std::string builtin;
  std::string file;
  int lengthBound = cellcalc::kDefaultLengthBound;
  std::string format = "ascii";
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  auto* builtin = cmd->add_option("--builtin", src.builtin,
                                  "builtin family (zigzag-star:k, zigzag:<graph-file>, an:n, "
                                  "two-vertex-ab)");
  auto* file = cmd->add_option("--file", src.file, "algebra description file (JSON)");
  builtin->excludes(file);
  cmd->add_option("--length-bound", src.lengthBound, "path-length bound for basis computation")
      ->envname("CELLCALC_LENGTH_BOUND")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", src.format, "output format")
      ->check(CLI::IsMember({"ascii", "json"}));
}

Algebra load_algebra(const SourceOptions& src) {
  if (!src.builtin.empty()) return cellcalc::builtin_algebra(src.builtin, src.lengthBound);
  if (!src.file.empty())
    return cellcalc::algebra_from_json(cellcalc::load_json_file(src.file), src.lengthBound);
  throw cellcalc::InputError("no algebra source: pass --builtin or --file");
}

int vertex_by_label(const Algebra& a, const std::string& label) {
  for (int v = 0; v < a.m(); ++v)
    if (a.vertexNames[v] == label) return v;
  throw cellcalc::InputError("unknown vertex label: " + label);
}

// comma-separated vertex labels; "a..b" spans an integer label range
std::vector<int> parse_vertex_list(const Algebra& a, const std::string& text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw cellcalc::InputError("empty entry in vertex list: " + text);
    if (auto dots = token.find(".."); dots != std::string::npos) {
      std::string lo = token.substr(0, dots), hi = token.substr(dots + 2);
      try {
        int from = std::stoi(lo), to = std::stoi(hi);
        for (int v = from; v <= to; ++v) out.push_back(vertex_by_label(a, std::to_string(v)));
      } catch (const std::invalid_argument&) {
        throw cellcalc::InputError("range endpoints must be integers: " + token);
      } catch (const std::out_of_range&) {
        throw cellcalc::InputError("range endpoints must be integers: " + token);
      }
      token.clear();
      return;
    }
    out.push_back(vertex_by_label(a, token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token += c;
    }
  }
  flush();
  return out;
}

// "(i,j);(k,l)" with vertex labels inside the parentheses
std::set<std::pair<int, int>> parse_generator_list(const Algebra& a, const std::string& text) {
  std::set<std::pair<int, int>> gens;
  std::string item;
  auto flush = [&]() {
    if (item.empty()) return;
    if (item.front() != '(' || item.back() != ')')
      throw cellcalc::InputError("generator must look like (i,j): " + item);
    std::string body = item.substr(1, item.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos)
      throw cellcalc::InputError("generator must look like (i,j): " + item);
    gens.insert({vertex_by_label(a, body.substr(0, comma)),
                 vertex_by_label(a, body.substr(comma + 1))});
    item.clear();
  };
  for (char c : text) {
    if (c == ';') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      item += c;
    }
  }
  flush();
  if (gens.empty()) throw cellcalc::InputError("empty generator list");
  return gens;
}

std::string subset_str(const Algebra& a, const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) out += ",";
    out += a.vertexNames[vs[k]];
  }
  return out + "}";
}

void emit(const json& j, const SourceOptions& src, const std::string& ascii) {
  if (src.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << ascii;
}

int cmd_info(const SourceOptions& src) {
  Algebra a = load_algebra(src);
  std::vector<int> layers = cellcalc::radical_layer_dims(a);
  std::map<int, int> nak = cellcalc::nakayama_partial(a);
  bool selfInj = cellcalc::is_self_injective(a);
  bool weakSym = cellcalc::is_weakly_symmetric(a);

  std::string ascii = "dimension: " + std::to_string(a.dim()) + "\n";
  ascii += "vertices:";
  for (const std::string& v : a.vertexNames) ascii += " " + v;
  ascii += "\ncartan:\n";
  for (int i = 0; i < a.m(); ++i) {
    for (int j = 0; j < a.m(); ++j)
      ascii += (j ? " " : "") + std::to_string(a.dims.at(i, j));
    ascii += "\n";
  }
  ascii += "radical layers:";
  for (int d : layers) ascii += " " + std::to_string(d);
  ascii += "\nnakayama:";
  if (nak.empty()) ascii += " (empty)";
  for (auto [j, i] : nak) ascii += " " + a.vertexNames[j] + "->" + a.vertexNames[i];
  ascii += "\nself-injective: " + std::string(selfInj ? "yes" : "no") + "\n";
  ascii += "weakly symmetric: " + std::string(weakSym ? "yes" : "no") + "\n";

  json j;
  j["dimension"] = a.dim();
  j["vertices"] = a.vertexNames;
  j["cartan"] = cellcalc::matrix_to_json(a.dims);
  j["radicalLayers"] = layers;
  json nj = json::object();
  for (auto [jj, ii] : nak) nj[a.vertexNames[jj]] = a.vertexNames[ii];
  j["nakayama"] = std::move(nj);
  j["selfInjective"] = selfInj;
  j["weaklySymmetric"] = weakSym;
  j["algebra"] = cellcalc::algebra_to_json(a);
  emit(j, src, ascii);
  return kExitPass;
}

int cmd_cores(const SourceOptions& src, const std::string& checkList) {
  Algebra a = load_algebra(src);
  if (!checkList.empty()) {
    std::vector<int> u = parse_vertex_list(a, checkList);
    cellcalc::CoreCheck check = cellcalc::is_core(a, u);
    std::string ascii = check.ok
                            ? "yes\n"
                            : "no, witness i = " + a.vertexNames[check.witness] + "\n";
    json j;
    j["u"] = json::array();
    for (int v : cellcalc::normalize_subset(a, u)) j["u"].push_back(a.vertexNames[v]);
    j["isCore"] = check.ok;
    if (!check.ok) j["witness"] = a.vertexNames[check.witness];
    j["algebra"] = cellcalc::algebra_to_json(a);
    emit(j, src, ascii);
    return check.ok ? kExitPass : kExitCheckFailure;
  }
  std::vector<std::vector<int>> cores = cellcalc::enumerate_cores(a);
  std::string ascii = "cores (" + std::to_string(cores.size()) + "):\n";
  for (const auto& u : cores) ascii += subset_str(a, u) + "\n";
  json j;
  j["count"] = cores.size();
  j["cores"] = json::array();
  for (const auto& u : cores) {
    json labels = json::array();
    for (int v : u) labels.push_back(a.vertexNames[v]);
    j["cores"].push_back(std::move(labels));
  }
  j["algebra"] = cellcalc::algebra_to_json(a);
  emit(j, src, ascii);
  return kExitPass;
}

struct SubcatSpec {
  std::string u, v, gens;
};

Subcat resolve_subcat(const Algebra& a, const SubcatSpec& spec, std::string& note) {
  if (!spec.gens.empty()) {
    if (!spec.u.empty() || !spec.v.empty())
      throw cellcalc::InputError("pass either --gens or --u/--v, not both");
    Subcat s = cellcalc::closure(a, parse_generator_list(a, spec.gens));
    note = "closure applied: " + std::to_string(s.labels.size()) + " labels\n";
    return s;
  }
  if (spec.u.empty() || spec.v.empty())
    throw cellcalc::InputError("subcategory needs --u and --v, or --gens");
  return cellcalc::product_subcat(a, parse_vertex_list(a, spec.u), parse_vertex_list(a, spec.v));
}

std::string label_list_str(const Algebra& a, const std::vector<int>& elements,
                           const cellcalc::CellDecomposition& cd) {
  std::string out = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k) out += ",";
    out += cellcalc::to_string(a, cd.element(elements[k]));
  }
  return out + "}";
}

int cmd_subcat(const SourceOptions& src, const SubcatSpec& spec, const std::string& report) {
  Algebra a = load_algebra(src);
  std::string note;
  Subcat s = resolve_subcat(a, spec, note);
  json j;
  j["algebra"] = cellcalc::algebra_to_json(a);
  j["subcat"] = cellcalc::subcat_to_json(s);
  std::string ascii = note;

  if (report == "fiat") {
    cellcalc::FiatReport fiat = cellcalc::is_weakly_fiat(a, s);
    ascii += "weakly fiat: " + std::string(fiat.weaklyFiat ? "yes" : "no") + "\n";
    json starJ = json::object();
    if (fiat.weaklyFiat) {
      for (const auto& [x, y] : fiat.star) {
        ascii += "  " + cellcalc::to_string(a, x) + "* = " + cellcalc::to_string(a, y) + "\n";
        starJ[cellcalc::to_string(a, x)] = cellcalc::to_string(a, y);
      }
    } else {
      std::string why = fiat.failureWhy == cellcalc::AdjointResult::Why::NoPartner
                            ? "no adjoint exists"
                            : "adjoint lies outside the subcategory";
      ascii += "  failing label: " + cellcalc::to_string(a, *fiat.failureLabel) + " (" +
               (fiat.failureOnLeft ? std::string("left: ") : std::string("right: ")) + why +
               ")\n";
      j["failure"] = {{"label", cellcalc::to_string(a, *fiat.failureLabel)},
                      {"side", fiat.failureOnLeft ? "left" : "right"},
                      {"reason", why}};
    }
    j["weaklyFiat"] = fiat.weaklyFiat;
    j["star"] = std::move(starJ);
    emit(j, src, ascii);
    return kExitPass;
  }

  if (report == "adjoints") {
    json rows = json::array();
    std::vector<MorLabel> elements{MorLabel::id()};
    for (auto [i, jj] : s.labels) elements.push_back(MorLabel::f(i, jj));
    for (const MorLabel& x : elements) {
      auto describe = [&](const cellcalc::AdjointResult& r) -> std::pair<std::string, json> {
        switch (r.why) {
          case cellcalc::AdjointResult::Why::Ok:
            return {cellcalc::to_string(a, *r.label),
                    json{{"status", "present"}, {"label", cellcalc::to_string(a, *r.label)}}};
          case cellcalc::AdjointResult::Why::NoPartner:
            return {"absent (no adjoint exists)", json{{"status", "no-partner"}}};
          default:
            return {"absent (outside subcategory: " + cellcalc::to_string(a, *r.candidate) + ")",
                    json{{"status", "outside"},
                         {"candidate", cellcalc::to_string(a, *r.candidate)}}};
        }
      };
      auto [rightText, rightJ] = describe(cellcalc::right_adjoint(a, s, x));
      auto [leftText, leftJ] = describe(cellcalc::left_adjoint(a, s, x));
      ascii += cellcalc::to_string(a, x) + ": right = " + rightText + ", left = " + leftText +
               "\n";
      rows.push_back({{"label", cellcalc::to_string(a, x)},
                      {"right", std::move(rightJ)},
                      {"left", std::move(leftJ)}});
    }
    j["adjoints"] = std::move(rows);
    emit(j, src, ascii);
    return kExitPass;
  }

  cellcalc::CellDecomposition cd = cellcalc::cell_decomposition(a, s);
  std::vector<int> idem = cellcalc::idempotent_jcells(a, s, cd);
  std::vector<int> vac = cellcalc::vacuous_cells(a, s, cd);
  bool superdiagonal = cellcalc::classify(a, s).superdiagonal;

  if (report == "eggbox") {
    ascii += cellcalc::eggbox_ascii(a, cd, idem, vac);
    json box = cellcalc::eggbox_to_json(a, cd, idem, vac);
    j.update(box);
    if (!superdiagonal) {
      j["extendedSemantics"] = true;
      ascii += "note: vacuous flags use extended semantics (label set is not superdiagonal)\n";
    }
    emit(j, src, ascii);
    return kExitPass;
  }

  // report == "cells"
  auto partition_lines = [&](const char* title, const std::vector<std::vector<int>>& cells) {
    std::string out = std::string(title) + ":\n";
    for (const auto& cell : cells) out += "  " + label_list_str(a, cell, cd) + "\n";
    return out;
  };
  ascii += partition_lines("left cells", cd.leftCells);
  ascii += partition_lines("right cells", cd.rightCells);
  ascii += partition_lines("J-cells (greatest first)", cd.jCells);
  ascii += "idempotent J-cells:";
  for (int c : idem) ascii += " " + label_list_str(a, cd.jCells[c], cd);
  ascii += "\nvacuous J-cells:";
  if (vac.empty()) ascii += " none";
  for (int c : vac) ascii += " " + label_list_str(a, cd.jCells[c], cd);
  ascii += "\n";
  if (!superdiagonal)
    ascii += "note: vacuous flags use extended semantics (label set is not superdiagonal)\n";
  ascii += "strongly regular:";
  for (int c = 0; c < static_cast<int>(cd.jCells.size()); ++c)
    ascii += std::string(" ") + (cellcalc::is_strongly_regular(cd, c) ? "yes" : "no");
  ascii += "\n";

  auto cells_json = [&](const std::vector<std::vector<int>>& cells) {
    json out = json::array();
    for (const auto& cell : cells) {
      json members = json::array();
      for (int e : cell) members.push_back(cellcalc::to_string(a, cd.element(e)));
      out.push_back(std::move(members));
    }
    return out;
  };
  j["leftCells"] = cells_json(cd.leftCells);
  j["rightCells"] = cells_json(cd.rightCells);
  j["jCells"] = cells_json(cd.jCells);
  json jorder = json::array();
  for (auto [from, to] : cd.jOrder) jorder.push_back({from, to});
  j["jorder"] = std::move(jorder);
  j["idempotent"] = idem;
  j["vacuous"] = vac;
  if (!superdiagonal) j["extendedSemantics"] = true;
  json regular = json::array();
  for (int c = 0; c < static_cast<int>(cd.jCells.size()); ++c)
    regular.push_back(cellcalc::is_strongly_regular(cd, c));
  j["stronglyRegular"] = std::move(regular);
  emit(j, src, ascii);
  return kExitPass;
}

int cmd_verify(const SourceOptions& src, const std::string& uList, const std::string& vList) {
  Algebra a = load_algebra(src);
  std::vector<int> u = parse_vertex_list(a, uList);
  std::vector<int> v = parse_vertex_list(a, vList);
  cellcalc::SuiteReport report = cellcalc::theorem_consequence_suite(a, u, v);
  std::string ascii;
  for (const cellcalc::SuiteItem& item : report.items)
    ascii += std::string(item.pass ? "[PASS] " : "[FAIL] ") + item.name + " - " + item.detail +
             "\n";
  if (report.allPass) ascii += "conclusion: " + report.conclusion + "\n";
  json j = cellcalc::suite_to_json(a, report);
  j["algebra"] = cellcalc::algebra_to_json(a);
  emit(j, src, ascii);
  return report.allPass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cell structure calculator for projective-bimodule 2-categories"};
  app.require_subcommand(1);

  SourceOptions src;
  std::string checkList, uList, vList, report;
  SubcatSpec spec;

  CLI::App* info = app.add_subcommand("info", "algebra summary: dimension, Cartan data, duality");
  add_source_options(info, src);

  CLI::App* cores = app.add_subcommand("cores", "enumerate or check self-injective cores");
  add_source_options(cores, src);
  cores->add_option("--check", checkList, "vertex subset to test instead of enumerating");

  CLI::App* subcat = app.add_subcommand("subcat", "analyze a combinatorial 2-subcategory");
  add_source_options(subcat, src);
  subcat->add_option("--u", spec.u, "row vertex subset (product form)");
  subcat->add_option("--v", spec.v, "column vertex subset (product form)");
  subcat->add_option("--gens", spec.gens, "generator labels \"(i,j);(k,l)\" (closure form)");
  subcat->add_option("report", report, "report kind")
      ->required()
      ->check(CLI::IsMember({"cells", "eggbox", "fiat", "adjoints"}));

  CLI::App* verify = app.add_subcommand("verify", "run the classification consequence suite");
  add_source_options(verify, src);
  verify->add_option("--u", uList, "core vertex subset")->required();
  verify->add_option("--v", vList, "column vertex subset containing U")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(src);
    if (cores->parsed()) return cmd_cores(src, checkList);
    if (subcat->parsed()) return cmd_subcat(src, spec, report);
    return cmd_verify(src, uList, vList);
  } catch (const cellcalc::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const cellcalc::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
