// Copyright 2026 The prefsplit Authors
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

#include "prefsplit/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "prefsplit/domains.h"
#include "prefsplit/gstree.h"
#include "prefsplit/hardness.h"
#include "prefsplit/oracle.h"
#include "prefsplit/partition2.h"
#include "prefsplit/profile.h"

namespace prefsplit {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string input;
  std::string domain;
  int k = 2;
  std::uint64_t seed = 0;
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
  std::string model = "impartial";
  std::size_t votes = 0;
  std::size_t cands = 0;
  std::size_t groups = 1;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

DomainId RequireDomain(const std::string& name) {
  if (auto d = parse_domain(name)) return *d;
  throw Error(ErrorCode::kBadParams, "unknown domain '" + name + "'");
}

std::string JoinIndices(const std::vector<std::size_t>& xs) {
  if (xs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i] + 1);
  }
  return out;
}

Json OneBased(const std::vector<std::size_t>& xs) {
  Json arr = Json::array();
  for (std::size_t x : xs) arr.push_back(x + 1);
  return arr;
}

// Shared output shape: plain text lines or one JSON object per run.
class Report {
 public:
  Report(const Config& cfg, std::string command, std::ostream& out)
      : cfg_(cfg), out_(out) {
    json_["command"] = std::move(command);
    if (!cfg.domain.empty()) json_["domain"] = cfg.domain;
  }

  void Verdict(const std::string& v) {
    json_["verdict"] = v;
    lines_.push_back(v);
  }

  void Witness(const Profile& p, DomainId d, const MinorWitness& w) {
    std::vector<std::string> names;
    std::string cands;
    for (Candidate c : w.candidates) {
      names.push_back(p.name(c));
      cands += (cands.empty() ? "" : ",") + p.name(c);
    }
    std::string votes;
    for (std::size_t v : w.vote_indices) {
      votes += (votes.empty() ? "" : ",") + std::to_string(v + 1);
    }
    const std::string pattern = describe_source(domain_spec(d), w.source);
    json_["witness"] = {{"votes", OneBased(w.vote_indices)},
                        {"candidates", names},
                        {"pattern", pattern}};
    lines_.push_back("votes: " + votes);
    lines_.push_back("candidates: " + cands);
    lines_.push_back("pattern: " + pattern);
  }

  // Vote-index groups, printed 1-based.
  void Parts(const std::vector<std::vector<std::size_t>>& parts) {
    Json arr = Json::array();
    for (const auto& part : parts) {
      arr.push_back(OneBased(part));
      lines_.push_back(JoinIndices(part));
    }
    json_["parts"] = std::move(arr);
  }

  // Vertex groups of a graph, printed 0-based like the graph file.
  void Classes(const std::vector<std::vector<std::size_t>>& parts) {
    Json arr = Json::array();
    for (const auto& part : parts) {
      arr.push_back(part);
      if (part.empty()) {
        lines_.push_back("-");
        continue;
      }
      std::string line;
      for (std::size_t x : part) {
        line += (line.empty() ? "" : " ") + std::to_string(x);
      }
      lines_.push_back(line);
    }
    json_["parts"] = std::move(arr);
  }

  void Order(const Profile& p, const CaterpillarOrder& order) {
    Json arr = Json::array();
    for (Candidate c : order.order) arr.push_back(p.name(c));
    json_["order"] = std::move(arr);
    lines_.push_back(format_caterpillar(p, order));
  }

  void Tree(const std::string& tree) {
    json_["tree"] = tree;
    lines_.push_back(tree);
  }

  Json& stats() { return json_["stats"]; }

  void Flush() {
    if (cfg_.json) {
      out_ << json_.dump() << "\n";
      return;
    }
    for (const auto& line : lines_) out_ << line << "\n";
  }

 private:
  const Config& cfg_;
  std::ostream& out_;
  Json json_;
  std::vector<std::string> lines_;
};

int CmdRecognize(const Config& cfg, std::istream& in, std::ostream& out) {
  const DomainId d = RequireDomain(cfg.domain);
  const Profile p = parse_profile(ReadInput(cfg.input, in));
  Report r(cfg, "recognize", out);
  const auto witness = is_member(p, d);
  if (witness) {
    r.Verdict("NON-MEMBER");
    r.Witness(p, d, *witness);
  } else {
    r.Verdict("MEMBER");
  }
  r.stats()["distinct_votes"] = dedupe(p).representatives.vote_count();
  r.Flush();
  return witness ? kExitNegative : kExitPositive;
}

int CmdExplain(const Config& cfg, std::istream& in, std::ostream& out) {
  const DomainId d = RequireDomain(cfg.domain);
  if (d != DomainId::kGS && d != DomainId::kCatGS) {
    throw Error(ErrorCode::kBadParams, "explain supports gs and catgs only");
  }
  const Profile p = parse_profile(ReadInput(cfg.input, in));
  Report r(cfg, "explain", out);
  int code = kExitPositive;
  if (d == DomainId::kGS) {
    try {
      const OrderedBinaryTree tree = build_gs_tree(p);
      r.Verdict("MEMBER");
      r.Tree(tree.to_string(p));
    } catch (const NotGroupSeparable&) {
      r.Verdict("NON-MEMBER");
      r.Witness(p, d, *is_member(p, d));
      code = kExitNegative;
    }
  } else {
    const auto result = recognize_caterpillar(p);
    if (const auto* order = std::get_if<CaterpillarOrder>(&result)) {
      r.Verdict("MEMBER");
      r.Order(p, *order);
    } else {
      r.Verdict("NON-MEMBER");
      r.Witness(p, d, std::get<MinorWitness>(result));
      code = kExitNegative;
    }
  }
  r.Flush();
  return code;
}

int CmdPartition2(const Config& cfg, std::istream& in, std::ostream& out) {
  const DomainId d = RequireDomain(cfg.domain);
  const Profile p = parse_profile(ReadInput(cfg.input, in));
  const Partition2Report rep = partition2_report(p, d);
  Report r(cfg, "partition2", out);
  if (rep.result) {
    r.Verdict("YES");
    r.Parts({rep.result->part1, rep.result->part2});
  } else {
    r.Verdict("NO");
  }
  r.stats()["distinct_votes"] = rep.distinct_votes;
  r.stats()["dangerous_triples"] = rep.dangerous_triples;
  r.stats()["case"] = partition_case_name(rep.which);
  r.Flush();
  return rep.result ? kExitPositive : kExitNegative;
}

int CmdPartitionBf(const Config& cfg, std::istream& in, std::ostream& out) {
  const DomainId d = RequireDomain(cfg.domain);
  const Profile p = parse_profile(ReadInput(cfg.input, in));
  const KPartitionResult res = bruteforce_kpartition(p, d, cfg.k, cfg.budget);
  Report r(cfg, "partition-bf", out);
  int code = kExitNegative;
  switch (res.status) {
    case SearchStatus::kFound:
      r.Verdict("YES");
      r.Parts(res.partition->groups());
      code = kExitPositive;
      break;
    case SearchStatus::kNone:
      r.Verdict("NO");
      break;
    case SearchStatus::kBudgetExceeded:
      r.Verdict("BUDGET-EXCEEDED");
      code = kExitBudget;
      break;
  }
  r.stats()["distinct_votes"] = dedupe(p).representatives.vote_count();
  r.stats()["nodes"] = res.nodes;
  r.Flush();
  return code;
}

int CmdReduce(const Config& cfg, std::istream& in, std::ostream& out) {
  const Graph g = parse_graph(ReadInput(cfg.input, in));
  out << emit_profile(reduce_to_profile(g, cfg.k).profile);
  return kExitPositive;
}

int CmdCliqueBf(const Config& cfg, std::istream& in, std::ostream& out) {
  const Graph g = parse_graph(ReadInput(cfg.input, in));
  const auto cp = clique_kpartition(g, cfg.k);
  Report r(cfg, "clique-bf", out);
  if (cp) {
    r.Verdict("YES");
    std::vector<std::vector<std::size_t>> classes(static_cast<std::size_t>(cp->k));
    for (std::size_t v = 0; v < cp->assignment.size(); ++v) {
      classes[static_cast<std::size_t>(cp->assignment[v])].push_back(v);
    }
    r.Classes(classes);
  } else {
    r.Verdict("NO");
  }
  r.Flush();
  return cp ? kExitPositive : kExitNegative;
}

int CmdGen(const Config& cfg, std::ostream& out) {
  const auto model = parse_model(cfg.model);
  if (!model) {
    throw Error(ErrorCode::kBadParams, "unknown model '" + cfg.model + "'");
  }
  GenParams params;
  params.n = cfg.votes;
  params.m = cfg.cands;
  params.k = cfg.groups;
  params.seed = cfg.seed;
  params.model = *model;
  out << emit_profile(generate(params));
  return kExitPositive;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted preference domains: recognition, explanation, "
               "voter partitioning and reduction instances.",
                "prefsplit"};
  app.require_subcommand(1);
  Config cfg;

  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", cfg.input, what)->required();
    sub->add_flag("--json", cfg.json, "Print a JSON object instead of text");
  };
  auto add_domain = [&](CLI::App* sub) {
    sub->add_option("--domain", cfg.domain,
                    "sp, gs, catgs, br, mr, wr or vr")
        ->required();
  };

  auto* recognize = app.add_subcommand("recognize", "Decide domain membership");
  add_input(recognize, "Profile file or '-'");
  add_domain(recognize);

  auto* explain = app.add_subcommand(
      "explain", "Print a GS tree or a caterpillar order");
  add_input(explain, "Profile file or '-'");
  add_domain(explain);

  auto* part2 = app.add_subcommand(
      "partition2", "Split the voters into two domain members");
  add_input(part2, "Profile file or '-'");
  add_domain(part2);

  auto* part_bf = app.add_subcommand(
      "partition-bf", "Exhaustive split into k domain members");
  add_input(part_bf, "Profile file or '-'");
  add_domain(part_bf);
  part_bf->add_option("-k", cfg.k, "Number of groups")->capture_default_str();
  part_bf->add_option("--budget", cfg.budget, "Search node limit")
      ->capture_default_str();

  auto* reduce = app.add_subcommand(
      "reduce", "Build the voter-partition instance of a clique-partition graph");
  reduce->add_option("input", cfg.input, "Graph file or '-'")->required();
  reduce->add_option("-k", cfg.k, "Number of cliques")->required();

  auto* clique_bf = app.add_subcommand(
      "clique-bf", "Exhaustive partition of a graph into k cliques");
  add_input(clique_bf, "Graph file or '-'");
  clique_bf->add_option("-k", cfg.k, "Number of cliques")->required();

  auto* gen = app.add_subcommand("gen", "Generate a seeded random profile");
  gen->add_option("--model", cfg.model,
                  "impartial, sp-union, gs-union or catgs-union")
      ->capture_default_str();
  gen->add_option("--votes", cfg.votes, "Votes per group")->required();
  gen->add_option("--cands", cfg.cands, "Number of candidates")->required();
  gen->add_option("--groups", cfg.groups, "Number of groups")
      ->capture_default_str();
  gen->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPositive : kExitError;
  }

  try {
    if (*recognize) return CmdRecognize(cfg, in, out);
    if (*explain) return CmdExplain(cfg, in, out);
    if (*part2) return CmdPartition2(cfg, in, out);
    if (*part_bf) return CmdPartitionBf(cfg, in, out);
    if (*reduce) return CmdReduce(cfg, in, out);
    if (*clique_bf) return CmdCliqueBf(cfg, in, out);
    if (*gen) return CmdGen(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace prefsplit
