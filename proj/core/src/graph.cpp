// Copyright 2026 The taskdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "taskdp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "taskdp/csv.hpp"

namespace taskdp {

const std::vector<int>& TaskUserGraph::task_edges(int task) const {
  if (task < 0 || task >= num_tasks_) {
    throw std::out_of_range("task index " + std::to_string(task) + " not in [0, " +
                            std::to_string(num_tasks_) + ")");
  }
  return task_edges_[static_cast<size_t>(task)];
}

const std::vector<int>& TaskUserGraph::user_edges(int user) const {
  if (user < 0 || user >= num_users_) {
    throw std::out_of_range("user index " + std::to_string(user) + " not in [0, " +
                            std::to_string(num_users_) + ")");
  }
  return user_edges_[static_cast<size_t>(user)];
}

int TaskUserGraph::task_size(int task) const {
  return static_cast<int>(task_edges(task).size());
}

int TaskUserGraph::user_degree(int user) const {
  return static_cast<int>(user_edges(user).size());
}

std::vector<double> TaskUserGraph::task_sizes() const {
  std::vector<double> sizes(static_cast<size_t>(num_tasks_));
  for (int i = 0; i < num_tasks_; ++i) {
    sizes[static_cast<size_t>(i)] = static_cast<double>(task_edges_[static_cast<size_t>(i)].size());
  }
  return sizes;
}

TaskUserGraph build_graph(const std::vector<Edge>& edge_list, int num_tasks,
                          int num_users) {
  if (num_tasks < 1 || num_users < 1) {
    throw std::invalid_argument("graph needs at least one task and one user");
  }
  if (num_tasks > num_users) {
    throw std::invalid_argument("graph requires num_tasks <= num_users, got " +
                                std::to_string(num_tasks) + " tasks and " +
                                std::to_string(num_users) + " users");
  }
  for (const Edge& e : edge_list) {
    if (e.task < 0 || e.task >= num_tasks || e.user < 0 || e.user >= num_users) {
      throw std::out_of_range("edge (" + std::to_string(e.task) + ", " +
                              std::to_string(e.user) + ") outside [0, " +
                              std::to_string(num_tasks) + ") x [0, " +
                              std::to_string(num_users) + ")");
    }
  }

  TaskUserGraph g;
  g.num_tasks_ = num_tasks;
  g.num_users_ = num_users;
  g.edges_ = edge_list;
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.task_edges_.assign(static_cast<size_t>(num_tasks), {});
  g.user_edges_.assign(static_cast<size_t>(num_users), {});
  for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
    g.task_edges_[static_cast<size_t>(g.edges_[static_cast<size_t>(e)].task)].push_back(e);
    g.user_edges_[static_cast<size_t>(g.edges_[static_cast<size_t>(e)].user)].push_back(e);
  }
  return g;
}

TaskUserGraph remove_user(const TaskUserGraph& graph, int user) {
  if (user < 0 || user >= graph.num_users()) {
    throw std::out_of_range("remove_user: user index " + std::to_string(user) +
                            " not in [0, " + std::to_string(graph.num_users()) + ")");
  }
  std::vector<Edge> kept;
  kept.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) {
    if (e.user != user) kept.push_back(e);
  }
  return build_graph(kept, graph.num_tasks(), graph.num_users());
}

void write_graph_csv(const TaskUserGraph& graph, std::ostream& out) {
  out << "task,user\n";
  out << "# tasks=" << graph.num_tasks() << " users=" << graph.num_users() << "\n";
  for (const Edge& e : graph.edges()) {
    out << e.task << "," << e.user << "\n";
  }
}

TaskUserGraph read_graph_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("graph csv: empty input");
  if (!std::getline(in, line) || line.rfind("# tasks=", 0) != 0) {
    throw std::runtime_error("graph csv: missing size line");
  }
  int num_tasks = 0, num_users = 0;
  if (std::sscanf(line.c_str(), "# tasks=%d users=%d", &num_tasks, &num_users) != 2) {
    throw std::runtime_error("graph csv: malformed size line '" + line + "'");
  }
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) throw std::runtime_error("graph csv: malformed line '" + line + "'");
    edges.push_back(Edge{static_cast<int>(parse_int(fields[0], "graph csv task")),
                         static_cast<int>(parse_int(fields[1], "graph csv user"))});
  }
  return build_graph(edges, num_tasks, num_users);
}

MultiTaskDataset remove_user(const MultiTaskDataset& dataset, int user) {
  TaskUserGraph pruned = remove_user(dataset.graph, user);
  MultiTaskDataset out;
  out.graph = pruned;
  out.feature_clip = dataset.feature_clip;
  out.solution_clip = dataset.solution_clip;
  out.features.resize(pruned.num_edges(), dataset.features.cols());
  out.labels.resize(pruned.num_edges());

  // Edges stay sorted by (task, user), so walk both edge lists in lockstep.
  int src = 0;
  for (int e = 0; e < pruned.num_edges(); ++e) {
    while (dataset.graph.edge(src).user == user) ++src;
    out.features.row(e) = dataset.features.row(src);
    out.labels(e) = dataset.labels(src);
    ++src;
  }
  return out;
}

MultiTaskDataset clip_dataset(const MultiTaskDataset& dataset, double feature_clip,
                              double solution_clip) {
  if (feature_clip <= 0 || solution_clip <= 0) {
    throw std::invalid_argument("clip bounds must be positive");
  }
  MultiTaskDataset out = dataset;
  out.feature_clip = feature_clip;
  out.solution_clip = solution_clip;
  const double label_bound = feature_clip * solution_clip;
  for (int e = 0; e < out.features.rows(); ++e) {
    const double norm = out.features.row(e).norm();
    if (norm > feature_clip) {
      out.features.row(e) *= feature_clip / norm;
    }
    const double mag = std::abs(out.labels(e));
    if (mag > label_bound) {
      out.labels(e) *= label_bound / mag;
    }
  }
  return out;
}

RatingsData parse_ratings_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("ratings csv: empty input");

  struct Triple {
    long long user;
    long long item;
    double value;
  };
  std::vector<Triple> triples;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw std::runtime_error("ratings csv: expected user_id,item_id,value, got '" + line + "'");
    }
    triples.push_back(Triple{parse_int(fields[0], "ratings user_id"),
                             parse_int(fields[1], "ratings item_id"),
                             parse_double(fields[2], "ratings value")});
  }

  std::map<long long, int> task_index;
  std::map<long long, int> user_index;
  for (const Triple& t : triples) {
    task_index.emplace(t.item, 0);
    user_index.emplace(t.user, 0);
  }
  RatingsData data;
  for (auto& [id, idx] : task_index) {
    idx = static_cast<int>(data.task_ids.size());
    data.task_ids.push_back(id);
  }
  for (auto& [id, idx] : user_index) {
    idx = static_cast<int>(data.user_ids.size());
    data.user_ids.push_back(id);
  }

  // Duplicate pairs keep the last value in file order.
  std::map<Edge, double> edge_value;
  for (const Triple& t : triples) {
    const Edge e{task_index[t.item], user_index[t.user]};
    edge_value[e] = t.value;
  }

  std::vector<Edge> edges;
  edges.reserve(edge_value.size());
  for (const auto& [e, v] : edge_value) edges.push_back(e);
  const int num_tasks = static_cast<int>(data.task_ids.size());
  const int num_users = static_cast<int>(data.user_ids.size());
  data.graph = build_graph(edges, num_tasks, std::max(num_tasks, num_users));
  // Pad user ids if user slots were widened to satisfy num_tasks <= num_users.
  while (static_cast<int>(data.user_ids.size()) < data.graph.num_users()) {
    data.user_ids.push_back(-1);
  }
  data.values.resize(edge_value.size());
  for (int e = 0; e < data.graph.num_edges(); ++e) {
    data.values[static_cast<size_t>(e)] = edge_value[data.graph.edge(e)];
  }
  return data;
}

RatingsData read_ratings_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ratings file: " + path);
  return parse_ratings_csv(in);
}

void write_ratings_csv(const RatingsData& ratings, std::ostream& out) {
  out << "user_id,item_id,value\n";
  for (int e = 0; e < ratings.graph.num_edges(); ++e) {
    const Edge& edge = ratings.graph.edge(e);
    out << ratings.user_ids[static_cast<size_t>(edge.user)] << ","
        << ratings.task_ids[static_cast<size_t>(edge.task)] << ","
        << format_double(ratings.values[static_cast<size_t>(e)]) << "\n";
  }
}

}  // namespace taskdp
