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

#ifndef TASKDP_GRAPH_HPP_
#define TASKDP_GRAPH_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace taskdp {

struct Edge {
  int task = 0;
  int user = 0;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.task == b.task && a.user == b.user;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.task != b.task ? a.task < b.task : a.user < b.user;
  }
};

// Bipartite task-user membership. Edges are stored once, sorted by
// (task, user), and indexed both per task and per user: solvers iterate
// per task while sensitivity checks iterate per user. Immutable after
// construction and safe to share across parallel workers.
class TaskUserGraph {
 public:
  TaskUserGraph() = default;

  int num_tasks() const { return num_tasks_; }
  int num_users() const { return num_users_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

  // Edge ids incident to a task / user.
  const std::vector<int>& task_edges(int task) const;
  const std::vector<int>& user_edges(int user) const;

  int task_size(int task) const;    // |users of task|
  int user_degree(int user) const;  // |tasks of user|

  std::vector<double> task_sizes() const;

  friend TaskUserGraph build_graph(const std::vector<Edge>& edge_list,
                                   int num_tasks, int num_users);

 private:
  int num_tasks_ = 0;
  int num_users_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> task_edges_;
  std::vector<std::vector<int>> user_edges_;
};

// Deduplicates, validates index ranges, and builds both adjacency views.
// Requires 1 <= num_tasks <= num_users.
TaskUserGraph build_graph(const std::vector<Edge>& edge_list, int num_tasks,
                          int num_users);

// Neighboring graph: drops every edge incident to `user`. The user slot
// itself remains (num_users is unchanged).
TaskUserGraph remove_user(const TaskUserGraph& graph, int user);

void write_graph_csv(const TaskUserGraph& graph, std::ostream& out);
TaskUserGraph read_graph_csv(std::istream& in);

// Edge-indexed regression data. `features` has one row per graph edge and
// `labels` one entry per edge, in graph edge order.
struct MultiTaskDataset {
  TaskUserGraph graph;
  Eigen::MatrixXd features;
  Eigen::VectorXd labels;
  double feature_clip = 1.0;   // norm bound on feature rows
  double solution_clip = 1.0;  // norm bound on per-task solutions

  int dim() const { return static_cast<int>(features.cols()); }
};

MultiTaskDataset remove_user(const MultiTaskDataset& dataset, int user);

// Rescales feature rows to norm <= feature_clip and labels to magnitude
// <= feature_clip * solution_clip; rows already inside the bound are
// untouched. Idempotent.
MultiTaskDataset clip_dataset(const MultiTaskDataset& dataset,
                              double feature_clip, double solution_clip);

// Rating triples: the graph plus one scalar value per edge, with the
// original external ids kept for output.
struct RatingsData {
  TaskUserGraph graph;
  std::vector<double> values;         // per edge id
  std::vector<long long> task_ids;    // external item id per task index
  std::vector<long long> user_ids;    // external user id per user index
};

// Text format: one header line, then `user_id,item_id,value` per line.
// Items map to tasks. External ids are densified in ascending order;
// duplicate (user, item) pairs keep the last value seen.
RatingsData read_ratings_csv(const std::string& path);
RatingsData parse_ratings_csv(std::istream& in);
void write_ratings_csv(const RatingsData& ratings, std::ostream& out);

}  // namespace taskdp

#endif  // TASKDP_GRAPH_HPP_
