#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mctsgen {

using NodeId = std::uint32_t;

enum class Termination { end_tag, iteration_limit, failure };

const char* termination_name(Termination t);
Termination termination_from_name(const std::string& name);

/// Search hyperparameters. The defaults are the shipped operating point:
/// c=0.5, alpha=0.5, branching=3, retries=5, iteration limit 5,
/// temperature 0.9, top-p 0.98.
struct SearchConfig {
    double exploration_c = 0.5;
    double alpha = 0.5;
    int branching = 3;
    int max_retries = 5;
    int iteration_limit = 5;
    double temperature = 0.9;
    double top_p = 0.98;
    std::optional<std::uint64_t> seed;

    void validate() const; // throws errc::invalid_args
};

enum class ReflectionKind { none, guidance, end_tag };

/// Reflection attached to a node after evaluation. `end_tag` marks the node
/// as terminal; `guidance` carries a short thought steering the node's
/// future expansion.
struct NodeReflection {
    ReflectionKind kind = ReflectionKind::none;
    std::string text;

    bool is_end() const { return kind == ReflectionKind::end_tag; }
};

struct SearchNode {
    NodeId id = 0;
    std::optional<NodeId> parent;       // absent only on root
    std::vector<NodeId> children;       // insertion order == generation order
    std::string state;                  // question plus accumulated steps
    std::string action;                 // step this node contributes; empty on root
    double reward = 0.0;                // normalized to [0,1]
    NodeReflection reflection;
    std::uint64_t visits = 0;           // selection-path count
    std::uint32_t depth = 0;
};

/// One reasoning tree for one question. Nodes are stored by id == index;
/// the value is freely copyable between threads for checkpointing.
struct SearchTree {
    std::vector<SearchNode> nodes;
    NodeId root = 0;
    int iterations_run = 0;
    std::optional<Termination> terminated;
    std::string failure_reason;

    static SearchTree make_root(std::string question_state);

    SearchNode& at(NodeId id);
    const SearchNode& at(NodeId id) const;
    bool is_leaf(NodeId id) const { return at(id).children.empty(); }

    /// Appends a child under `parent`, deriving state, depth and id.
    NodeId add_child(NodeId parent, std::string action);
};

/// Child state composition: the parent's state extended with the parent's
/// action (a blank-line join; an empty action contributes nothing, so the
/// root's children share the root state verbatim).
std::string concatenate_state(const std::string& state, const std::string& action);

/// Upper confidence bound: reward + c * sqrt(2 ln(parent_visits) / node_visits).
/// Unvisited nodes score +infinity so every fresh child gets selected at
/// least once before any sibling is revisited.
double ucb1(double reward, double exploration_c, std::uint64_t parent_visits,
            std::uint64_t node_visits);

/// Walks from the root picking the child with the highest UCB1 at each level
/// (ties broken by insertion order) until a leaf, then increments the visit
/// count of every node on the path, root and leaf included. Throws
/// errc::malformed_tree when the tree invariants do not hold.
NodeId select_leaf(SearchTree& tree, const SearchConfig& config);

/// Blends each ancestor's reward with the visit-weighted mean of its own
/// children, starting at `expanded_parent` and walking up to the root:
///   r_delta = sum((v_i + 1) * r_i) / sum(v_i + 1)
///   reward  = alpha * reward + (1 - alpha) * r_delta
/// The +1 weight keeps the mean defined for just-expanded children that have
/// never been selected. Throws errc::malformed_tree when `expanded_parent`
/// has no children.
void backpropagate(SearchTree& tree, NodeId expanded_parent, double alpha);

/// The reasoning steps extracted from a finished tree, in root-to-leaf order.
struct ThinkingRecord {
    std::vector<std::string> steps;
    std::vector<double> rewards; // reward of each step node, aligned with steps
    Termination termination = Termination::failure;

    std::string numbered() const; // "1. ...\n2. ..." rendering
};

/// Prefers the path to an end-tagged node (highest reward, then insertion
/// order, when several ended in the same expansion); otherwise descends
/// greedily on reward (ties: higher visits, then insertion order). Throws
/// errc::empty_tree when the root has no children.
ThinkingRecord extract_thinking(const SearchTree& tree);

/// Full structural validation: single root at depth 0, parent/child and
/// depth consistency, state composition, reward range, visit accounting,
/// sibling-action distinctness, terminal nodes childless, acyclicity.
/// Throws errc::malformed_tree with a description of the first violation.
void validate_tree(const SearchTree& tree);

nlohmann::json tree_to_json(const SearchTree& tree);
SearchTree tree_from_json(const nlohmann::json& j);

nlohmann::json search_config_to_json(const SearchConfig& config);
SearchConfig search_config_from_json(const nlohmann::json& j);

} // namespace mctsgen
