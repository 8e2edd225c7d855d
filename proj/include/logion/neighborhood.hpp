#pragma once

#include "logion/formula.hpp"

#include <cstddef>
#include <deque>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace logion {

enum class EditKind { Rename, Insert, Delete };

/// Side of a binary insert on which the fresh leaf is placed.
enum class Side { Left, Right };

struct EditOp {
  EditKind kind = EditKind::Rename;
  Path path;
  /// Rename: the new operator (or Var/True/False for a leaf, with `leaf`
  /// holding the new symbol). Insert: the inserted operator.
  Op op = Op::True;
  /// Rename of a leaf: the replacement leaf. Binary insert: the fresh leaf.
  Formula leaf;
  Side side = Side::Right;
  /// Binary delete: index of the surviving child.
  std::uint8_t keep = 0;
};

std::string describe(const EditOp& edit);

class InapplicableEdit : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct NeighborhoodOptions {
  /// Allow true/false as rename targets and as inserted leaves.
  bool include_constants = true;
  /// Offer binary inserts with the fresh leaf on either side, not just the right.
  bool insert_both_sides = true;
};

/// Leaf symbols available to Rename and Insert: vocabulary and vars(f), plus
/// constants when enabled. Sorted, constants first.
std::vector<Formula> leaf_alphabet(const Formula& f, const Vocabulary& vocabulary, const NeighborhoodOptions& options = {});

/// Every concrete edit applicable at the node at `path`.
std::vector<EditOp> applicable_edits_at(const Formula& f, const Path& path, const std::vector<Formula>& alphabet,
                                        const NeighborhoodOptions& options = {});

/// Every concrete edit at every position, in preorder of positions.
std::vector<EditOp> applicable_edits(const Formula& f, const Vocabulary& vocabulary,
                                     const NeighborhoodOptions& options = {});

/// Throws InapplicableEdit if the edit is not allowed at its target.
Formula apply_edit(const Formula& f, const EditOp& edit);

/// All neighbors of f, duplicates removed (first occurrence kept).
std::vector<Formula> neighbors(const Formula& f, const Vocabulary& vocabulary, const NeighborhoodOptions& options = {});

/// k independent draws: a position uniformly, then an edit uniformly among
/// all concrete edits at that position.
std::vector<Formula> sample_neighbors(const Formula& f, std::size_t k, const Vocabulary& vocabulary, std::mt19937_64& rng,
                                      const NeighborhoodOptions& options = {});

/// Recency buffer of the last T visited canonical keys.
class TabuMemory {
public:
  explicit TabuMemory(std::size_t tenure) : tenure_(tenure) {}

  std::size_t tenure() const noexcept { return tenure_; }
  bool contains(const std::string& key) const;
  bool contains(const Formula& f) const { return contains(canonical_key(f)); }
  /// Oldest first.
  const std::deque<std::string>& entries() const noexcept { return entries_; }

  /// Appends f; a key already present moves to the back instead of repeating.
  void visit(const Formula& f);

private:
  std::size_t tenure_;
  std::deque<std::string> entries_;
};

std::vector<Formula> filter_tabu(const std::vector<Formula>& candidates, const TabuMemory& memory);
void record_visit(TabuMemory& memory, const Formula& f);

/// Edit script that turns `from` into `to`: delete down to a single leaf, then
/// grow the target bottom-up. `to` must not contain `->`, which no edit
/// creates, and its leaves must belong to the alphabet.
std::vector<EditOp> reachability_script(const Formula& from, const Formula& to, const Vocabulary& vocabulary,
                                        const NeighborhoodOptions& options = {});

}  // namespace logion
