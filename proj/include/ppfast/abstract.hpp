#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppfast/diagram.hpp"

namespace ppfast {

// Symbols B with the relation "b in supt(a)" and an inverse on the
// symbols with nonempty support. Construction checks only references;
// validate_blueprint checks the axioms.
class Blueprint {
 public:
  Blueprint() = default;
  Blueprint(std::vector<std::string> symbols,
            const std::vector<std::pair<std::string, std::string>>& supt,
            const std::map<std::string, std::string>& inverse,
            const std::vector<std::string>& markers);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(const std::string& name) const;

  // b in supt(a).
  bool in_supt(std::size_t a, std::size_t b) const { return rel_[a][b]; }
  bool active(std::size_t a) const;
  std::optional<std::size_t> inverse(std::size_t a) const { return inv_[a]; }
  // Symbols declared as markers.
  const std::vector<std::size_t>& markers() const { return markers_; }
  bool is_marker(std::size_t i) const;
  // Symbols with nonempty support.
  std::vector<std::size_t> generators() const;
  // {a : b in supt(a)}.
  std::vector<std::size_t> marker_class(std::size_t b) const;

  std::vector<std::pair<std::string, std::string>> relation() const;
  std::map<std::string, std::string> inverse_map() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> rel_;
  std::vector<std::optional<std::size_t>> inv_;
  std::vector<std::size_t> markers_;
};

struct BlueprintReport {
  bool valid = true;
  std::vector<std::string> violations;
};

BlueprintReport validate_blueprint(const Blueprint& b);

// Symbols: every used bump and its inverse, plus one marker symbol per
// initial marker.
Blueprint blueprint_of(const FastSystem& sys);

using History = std::vector<std::size_t>;

// Consecutive symbols a, b need a in supt(b) and a != b^-1; a marker may
// only come first.
bool valid_history(const Blueprint& b, const History& eta);
History hat_apply(const Blueprint& b, History eta, std::size_t a);
History hat_apply_word(const Blueprint& b, History eta,
                       const std::vector<std::size_t>& word);

// Marker, then up to depth further symbols.
std::vector<History> finite_histories(const Blueprint& b, std::size_t depth);

struct FaithfulnessVerdict {
  bool faithful = true;
  // A valid string with no finite history containing it.
  std::optional<std::vector<std::size_t>> witness;
  std::size_t depth = 0;
  // The predecessor-graph argument settled the question at every depth.
  bool closed = true;
};

FaithfulnessVerdict is_faithful(const Blueprint& b, std::size_t depth);

enum class Orderability { orderable, cyclically_orderable, neither };

struct OrderabilityResult {
  Orderability kind = Orderability::neither;
  std::vector<std::size_t> order;
};

// "F", "T" or "V".
std::string embeds_into(Orderability o);

// Throws PreconditionError above max_symbols or on an invalid blueprint.
OrderabilityResult classify_orderability(const Blueprint& b,
                                         std::size_t max_symbols = 14);
// Exact checks of a proposed order.
bool order_witnesses(const Blueprint& b, const std::vector<std::size_t>& order,
                     bool cyclic);

struct FreenessVerdict {
  bool free = true;
  std::optional<std::vector<std::size_t>> relator;
  std::size_t words_checked = 0;
  std::size_t histories_checked = 0;
};

// Words are freely reduced over the symbols of A. A word is a relator when
// it fixes every finite history with at most history_depth symbols after the
// marker (default maxlen + 1).
FreenessVerdict freeness_probe(const Blueprint& b, std::size_t maxlen,
                               std::optional<std::size_t> history_depth = {});

// phi[i] is the image of symbol i.
std::optional<std::vector<std::size_t>> blueprints_isomorphic(
    const Blueprint& b1, const Blueprint& b2, std::size_t max_symbols = 14);

}  // namespace ppfast
