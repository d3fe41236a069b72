#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppfast/error.hpp"
#include "ppfast/family.hpp"
#include "ppfast/fastness.hpp"

namespace ppfast {

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::string label;

  std::size_t left() const { return src < dst ? src : dst; }
  std::size_t right() const { return src < dst ? dst : src; }
  bool positive() const { return src < dst; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Feet 0..n-1 in line order; every foot is the end of exactly one edge.
// Edges sharing a label have disjoint spans, as bumps of one generator do.
class DynamicalDiagram {
 public:
  DynamicalDiagram() = default;
  // Validates and sorts edges by left foot.
  DynamicalDiagram(std::size_t feet, std::vector<Edge> edges);

  std::size_t feet() const { return feet_; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Distinct labels in order of first edge.
  std::vector<std::string> labels() const;
  const Edge& edge_at(std::size_t vertex) const;
  bool isolated(const Edge& e) const { return e.right() == e.left() + 1; }
  bool has_isolated() const;

  friend bool operator==(const DynamicalDiagram&,
                         const DynamicalDiagram&) = default;

 private:
  std::size_t feet_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> at_;
};

class NotFastError : public PreconditionError {
 public:
  NotFastError(const std::string& what, FastnessReport report)
      : PreconditionError(what), report_(std::move(report)) {}
  const FastnessReport& report() const { return report_; }

 private:
  FastnessReport report_;
};

// A geometrically fast family with its canonical marking and diagram.
class FastSystem {
 public:
  // Throws NotFastError unless x is geometrically fast.
  explicit FastSystem(Family x);

  const Family& family() const { return family_; }
  const std::vector<UsedBump>& bumps() const { return bumps_; }
  const BumpFamily& bump_family() const { return bump_family_; }
  const FastnessReport& report() const { return report_; }
  const CanonicalMarking& marking() const { return marking_; }
  const DynamicalDiagram& diagram() const { return diagram_; }

  std::size_t src_vertex(std::size_t bump) const { return src_vertex_[bump]; }
  std::size_t dest_vertex(std::size_t bump) const {
    return dest_vertex_[bump];
  }
  // Foot intervals in vertex order.
  const std::vector<Interval>& vertex_intervals() const { return vertices_; }
  // Bumps whose canonical marker is initial, in bump order.
  const std::vector<std::size_t>& initial_bumps() const { return initial_; }
  std::optional<std::size_t> find_bump(std::string_view name) const;
  std::vector<std::string> bump_names() const;

 private:
  Family family_;
  std::vector<UsedBump> bumps_;
  BumpFamily bump_family_;
  FastnessReport report_;
  CanonicalMarking marking_;
  DynamicalDiagram diagram_;
  std::vector<std::size_t> src_vertex_;
  std::vector<std::size_t> dest_vertex_;
  std::vector<Interval> vertices_;
  std::vector<std::size_t> initial_;
};

DynamicalDiagram diagram_of(const Family& x);

struct DiagramIso {
  std::vector<std::size_t> vertex_map;
  std::map<std::string, std::string> labels;
};

std::optional<DiagramIso> are_isomorphic(const DynamicalDiagram& d1,
                                         const DynamicalDiagram& d2);

DynamicalDiagram eliminate_isolated(const DynamicalDiagram& d);

// Generators named by label, on [0, 1]. Throws on an isolated edge.
Family realize_terminal(const DynamicalDiagram& d);
// Dyadic breakpoints and power-of-two slopes, inside [0, 1].
Family realize_dyadic(const DynamicalDiagram& d);

// Increasing PL map of [a0, a1] onto [b0, b1] (dyadic endpoints) with
// power-of-two slopes; returns the breakpoints including both ends.
std::vector<Breakpoint> dyadic_pieces(const Rational& a0, const Rational& a1,
                                      const Rational& b0, const Rational& b1);

std::string render(const DynamicalDiagram& d);

}  // namespace ppfast
