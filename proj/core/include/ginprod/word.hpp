#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ginprod {

/// Matrix insertion under the trace: X or its adjoint.
enum class Token : std::uint8_t { X = 0, XDag = 1 };

/// A cyclic trace word over {X, X†}, e.g. "xdxd" = Tr X X† X X†.
/// Equality is literal sequence equality; cyclic equivalence is a separate
/// predicate.  External string form uses 'x' and 'd', case-insensitive.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  /// Parse "xdxd" / "XDXD"; throws std::invalid_argument on other characters
  /// or an empty string.
  static Word parse(std::string_view s);

  /// The alternating word (X X†)^m.
  static Word xd_power(int m);

  /// X^a (X†)^b.
  static Word x_then_d(int a, int b);

  const std::vector<Token>& tokens() const { return tokens_; }
  int size() const { return static_cast<int>(tokens_.size()); }
  bool empty() const { return tokens_.empty(); }

  int count_x() const;
  int count_xdag() const;
  bool balanced() const { return count_x() == count_xdag(); }
  /// Weight m of a balanced word (= number of X insertions).
  int weight() const { return count_x(); }

  Word rotated(int r) const;
  /// Reverse the sequence and swap X <-> X†; words related by this map have
  /// equal moments (conjugation symmetry of the trace).
  Word conjugate_reversed() const;

  bool cyclic_equal(const Word& other) const;
  /// Lexicographically least rotation with X < X†.
  Word canonical_rotation() const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Token> tokens_;
};

/// A multi-trace insertion: a product of trace loops.  Single-loop diagrams
/// are the mixed-moment operators; multi-loop ones arise when contracting
/// multi-trace Wishart observables.
struct Diagram {
  std::vector<Word> loops;

  Diagram() = default;
  explicit Diagram(Word w) { loops.push_back(std::move(w)); }
  explicit Diagram(std::vector<Word> ls) : loops(std::move(ls)) {}

  int total_insertions() const {
    int n = 0;
    for (const auto& w : loops) n += w.size();
    return n;
  }
  int count_x() const {
    int n = 0;
    for (const auto& w : loops) n += w.count_x();
    return n;
  }
  int count_xdag() const {
    int n = 0;
    for (const auto& w : loops) n += w.count_xdag();
    return n;
  }
  bool balanced() const { return count_x() == count_xdag(); }
};

}  // namespace ginprod
