#include "ncg/todd_coxeter.hpp"

#include <cctype>
#include <cstdlib>

namespace ncg {

namespace {

constexpr int kUndefined = -1;

// Column 2(g-1) is generator g, column 2(g-1)+1 its inverse.
int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
int inverse_column(int col) { return col ^ 1; }

class CosetTable {
 public:
  CosetTable(int generators, std::size_t bound) : cols_(2 * generators), bound_(bound) { new_coset(); }

  int define(int c, int col) {
    const int d = new_coset();
    set(c, col, d);
    set(d, inverse_column(col), c);
    return d;
  }

  void scan_and_fill(int c, const Word& w) {
    if (w.empty()) return;
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, column(w[i])) != kUndefined) {
        f = at(f, column(w[i]));
        ++i;
      }
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && at(b, inverse_column(column(w[j]))) != kUndefined) {
        b = at(b, inverse_column(column(w[j])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, column(w[i]), b);
        set(b, inverse_column(column(w[i])), f);
        return;
      }
      define(f, column(w[i]));
    }
  }

  [[nodiscard]] bool live(int c) const { return parent_[c] == c; }
  [[nodiscard]] int size() const { return static_cast<int>(parent_.size()); }
  [[nodiscard]] int at(int c, int col) const { return table_[static_cast<std::size_t>(c) * cols_ + col]; }
  [[nodiscard]] int columns() const { return cols_; }

 private:
  void set(int c, int col, int v) { table_[static_cast<std::size_t>(c) * cols_ + col] = v; }

  int new_coset() {
    if (live_ >= bound_) {
      throw EnumerationError("coset enumeration did not close within " + std::to_string(bound_) +
                             " live cosets (group infinite or bound too small)");
    }
    const int d = static_cast<int>(parent_.size());
    parent_.push_back(d);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), kUndefined);
    ++live_;
    return d;
  }

  int rep(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b) {
    const int ra = rep(a);
    const int rb = rep(b);
    if (ra == rb) return;
    const int lo = std::min(ra, rb);
    const int hi = std::max(ra, rb);
    parent_[hi] = lo;
    --live_;
    queue_.push_back(hi);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int e = queue_[head];
      for (int col = 0; col < cols_; ++col) {
        const int f = at(e, col);
        if (f == kUndefined) continue;
        set(f, inverse_column(col), kUndefined);
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (at(e1, col) != kUndefined) {
          merge(f1, at(e1, col));
        } else if (at(f1, inverse_column(col)) != kUndefined) {
          merge(e1, at(f1, inverse_column(col)));
        } else {
          set(e1, col, f1);
          set(f1, inverse_column(col), e1);
        }
      }
    }
  }

  int cols_;
  std::size_t bound_;
  std::size_t live_ = 0;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

std::string label_for(const Presentation& pres, const Word& w) { return pres.word_string(w); }

}  // namespace

GroupTable todd_coxeter(const Presentation& pres) {
  if (pres.generatorCount < 1) throw std::invalid_argument("presentation needs at least one generator");
  if (pres.relators.empty()) throw std::invalid_argument("presentation needs at least one relator");
  if (pres.cosetBound < 1) throw std::invalid_argument("coset bound must be positive");
  for (const auto& r : pres.relators) {
    for (int letter : r) {
      if (letter == 0 || std::abs(letter) > pres.generatorCount) {
        throw std::invalid_argument("relator letter out of range");
      }
    }
  }

  CosetTable table(pres.generatorCount, pres.cosetBound);
  for (int c = 0; c < table.size(); ++c) {
    if (!table.live(c)) continue;
    for (const auto& r : pres.relators) {
      table.scan_and_fill(c, r);
      if (!table.live(c)) break;
    }
    for (int col = 0; col < table.columns() && table.live(c); ++col) {
      if (table.at(c, col) == kUndefined) table.define(c, col);
    }
  }

  // Renumber live cosets breadth-first from coset 0. Element j is reached from
  // its parent element by one generator column, so i * j follows the same edge
  // from i * parent(j).
  std::vector<int> number(static_cast<std::size_t>(table.size()), kUndefined);
  std::vector<int> order{0};
  std::vector<Word> words{Word{}};
  std::vector<std::size_t> parent{0};
  std::vector<int> via{kUndefined};
  number[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int col = 0; col < table.columns(); ++col) {
      const int d = table.at(order[head], col);
      if (number[d] != kUndefined) continue;
      number[d] = static_cast<int>(order.size());
      order.push_back(d);
      parent.push_back(head);
      via.push_back(col);
      Word w = words[head];
      w.push_back(col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1));
      words.push_back(std::move(w));
    }
  }

  const auto n = order.size();
  if (n > kMaxGroupOrder) throw EnumerationError("enumerated group exceeds the supported order");
  std::vector<Elem> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    mul[i * n] = static_cast<Elem>(i);
    for (std::size_t j = 1; j < n; ++j) {
      const auto from = mul[i * n + parent[j]];
      mul[i * n + j] = static_cast<Elem>(number[table.at(order[from], via[j])]);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& w : words) labels.push_back(label_for(pres, w));
  return GroupTable(std::move(mul), std::move(labels), GroupSpec::from_presentation(pres));
}

Word parse_word(std::string_view text, const std::vector<std::string>& generatorNames) {
  Word out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    int gen = 0;
    std::size_t best = 0;
    for (std::size_t g = 0; g < generatorNames.size(); ++g) {
      const auto& name = generatorNames[g];
      if (name.size() > best && text.substr(i, name.size()) == name) {
        gen = static_cast<int>(g) + 1;
        best = name.size();
      }
    }
    if (gen == 0) {
      throw std::invalid_argument("unknown generator at '" + std::string(text.substr(i)) + "'");
    }
    i += best;
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const auto digits = std::string(text.substr(i, j - i));
      if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("malformed exponent");
      exp = std::stol(digits);
      i = j;
    }
    const int letter = exp < 0 ? -gen : gen;
    for (long k = 0; k < std::labs(exp); ++k) out.push_back(letter);
    skip_space();
  }
  return out;
}

Presentation make_presentation(const std::vector<std::string>& generatorNames,
                               const std::vector<std::string>& relators, std::size_t cosetBound) {
  Presentation pres;
  pres.generatorCount = static_cast<int>(generatorNames.size());
  pres.generatorNames = generatorNames;
  pres.cosetBound = cosetBound;
  for (const auto& r : relators) pres.relators.push_back(parse_word(r, generatorNames));
  return pres;
}

}  // namespace ncg
