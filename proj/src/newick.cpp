#include "treecut/newick.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <vector>

namespace treecut {

namespace {

bool plain_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '|' || c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PhyloTree parse() {
    skip_blank();
    if (pos_ >= text_.size()) throw NewickError("empty input", pos_);
    parse_subtree(std::nullopt);
    skip_blank();
    if (peek() == ':') parse_length();
    skip_blank();
    if (peek() != ';') throw NewickError("expected ';'", pos_);
    ++pos_;
    skip_blank();
    if (pos_ < text_.size()) throw NewickError("trailing characters after ';'", pos_);
    return PhyloTree::normalized(std::move(labels_), std::move(edges_));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '[') {
        auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) throw NewickError("unterminated comment", pos_);
        pos_ = close + 1;
      } else {
        break;
      }
    }
  }

  std::size_t add_vertex(Label label) {
    labels_.push_back(std::move(label));
    return labels_.size() - 1;
  }

  void parse_subtree(std::optional<std::size_t> parent) {
    skip_blank();
    if (peek() == '(') {
      auto self = add_vertex({});
      if (parent) edges_.emplace_back(*parent, self);
      ++pos_;
      while (true) {
        parse_subtree(self);
        skip_blank();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ')') {
          ++pos_;
          break;
        }
        throw NewickError("expected ',' or ')'", pos_);
      }
      skip_blank();
      parse_name();  // internal names are discarded
    } else {
      auto start = pos_;
      auto name = parse_name();
      if (name.empty()) throw NewickError("empty leaf label", start);
      if (seen_.contains(name)) throw NewickError("duplicate leaf label '" + name + "'", start);
      seen_.insert(name);
      auto self = add_vertex(std::move(name));
      if (parent) edges_.emplace_back(*parent, self);
    }
    skip_blank();
    if (peek() == ':') parse_length();
  }

  Label parse_name() {
    if (peek() == '\'') {
      auto start = pos_;
      ++pos_;
      Label out;
      while (true) {
        if (pos_ >= text_.size()) throw NewickError("unterminated quoted label", start);
        char c = text_[pos_++];
        if (c == '\'') {
          if (peek() == '\'') {
            out += '\'';
            ++pos_;
          } else {
            break;
          }
        } else {
          out += c;
        }
      }
      return out;
    }
    Label out;
    while (plain_label_char(peek())) out += text_[pos_++];
    char c = peek();
    if (c != '\0' && c != ',' && c != ')' && c != '(' && c != ':' && c != ';' && c != '[' &&
        !std::isspace(static_cast<unsigned char>(c))) {
      throw NewickError(std::string("unexpected character '") + c + "'", pos_);
    }
    return out;
  }

  void parse_length() {
    ++pos_;  // ':'
    skip_blank();
    auto start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E') {
        ++pos_;
      } else {
        break;
      }
    }
    std::string token(text_.substr(start, pos_ - start));
    char* end = nullptr;
    std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size()) throw NewickError("malformed branch length", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Label> labels_;
  std::vector<PhyloTree::Edge> edges_;
  LabelSet seen_;
};

std::string quote_if_needed(const Label& label) {
  if (std::all_of(label.begin(), label.end(), plain_label_char)) return label;
  std::string out = "'";
  for (char c : label) {
    out += c;
    if (c == '\'') out += '\'';
  }
  return out + "'";
}

// Writes the subtree hanging below `v` (entered from `parent`); returns its
// least label alongside the text so siblings can be ordered.
std::pair<Label, std::string> write_subtree(const PhyloTree& tree, std::size_t v, std::size_t parent) {
  if (tree.is_leaf(v)) return {tree.label(v), quote_if_needed(tree.label(v))};
  std::vector<std::pair<Label, std::string>> children;
  for (auto w : tree.neighbors(v)) {
    if (w != parent) children.push_back(write_subtree(tree, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) out += ',';
    out += children[i].second;
  }
  return {children.front().first, out + ")"};
}

}  // namespace

PhyloTree parse_newick(std::string_view text) { return Parser(text).parse(); }

std::string to_newick(const PhyloTree& tree) {
  const auto labels = tree.labels();
  const auto least = *tree.leaf(*labels.begin());
  if (tree.vertex_count() == 1) return quote_if_needed(tree.label(least)) + ";";
  if (tree.vertex_count() == 2) {
    auto other = tree.neighbors(least).front();
    return "(" + quote_if_needed(tree.label(least)) + "," + quote_if_needed(tree.label(other)) + ");";
  }
  const auto root = tree.neighbors(least).front();
  return write_subtree(tree, root, root).second + ";";
}

}  // namespace treecut
