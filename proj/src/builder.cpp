#include "walklab/builder.hpp"

#include "walklab/constructions.hpp"

#include <cctype>
#include <string>
#include <variant>
#include <vector>

namespace walklab {

namespace {

using Arg = std::variant<long, Graph>;

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  Graph parse() {
    Graph g = graph();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression: " + what + " at offset " + std::to_string(pos_));
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return s_.substr(start, pos_ - start);
  }

  long integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(s_.substr(start, pos_ - start));
  }

  Arg argument() {
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return integer();
    return graph();
  }

  Graph graph() {
    const std::size_t at = pos_;
    const std::string fn = name();
    std::vector<Arg> args;
    if (peek('(')) {
      ++pos_;
      if (!peek(')')) {
        args.push_back(argument());
        while (peek(',')) {
          ++pos_;
          args.push_back(argument());
        }
      }
      expect(')');
    }
    try {
      return apply(fn, args);
    } catch (const ParseError&) {
      throw;
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  long as_int(const std::vector<Arg>& args, std::size_t i, const std::string& fn) const {
    if (const auto* v = std::get_if<long>(&args[i])) return *v;
    fail(fn + ": argument " + std::to_string(i + 1) + " must be an integer");
  }
  const Graph& as_graph(const std::vector<Arg>& args, std::size_t i, const std::string& fn) const {
    if (const auto* g = std::get_if<Graph>(&args[i])) return *g;
    fail(fn + ": argument " + std::to_string(i + 1) + " must be a graph");
  }
  void arity(const std::vector<Arg>& args, std::size_t n, const std::string& fn) const {
    if (args.size() != n) fail(fn + " takes " + std::to_string(n) + " argument(s)");
  }

  Graph apply(const std::string& fn, const std::vector<Arg>& args) const {
    if (fn == "cycle") {
      arity(args, 1, fn);
      return cycle(as_int(args, 0, fn));
    }
    if (fn == "complete") {
      arity(args, 1, fn);
      return complete(as_int(args, 0, fn));
    }
    if (fn == "kbip") {
      arity(args, 2, fn);
      return complete_bipartite(as_int(args, 0, fn), as_int(args, 1, fn));
    }
    if (fn == "hamming") {
      arity(args, 2, fn);
      return hamming(as_int(args, 0, fn), as_int(args, 1, fn));
    }
    if (fn == "hypercube") {
      arity(args, 1, fn);
      return hypercube(as_int(args, 0, fn));
    }
    if (fn == "petersen") {
      arity(args, 0, fn);
      return petersen();
    }
    if (fn == "line") {
      arity(args, 1, fn);
      return line_graph(as_graph(args, 0, fn));
    }
    if (fn == "tensorj") {
      arity(args, 2, fn);
      return tensor_allones(as_graph(args, 0, fn), as_int(args, 1, fn));
    }
    if (fn == "cart") {
      arity(args, 2, fn);
      return cartesian_product(as_graph(args, 0, fn), as_graph(args, 1, fn));
    }
    if (fn == "kron") {
      arity(args, 2, fn);
      return kronecker_product(as_graph(args, 0, fn), as_graph(args, 1, fn));
    }
    if (fn == "bdouble") {
      arity(args, 1, fn);
      return bipartite_double(as_graph(args, 0, fn));
    }
    fail("unknown constructor '" + fn + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph build_graph(std::string_view expr) { return Parser(expr).parse(); }

}  // namespace walklab
