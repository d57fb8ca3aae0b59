#include "pointscheme/algebra_io.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "pointscheme/error.hpp"

namespace pointscheme {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw parse_error("line " + std::to_string(line) + ": " + msg);
}

bool is_label_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '.' && c != '*' && c != '+' &&
         c != '-' && c != ':' && c != '#';
}

void check_label(std::size_t line, const std::string& label, const char* what) {
  if (label.empty()) fail(line, std::string("empty ") + what + " label");
  for (char c : label) {
    if (!is_label_char(c)) fail(line, std::string("invalid character in ") + what + " '" + label + "'");
  }
}

struct Term {
  Scalar coeff;
  std::vector<std::size_t> arrows;
};

class Parser {
 public:
  Parser(std::string_view text, std::string name) : text_(text), name_(std::move(name)) {}

  AlgebraSpec run() {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      std::string_view line = text_.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) handle(line_no, line);
      start = end + 1;
    }
    if (!field_) fail(line_no, "missing 'field' declaration");
    if (!base_) fail(line_no, "missing 'vertices' declaration");
    return AlgebraSpec(name_, *field_, bimodule(), std::move(generators_));
  }

 private:
  enum class Stage { start, field, vertices, arrows, rels };

  void handle(std::size_t line, std::string_view text) {
    const auto space = text.find_first_of(" \t");
    const std::string keyword(text.substr(0, space));
    const std::string_view rest =
        space == std::string_view::npos ? std::string_view{} : trim(text.substr(space));
    if (keyword == "field") {
      expect_after(line, Stage::start, "field");
      parse_field(line, rest);
      stage_ = Stage::field;
    } else if (keyword == "vertices") {
      expect_after(line, Stage::field, "vertices");
      parse_vertices(line, rest);
      stage_ = Stage::vertices;
    } else if (keyword == "arrow") {
      if (stage_ != Stage::vertices && stage_ != Stage::arrows) {
        fail(line, "'arrow' must follow 'vertices' and precede 'rel'");
      }
      parse_arrow(line, rest);
      stage_ = Stage::arrows;
    } else if (keyword == "rel") {
      if (stage_ != Stage::vertices && stage_ != Stage::arrows && stage_ != Stage::rels) {
        fail(line, "'rel' must follow the vertex and arrow declarations");
      }
      if (!bimodule_) bimodule_.emplace(*base_, arrows_);
      parse_rel(line, rest);
      stage_ = Stage::rels;
    } else {
      fail(line, "unknown declaration '" + keyword + "'");
    }
  }

  void expect_after(std::size_t line, Stage required, const char* what) {
    if (stage_ != required) fail(line, std::string("'") + what + "' declared out of order");
  }

  void parse_field(std::size_t line, std::string_view rest) {
    const auto toks = split_ws(rest);
    if (toks.size() != 1) fail(line, "expected 'field Q' or 'field <prime>'");
    if (toks[0] == "Q") {
      field_ = Field::rationals();
      return;
    }
    for (char c : toks[0]) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(line, "malformed field '" + toks[0] + "'");
    }
    try {
      field_ = Field::prime(std::stoull(toks[0]));
    } catch (const Error& e) {
      fail(line, e.what());
    } catch (const std::out_of_range&) {
      fail(line, "field characteristic out of range");
    }
  }

  void parse_vertices(std::size_t line, std::string_view rest) {
    auto labels = split_ws(rest);
    if (labels.empty()) fail(line, "no vertices declared");
    for (const auto& l : labels) check_label(line, l, "vertex");
    try {
      base_.emplace(std::move(labels));
    } catch (const Error& e) {
      fail(line, e.what());
    }
  }

  VertexId vertex(std::size_t line, const std::string& label) const {
    auto v = base_->find(label);
    if (!v) fail(line, "unknown vertex '" + label + "'");
    return *v;
  }

  void parse_arrow(std::size_t line, std::string_view rest) {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) fail(line, "expected 'arrow <label>: <src> -> <dst>'");
    const std::string label(trim(rest.substr(0, colon)));
    check_label(line, label, "arrow");
    const auto toks = split_ws(rest.substr(colon + 1));
    if (toks.size() != 3 || toks[1] != "->") fail(line, "expected '<src> -> <dst>' after arrow label");
    for (const auto& a : arrows_) {
      if (a.label == label) fail(line, "duplicate arrow label '" + label + "'");
    }
    arrows_.push_back(Arrow{label, vertex(line, toks[0]), vertex(line, toks[2])});
  }

  std::vector<Term> parse_terms(std::size_t line, std::string_view expr) {
    std::vector<Term> terms;
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
    };
    skip_ws();
    if (pos == expr.size()) fail(line, "empty relation");
    bool first = true;
    while (pos < expr.size()) {
      bool negative = false;
      if (expr[pos] == '+' || expr[pos] == '-') {
        negative = expr[pos] == '-';
        ++pos;
        skip_ws();
      } else if (!first) {
        fail(line, "expected '+' or '-' between terms");
      }
      first = false;
      std::size_t end = pos;
      while (end < expr.size() && !std::isspace(static_cast<unsigned char>(expr[end])) &&
             expr[end] != '+' && expr[end] != '-') {
        ++end;
      }
      const std::string_view chunk = expr.substr(pos, end - pos);
      if (chunk.empty()) fail(line, "missing term after sign");
      terms.push_back(parse_term(line, chunk, negative));
      pos = end;
      skip_ws();
    }
    return terms;
  }

  Term parse_term(std::size_t line, std::string_view chunk, bool negative) {
    Scalar coeff = Scalar::one(*field_);
    std::string_view word = chunk;
    if (auto star = chunk.find('*'); star != std::string_view::npos) {
      try {
        coeff = parse_scalar(*field_, chunk.substr(0, star));
      } catch (const Error& e) {
        fail(line, e.what());
      }
      word = chunk.substr(star + 1);
    }
    if (negative) coeff = -coeff;
    Term t{coeff, {}};
    std::size_t start = 0;
    while (true) {
      const auto dot = word.find('.', start);
      const std::string label(word.substr(start, dot == std::string_view::npos ? dot : dot - start));
      if (label.empty()) fail(line, "empty arrow label in term '" + std::string(chunk) + "'");
      auto id = bimodule_->find_arrow(label);
      if (!id) fail(line, "unknown arrow '" + label + "'");
      if (!t.arrows.empty() &&
          bimodule_->arrow(t.arrows.back()).target != bimodule_->arrow(*id).source) {
        fail(line, "word '" + std::string(word) + "' is not a path");
      }
      t.arrows.push_back(*id);
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return t;
  }

  void parse_rel(std::size_t line, std::string_view rest) {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) fail(line, "expected 'rel <name>: <terms>'");
    const std::string name(trim(rest.substr(0, colon)));
    if (name.empty() || name.find_first_of(" \t") != std::string::npos) {
      fail(line, "malformed relation name '" + name + "'");
    }
    const auto terms = parse_terms(line, rest.substr(colon + 1));
    const std::size_t degree = terms.front().arrows.size();
    for (const auto& t : terms) {
      if (t.arrows.size() != degree) fail(line, "relation '" + name + "' mixes degrees");
    }

    const Bimodule& e = *bimodule_;
    std::map<Path, TensorElem> parts;
    for (const auto& t : terms) {
      Path path;
      Word w;
      path.vertices.push_back(e.arrow(t.arrows.front()).source);
      for (auto id : t.arrows) {
        path.vertices.push_back(e.arrow(id).target);
        w.push_back(e.local_index(id));
      }
      auto it = parts.try_emplace(path, *field_, path).first;
      it->second.add_term(w, t.coeff);
    }
    std::vector<Generator> split;
    for (auto& [path, elem] : parts) {
      if (elem.is_zero()) continue;
      split.push_back(Generator{name, std::move(elem)});
    }
    if (parts.size() > 1) {
      for (auto& g : split) {
        std::string suffix;
        for (auto v : g.elem.path().vertices) suffix += (suffix.empty() ? "" : "-") + base_->label(v);
        g.name += "@" + suffix;
      }
    }
    for (auto& g : split) generators_.push_back(std::move(g));
  }

  Bimodule bimodule() {
    if (!bimodule_) bimodule_.emplace(*base_, arrows_);
    return *bimodule_;
  }

  std::string_view text_;
  std::string name_;
  Stage stage_ = Stage::start;
  std::optional<Field> field_;
  std::optional<BaseSet> base_;
  std::vector<Arrow> arrows_;
  std::optional<Bimodule> bimodule_;
  std::vector<Generator> generators_;
};

}  // namespace

AlgebraSpec parse_algebra(std::string_view text, std::string name) {
  return Parser(text, std::move(name)).run();
}

std::string print_algebra(const AlgebraSpec& a) {
  std::ostringstream os;
  const Bimodule& e = a.bimodule;
  os << "field " << a.field.name() << "\n";
  os << "vertices";
  for (const auto& l : e.base().labels()) os << " " << l;
  os << "\n";
  for (const auto& arrow : e.arrows()) {
    os << "arrow " << arrow.label << ": " << e.base().label(arrow.source) << " -> "
       << e.base().label(arrow.target) << "\n";
  }
  for (const auto& g : a.ideal.generators()) {
    if (g.elem.is_zero()) continue;
    os << "rel " << g.name << ": " << to_string(e, g.elem) << "\n";
  }
  return os.str();
}

}  // namespace pointscheme
