// Copyright 2026 The qroute developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

struct ParseError : public std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error("qasm:" + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

namespace detail {

enum class TokKind { Identifier, Number, String, Symbol, Arrow, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  int line = 0;
  int column = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= src_.size()) {
      current_.kind = TokKind::End;
      current_.text.clear();
      return;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        step();
      }
      current_.kind = TokKind::Identifier;
      current_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      bool seen_exp = false;
      while (pos_ < src_.size()) {
        const char d = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
          step();
        } else if ((d == 'e' || d == 'E') && !seen_exp) {
          seen_exp = true;
          step();
          if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
            step();
          }
        } else {
          break;
        }
      }
      current_.kind = TokKind::Number;
      current_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (c == '"') {
      step();
      std::size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') step();
      if (pos_ >= src_.size()) {
        throw ParseError("unterminated string", current_.line, current_.column);
      }
      current_.kind = TokKind::String;
      current_.text = src_.substr(start, pos_ - start);
      step();
      return;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      step();
      step();
      current_.kind = TokKind::Arrow;
      current_.text = "->";
      return;
    }
    current_.kind = TokKind::Symbol;
    current_.text = std::string(1, c);
    step();
  }

  void skip_space() {
    for (;;) {
      while (pos_ < src_.size() &&
             std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        step();
      }
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') step();
        continue;
      }
      break;
    }
  }

  void step() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  Circuit run() {
    expect_identifier("OPENQASM");
    Token ver = expect(TokKind::Number, "version number");
    if (ver.text != "2.0" && ver.text != "2") {
      throw ParseError("unsupported OPENQASM version '" + ver.text + "'",
                       ver.line, ver.column);
    }
    expect_symbol(";");
    while (lex_.peek().kind != TokKind::End) statement();
    if (!circuit_) {
      throw ParseError("no quantum register declared", 1, 1);
    }
    return std::move(*circuit_);
  }

 private:
  struct Operand {
    std::int32_t index = -1;  // -1 means the whole register
    Token tok;
  };

  void statement() {
    Token head = expect(TokKind::Identifier, "statement");
    const std::string& word = head.text;
    if (word == "include") {
      expect(TokKind::String, "include path");
      expect_symbol(";");
      return;
    }
    if (word == "qreg") {
      declare_register(head, /*quantum=*/true);
      return;
    }
    if (word == "creg") {
      declare_register(head, /*quantum=*/false);
      return;
    }
    if (word == "gate" || word == "opaque" || word == "if" || word == "reset") {
      throw ParseError("unsupported statement '" + word + "'", head.line,
                       head.column);
    }
    if (word == "barrier") {
      require_circuit(head);
      std::vector<std::int32_t> qs = operand_list_expanded(/*quantum=*/true);
      expect_symbol(";");
      circuit_->append(Gate::barrier(std::move(qs)));
      return;
    }
    if (word == "measure") {
      require_circuit(head);
      Operand q = operand(/*quantum=*/true);
      expect(TokKind::Arrow, "'->'");
      Operand c = operand(/*quantum=*/false);
      expect_symbol(";");
      append_measure(head, q, c);
      return;
    }
    application(head);
  }

  void declare_register(const Token& head, bool quantum) {
    Token name = expect(TokKind::Identifier, "register name");
    expect_symbol("[");
    Token size_tok = expect(TokKind::Number, "register size");
    expect_symbol("]");
    expect_symbol(";");
    const long size = std::strtol(size_tok.text.c_str(), nullptr, 10);
    if (size <= 0) {
      throw ParseError("register size must be positive", size_tok.line,
                       size_tok.column);
    }
    if (quantum) {
      if (circuit_) {
        throw ParseError("multiple quantum registers are not supported",
                         head.line, head.column);
      }
      circuit_.emplace(static_cast<std::int32_t>(size), name.text);
      qreg_name_ = name.text;
      qreg_size_ = static_cast<std::int32_t>(size);
    } else {
      if (!creg_name_.empty()) {
        throw ParseError("multiple classical registers are not supported",
                         head.line, head.column);
      }
      creg_name_ = name.text;
      creg_size_ = static_cast<std::int32_t>(size);
      if (circuit_) circuit_->set_num_cbits(creg_size_);
      pending_creg_ = !circuit_;
    }
  }

  void application(const Token& head) {
    require_circuit(head);
    std::vector<double> params;
    if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "(") {
      lex_.take();
      if (!(lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ")")) {
        params.push_back(expression());
        while (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ",") {
          lex_.take();
          params.push_back(expression());
        }
      }
      expect_symbol(")");
    }
    std::vector<Operand> args;
    args.push_back(operand(/*quantum=*/true));
    while (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ",") {
      lex_.take();
      args.push_back(operand(/*quantum=*/true));
    }
    expect_symbol(";");

    static const std::map<std::string, GateKind> kOneQubit = {
        {"h", GateKind::H},     {"x", GateKind::X},     {"y", GateKind::Y},
        {"z", GateKind::Z},     {"s", GateKind::S},     {"sdg", GateKind::Sdg},
        {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"rx", GateKind::Rx},
        {"ry", GateKind::Ry},   {"rz", GateKind::Rz},   {"u1", GateKind::U1},
        {"u2", GateKind::U2},   {"u3", GateKind::U3},
    };

    auto it = kOneQubit.find(head.text);
    if (it != kOneQubit.end() || head.text == "id" ||
        (args.size() == 1 && head.text != "cx" && head.text != "swap" &&
         head.text != "CX")) {
      if (args.size() != 1) {
        throw ParseError("gate '" + head.text + "' takes one operand",
                         head.line, head.column);
      }
      GateKind kind = GateKind::Opaque;
      if (it != kOneQubit.end()) {
        kind = it->second;
        const int want = param_count(kind);
        if (static_cast<int>(params.size()) != want) {
          throw ParseError("gate '" + head.text + "' expects " +
                               std::to_string(want) + " parameter(s)",
                           head.line, head.column);
        }
      }
      for (std::int32_t q : expand(args[0])) {
        Gate g;
        g.kind = kind;
        g.qubits = {q};
        g.params = params;
        if (kind == GateKind::Opaque) g.name = head.text;
        circuit_->append(std::move(g));
      }
      return;
    }

    if (head.text == "cx" || head.text == "CX" || head.text == "swap") {
      if (!params.empty()) {
        throw ParseError("gate '" + head.text + "' takes no parameters",
                         head.line, head.column);
      }
      if (args.size() != 2 || args[0].index < 0 || args[1].index < 0) {
        throw ParseError("gate '" + head.text +
                             "' needs two indexed qubit operands",
                         head.line, head.column);
      }
      const std::int32_t a = resolve(args[0], true);
      const std::int32_t b = resolve(args[1], true);
      if (a == b) {
        throw ParseError("duplicate operand", args[1].tok.line,
                         args[1].tok.column);
      }
      circuit_->append(head.text == "swap" ? Gate::swap(a, b) : Gate::cx(a, b));
      return;
    }

    throw ParseError("unsupported multi-qubit gate '" + head.text + "'",
                     head.line, head.column);
  }

  void append_measure(const Token& head, const Operand& q, const Operand& c) {
    if ((q.index < 0) != (c.index < 0)) {
      throw ParseError("measure operands must both be indexed or both whole "
                       "registers",
                       head.line, head.column);
    }
    if (q.index < 0) {
      if (qreg_size_ != creg_size_) {
        throw ParseError("register sizes differ in whole-register measure",
                         head.line, head.column);
      }
      for (std::int32_t i = 0; i < qreg_size_; ++i) {
        circuit_->append(Gate::measure(i, i));
      }
      return;
    }
    circuit_->append(Gate::measure(resolve(q, true), resolve(c, false)));
  }

  Operand operand(bool quantum) {
    Token name = expect(TokKind::Identifier, "operand");
    const std::string& want = quantum ? qreg_name_ : creg_name_;
    if (name.text != want) {
      throw ParseError("unknown register '" + name.text + "'", name.line,
                       name.column);
    }
    Operand op;
    op.tok = name;
    if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "[") {
      lex_.take();
      Token idx = expect(TokKind::Number, "operand index");
      expect_symbol("]");
      op.index = static_cast<std::int32_t>(
          std::strtol(idx.text.c_str(), nullptr, 10));
      op.tok = idx;
    }
    return op;
  }

  std::int32_t resolve(const Operand& op, bool quantum) const {
    const std::int32_t size = quantum ? qreg_size_ : creg_size_;
    if (op.index < 0 || op.index >= size) {
      throw ParseError("operand index out of range", op.tok.line,
                       op.tok.column);
    }
    return op.index;
  }

  std::vector<std::int32_t> expand(const Operand& op) const {
    if (op.index >= 0) return {resolve(op, true)};
    std::vector<std::int32_t> all(qreg_size_);
    for (std::int32_t i = 0; i < qreg_size_; ++i) all[i] = i;
    return all;
  }

  std::vector<std::int32_t> operand_list_expanded(bool quantum) {
    std::vector<std::int32_t> out;
    for (;;) {
      Operand op = operand(quantum);
      if (op.index < 0) {
        for (std::int32_t q : expand(op)) out.push_back(q);
      } else {
        out.push_back(resolve(op, quantum));
      }
      if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ",") {
        lex_.take();
        continue;
      }
      break;
    }
    return out;
  }

  // expr := term (('+'|'-') term)*
  double expression() {
    double value = term();
    while (lex_.peek().kind == TokKind::Symbol &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      const bool add = lex_.take().text == "+";
      const double rhs = term();
      value = add ? value + rhs : value - rhs;
    }
    return value;
  }

  double term() {
    double value = factor();
    while (lex_.peek().kind == TokKind::Symbol &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      const bool mul = lex_.take().text == "*";
      const double rhs = factor();
      value = mul ? value * rhs : value / rhs;
    }
    return value;
  }

  double factor() {
    const Token t = lex_.take();
    if (t.kind == TokKind::Symbol && t.text == "-") return -factor();
    if (t.kind == TokKind::Symbol && t.text == "(") {
      const double v = expression();
      expect_symbol(")");
      return v;
    }
    if (t.kind == TokKind::Number) {
      return std::strtod(t.text.c_str(), nullptr);
    }
    if (t.kind == TokKind::Identifier && t.text == "pi") {
      return 3.14159265358979323846;
    }
    throw ParseError("expected parameter expression, found '" + t.text + "'",
                     t.line, t.column);
  }

  void require_circuit(const Token& at) {
    if (!circuit_) {
      throw ParseError("no quantum register declared", at.line, at.column);
    }
    if (pending_creg_) {
      circuit_->set_num_cbits(creg_size_);
      pending_creg_ = false;
    }
  }

  Token expect(TokKind kind, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != kind) {
      throw ParseError("expected " + what + ", found '" + t.text + "'", t.line,
                       t.column);
    }
    return t;
  }

  void expect_identifier(const std::string& word) {
    Token t = lex_.take();
    if (t.kind != TokKind::Identifier || t.text != word) {
      throw ParseError("expected '" + word + "'", t.line, t.column);
    }
  }

  void expect_symbol(const std::string& sym) {
    Token t = lex_.take();
    if (t.kind != TokKind::Symbol || t.text != sym) {
      throw ParseError("expected '" + sym + "', found '" + t.text + "'",
                       t.line, t.column);
    }
  }

  Lexer lex_;
  std::optional<Circuit> circuit_;
  std::string qreg_name_;
  std::string creg_name_;
  std::int32_t qreg_size_ = 0;
  std::int32_t creg_size_ = 0;
  bool pending_creg_ = false;
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline Circuit parse_qasm(const std::string& text) {
  return detail::Parser(text).run();
}

inline Circuit parse_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_qasm(buf.str());
}

/// Serializes a circuit as OPENQASM 2.0. With `decompose_swaps`, every SWAP
/// is written as three alternating CNOTs instead of a `swap` statement.
inline std::string emit_qasm(const Circuit& c, bool decompose_swaps = false) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  const std::string& reg = c.register_name();
  out << "qreg " << reg << "[" << c.num_qubits() << "];\n";
  if (c.num_cbits() > 0) out << "creg c[" << c.num_cbits() << "];\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Cx:
        out << "cx " << reg << "[" << g.qubits[0] << "]," << reg << "["
            << g.qubits[1] << "];\n";
        break;
      case GateKind::Swap:
        if (decompose_swaps) {
          const auto a = g.qubits[0], b = g.qubits[1];
          out << "cx " << reg << "[" << a << "]," << reg << "[" << b << "];\n"
              << "cx " << reg << "[" << b << "]," << reg << "[" << a << "];\n"
              << "cx " << reg << "[" << a << "]," << reg << "[" << b << "];\n";
        } else {
          out << "swap " << reg << "[" << g.qubits[0] << "]," << reg << "["
              << g.qubits[1] << "];\n";
        }
        break;
      case GateKind::Barrier: {
        out << "barrier ";
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
          if (i) out << ",";
          out << reg << "[" << g.qubits[i] << "]";
        }
        out << ";\n";
        break;
      }
      case GateKind::Measure:
        out << "measure " << reg << "[" << g.qubits[0] << "] -> c[" << g.cbit
            << "];\n";
        break;
      default: {
        out << (g.kind == GateKind::Opaque ? g.name : gate_name(g.kind));
        if (!g.params.empty()) {
          out << "(";
          for (std::size_t i = 0; i < g.params.size(); ++i) {
            if (i) out << ",";
            out << detail::format_double(g.params[i]);
          }
          out << ")";
        }
        out << " " << reg << "[" << g.qubits[0] << "];\n";
        break;
      }
    }
  }
  return out.str();
}

inline void write_qasm_file(const Circuit& c, const std::string& path,
                            bool decompose_swaps = false) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << emit_qasm(c, decompose_swaps);
}

}  // namespace qroute
