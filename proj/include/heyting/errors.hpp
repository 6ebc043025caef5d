#pragma once

#include <stdexcept>
#include <string>

namespace heyting {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input relation is not a partial order
struct NotAPoset : Error {
  using Error::Error;
};

// a pair of elements without a meet or join
struct NotALattice : Error {
  NotALattice(const std::string& msg, int a_, int b_) : Error(msg), a(a_), b(b_) {}
  int a, b;
};

// heyting mode requested on a non-distributive lattice; witness triple
struct NotDistributive : Error {
  NotDistributive(const std::string& msg, int a_, int b_, int c_)
      : Error(msg), a(a_), b(b_), c(c_) {}
  int a, b, c;
};

struct NotCentral : Error {
  NotCentral(const std::string& msg, int element_) : Error(msg), element(element_) {}
  int element;
};

struct NotAHomomorphism : Error {
  using Error::Error;
};

struct NotSHom : Error {
  using Error::Error;
};

struct NotCentrallySupplemented : Error {
  using Error::Error;
};

struct UnsupportedOperation : Error {
  using Error::Error;
};

// a theorem-backed internal consistency check failed: implementation bug
struct InvariantBreach : Error {
  using Error::Error;
};

struct ResourceLimit : Error {
  using Error::Error;
};

struct FormatError : Error {
  FormatError(const std::string& msg, std::string file_, std::string field_)
      : Error(msg), file(std::move(file_)), field(std::move(field_)) {}
  std::string file, field;
};

struct ParseError : Error {
  ParseError(const std::string& msg, size_t position_) : Error(msg), position(position_) {}
  size_t position;
};

struct FrameAxiomViolation : Error {
  FrameAxiomViolation(const std::string& msg, int axiom_, int w_, int v_, int u_)
      : Error(msg), axiom(axiom_), w(w_), v(v_), u(u_) {}
  int axiom, w, v, u;
};

}  // namespace heyting
