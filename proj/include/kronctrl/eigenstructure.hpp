#pragma once

#include <cstddef>
#include <vector>

#include "kronctrl/matrix.hpp"
#include "kronctrl/rational.hpp"

namespace kronctrl {

struct Eigenvalue {
  Rational value;
  std::size_t algebraic_multiplicity = 0;

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

struct Spectrum {
  std::vector<Eigenvalue> eigenvalues;  ///< rational eigenvalues, ascending
  bool fully_factored = false;          ///< false if some eigenvalue is irrational or complex
};

/// Exact rational part of the spectrum (characteristic polynomial + rational
/// roots). Throws DimensionMismatch for non-square input.
Spectrum eigenvalues(const Mat& a);

/// Left Jordan chain of one Jordan block:
///   chain[0]·(A - λI) = 0,  chain[k]·(A - λI) = chain[k-1].
/// chain[0] is the eigenvector ("top vector"); chain.size() is the block size.
struct JordanBlockChain {
  Rational eigenvalue;
  std::vector<RowVec> chain;

  std::size_t size() const noexcept { return chain.size(); }
  /// 1-based accessor matching the v^1..v^p convention.
  const RowVec& v(std::size_t k) const { return chain.at(k - 1); }
};

struct Eigenstructure {
  std::size_t dimension = 0;
  /// Sorted by eigenvalue, then by descending block size, then pivot order.
  std::vector<JordanBlockChain> blocks;
  /// True when the spectrum is fully rational, so the chains span R^dimension.
  bool complete = false;
};

/// Jordan block sizes of λ in descending order, from the rank sequence of
/// (A - λI)^k. Empty when λ is not an eigenvalue.
std::vector<std::size_t> segre_characteristic(const Mat& a, const Rational& lambda);

/// One chain per Jordan block of λ, longest first. Throws NotAnEigenvalue.
std::vector<JordanBlockChain> left_jordan_chains(const Mat& a, const Rational& lambda);

/// Chains for every rational eigenvalue. Never throws on an irrational
/// spectrum; `complete` reports it instead.
Eigenstructure eigenstructure(const Mat& a);

/// As eigenstructure(), but throws IrrationalSpectrum unless complete.
Eigenstructure complete_eigenstructure(const Mat& a);

/// True iff every Jordan block has size 1. Throws IrrationalSpectrum.
bool is_diagonalizable(const Mat& a);
bool is_diagonalizable(const Eigenstructure& es);

/// Checks every chain relation exactly, joint independence of all chain
/// vectors, and that block sizes sum to a.rows().
bool verify_eigenstructure(const Mat& a, const Eigenstructure& es);

/// V stacks each block's chain in reversed order [v^p; ...; v^1], and J is
/// the matching upper Jordan matrix, so that V·A = J·V.
struct JordanForm {
  Mat basis;
  Mat jordan;
};
JordanForm jordan_form(const Eigenstructure& es);

}  // namespace kronctrl
