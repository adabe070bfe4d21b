#pragma once

#include "clm/rational.hpp"

#include <optional>
#include <vector>

namespace clm {

using IMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

IMat identity_imat(std::size_t n);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_apply(const IMat& a, const IVec& x);

// Smith normal form: returns diagonal d with d_1 | d_2 | ... (nonnegative,
// zeros trailing). With transforms: u*m*v = diag(d), u and v unimodular.
struct SnfResult {
    std::vector<Int> diag;
    IMat u, v; // present only when requested
};
std::vector<Int> snf_diagonal(IMat m);
SnfResult snf_with_transforms(IMat m);

// Basis of the saturated right kernel {x in Z^n : m x = 0}; each basis
// vector is a column reported as a row of the result.
IMat int_kernel(const IMat& m);

// Row-style Hermite basis of the integer row span; returns r independent rows.
IMat hnf_row_basis(IMat m);

// One integer solution of a x = b, if any.
std::optional<IVec> int_solve(const IMat& a, const IVec& b);

std::size_t imat_rank(const IMat& m); // rank over Q
Int bareiss_det(IMat m);              // exact determinant, square input

// Rational Gaussian elimination utilities.
std::size_t q_rank(QMat m);
QMat q_nullspace(const QMat& m);                       // rows span right kernel
std::optional<QVec> q_solve(QMat a, QVec b);           // one solution of a x = b
std::vector<QVec> q_solve_all(const QMat& a, const std::vector<QVec>& rhs);
Rat q_det(QMat m);

} // namespace clm
