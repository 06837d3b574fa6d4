//! Multiplication by `c_1(X)` on the ambient subalgebra as an integer
//! matrix in the basis `1, H, …, H^N`.
//!
//! The ambient part is cyclic, generated by `H`, with one relation of
//! degree `N+1`:
//!
//! - `ρ > 1`: `H^{N+1} = D · H^{N+1-ρ}`
//! - `ρ = 1`: `(H+F)^{N+1} = D · (H+F)^N`
//!
//! so the matrix of `H` is the companion matrix of that relation rewritten
//! in powers of `H`, and `c_1 = ρH`.

use num_bigint::BigInt;
use num_traits::{pow, Zero};

use crate::exactmath::{binomial, IntPoly};
use crate::variety::{fano_index, CompleteIntersection};

/// Coefficients `(a_0, …, a_N)` with `H^{N+1} = Σ a_j H^j` in the ambient
/// quantum ring.
pub fn ambient_relation(ci: &CompleteIntersection) -> Vec<BigInt> {
    let n = ci.dim() as usize;
    let rho = fano_index(ci);
    let big_d = ci.big_d();
    let mut rel = vec![BigInt::zero(); n + 1];
    if rho > 1 {
        rel[n + 1 - rho as usize] = big_d;
    } else {
        // (H+F)^{N+1} - D (H+F)^N = 0, expanded in powers of H
        let f = ci.big_f();
        for (j, slot) in rel.iter_mut().enumerate() {
            let jj = j as i64;
            let from_rhs = &big_d * binomial(n as u64, jj) * pow(f.clone(), n - j);
            let from_lhs = binomial(n as u64 + 1, jj) * pow(f.clone(), n + 1 - j);
            *slot = from_rhs - from_lhs;
        }
    }
    rel
}

/// Matrix of `c_1(X) ⋆_0` on `span(1, H, …, H^N)`; column `j` holds the
/// coordinates of `c_1 ⋆ H^j`.
pub fn companion_matrix(ci: &CompleteIntersection) -> Vec<Vec<BigInt>> {
    let n = ci.dim() as usize;
    let rho = BigInt::from(fano_index(ci));
    let rel = ambient_relation(ci);
    let mut m = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for j in 0..n {
        m[j + 1][j] = rho.clone();
    }
    for (i, a) in rel.iter().enumerate() {
        m[i][n] = &rho * a;
    }
    m
}

/// The characteristic polynomial predicted by the closed-form spectrum:
/// `μ^{N+1-ρ}(μ^ρ - ρ^ρ D)` for `ρ > 1`, `(μ+F)^N (μ - (D-F))` for `ρ = 1`.
pub fn predicted_characteristic_polynomial(ci: &CompleteIntersection) -> IntPoly {
    let n = ci.dim() as usize;
    let rho = fano_index(ci) as usize;
    let big_d = ci.big_d();
    if rho > 1 {
        let scaled = pow(BigInt::from(rho), rho) * big_d;
        &IntPoly::monomial(n + 1 - rho) * &IntPoly::binomial_minus(rho, &scaled)
    } else {
        let f = ci.big_f();
        &IntPoly::linear(&-f.clone()).pow(n as u64) * &IntPoly::linear(&(big_d - f))
    }
}
