//! Exact counts of neutral and normal planar terms, the closed-form
//! generating function for closed normal terms, and Tutte's formula.

mod enumerate;
mod series;
mod table;

pub use enumerate::{enumerate_colored, enumerate_npt, ColoredSkeletons};
pub use series::SeriesQ;
pub use table::{count_tables, CountTable};

use num_bigint::{BigUint, Sign};
use num_rational::BigRational;
use thiserror::Error;

use series::int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("coefficient of z^{n} is not a non-negative integer: {value}")]
    NonIntegral { n: usize, value: String },
    #[error("identity {identity} fails at n = {n}: {lhs} != {rhs}")]
    IdentityViolation {
        identity: &'static str,
        n: usize,
        lhs: BigUint,
        rhs: BigUint,
    },
}

/// Coefficients of `z^1 ..= z^max_n` in
/// `R0(z) = -(1 - 18z - (1 - 12z)^{3/2}) / (54z)`, with `(1 - 12z)^{3/2}`
/// expanded as `(1 - 12z)·(1 - 12z)^{1/2}`.
pub fn closed_form_r0(max_n: usize) -> Result<Vec<BigUint>, CountingError> {
    // z^{n+1} of the numerator feeds z^n of R0
    let order = max_n + 2;
    let root = SeriesQ::binomial(&int(-12), &BigRational::new(1.into(), 2.into()), order);
    let three_halves = &SeriesQ::linear(1, -12, order) * &root;
    let numerator = &SeriesQ::linear(1, -18, order) - &three_halves;
    let r0 = numerator
        .div_z()
        .ok_or_else(|| CountingError::NonIntegral {
            n: 0,
            value: numerator.coeff(0).to_string(),
        })?
        .scale(&BigRational::new((-1).into(), 54.into()));
    if !num_traits::Zero::is_zero(r0.coeff(0)) {
        return Err(CountingError::NonIntegral {
            n: 0,
            value: r0.coeff(0).to_string(),
        });
    }
    (1..=max_n)
        .map(|n| {
            let c = r0.coeff(n);
            match (c.is_integer(), c.to_integer().into_parts()) {
                (true, (Sign::Plus | Sign::NoSign, mag)) => Ok(mag),
                _ => Err(CountingError::NonIntegral {
                    n,
                    value: c.to_string(),
                }),
            }
        })
        .collect()
}

/// Number of rooted planar maps with `n` edges: `2·(2n)!·3^n / (n!·(n+2)!)`.
pub fn tutte_count(n: usize) -> BigUint {
    let fact = |k: usize| (1..=k).fold(BigUint::from(1u32), |acc, j| acc * BigUint::from(j));
    let num = BigUint::from(2u32) * fact(2 * n) * BigUint::from(3u32).pow(n as u32);
    num / (fact(n) * fact(n + 2))
}

/// Result of checking `R(z,0) = z·B(z,1)` and `R1 = R0` row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    /// `(n, F[n][0], Σ_i N[n-1][i], F[n][1])`
    pub rows: Vec<(usize, BigUint, BigUint, BigUint)>,
}

pub fn check_identities(max_n: usize) -> Result<IdentityReport, CountingError> {
    let table = count_tables(max_n, max_n + 1);
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let closed = table.normal(n, 0);
        let column: BigUint = if n == 0 {
            BigUint::default()
        } else {
            (0..=n).map(|i| table.neutral(n - 1, i)).sum()
        };
        if closed != column {
            return Err(CountingError::IdentityViolation {
                identity: "R(z,0) = zB(z,1)",
                n,
                lhs: closed,
                rhs: column,
            });
        }
        let one_var = table.normal(n, 1);
        if one_var != closed {
            return Err(CountingError::IdentityViolation {
                identity: "R1 = R0",
                n,
                lhs: one_var,
                rhs: closed,
            });
        }
        rows.push((n, closed, column, one_var));
    }
    Ok(IdentityReport { rows })
}
