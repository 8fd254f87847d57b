//! Exact Gaussian elimination over ℚ(x) for systems `h = M·h + v`.

use super::RationalFunction;
use crate::error::{Error, Result};

/// Solves `(I - M)·h = v` exactly.
///
/// Pivots are chosen by lowest x-adic valuation within the column. When every
/// entry of `M` is divisible by `x`, the diagonal of `I - M` has valuation 0
/// and elimination never gets stuck.
pub fn solve_fixed_point_system(
    m: &[Vec<RationalFunction>],
    v: &[RationalFunction],
) -> Result<Vec<RationalFunction>> {
    let n = v.len();
    check_square(m, n)?;
    let mut a: Vec<Vec<RationalFunction>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, e)| {
                    let neg = -e;
                    if i == j {
                        &RationalFunction::one() + &neg
                    } else {
                        neg
                    }
                })
                .collect()
        })
        .collect();
    let mut b = v.to_vec();
    solve_in_place(&mut a, &mut b)
}

/// Solves `A·h = b` exactly.
pub fn solve_linear(
    a: &[Vec<RationalFunction>],
    b: &[RationalFunction],
) -> Result<Vec<RationalFunction>> {
    check_square(a, b.len())?;
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    solve_in_place(&mut a, &mut b)
}

fn check_square(m: &[Vec<RationalFunction>], n: usize) -> Result<()> {
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension {
            rows: m.len(),
            cols: m.first().map_or(0, Vec::len),
            len: n,
        });
    }
    Ok(())
}

fn solve_in_place(
    a: &mut [Vec<RationalFunction>],
    b: &mut [RationalFunction],
) -> Result<Vec<RationalFunction>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .filter_map(|r| a[r][col].valuation().map(|v| (v, r)))
            .min()
            .map(|(_, r)| r)
            .ok_or(Error::SingularSystem { column: col })?;
        a.swap(col, pivot);
        b.swap(col, pivot);

        let inv = a[col][col].recip()?;
        let pivot_row: Vec<RationalFunction> = a[col].iter().map(|e| e * &inv).collect();
        let pivot_rhs = &b[col] * &inv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..n {
                if pivot_row[c].is_zero() {
                    continue;
                }
                let t = &factor * &pivot_row[c];
                a[r][c] = &a[r][c] - &t;
            }
            b[r] = &b[r] - &(&factor * &pivot_rhs);
        }
        a[col] = pivot_row;
        b[col] = pivot_rhs;
    }

    let mut h = vec![RationalFunction::zero(); n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..n {
            if !a[r][c].is_zero() && !h[c].is_zero() {
                acc = &acc - &(&a[r][c] * &h[c]);
            }
        }
        // Pivot rows were normalized to a unit diagonal.
        h[r] = acc;
    }
    Ok(h)
}

/// `(I - M)·h - v`, computed exactly.
pub fn fixed_point_residual(
    m: &[Vec<RationalFunction>],
    h: &[RationalFunction],
    v: &[RationalFunction],
) -> Vec<RationalFunction> {
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            let mh = row
                .iter()
                .zip(h)
                .fold(RationalFunction::zero(), |acc, (e, hj)| &acc + &(e * hj));
            &(&h[i] - &mh) - &v[i]
        })
        .collect()
}
