//! Shared helpers for the integration test crates.
#![allow(dead_code)]

use cobord::exactalg::{rat, Monomial, MultiPoly, Var};

/// All semistandard Young tableaux of the given shape with entries in
/// `1..=n`, summed as content monomials: the combinatorial definition of the
/// Schur polynomial.
pub fn schur_by_tableaux(lambda: &[u32], n: usize) -> MultiPoly {
    fn fill(
        lambda: &[u32],
        n: usize,
        rows: &mut Vec<Vec<u32>>,
        r: usize,
        c: usize,
        acc: &mut MultiPoly,
    ) {
        if r == lambda.len() {
            let mut counts = vec![0u32; n];
            for row in rows.iter() {
                for &v in row {
                    counts[v as usize - 1] += 1;
                }
            }
            let mono: Vec<(Var, u32)> = counts
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, &e)| (Var::X(i as u32 + 1), e))
                .collect();
            *acc = &*acc + &MultiPoly::term(Monomial::from_factors(mono), rat(1));
            return;
        }
        if c == lambda[r] as usize {
            fill(lambda, n, rows, r + 1, 0, acc);
            return;
        }
        let min_row = if c > 0 { rows[r][c - 1] } else { 1 }; // weakly increasing rows
        let min_col = if r > 0 && (rows[r - 1].len() > c) {
            rows[r - 1][c] + 1 // strictly increasing columns
        } else {
            1
        };
        for v in min_row.max(min_col)..=n as u32 {
            rows[r].push(v);
            fill(lambda, n, rows, r, c + 1, acc);
            rows[r].pop();
        }
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); lambda.len()];
    let mut acc = MultiPoly::zero();
    fill(lambda, n, &mut rows, 0, 0, &mut acc);
    acc
}
