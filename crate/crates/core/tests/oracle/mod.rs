//! Naive reference enumerator: every Latin square of order n, built row by
//! row from permutations avoiding column clashes. Deliberately shares no code
//! with the orbit search.

#![allow(dead_code)]

use autotopism::latin::LatinSquare;
use autotopism::perm::Isotopism;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for s in 1..=n {
            if !used[s] {
                used[s] = true;
                cur.push(s);
                rec(n, cur, used, out);
                cur.pop();
                used[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

/// All Latin squares of order `n` as row-major cell vectors.
pub fn all_squares(n: usize) -> Vec<Vec<usize>> {
    let perms = permutations(n);
    let mut out = Vec::new();
    let mut rows: Vec<usize> = Vec::new();
    fn rec(n: usize, perms: &[Vec<usize>], rows: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = rows.len();
        if k == n {
            out.push(rows.iter().flat_map(|&r| perms[r].iter().copied()).collect());
            return;
        }
        'next: for (idx, p) in perms.iter().enumerate() {
            for &r in rows.iter() {
                if perms[r].iter().zip(p).any(|(a, b)| a == b) {
                    continue 'next;
                }
            }
            rows.push(idx);
            rec(n, perms, rows, out);
            rows.pop();
        }
    }
    rec(n, &perms, &mut rows, &mut out);
    out
}

/// Direct evaluation of `γ(L(i,j)) = L(α(i), β(j))` on a raw cell vector.
pub fn admits(theta: &Isotopism, n: usize, cells: &[usize]) -> bool {
    (1..=n).all(|i| {
        (1..=n).all(|j| {
            theta.gamma.apply(cells[(i - 1) * n + j - 1])
                == cells[(theta.alpha.apply(i) - 1) * n + theta.beta.apply(j) - 1]
        })
    })
}

pub fn naive_delta(theta: &Isotopism, squares: &[Vec<usize>]) -> u64 {
    let n = theta.degree();
    squares.iter().filter(|c| admits(theta, n, c)).count() as u64
}

pub fn naive_witness(theta: &Isotopism, squares: &[Vec<usize>]) -> Option<LatinSquare> {
    let n = theta.degree();
    squares.iter().find(|c| admits(theta, n, c)).map(|c| LatinSquare::from_flat(n, c.clone()).unwrap())
}
