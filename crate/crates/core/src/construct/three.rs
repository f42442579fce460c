use super::single::even_base;
use super::two::anti_diagonal;
use super::{
    build_equal_lengths, build_two_cycles, canonicalize, fill_subsquare_union, inadmissible, prolong, verified,
    Assembly, ConstructError,
};
use crate::conditions::three_cycle_case;
use crate::latin::{is_autotopism, LatinSquare, PartialSquare};
use crate::perm::{gcd, CycleStructure, Isotopism, Permutation};

/// Order-`d1` square admitting `((1…d1), (1…d2)(d2+1…d1), (1…d1))` with
/// `d2 = d1/2`.
pub fn build_horse(d1: usize) -> Result<(LatinSquare, Isotopism), ConstructError> {
    if d1 == 0 || d1 % 2 == 1 {
        return Err(inadmissible(format!("horse needs even order, got {d1}")));
    }
    let d2 = d1 / 2;
    let full = Permutation::from_cycles(d1, &[(1..=d1).collect::<Vec<_>>()]).expect("cycle");
    let split = Permutation::from_cycles(d1, &[(1..=d2).collect::<Vec<_>>(), (d2 + 1..=d1).collect()]).expect("cycles");
    let theta = Isotopism::new(full.clone(), split, full).expect("same degree");
    let [a, b, c] = theta.components();
    let mut p = PartialSquare::new(d1);
    for i in 1..=d2 {
        for (r, col) in [(2 * i - 1, i), (2 * i, d2 + i)] {
            let (mut x, mut y, mut z) = (r, col, 1);
            for _ in 0..d1 {
                p.set(x, y, z);
                (x, y, z) = (a.apply(x), b.apply(y), c.apply(z));
            }
        }
    }
    let l = p.into_square().map_err(|_| ConstructError::Unverified)?;
    if !is_autotopism(&theta, &l) {
        return Err(ConstructError::Unverified);
    }
    Ok((l, theta))
}

/// Square with automorphism of structure `d1·d2·d3·1^{d_∞}`,
/// `d1 ≥ d2 ≥ d3 ≥ 2`, for each admissible case.
pub fn build_three_cycles(
    d1: usize,
    d2: usize,
    d3: usize,
    f: usize,
) -> Result<(LatinSquare, Permutation), ConstructError> {
    if !(d1 >= d2 && d2 >= d3 && d3 >= 2) {
        return Err(inadmissible(format!("cycle lengths {d1} ≥ {d2} ≥ {d3} ≥ 2 expected")));
    }
    let case =
        three_cycle_case(d1, d2, d3, f).ok_or_else(|| inadmissible(format!("{d1}·{d2}·{d3} with {f} fixed points")))?;
    match case {
        1 => build_equal_lengths(d1, 3, f),
        2 => long_and_equal_pair(d1, d2, f),
        3 => {
            if d3 % 2 == 1 {
                let (l, beta) = build_two_cycles(2 * d1, d3, f)?;
                let (l, alpha) = canonicalize(&l, &beta.power(2));
                verified(l, alpha)
            } else {
                let (l, alpha) = equal_pair_even_short(d1, d3)?;
                prolong(&l, &alpha, f - 1)
            }
        }
        4 => {
            let base = usize::from(d1.is_multiple_of(2));
            let (l, alpha) = non_dividing(d1, d2, d3, base)?;
            prolong(&l, &alpha, f - base)
        }
        _ => {
            let base = usize::from(d3.is_multiple_of(2));
            let (l, alpha) = dividing_chain(d1, d2, d3, base)?;
            prolong(&l, &alpha, f - base)
        }
    }
}

fn structure(d1: usize, d2: usize, d3: usize, f: usize) -> CycleStructure {
    CycleStructure::from_lengths([d1, d2, d3].into_iter().chain(std::iter::repeat_n(1, f)))
}

/// The anti-diagonal symbols of `M_11` shared by the `d1 > d2 = d3` and the
/// dividing constructions: a run of `t_2`, a run of `t_3`, fixed symbols
/// in the last `t_1` rows, and the rest `t_1`.
fn chain_diagonal(d1: usize, d2: usize, d3: usize, f: usize) -> Vec<usize> {
    let n = d1 + d2 + d3 + f;
    let (t2, t3) = (d1 + 1, d1 + d2 + 1);
    let h = d1 / 2;
    let mut sym = vec![1; d1 + 1];
    sym[h + 1 - d2..=h].fill(t2);
    sym[h + 1..=h + d3].fill(t3);
    let mut k = 0;
    for i in (1..=d1).rev() {
        if k == f {
            break;
        }
        if sym[i] == 1 {
            sym[i] = n - f + 1 + k;
            k += 1;
        }
    }
    if f == 0 && d1.is_multiple_of(2) {
        sym.swap(d1, h + d3);
    }
    sym
}

fn place_diagonal(asm: &mut Assembly, d1: usize, sym: &[usize]) -> Result<(), ConstructError> {
    for (i, &s) in sym.iter().enumerate().skip(1) {
        asm.place(i, anti_diagonal(d1, i), s)?;
    }
    Ok(())
}

/// `d1 > d2 = d3`, built directly at the requested number of fixed points.
fn long_and_equal_pair(d1: usize, d2: usize, f: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    let mut asm = Assembly::new(&structure(d1, d2, d2, f));
    let n = asm.order();
    place_diagonal(&mut asm, d1, &chain_diagonal(d1, d2, d2, f))?;
    let (k, _) = build_equal_lengths(d2, 2, f)?;
    asm.embed(&k, &(d1 + 1..=n).collect::<Vec<_>>())?;
    asm.complete()
}

/// `d1 = d2 > d3` with `d3` even and one fixed point.
fn equal_pair_even_short(d: usize, d3: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    let mut asm = Assembly::new(&structure(d, d, d3, 1));
    let n = asm.order();
    let (t1, t2, t3) = (1, d + 1, 2 * d + 1);
    let h = d / 2;
    let mut cells = vec![(h + 1, h, n), (t2, 1, t1), (3 * h + 1, 3 * h, n), (2 * d, 2 * d, t2)];
    for i in 1..h {
        cells.push((h + 1 + i, h - i, t2));
        cells.push((t2 + i, t2 - i, t1));
        cells.push((3 * h + i, 3 * h - i, t2));
        cells.push((3 * h + 1 + i, 3 * h - i, t1));
    }
    for i in 1..=h {
        cells.push((h + i, h - i + 2, t1));
        cells.push((i, 2 * d - i, t2));
    }
    for i in 1..=h - d3 {
        cells.push((i, t3 - i, t1));
        cells.push((d + i, t2 - i, t2));
    }
    for i in 1..=d3 {
        cells.push((h - d3 + i, t3 - h + d3 - i, t3));
        cells.push((3 * h - d3 + i, h + d3 - i + 1, t3));
    }
    let q = d3 / 2;
    for i in 1..=q {
        cells.push((h - d3 + i, n - i, t1));
        cells.push((3 * h - d3 + i, n - i, t2));
    }
    for i in 1..q {
        cells.push((h - q + i + 1, n - q - i, t1));
        cells.push((3 * h - q + i + 1, n - q - i, t2));
    }
    cells.push((h + 1, t3, t2));
    cells.push((3 * h + 1, t3, t1));
    for (i, j, s) in cells {
        asm.place(i, j, s)?;
    }
    let (k, _) = even_base(d3)?;
    asm.embed(&k, &(t3..=n).collect::<Vec<_>>())?;
    asm.complete()
}

/// `d1 = lcm(d2, d3)` with `d3 ∤ d2`; `f` is 0 or 1.
fn non_dividing(d1: usize, d2: usize, d3: usize, f: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    let cs = structure(d1, d2, d3, f);
    let mut asm = Assembly::new(&cs);
    let n = asm.order();
    let g = gcd(d2, d3);
    let (t2, t3) = (d1 + 1, d1 + d2 + 1);
    for i in 1..=d1 {
        let s = if i <= d2 - g {
            t2
        } else if i <= d2 + d3 - 2 * g {
            t3
        } else if i == d1 && d1.is_multiple_of(2) {
            n
        } else {
            1
        };
        asm.place(i, anti_diagonal(d1, i), s)?;
    }
    fill_subsquare_union(&mut asm, &cs)?;
    asm.complete()
}

/// `d3 | d2 | d1` with `d1 > d2 > d3`; `f` is 0 or 1.
fn dividing_chain(d1: usize, d2: usize, d3: usize, f: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    let mut asm = Assembly::new(&structure(d1, d2, d3, f));
    let n = asm.order();
    place_diagonal(&mut asm, d1, &chain_diagonal(d1, d2, d3, f))?;
    let (k, _) = build_two_cycles(d2, d3, f)?;
    asm.embed(&k, &(d1 + 1..=n).collect::<Vec<_>>())?;
    asm.complete()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horse_orders() {
        for d in [2, 4, 6, 10] {
            let (l, th) = build_horse(d).unwrap();
            assert_eq!(l.order(), d);
            assert_eq!(th.structure().b, CycleStructure::from_lengths([d / 2, d / 2]));
        }
        assert!(build_horse(5).is_err());
    }

    #[test]
    fn sample_parameters() {
        for (d1, d2, d3, f) in
            [(6, 2, 2, 1), (12, 3, 3, 0), (12, 12, 4, 1), (15, 5, 3, 0), (30, 10, 6, 1), (18, 6, 3, 0)]
        {
            let (_, a) = build_three_cycles(d1, d2, d3, f).unwrap();
            assert_eq!(a.cycle_structure(), structure(d1, d2, d3, f));
        }
    }
}
