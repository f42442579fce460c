use super::single::even_base;
use super::{build_equal_lengths, halving_square, inadmissible, prolong, Assembly, ConstructError};
use crate::contour::offset_first;
use crate::latin::LatinSquare;
use crate::perm::{CycleStructure, Permutation};

/// Column `t_2 − i − O_{1,i}` used along the main anti-diagonal of `M_11`.
pub(crate) fn anti_diagonal(d1: usize, i: usize) -> usize {
    ((d1 + 1 - i) as isize - offset_first(d1, i)) as usize
}

/// Square with automorphism of structure `d1·d2·1^{d_∞}`. For `d1 > d2`
/// admissible when `d2 | d1`, `d_∞ ≤ d2`, and `d_∞ > 0` for even `d2`.
pub fn build_two_cycles(d1: usize, d2: usize, f: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    if d1 == d2 {
        return build_equal_lengths(d1, 2, f);
    }
    if d2 < 2 || d1 < d2 {
        return Err(inadmissible(format!("cycle lengths {d1} ≥ {d2} ≥ 2 expected")));
    }
    if !d1.is_multiple_of(d2) {
        return Err(inadmissible(format!("{d2} does not divide {d1}")));
    }
    if f > d2 {
        return Err(inadmissible(format!("{f} fixed points exceed {d2}")));
    }
    if d2.is_multiple_of(2) && f == 0 {
        return Err(inadmissible(format!("even {d2}-cycle needs a fixed point")));
    }
    let (l, alpha) = if d2 % 2 == 1 { odd_base(d1, d2)? } else { even_base_pair(d1, d2)? };
    prolong(&l, &alpha, f + d1 + d2 - l.order())
}

/// No fixed points, `d2` odd.
fn odd_base(d1: usize, d2: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    let (t1, t2) = (1, d1 + 1);
    let mut asm = Assembly::new(&CycleStructure::from_lengths([d1, d2]));
    for i in 1..=d1 {
        asm.place(i, anti_diagonal(d1, i), if i <= d1 - d2 { t1 } else { t2 })?;
    }
    let (k, _) = halving_square(d2)?;
    asm.embed(&k, &(t2..t2 + d2).collect::<Vec<_>>())?;
    asm.complete()
}

/// One fixed point, `d2` even.
fn even_base_pair(d1: usize, d2: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    let n = d1 + d2 + 1;
    let (t1, t2, t3) = (1, d1 + 1, d1 + d2 + 1);
    let (h1, h2) = (d1 / 2, d2 / 2);
    let mut asm = Assembly::new(&CycleStructure::from_lengths([d1, d2, 1]));
    for i in 1..=d1 {
        let s = if i == d1 {
            n
        } else if h1 - d2 < i && i <= h1 {
            t2
        } else {
            t1
        };
        asm.place(i, anti_diagonal(d1, i), s)?;
    }
    let (k, _) = even_base(d2)?;
    let mut points: Vec<usize> = (t2..t2 + d2).collect();
    points.push(n);
    asm.embed(&k, &points)?;
    asm.place(d1, t3 - 1, t1)?;
    // The two runs of the broken even pattern in M_12 swap row offsets with
    // the parity of d1/d2.
    let (short, long) = if (d1 / d2).is_multiple_of(2) { (h1 - d2, h1 - h2) } else { (h1 - h2, h1 - d2) };
    for i in 1..h2 {
        asm.place(short + i, t3 - 1 - i, t1)?;
    }
    for i in 1..=h2 {
        asm.place(long + i, t2 + h2 - i, t1)?;
    }
    asm.complete()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latin::is_autotopism;
    use crate::perm::Isotopism;

    #[test]
    fn sample_parameters() {
        for (d1, d2, f) in [(6, 3, 0), (9, 3, 0), (16, 4, 1), (18, 6, 1), (4, 2, 2), (12, 3, 3)] {
            let (l, a) = build_two_cycles(d1, d2, f).unwrap();
            assert!(is_autotopism(&Isotopism::automorphism(a.clone()), &l));
            assert_eq!(a.cycle_structure().nontrivial(), vec![d1, d2]);
            assert_eq!(a.cycle_structure().fixed_points(), f);
        }
    }

    #[test]
    fn rejections() {
        assert!(build_two_cycles(4, 2, 0).is_err());
        assert!(build_two_cycles(6, 4, 1).is_err());
        assert!(build_two_cycles(6, 3, 4).is_err());
    }
}
