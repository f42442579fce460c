use super::{build_single_cycle, canonicalize, halving_square, inadmissible, verified, Assembly, ConstructError};
use crate::latin::{cyclic_square, direct_product, product_permutation, LatinSquare};
use crate::perm::{CycleStructure, Permutation};

/// Two `d`-cycles, `d` even, no fixed points: four copies of one staircase.
fn staircase_pair(d: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    let (t1, t2) = (1, d + 1);
    let mut asm = Assembly::new(&CycleStructure::from_lengths([d, d]));
    let h = d / 2;
    let mut cells = Vec::new();
    for i in 1..=h {
        cells.push((i, h + 1 - i, t1));
        cells.push((i, h + 2 - i, t2));
    }
    cells.push((h + 1, d + 1, t2));
    for i in 1..=h {
        cells.push((h + i, 2 * d + 1 - i, t1));
    }
    for i in 1..h {
        cells.push((h + 1 + i, 2 * d + 1 - i, t2));
    }
    for (i, j, s) in cells {
        asm.place(i, j, s)?;
        // M22 repeats M11 and M21 repeats M12.
        if j <= d {
            asm.place(i + d, j + d, s)?;
        } else {
            asm.place(i + d, j - d, s)?;
        }
    }
    asm.complete()
}

/// Square with automorphism of structure `d^m·1^{d_∞}`. Admissible when
/// `d_∞ > 0` and `d_∞ ≤ md`, or `d_∞ = 0` and `d` odd or `m` even.
pub fn build_equal_lengths(d: usize, m: usize, f: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    if d == 0 || m == 0 {
        return Err(inadmissible("cycle length and count must be positive"));
    }
    let n = m * d + f;
    if d == 1 {
        return Ok((cyclic_square(n), Permutation::identity(n)));
    }
    if f > 0 {
        if f > m * d {
            return Err(inadmissible(format!("{f} fixed points exceed {m}·{d}")));
        }
        let (l, omega) = build_single_cycle(n, m * d)?;
        let (l, alpha) = canonicalize(&l, &omega.power(m as i64));
        return verified(l, alpha);
    }
    let (l, alpha) = if d % 2 == 1 {
        let (h, theta) = halving_square(d)?;
        (direct_product(&h, &cyclic_square(m)), product_permutation(&theta, &Permutation::identity(m)))
    } else if m.is_multiple_of(2) {
        let (s, theta) = staircase_pair(d)?;
        let k = m / 2;
        (direct_product(&s, &cyclic_square(k)), product_permutation(&theta, &Permutation::identity(k)))
    } else {
        return Err(inadmissible(format!("{m} cycles of even length {d} without fixed points")));
    };
    let (l, alpha) = canonicalize(&l, &alpha);
    verified(l, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let (l, a) = build_equal_lengths(2, 2, 0).unwrap();
        assert_eq!(l.order(), 4);
        assert_eq!(a.to_string(), "(1 2)(3 4)");
        let (l, a) = build_equal_lengths(3, 2, 3).unwrap();
        assert_eq!(l.order(), 9);
        assert_eq!(a.cycle_structure(), "3^2.1^3".parse().unwrap());
        assert!(build_equal_lengths(2, 1, 0).is_err());
        assert!(build_equal_lengths(2, 3, 7).is_err());
    }

    #[test]
    fn staircase_orders() {
        for d in [2, 4, 6, 8, 12] {
            for m in [2, 4] {
                let (_, a) = build_equal_lengths(d, m, 0).unwrap();
                assert_eq!(a.cycle_structure(), CycleStructure::from_lengths(vec![d; m]));
            }
        }
    }
}
