use super::{inadmissible, prolong, verified, Assembly, ConstructError};
use crate::contour::offset_first;
use crate::latin::{cyclic_square, LatinSquare};
use crate::perm::{CycleStructure, Permutation};

/// `L(i, j) = 2⁻¹(i + j) mod d` on 0-based labels; admits `(1 2 … d)` for
/// odd `d`.
pub fn halving_square(d: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    if d.is_multiple_of(2) {
        return Err(inadmissible(format!("halving square needs odd order, got {d}")));
    }
    let half = d.div_ceil(2) % d.max(1);
    let cells = (0..d).flat_map(|x| (0..d).map(move |y| ((x + y) * half) % d + 1)).collect();
    let l = LatinSquare::from_flat(d, cells).map_err(|_| ConstructError::Unverified)?;
    let alpha = Permutation::from_cycles(d, &[(1..=d).collect::<Vec<_>>()]).expect("d-cycle");
    verified(l, alpha)
}

/// Order `d + 1` with automorphism `(1 … d)(d+1)` for even `d`; `t_1`
/// occurs `d − 1` times in `M_11`.
pub(crate) fn even_base(d: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    let n = d + 1;
    let mut asm = Assembly::new(&CycleStructure::from_lengths([d, 1]));
    for i in 1..d {
        let col = (d + 1 - i) as isize - offset_first(d, i);
        asm.place(i, col as usize, 1)?;
    }
    asm.place(d, d, n)?;
    asm.place(d, n, 1)?;
    asm.place(n, d / 2, 1)?;
    asm.place(n, n, n)?;
    asm.complete()
}

/// Square with automorphism of structure `d·1^{n−d}`: admissible when `d = n`
/// is odd or `⌈n/2⌉ ≤ d < n`.
pub fn build_single_cycle(n: usize, d: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    if d == 0 || d > n || !((d == n && n % 2 == 1) || (n.div_ceil(2) <= d && d < n)) {
        return Err(inadmissible(format!("a {d}-cycle with {} fixed points", n.saturating_sub(d))));
    }
    if d == 1 {
        return Ok((cyclic_square(n), Permutation::identity(n)));
    }
    let (base, alpha) = if d % 2 == 1 { halving_square(d)? } else { even_base(d)? };
    prolong(&base, &alpha, n - base.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::prolongation_capacity;

    #[test]
    fn halving_admits_the_cycle() {
        for d in [1, 3, 5, 9, 15] {
            let (l, a) = halving_square(d).unwrap();
            assert_eq!(prolongation_capacity(&l, &a).min(d), d);
        }
        assert!(halving_square(4).is_err());
    }

    #[test]
    fn even_base_capacity() {
        for d in [2, 4, 6, 10, 20] {
            let (l, a) = even_base(d).unwrap();
            assert_eq!(prolongation_capacity(&l, &a), d - 1);
        }
    }

    #[test]
    fn single_cycle_range() {
        for n in 1usize..=14 {
            for d in 1..=n {
                let ok = (d == n && n % 2 == 1) || (n.div_ceil(2) <= d && d < n);
                let got = build_single_cycle(n, d);
                assert_eq!(got.is_ok(), ok, "n={n} d={d}");
                if let Ok((_, a)) = got {
                    assert_eq!(
                        a.cycle_structure(),
                        CycleStructure::from_lengths([d].into_iter().chain(std::iter::repeat_n(1, n - d)))
                    );
                }
            }
        }
        assert!(build_single_cycle(4, 4).is_err());
    }
}
