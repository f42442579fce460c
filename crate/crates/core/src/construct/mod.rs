//! Witness builders: each returns a square together with an isotopism it
//! admits, checked with `is_autotopism` before returning.

mod equal;
mod single;
mod three;
mod two;

use thiserror::Error;

pub use equal::build_equal_lengths;
pub use single::{build_single_cycle, halving_square};
pub use three::{build_horse, build_three_cycles};
pub use two::build_two_cycles;

use crate::conditions::{check_trivial_component, classify, decide_automorphism, horse_shape, Construction, Verdict};
use crate::latin::{apply_isotopism, cyclic_square, is_autotopism, parastrophe, LatinSquare, PartialSquare};
use crate::perm::{canonical_permutation, CycleStructure, Isotopism, Parastrophy, Permutation, StructureTriple};
use crate::search::{complete_with, SearchConfig, SearchError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("{0}")]
    Precondition(String),
    #[error("placing {symbol} at ({row}, {col}) clashes with the partial square")]
    Clash { row: usize, col: usize, symbol: usize },
    #[error("automorphism must be canonical")]
    NotCanonical,
    #[error("completion found no square")]
    NoCompletion,
    #[error("completion search: {0}")]
    Search(#[from] SearchError),
    #[error("built square does not admit the isotopism")]
    Unverified,
    #[error("no construction covers {0}")]
    Uncovered(String),
}

fn inadmissible(msg: impl Into<String>) -> ConstructError {
    ConstructError::Inadmissible(msg.into())
}

/// Node budget for completing the slack of a partial construction.
const COMPLETION_NODES: u64 = 200_000;

/// A partial square under construction for a canonical automorphism.
/// Every placement is expanded along its cell orbit and checked against
/// the rows and columns already filled.
pub(crate) struct Assembly {
    alpha: Permutation,
    cells: PartialSquare,
    row_has: Vec<bool>,
    col_has: Vec<bool>,
}

impl Assembly {
    pub(crate) fn new(cs: &CycleStructure) -> Self {
        let n = cs.degree();
        Assembly {
            alpha: canonical_permutation(cs),
            cells: PartialSquare::new(n),
            row_has: vec![false; n * n],
            col_has: vec![false; n * n],
        }
    }

    pub(crate) fn order(&self) -> usize {
        self.alpha.degree()
    }

    fn set_one(&mut self, i: usize, j: usize, s: usize) -> Result<(), ConstructError> {
        let n = self.order();
        let clash = ConstructError::Clash { row: i, col: j, symbol: s };
        match self.cells.get(i, j) {
            Some(v) if v == s => return Ok(()),
            Some(_) => return Err(clash),
            None => {}
        }
        let (r, c) = ((i - 1) * n + s - 1, (j - 1) * n + s - 1);
        if self.row_has[r] || self.col_has[c] {
            return Err(clash);
        }
        self.row_has[r] = true;
        self.col_has[c] = true;
        self.cells.set(i, j, s);
        Ok(())
    }

    /// Places `s` at `(i, j)` and its images along the cell orbit.
    pub(crate) fn place(&mut self, i: usize, j: usize, s: usize) -> Result<(), ConstructError> {
        let a = &self.alpha;
        let len = crate::perm::lcm(a.cycle_len(i), a.cycle_len(j));
        if !len.is_multiple_of(a.cycle_len(s)) {
            return Err(ConstructError::Clash { row: i, col: j, symbol: s });
        }
        let (mut x, mut y, mut z) = (i, j, s);
        for _ in 0..len {
            self.set_one(x, y, z)?;
            x = self.alpha.apply(x);
            y = self.alpha.apply(y);
            z = self.alpha.apply(z);
        }
        Ok(())
    }

    /// Copies `sub` onto the points `points` (local `x` ↦ `points[x − 1]`).
    pub(crate) fn embed(&mut self, sub: &LatinSquare, points: &[usize]) -> Result<(), ConstructError> {
        for i in 1..=sub.order() {
            for j in 1..=sub.order() {
                self.set_one(points[i - 1], points[j - 1], points[sub.get(i, j) - 1])?;
            }
        }
        Ok(())
    }

    /// Fills the remaining cells by search, then verifies.
    pub(crate) fn complete(self) -> Result<(LatinSquare, Permutation), ConstructError> {
        let theta = Isotopism::automorphism(self.alpha.clone());
        let l = if self.cells.filled() == self.order() * self.order() {
            self.cells.into_square().map_err(|_| ConstructError::Unverified)?
        } else {
            let cfg = SearchConfig { bound: None, node_limit: Some(COMPLETION_NODES), parallel: false };
            complete_with(&theta, &self.cells, &cfg)?.ok_or(ConstructError::NoCompletion)?
        };
        verified(l, self.alpha)
    }

    pub(crate) fn into_partial(self) -> (PartialSquare, Permutation) {
        (self.cells, self.alpha)
    }
}

fn verified(l: LatinSquare, alpha: Permutation) -> Result<(LatinSquare, Permutation), ConstructError> {
    if is_autotopism(&Isotopism::automorphism(alpha.clone()), &l) {
        Ok((l, alpha))
    } else {
        Err(ConstructError::Unverified)
    }
}

/// Relabels `(l, alpha)` so that the automorphism becomes canonical.
pub(crate) fn canonicalize(l: &LatinSquare, alpha: &Permutation) -> (LatinSquare, Permutation) {
    let phi = alpha.canonicalizer();
    let l2 = apply_isotopism(&Isotopism::automorphism(phi.clone()), l).expect("same degree");
    (l2, alpha.conjugate(&phi))
}

/// The cyclic square with the isotopism `((1..n), (1..n)^{-1}, id)^{n/d}`.
pub fn trivial_component_witness(n: usize, d: usize) -> Result<(LatinSquare, Isotopism), ConstructError> {
    if d == 0 || !n.is_multiple_of(d) {
        return Err(inadmissible(format!("{d} does not divide {n}")));
    }
    let cycle: Vec<usize> = (1..=n).collect();
    let shift = Permutation::from_cycles(n, &[cycle]).expect("n-cycle");
    let theta = Isotopism::new(shift.clone(), shift.inverse(), Permutation::identity(n))
        .expect("same degree")
        .power((n / d) as i64);
    let l = cyclic_square(n);
    if !is_autotopism(&theta, &l) {
        return Err(ConstructError::Unverified);
    }
    Ok((l, theta))
}

/// Number of copies of `t_k` in the block `M_kk`, minimized over the
/// nontrivial cycles of the canonical `alpha`.
pub fn prolongation_capacity(l: &LatinSquare, alpha: &Permutation) -> usize {
    alpha
        .cycles()
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let t = c[0];
            c.iter().flat_map(|&i| c.iter().map(move |&j| (i, j))).filter(|&(i, j)| l.get(i, j) == t).count()
        })
        .min()
        .unwrap_or(usize::MAX)
}

/// Adds `nu` fixed points, one at a time. Each step diverts, per cycle, the
/// orbit of the row-major first copy of `t_k` in `M_kk` into the new row
/// and column; the fixed block becomes the cyclic square on the fixed
/// symbols.
pub fn prolong(l: &LatinSquare, alpha: &Permutation, nu: usize) -> Result<(LatinSquare, Permutation), ConstructError> {
    if !alpha.is_canonical() {
        return Err(ConstructError::NotCanonical);
    }
    if !is_autotopism(&Isotopism::automorphism(alpha.clone()), l) {
        return Err(ConstructError::Precondition("α is not an automorphism of L".into()));
    }
    let mu = prolongation_capacity(l, alpha);
    if nu > mu {
        return Err(ConstructError::Precondition(format!("ν = {nu} exceeds μ = {mu}")));
    }
    let (mut l, mut alpha) = (l.clone(), alpha.clone());
    for _ in 0..nu {
        (l, alpha) = prolong_once(&l, &alpha);
    }
    verified(l, alpha)
}

fn prolong_once(l: &LatinSquare, alpha: &Permutation) -> (LatinSquare, Permutation) {
    let n = l.order();
    let m = n + 1;
    let mut cells = vec![0; m * m];
    for i in 1..=n {
        for j in 1..=n {
            cells[(i - 1) * m + j - 1] = l.get(i, j);
        }
    }
    for cycle in alpha.cycles().iter().filter(|c| c.len() > 1) {
        let t = cycle[0];
        let mut rows = cycle.clone();
        rows.sort_unstable();
        let (i, j) = rows
            .iter()
            .flat_map(|&i| rows.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| l.get(i, j) == t)
            .expect("capacity checked");
        let (mut x, mut y, mut z) = (i, j, t);
        for _ in 0..cycle.len() {
            cells[(x - 1) * m + m - 1] = z;
            cells[(m - 1) * m + y - 1] = z;
            cells[(x - 1) * m + y - 1] = m;
            x = alpha.apply(x);
            y = alpha.apply(y);
            z = alpha.apply(z);
        }
    }
    let fixed: Vec<usize> = (1..=m).filter(|&x| x == m || alpha.apply(x) == x).collect();
    let k = fixed.len();
    let c = cyclic_square(k);
    for a in 1..=k {
        for b in 1..=k {
            cells[(fixed[a - 1] - 1) * m + fixed[b - 1] - 1] = fixed[c.get(a, b) - 1];
        }
    }
    let mut images: Vec<usize> = alpha.images().to_vec();
    images.push(m);
    let alpha2 = Permutation::from_images(images).expect("extension by a fixed point");
    (LatinSquare::from_flat(m, cells).expect("prolongation preserves Latin property"), alpha2)
}

/// Completes `M_{i∞}` and `M_{∞i}` for the nontrivial cycle `i` (1-based,
/// in canonical order): `t_i` goes once into each row of the cycle that
/// lacks it, one per fixed column, and transposed.
pub fn fill_fixed_blocks(
    partial: &PartialSquare,
    alpha: &Permutation,
    i: usize,
) -> Result<PartialSquare, ConstructError> {
    if !alpha.is_canonical() {
        return Err(ConstructError::NotCanonical);
    }
    let cs = alpha.cycle_structure();
    let lens = cs.nontrivial();
    if lens.windows(2).any(|w| w[0] == w[1]) {
        return Err(ConstructError::Precondition("nontrivial cycle lengths repeat".into()));
    }
    let Some(&d) = lens.get(i.wrapping_sub(1)) else {
        return Err(ConstructError::Precondition(format!("no nontrivial cycle {i}")));
    };
    let f = cs.fixed_points();
    let n = alpha.degree();
    if f == 0 {
        return Ok(partial.clone());
    }
    let start = 1 + lens[..i - 1].iter().sum::<usize>();
    let band: Vec<usize> = (start..start + d).collect();
    let core = n - f;
    let t = start;
    let mut asm = Assembly::new(&cs);
    for x in 1..=n {
        for y in 1..=n {
            if let Some(s) = partial.get(x, y) {
                asm.set_one(x, y, s)?;
            }
        }
    }
    let mut missing_rows = Vec::new();
    let mut missing_cols = Vec::new();
    for &r in &band {
        if (1..=core).any(|y| partial.get(r, y).is_none()) || (1..=core).any(|y| partial.get(y, r).is_none()) {
            return Err(ConstructError::Precondition(format!("bands of cycle {i} are incomplete")));
        }
        if !(1..=core).any(|y| partial.get(r, y) == Some(t)) {
            missing_rows.push(r);
        }
        if !(1..=core).any(|y| partial.get(y, r) == Some(t)) {
            missing_cols.push(r);
        }
    }
    if missing_rows.len() != f || missing_cols.len() != f {
        return Err(ConstructError::Precondition(format!(
            "cycle {i} needs {} copies of t_{i}, found {} in rows and {} in columns",
            d - f,
            d - missing_rows.len(),
            d - missing_cols.len()
        )));
    }
    for (k, &r) in missing_rows.iter().enumerate() {
        asm.place(r, core + 1 + k, t)?;
    }
    for (k, &c) in missing_cols.iter().enumerate() {
        asm.place(core + 1 + k, c, t)?;
    }
    Ok(asm.into_partial().0)
}

/// Fills the subsquares spanned by each minimal length class of nontrivial
/// cycles together with the fixed points; they share the fixed block, which
/// is set to the cyclic square on the fixed symbols.
pub fn build_subsquare_union(alpha: &Permutation) -> Result<PartialSquare, ConstructError> {
    if !alpha.is_canonical() {
        return Err(ConstructError::NotCanonical);
    }
    let cs = alpha.cycle_structure();
    let mut asm = Assembly::new(&cs);
    fill_subsquare_union(&mut asm, &cs)?;
    Ok(asm.into_partial().0)
}

pub(crate) fn fill_subsquare_union(asm: &mut Assembly, cs: &CycleStructure) -> Result<(), ConstructError> {
    let n = cs.degree();
    let f = cs.fixed_points();
    let fixed: Vec<usize> = (n - f + 1..=n).collect();
    let lens = cs.nontrivial();
    let mut start = 1;
    let mut seen = Vec::new();
    for &d in &lens {
        let first = start;
        start += d;
        if seen.contains(&d) {
            continue;
        }
        seen.push(d);
        if lens.iter().any(|&e| e < d && d % e == 0) {
            continue;
        }
        let lambda = lens.iter().filter(|&&e| e == d).count();
        if f > lambda * d {
            return Err(inadmissible(format!("{f} fixed points exceed {lambda}·{d}")));
        }
        if d % 2 == 0 && lambda % 2 == 1 && f == 0 {
            return Err(inadmissible(format!("length {d} occurs an odd number of times without fixed points")));
        }
        let (sub, _) = build_equal_lengths(d, lambda, f)?;
        let mut points: Vec<usize> = (first..first + lambda * d).collect();
        points.extend(&fixed);
        // Overwrite the fixed block with the shared one.
        let shared = cyclic_square(f.max(1));
        let core = lambda * d;
        let mut cells = sub.cells().to_vec();
        let m = sub.order();
        for a in 1..=f {
            for b in 1..=f {
                cells[(core + a - 1) * m + core + b - 1] = core + shared.get(a, b);
            }
        }
        let sub = LatinSquare::from_flat(m, cells).map_err(|_| ConstructError::Unverified)?;
        asm.embed(&sub, &points)?;
    }
    Ok(())
}

/// Builds a witness for a member triple, relabelled so that it admits the
/// canonical isotopism `Isotopism::canonical(t)`. Parastrophes of the built
/// cases are mapped back through the coordinate permutation.
pub fn realize(t: &StructureTriple) -> Result<(LatinSquare, Isotopism), ConstructError> {
    let n = t.degree();
    let checked = |l: LatinSquare, th: Isotopism| {
        let [a, b, c] = th.components();
        let phi = Isotopism::new(a.canonicalizer(), b.canonicalizer(), c.canonicalizer()).expect("same degree");
        let l = apply_isotopism(&phi, &l).map_err(|_| ConstructError::Unverified)?;
        let th = th.conjugate(&phi);
        if th == Isotopism::canonical(t) && is_autotopism(&th, &l) {
            Ok((l, th))
        } else {
            Err(ConstructError::Unverified)
        }
    };
    if t.is_trivial() {
        return checked(cyclic_square(n), Isotopism::trivial(n));
    }
    if let Some(Verdict::Member { .. }) = check_trivial_component(t) {
        let d = t.as_array().iter().find(|c| !c.is_identity()).and_then(|c| c.uniform_length()).expect("uniform");
        let (l, th) = trivial_component_witness(n, d)?;
        return map_parastrophe(t, l, th).and_then(|(l, th)| checked(l, th));
    }
    if t.is_automorphism() {
        let (l, alpha) = build_automorphism(&t.a)?;
        return checked(l, Isotopism::automorphism(alpha));
    }
    if horse_shape(t).is_some() {
        let (l, th) = build_horse(n)?;
        return map_parastrophe(t, l, th).and_then(|(l, th)| checked(l, th));
    }
    match classify(t) {
        Verdict::NonMember(c) => Err(inadmissible(format!("{t} fails {c}"))),
        _ => Err(ConstructError::Uncovered(t.to_string())),
    }
}

/// Finds `λ` with `θ.structure().parastrophe(λ) == t` and applies it to the
/// square and isotopism.
fn map_parastrophe(
    t: &StructureTriple,
    l: LatinSquare,
    th: Isotopism,
) -> Result<(LatinSquare, Isotopism), ConstructError> {
    let base = th.structure();
    let lambda = Parastrophy::ALL
        .into_iter()
        .find(|&lam| base.parastrophe(lam) == *t)
        .ok_or_else(|| ConstructError::Uncovered(t.to_string()))?;
    Ok((parastrophe(&l, lambda), th.parastrophe(lambda)))
}

/// Dispatches an automorphism structure to its builder.
pub fn build_automorphism(cs: &CycleStructure) -> Result<(LatinSquare, Permutation), ConstructError> {
    let n = cs.degree();
    let f = cs.fixed_points();
    let d = cs.nontrivial();
    match decide_automorphism(cs) {
        Verdict::NonMember(c) => Err(inadmissible(format!("{cs}: {c}"))),
        Verdict::Undecided => Err(ConstructError::Uncovered(cs.to_string())),
        Verdict::Member { via, .. } => match via {
            Construction::Trivial => Ok((cyclic_square(n), Permutation::identity(n))),
            Construction::SingleCycle => build_single_cycle(n, d[0]),
            Construction::EqualLengths => build_equal_lengths(d[0], d.len(), f),
            Construction::TwoCycles => build_two_cycles(d[0], d[1], f),
            Construction::ThreeCycles { .. } => build_three_cycles(d[0], d[1], d[2], f),
            other => Err(ConstructError::Uncovered(format!("{cs} via {other}"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> CycleStructure {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_component() {
        let (_, th) = trivial_component_witness(6, 3).unwrap();
        assert_eq!(th.structure(), StructureTriple::new(cs("3^2"), cs("3^2"), cs("1^6")).unwrap());
        let (_, th) = trivial_component_witness(5, 1).unwrap();
        assert!(th.is_trivial());
        assert!(trivial_component_witness(6, 4).is_err());
    }

    #[test]
    fn prolongation() {
        let (l, a) = build_single_cycle(3, 3).unwrap();
        assert_eq!(prolongation_capacity(&l, &a), 3);
        let (l4, a4) = prolong(&l, &a, 1).unwrap();
        assert_eq!(a4.cycle_structure(), cs("3.1"));
        assert_eq!(l4.order(), 4);
        let (same, _) = prolong(&l, &a, 0).unwrap();
        assert_eq!(same, l);
        assert!(prolong(&l, &a, 4).is_err());
    }

    #[test]
    fn subsquare_union() {
        let alpha = canonical_permutation(&cs("6.3.1"));
        let p = build_subsquare_union(&alpha).unwrap();
        // Cycle of length 3 (points 7..9) with the fixed point 10.
        assert_eq!(p.filled(), 16);
        assert!(p.get(7, 10).is_some() && p.get(10, 10) == Some(10));
        assert!(build_subsquare_union(&canonical_permutation(&cs("4.2"))).is_err());
        let coprime = build_subsquare_union(&canonical_permutation(&cs("3.2.1"))).unwrap();
        assert_eq!(coprime.filled(), 16 + 9 - 1);
    }

    #[test]
    fn fixed_blocks() {
        let alpha = canonical_permutation(&cs("3"));
        let (l, _) = build_single_cycle(3, 3).unwrap();
        let p = PartialSquare::from(&l);
        assert_eq!(fill_fixed_blocks(&p, &alpha, 1).unwrap().filled(), 9);
    }

    #[test]
    fn realize_parastrophes() {
        for (a, b, c) in [
            ("1^4", "4", "4"),
            ("4", "1^4", "4"),
            ("2^2", "2^2", "1^4"),
            ("4", "2^2", "4"),
            ("2^2", "4", "4"),
            ("3.1", "3.1", "3.1"),
        ] {
            let t = StructureTriple::new(cs(a), cs(b), cs(c)).unwrap();
            let (l, th) = realize(&t).unwrap();
            assert!(is_autotopism(&th, &l));
            assert_eq!(th.structure(), t);
        }
    }
}
