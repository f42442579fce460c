//! Permutations of `[n] = {1, ..., n}`, cycle structures, and the action of
//! `S3` on ordered triples.
//!
//! Labels are 1-based throughout.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("malformed permutation: {0}")]
    Syntax(String),
    #[error("element {elem} out of range 1..={degree}")]
    OutOfRange { elem: usize, degree: usize },
    #[error("element {0} appears more than once")]
    Repeated(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("malformed cycle structure: {0}")]
    Structure(String),
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[derive(Debug)]
struct Cycles {
    // Each cycle starts at its least element; cycles sorted by that element.
    cycles: Vec<Vec<usize>>,
    // For element i (0-based), index of its cycle and position inside it.
    place: Vec<(usize, usize)>,
}

/// A bijection on `[n]`. The image list is the source of truth; the cycle
/// decomposition is computed on first use.
#[derive(Clone)]
pub struct Permutation {
    images: Vec<usize>,
    cycles: OnceLock<std::sync::Arc<Cycles>>,
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for Permutation {}

impl std::hash::Hash for Permutation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]({})", self.degree(), self)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self::from_images_unchecked((1..=n).collect())
    }

    fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images, cycles: OnceLock::new() }
    }

    /// Builds a permutation from its 1-based image list.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n {
                return Err(PermError::OutOfRange { elem: x, degree: n });
            }
            if seen[x - 1] {
                return Err(PermError::Repeated(x));
            }
            seen[x - 1] = true;
        }
        Ok(Self::from_images_unchecked(images))
    }

    /// Builds a permutation of degree `n` from disjoint cycles; unmentioned
    /// elements are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(PermError::OutOfRange { elem: x, degree: n });
                }
                if seen[x - 1] {
                    return Err(PermError::Repeated(x));
                }
                seen[x - 1] = true;
                images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self::from_images_unchecked(images))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based element `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    fn cycle_data(&self) -> &Cycles {
        self.cycles.get_or_init(|| {
            let n = self.degree();
            let mut place = vec![(usize::MAX, 0); n];
            let mut cycles = Vec::new();
            for start in 1..=n {
                if place[start - 1].0 != usize::MAX {
                    continue;
                }
                let idx = cycles.len();
                let mut cycle = Vec::new();
                let mut x = start;
                loop {
                    place[x - 1] = (idx, cycle.len());
                    cycle.push(x);
                    x = self.apply(x);
                    if x == start {
                        break;
                    }
                }
                cycles.push(cycle);
            }
            std::sync::Arc::new(Cycles { cycles, place })
        })
    }

    /// All cycles including fixed points, each starting at its least element,
    /// ordered by least element.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycle_data().cycles
    }

    /// Length of the cycle containing `i`.
    pub fn cycle_len(&self, i: usize) -> usize {
        let (c, _) = self.cycle_data().place[i - 1];
        self.cycle_data().cycles[c].len()
    }

    /// The cycle containing `i`, starting at its least element.
    pub fn cycle_of(&self, i: usize) -> &[usize] {
        let (c, _) = self.cycle_data().place[i - 1];
        &self.cycle_data().cycles[c]
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        CycleStructure::from_lengths(self.cycles().iter().map(Vec::len))
    }

    /// lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// `self ∘ q`, i.e. apply `q` first.
    ///
    /// # Panics
    /// On degree mismatch; see [`Permutation::checked_compose`].
    pub fn compose(&self, q: &Permutation) -> Permutation {
        self.checked_compose(q).expect("degree mismatch in compose")
    }

    pub fn checked_compose(&self, q: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(Self::from_images_unchecked(q.images.iter().map(|&x| self.apply(x)).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self::from_images_unchecked(inv)
    }

    /// `self^k`; negative `k` allowed.
    pub fn power(&self, k: i64) -> Permutation {
        let data = self.cycle_data();
        let mut images = vec![0; self.degree()];
        for cycle in &data.cycles {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (pos, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(pos + shift) % cycle.len()];
            }
        }
        Self::from_images_unchecked(images)
    }

    /// `phi ∘ self ∘ phi⁻¹`.
    pub fn conjugate(&self, phi: &Permutation) -> Permutation {
        phi.compose(self).compose(&phi.inverse())
    }

    /// A permutation `phi` with `self.conjugate(&phi)` canonical.
    pub fn canonicalizer(&self) -> Permutation {
        let mut cycles: Vec<&Vec<usize>> = self.cycles().iter().collect();
        // Stable sort keeps least-element order among equal lengths.
        cycles.sort_by_key(|c| std::cmp::Reverse(c.len()));
        let mut images = vec![0; self.degree()];
        let mut next = 1;
        for cycle in cycles {
            for &x in cycle {
                images[x - 1] = next;
                next += 1;
            }
        }
        Self::from_images_unchecked(images)
    }

    /// Whether the permutation is canonical for its cycle structure.
    pub fn is_canonical(&self) -> bool {
        *self == canonical_permutation(&self.cycle_structure())
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        for cycle in self.cycles().iter().filter(|c| c.len() > 1) {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses `id`, cycle notation such as `(1 2 3)(4 5)`, or an image list such
/// as `[2 3 1 5 4 6 7]` (commas optional, brackets optional).
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation, PermError> {
    let text = text.trim();
    if text == "id" {
        return Ok(Permutation::identity(degree));
    }
    let parse_int = |tok: &str| -> Result<usize, PermError> {
        tok.parse::<usize>().map_err(|_| PermError::Syntax(format!("bad integer {tok:?}")))
    };
    if text.starts_with('(') {
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| PermError::Syntax(format!("expected '(' at {rest:?}")))?;
            let close = body.find(')').ok_or_else(|| PermError::Syntax("unclosed cycle".into()))?;
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(PermError::Syntax("nested '('".into()));
            }
            let cycle = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(parse_int)
                .collect::<Result<Vec<_>, _>>()?;
            if cycle.is_empty() {
                return Err(PermError::Syntax("empty cycle".into()));
            }
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        return Permutation::from_cycles(degree, &cycles);
    }
    let body = text
        .strip_prefix('[')
        .map_or(Ok(text), |b| b.strip_suffix(']').ok_or_else(|| PermError::Syntax("unclosed '['".into())))?;
    let images = body
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(parse_int)
        .collect::<Result<Vec<_>, _>>()?;
    if images.len() != degree {
        return Err(PermError::Syntax(format!("image list has {} entries, expected {degree}", images.len())));
    }
    Permutation::from_images(images)
}

/// Multiset of cycle lengths, stored as `(length, multiplicity)` with
/// strictly decreasing lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleStructure {
    terms: Vec<(usize, usize)>,
}

impl CycleStructure {
    /// # Panics
    /// If some length is zero.
    pub fn from_lengths<I: IntoIterator<Item = usize>>(lengths: I) -> Self {
        let mut lens: Vec<usize> = lengths.into_iter().collect();
        assert!(lens.iter().all(|&l| l > 0), "cycle lengths must be positive");
        lens.sort_unstable_by(|a, b| b.cmp(a));
        let mut terms: Vec<(usize, usize)> = Vec::new();
        for l in lens {
            match terms.last_mut() {
                Some((c, m)) if *c == l => *m += 1,
                _ => terms.push((l, 1)),
            }
        }
        CycleStructure { terms }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_lengths(std::iter::repeat_n(1, n))
    }

    pub fn terms(&self) -> &[(usize, usize)] {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|&(c, m)| c * m).sum()
    }

    /// All cycle lengths, longest first, fixed points included.
    pub fn lengths(&self) -> Vec<usize> {
        self.terms.iter().flat_map(|&(c, m)| std::iter::repeat_n(c, m)).collect()
    }

    /// Lengths of the nontrivial cycles `d_1 >= d_2 >= ...`.
    pub fn nontrivial(&self) -> Vec<usize> {
        self.lengths().into_iter().filter(|&c| c > 1).collect()
    }

    /// Number of fixed points, `d_∞`.
    pub fn fixed_points(&self) -> usize {
        self.multiplicity(1)
    }

    pub fn multiplicity(&self, len: usize) -> usize {
        self.terms.iter().find(|t| t.0 == len).map_or(0, |t| t.1)
    }

    pub fn is_identity(&self) -> bool {
        self.terms.iter().all(|t| t.0 == 1)
    }

    pub fn order(&self) -> usize {
        self.terms.iter().fold(1, |acc, &(c, _)| lcm(acc, c))
    }

    /// Whether every cycle has length `d` for some single `d`.
    pub fn uniform_length(&self) -> Option<usize> {
        match self.terms.as_slice() {
            [(c, _)] => Some(*c),
            _ => None,
        }
    }

    /// Leading symbols `t_i = 1 + Σ_{j<i} d_j` of the nontrivial cycles of the
    /// canonical permutation.
    pub fn leading_symbols(&self) -> Vec<usize> {
        let mut t = 1;
        self.nontrivial()
            .into_iter()
            .map(|d| {
                let here = t;
                t += d;
                here
            })
            .collect()
    }

    /// Cycle structure of `p^k` for any `p` with this structure.
    pub fn power(&self, k: usize) -> CycleStructure {
        CycleStructure::from_lengths(self.terms.iter().flat_map(|&(c, m)| {
            let g = gcd(c, k);
            std::iter::repeat_n(c / g, m * g)
        }))
    }

    /// The structure restricted to cycles whose length divides `d`.
    pub fn restrict_to_divisors(&self, d: usize) -> Option<CycleStructure> {
        let lens: Vec<usize> = self.lengths().into_iter().filter(|&c| d.is_multiple_of(c)).collect();
        if lens.is_empty() {
            None
        } else {
            Some(CycleStructure::from_lengths(lens))
        }
    }

    /// The structure restricted to cycles whose length does not divide `d`.
    pub fn restrict_to_non_divisors(&self, d: usize) -> Option<CycleStructure> {
        let lens: Vec<usize> = self.lengths().into_iter().filter(|&c| !d.is_multiple_of(c)).collect();
        if lens.is_empty() {
            None
        } else {
            Some(CycleStructure::from_lengths(lens))
        }
    }

    /// All cycle structures of degree `n`, in increasing order.
    pub fn all_of_degree(n: usize) -> Vec<CycleStructure> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleStructure>) {
            if rem == 0 {
                out.push(CycleStructure::from_lengths(cur.iter().copied()));
                return;
            }
            for part in (1..=max.min(rem)).rev() {
                cur.push(part);
                rec(rem - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for CycleStructure {
    /// Degree first, then the longest-first length lists lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.lengths().cmp(&other.lengths()))
    }
}

impl PartialOrd for CycleStructure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(c, m)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            if m == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CycleStructure {
    type Err = PermError;

    /// Terms joined by `.`, each `INT` or `INT^INT`, e.g. `3.2.1^2`.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let bad = || PermError::Structure(s.to_string());
        let mut lens = Vec::new();
        for term in s.trim().split('.') {
            let (c, m) = match term.split_once('^') {
                Some((c, m)) => (c, m),
                None => (term, "1"),
            };
            let c: usize = c.trim().parse().map_err(|_| bad())?;
            let m: usize = m.trim().parse().map_err(|_| bad())?;
            if c == 0 || m == 0 {
                return Err(bad());
            }
            lens.extend(std::iter::repeat_n(c, m));
        }
        Ok(CycleStructure::from_lengths(lens))
    }
}

pub fn cycle_structure(p: &Permutation) -> CycleStructure {
    p.cycle_structure()
}

/// The canonical representative: cycles in decreasing length on contiguous
/// intervals, fixed points last.
pub fn canonical_permutation(cs: &CycleStructure) -> Permutation {
    let mut images = Vec::with_capacity(cs.degree());
    let mut start = 1;
    for len in cs.lengths() {
        for k in 0..len {
            images.push(start + (k + 1) % len);
        }
        start += len;
    }
    Permutation::from_images_unchecked(images)
}

/// An element of `S3`, acting on triples by `(x0, x1, x2) ↦ (x[λ0], x[λ1], x[λ2])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Parastrophy([usize; 3]);

impl Parastrophy {
    pub const ALL: [Parastrophy; 6] = [
        Parastrophy([0, 1, 2]),
        Parastrophy([1, 0, 2]),
        Parastrophy([0, 2, 1]),
        Parastrophy([2, 1, 0]),
        Parastrophy([1, 2, 0]),
        Parastrophy([2, 0, 1]),
    ];

    pub fn identity() -> Self {
        Parastrophy([0, 1, 2])
    }

    pub fn new(map: [usize; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &k in &map {
            if k > 2 || seen[k] {
                return None;
            }
            seen[k] = true;
        }
        Some(Parastrophy(map))
    }

    pub fn map(&self) -> [usize; 3] {
        self.0
    }

    pub fn apply<T: Clone>(&self, t: &[T; 3]) -> [T; 3] {
        [t[self.0[0]].clone(), t[self.0[1]].clone(), t[self.0[2]].clone()]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [0; 3];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v] = k;
        }
        Parastrophy(inv)
    }
}

/// An ordered triple `(α, β, γ)` acting on rows, columns and symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Isotopism {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
}

impl Isotopism {
    pub fn new(alpha: Permutation, beta: Permutation, gamma: Permutation) -> Result<Self, PermError> {
        let n = alpha.degree();
        for d in [beta.degree(), gamma.degree()] {
            if d != n {
                return Err(PermError::DegreeMismatch(n, d));
            }
        }
        Ok(Isotopism { alpha, beta, gamma })
    }

    pub fn automorphism(alpha: Permutation) -> Self {
        Isotopism { beta: alpha.clone(), gamma: alpha.clone(), alpha }
    }

    pub fn trivial(n: usize) -> Self {
        Self::automorphism(Permutation::identity(n))
    }

    /// The canonical isotopism for a structure triple.
    pub fn canonical(t: &StructureTriple) -> Self {
        Isotopism {
            alpha: canonical_permutation(&t.a),
            beta: canonical_permutation(&t.b),
            gamma: canonical_permutation(&t.c),
        }
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn components(&self) -> [&Permutation; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    fn from_array([alpha, beta, gamma]: [Permutation; 3]) -> Self {
        Isotopism { alpha, beta, gamma }
    }

    fn map(&self, f: impl Fn(&Permutation) -> Permutation) -> Self {
        Self::from_array(self.components().map(f))
    }

    pub fn is_trivial(&self) -> bool {
        self.components().iter().all(|p| p.is_identity())
    }

    pub fn is_automorphism(&self) -> bool {
        self.alpha == self.beta && self.beta == self.gamma
    }

    pub fn structure(&self) -> StructureTriple {
        StructureTriple {
            a: self.alpha.cycle_structure(),
            b: self.beta.cycle_structure(),
            c: self.gamma.cycle_structure(),
        }
    }

    pub fn order(&self) -> usize {
        self.components().iter().fold(1, |acc, p| lcm(acc, p.order()))
    }

    pub fn inverse(&self) -> Self {
        self.map(Permutation::inverse)
    }

    pub fn power(&self, k: i64) -> Self {
        self.map(|p| p.power(k))
    }

    /// Componentwise `self ∘ other`.
    pub fn compose(&self, other: &Isotopism) -> Self {
        Isotopism {
            alpha: self.alpha.compose(&other.alpha),
            beta: self.beta.compose(&other.beta),
            gamma: self.gamma.compose(&other.gamma),
        }
    }

    /// Componentwise `φ θ φ⁻¹`.
    pub fn conjugate(&self, phi: &Isotopism) -> Self {
        phi.compose(self).compose(&phi.inverse())
    }

    pub fn parastrophe(&self, lambda: Parastrophy) -> Self {
        Self::from_array(lambda.apply(&[self.alpha.clone(), self.beta.clone(), self.gamma.clone()]))
    }
}

impl fmt::Display for Isotopism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// An ordered triple of cycle structures of equal degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructureTriple {
    pub a: CycleStructure,
    pub b: CycleStructure,
    pub c: CycleStructure,
}

impl StructureTriple {
    pub fn new(a: CycleStructure, b: CycleStructure, c: CycleStructure) -> Result<Self, PermError> {
        let n = a.degree();
        for d in [b.degree(), c.degree()] {
            if d != n {
                return Err(PermError::DegreeMismatch(n, d));
            }
        }
        Ok(StructureTriple { a, b, c })
    }

    pub fn automorphism(cs: CycleStructure) -> Self {
        StructureTriple { b: cs.clone(), c: cs.clone(), a: cs }
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn as_array(&self) -> [&CycleStructure; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn is_trivial(&self) -> bool {
        self.as_array().iter().all(|c| c.is_identity())
    }

    pub fn is_automorphism(&self) -> bool {
        self.a == self.b && self.b == self.c
    }

    pub fn order(&self) -> usize {
        self.as_array().iter().fold(1, |acc, c| lcm(acc, c.order()))
    }

    /// Structure triple of `θ^k`.
    pub fn power(&self, k: usize) -> Self {
        StructureTriple { a: self.a.power(k), b: self.b.power(k), c: self.c.power(k) }
    }

    pub fn parastrophe(&self, lambda: Parastrophy) -> Self {
        let [a, b, c] = lambda.apply(&[self.a.clone(), self.b.clone(), self.c.clone()]);
        StructureTriple { a, b, c }
    }

    pub fn normalize(&self) -> Self {
        Parastrophy::ALL.iter().map(|&l| self.parastrophe(l)).min().expect("S3 is nonempty")
    }
}

impl fmt::Display for StructureTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

pub fn parastrophe_triple(t: &StructureTriple, lambda: Parastrophy) -> StructureTriple {
    t.parastrophe(lambda)
}

/// Least of the six `S3`-images of `t`.
pub fn normalize_triple(t: &StructureTriple) -> StructureTriple {
    t.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> CycleStructure {
        s.parse().unwrap()
    }

    #[test]
    fn parses_cycle_notation() {
        let p = parse_permutation("(1 2 3)(4 5)", 7).unwrap();
        assert_eq!(p.images(), &[2, 3, 1, 5, 4, 6, 7]);
        assert!(parse_permutation("id", 3).unwrap().is_identity());
        assert_eq!(parse_permutation("(3 5 7)(4 1)", 7).unwrap(), parse_permutation("(1 4)(3 5 7)", 7).unwrap());
        assert_eq!(parse_permutation("[2, 1, 3]", 3).unwrap().images(), &[2, 1, 3]);
    }

    #[test]
    fn rejects_bad_permutations() {
        assert!(matches!(parse_permutation("(1 2", 3), Err(PermError::Syntax(_))));
        assert!(matches!(parse_permutation("(1 4)", 3), Err(PermError::OutOfRange { elem: 4, degree: 3 })));
        assert_eq!(parse_permutation("(1 2)(2 3)", 3), Err(PermError::Repeated(2)));
        assert!(parse_permutation("2 1", 3).is_err());
    }

    #[test]
    fn cycle_structures() {
        let p = parse_permutation("(1 2 3)(4 5)", 7).unwrap();
        assert_eq!(p.cycle_structure(), cs("3.2.1^2"));
        assert_eq!(Permutation::identity(5).cycle_structure(), cs("1^5"));
        assert_eq!(parse_permutation("(1 2)(3 4)(5 6)", 6).unwrap().cycle_structure(), cs("2^3"));
        assert_eq!(cs("3.2.1^2").to_string(), "3.2.1^2");
        assert_eq!(cs("1.2.3.1").to_string(), "3.2.1^2");
        assert!("3.0".parse::<CycleStructure>().is_err());
        assert!("3..2".parse::<CycleStructure>().is_err());
    }

    #[test]
    fn canonical_forms() {
        let p = canonical_permutation(&cs("3.2.1^2"));
        assert_eq!(p, parse_permutation("(1 2 3)(4 5)", 7).unwrap());
        assert!(canonical_permutation(&cs("1^4")).is_identity());
        assert_eq!(canonical_permutation(&cs("2^2")).to_string(), "(1 2)(3 4)");
        assert_eq!(cs("6.3.2.1").leading_symbols(), vec![1, 7, 10]);
    }

    #[test]
    fn group_operations() {
        let p = parse_permutation("(1 2 3 4 5 6)", 6).unwrap();
        assert_eq!(p.power(2), parse_permutation("(1 3 5)(2 4 6)", 6).unwrap());
        assert!(p.power(0).is_identity());
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.power(-1), p.inverse());
        assert_eq!(p.order(), 6);
        let q = parse_permutation("(1 2)", 3).unwrap();
        assert!(p.checked_compose(&q).is_err());
    }

    #[test]
    fn parastrophes_and_normal_forms() {
        let t = StructureTriple::new(cs("3^2.2^3"), cs("3^4"), cs("2^6")).unwrap();
        let rot = Parastrophy::new([1, 2, 0]).unwrap();
        assert_eq!(parastrophe_triple(&t, rot), StructureTriple::new(cs("3^4"), cs("2^6"), cs("3^2.2^3")).unwrap());
        let swap = Parastrophy::new([1, 0, 2]).unwrap();
        assert_eq!(parastrophe_triple(&t, swap).a, cs("3^4"));
        let u = StructureTriple::new(cs("2^6"), cs("3^4"), cs("3^2.2^3")).unwrap();
        assert_eq!(normalize_triple(&t), normalize_triple(&u));
        let five = StructureTriple::automorphism(cs("5"));
        assert_eq!(normalize_triple(&five), five);
        let v = StructureTriple::new(cs("1^5"), cs("5"), cs("1^5")).unwrap();
        assert_eq!(normalize_triple(&v), StructureTriple::new(cs("1^5"), cs("1^5"), cs("5")).unwrap());
    }

    #[test]
    fn structure_order_and_partitions() {
        assert!(cs("1^6") < cs("2.1^4"));
        assert!(cs("2^3") < cs("3.1^3"));
        assert!(cs("6") < cs("1^7"));
        let parts = CycleStructure::all_of_degree(6);
        assert_eq!(parts.len(), 11);
        assert_eq!(parts[0], cs("1^6"));
        assert_eq!(parts[10], cs("6"));
        assert_eq!(cs("6.3.2").power(2), cs("3^2.3.1^2"));
    }
}
