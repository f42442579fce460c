//! Contours: one leading symbol per cell orbit of an automorphism, from
//! which the whole square is recovered by propagation. Also block diagrams,
//! the standard block patterns and transversal arithmetic.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::conditions::lcm_compatible;
use crate::latin::{is_autotopism, LatinSquare, PartialSquare};
use crate::perm::{gcd, lcm, CycleStructure, Isotopism, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContourError {
    #[error("automorphism is not canonical")]
    NotCanonical,
    #[error("cell ({0}, {1}) outside the {2}x{2} grid")]
    OutOfRange(usize, usize, usize),
    #[error("condition ({condition}) fails at ({row}, {col}): {detail}")]
    Violation { condition: char, row: usize, col: usize, detail: String },
    #[error("propagation clash at ({0}, {1})")]
    Clash(usize, usize),
    #[error("expansion leaves {0} cells empty")]
    Incomplete(usize),
    #[error("expanded array is not a Latin square admitting the automorphism")]
    NotVerified,
    #[error("pattern needs {needed} parity for g = {g}")]
    Parity { needed: &'static str, g: usize },
    #[error("window of size {g} at ({row}, {col}) overflows a {height}x{width} block")]
    Overflow { row: usize, col: usize, g: usize, height: usize, width: usize },
    #[error("transversal window needs e = g - 1 or g = 2e (g = {g}, e = {e})")]
    WindowShape { g: usize, e: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn violation(condition: char, (row, col): (usize, usize), detail: impl Into<String>) -> ContourError {
    ContourError::Violation { condition, row, col, detail: detail.into() }
}

/// Partition of `[n] × [n]` into orbits of `(i, j) ↦ (α(i), α(j))`, each
/// listed from its least cell (row-major) along the action.
pub fn cell_orbits_of_automorphism(alpha: &Permutation) -> Vec<Vec<(usize, usize)>> {
    let n = alpha.degree();
    let mut seen = vec![false; n * n];
    let mut orbits = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if seen[(i - 1) * n + j - 1] {
                continue;
            }
            let mut orbit = Vec::new();
            let (mut x, mut y) = (i, j);
            while !seen[(x - 1) * n + y - 1] {
                seen[(x - 1) * n + y - 1] = true;
                orbit.push((x, y));
                x = alpha.apply(x);
                y = alpha.apply(y);
            }
            orbits.push(orbit);
        }
    }
    orbits
}

/// A partial matrix of leading symbols for a canonical automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contour {
    alpha: Permutation,
    cells: BTreeMap<(usize, usize), usize>,
}

impl Contour {
    pub fn new(alpha: Permutation) -> Result<Self, ContourError> {
        if !alpha.is_canonical() {
            return Err(ContourError::NotCanonical);
        }
        Ok(Contour { alpha, cells: BTreeMap::new() })
    }

    /// Empty contour for the canonical permutation of `cs`.
    pub fn for_structure(cs: &CycleStructure) -> Self {
        Contour { alpha: crate::perm::canonical_permutation(cs), cells: BTreeMap::new() }
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn order(&self) -> usize {
        self.alpha.degree()
    }

    pub fn set(&mut self, i: usize, j: usize, s: usize) {
        self.cells.insert((i, j), s);
    }

    pub fn remove(&mut self, i: usize, j: usize) -> Option<usize> {
        self.cells.remove(&(i, j))
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.cells.get(&(i, j)).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Placed cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.cells.iter().map(|(&(i, j), &s)| (i, j, s))
    }

    /// Whether `s` is the least element of its cycle.
    pub fn is_leading(&self, s: usize) -> bool {
        self.alpha.cycle_of(s)[0] == s
    }

    /// Reads one leading-symbol cell per orbit off a square admitting
    /// `alpha`: the least cell, row-major, holding a leading symbol.
    pub fn from_square(l: &LatinSquare, alpha: &Permutation) -> Result<Self, ContourError> {
        let mut c = Contour::new(alpha.clone())?;
        if !is_autotopism(&Isotopism::automorphism(alpha.clone()), l) {
            return Err(ContourError::NotVerified);
        }
        for orbit in cell_orbits_of_automorphism(alpha) {
            let &(i, j) = orbit
                .iter()
                .filter(|&&(i, j)| c.is_leading(l.get(i, j)))
                .min()
                .expect("every orbit holds a leading symbol");
            c.set(i, j, l.get(i, j));
        }
        Ok(c)
    }

    /// Checks the five contour conditions in the order (a)..(e), each scanned
    /// row-major, reporting the first failure.
    pub fn validate(&self) -> Result<(), ContourError> {
        validate_contour(self)
    }

    pub fn expand(&self) -> Result<LatinSquare, ContourError> {
        expand_contour(self)
    }

    /// The text format: `n`, then `r c s` per placed cell. A comment line
    /// records the cycle structure of the automorphism.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n# alpha {}\n", self.order(), self.alpha.cycle_structure());
        for (i, j, s) in self.cells() {
            out.push_str(&format!("{i} {j} {s}\n"));
        }
        out
    }

    /// Parses the text format. `alpha` defaults to the canonical permutation
    /// named by a `# alpha <structure>` comment.
    pub fn parse(text: &str, alpha: Option<&Permutation>) -> Result<Self, ContourError> {
        let perr = |line: usize, msg: String| ContourError::Parse { line: line + 1, msg };
        let mut n = None;
        let mut named: Option<CycleStructure> = None;
        let mut cells = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(cs) = comment.trim().strip_prefix("alpha") {
                    named = Some(cs.trim().parse().map_err(|e| perr(ln, format!("{e}")))?);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| perr(ln, format!("bad integer {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            match (n, nums.as_slice()) {
                (None, [k]) => n = Some(*k),
                (None, _) => return Err(perr(ln, "expected the order".into())),
                (Some(_), [r, c, s]) => cells.push((ln, *r, *c, *s)),
                (Some(_), _) => return Err(perr(ln, "expected `r c s`".into())),
            }
        }
        let n = n.ok_or_else(|| perr(0, "missing order".into()))?;
        let alpha = match (alpha, named) {
            (Some(a), _) => a.clone(),
            (None, Some(cs)) => crate::perm::canonical_permutation(&cs),
            (None, None) => return Err(perr(0, "no automorphism given".into())),
        };
        if alpha.degree() != n {
            return Err(perr(0, format!("automorphism degree {} differs from {n}", alpha.degree())));
        }
        let mut c = Contour::new(alpha)?;
        for (ln, r, col, s) in cells {
            for v in [r, col, s] {
                if v == 0 || v > n {
                    return Err(perr(ln, format!("{v} outside 1..={n}")));
                }
            }
            c.set(r, col, s);
        }
        Ok(c)
    }

    /// Fixed-width grid: `.` for empty cells, `★ ◦ •` for the first three
    /// leading symbols, `∞` for fixed points, numbers otherwise; `|` and `-`
    /// mark block boundaries.
    pub fn render(&self) -> String {
        let n = self.order();
        let cs = self.alpha.cycle_structure();
        let leads = cs.leading_symbols();
        let glyph = |s: usize| -> String {
            match leads.iter().position(|&t| t == s) {
                Some(0) => "★".into(),
                Some(1) => "◦".into(),
                Some(2) => "•".into(),
                _ if self.alpha.apply(s) == s => "∞".into(),
                _ => s.to_string(),
            }
        };
        let width = self.cells().map(|(_, _, s)| glyph(s).chars().count()).max().unwrap_or(1);
        // Block boundaries: after the last point of each nontrivial cycle.
        let mut cuts = Vec::new();
        let mut pos = 0;
        for d in cs.nontrivial() {
            pos += d;
            cuts.push(pos);
        }
        let cuts: Vec<usize> = cuts.into_iter().filter(|&c| c < n).collect();
        let mut out = String::new();
        for i in 1..=n {
            let mut line = String::new();
            for j in 1..=n {
                let tok = self.get(i, j).map_or(".".to_string(), glyph);
                let pad = width - tok.chars().count();
                line.push_str(&" ".repeat(pad));
                line.push_str(&tok);
                if j < n {
                    line.push(if cuts.contains(&j) { '|' } else { ' ' });
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
            if cuts.contains(&i) {
                out.push_str(&"-".repeat(n * (width + 1) - 1));
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for Contour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// For canonical `alpha`, the start (1-based) and length of the cycle
/// containing each point.
fn cycle_span(alpha: &Permutation, i: usize) -> (usize, usize) {
    let c = alpha.cycle_of(i);
    (c[0], c.len())
}

pub fn validate_contour(c: &Contour) -> Result<(), ContourError> {
    let n = c.order();
    let alpha = &c.alpha;
    for (i, j, _) in c.cells() {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(ContourError::OutOfRange(i, j, n));
        }
    }
    // (a) partial Latin on leading symbols.
    let mut rows: HashMap<(usize, usize), ()> = HashMap::new();
    let mut cols: HashMap<(usize, usize), ()> = HashMap::new();
    for (i, j, s) in c.cells() {
        if s == 0 || s > n || !c.is_leading(s) {
            return Err(violation('a', (i, j), format!("{s} is not a leading symbol")));
        }
        if rows.insert((i, s), ()).is_some() {
            return Err(violation('a', (i, j), format!("{s} repeated in row {i}")));
        }
        if cols.insert((j, s), ()).is_some() {
            return Err(violation('a', (i, j), format!("{s} repeated in column {j}")));
        }
    }
    // (b) each block holds gcd(a,b) symbols in distinct orbits.
    let starts: Vec<(usize, usize)> = alpha.cycles().iter().map(|cy| (cy[0], cy.len())).collect();
    let mut starts = starts;
    starts.sort();
    for &(ri, a) in &starts {
        for &(cj, b) in &starts {
            let g = gcd(a, b);
            let mut labels = vec![false; g];
            let mut count = 0;
            for i in ri..ri + a {
                for j in cj..cj + b {
                    if c.get(i, j).is_some() {
                        let label = ((j - cj) + g * a - (i - ri)) % g;
                        if std::mem::replace(&mut labels[label], true) {
                            return Err(violation('b', (i, j), "two symbols in one cell orbit"));
                        }
                        count += 1;
                    }
                }
            }
            if count != g {
                return Err(violation('b', (ri, cj), format!("block holds {count} symbols, needs {g}")));
            }
        }
    }
    // (c) lcm compatibility.
    for (i, j, s) in c.cells() {
        let (a, b, cl) = (alpha.cycle_len(i), alpha.cycle_len(j), alpha.cycle_len(s));
        if !lcm_compatible(a, b, cl) {
            return Err(violation('c', (i, j), format!("cycle lengths {a}, {b}, {cl} incompatible")));
        }
    }
    // (d) rows within one cycle, same symbol, distinct modulo gcd(a,c).
    let mut seen: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for (i, j, s) in c.cells() {
        let (start, a) = cycle_span(alpha, i);
        let g = gcd(a, alpha.cycle_len(s));
        if let Some(&other) = seen.get(&(s, start, (i - start) % g)) {
            if other != i {
                return Err(violation('d', (i, j), format!("rows {other} and {i} agree modulo {g}")));
            }
        }
        seen.insert((s, start, (i - start) % g), i);
    }
    // (e) the column analogue.
    let mut seen: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for (i, j, s) in c.cells() {
        let (start, b) = cycle_span(alpha, j);
        let g = gcd(b, alpha.cycle_len(s));
        if let Some(&other) = seen.get(&(s, start, (j - start) % g)) {
            if other != j {
                return Err(violation('e', (i, j), format!("columns {other} and {j} agree modulo {g}")));
            }
        }
        seen.insert((s, start, (j - start) % g), j);
    }
    Ok(())
}

/// Propagates each entry `(i, j, k)` along `(i,j,k) ↦ (α(i), α(j), α(k))`
/// and re-verifies the result.
pub fn expand_contour(c: &Contour) -> Result<LatinSquare, ContourError> {
    let n = c.order();
    let alpha = &c.alpha;
    let mut p = PartialSquare::new(n);
    for (i0, j0, k0) in c.cells() {
        let len = lcm(alpha.cycle_len(i0), alpha.cycle_len(j0));
        let (mut i, mut j, mut k) = (i0, j0, k0);
        for _ in 0..len {
            match p.get(i, j) {
                None => p.set(i, j, k),
                Some(v) if v == k => {}
                Some(_) => return Err(ContourError::Clash(i, j)),
            }
            i = alpha.apply(i);
            j = alpha.apply(j);
            k = alpha.apply(k);
        }
    }
    let empty = n * n - p.filled();
    if empty > 0 {
        return Err(ContourError::Incomplete(empty));
    }
    let l = p.into_square().map_err(|_| ContourError::NotVerified)?;
    if !is_autotopism(&Isotopism::automorphism(alpha.clone()), &l) {
        return Err(ContourError::NotVerified);
    }
    Ok(l)
}

/// Index into `[m]*`: a nontrivial cycle (1-based, longest first) or the
/// fixed points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    Cycle(usize),
    Fixed,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::Cycle(k) => write!(f, "α{k}"),
            Class::Fixed => write!(f, "α∞"),
        }
    }
}

/// Per block `M_ij` and symbol class `k`, the number of cells of `M_ij`
/// holding a symbol of class `k`. For a nontrivial cycle this is
/// `d_k · f_k(i,j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDiagram {
    pub sizes: BTreeMap<Class, usize>,
    pub occurrences: BTreeMap<(Class, Class, Class), usize>,
}

impl BlockDiagram {
    /// `f_k(i,j)`: how often each symbol of class `k` occurs in `M_ij`, when
    /// that is a whole number.
    pub fn f(&self, i: Class, j: Class, k: Class) -> Option<usize> {
        let occ = self.occurrences.get(&(i, j, k)).copied().unwrap_or(0);
        let d = self.sizes[&k];
        (occ % d == 0).then_some(occ / d)
    }

    pub fn classes(&self) -> Vec<Class> {
        self.sizes.keys().copied().collect()
    }

    /// Both row-sum identities and the block-area identity.
    pub fn check_sums(&self) -> bool {
        let cls = self.classes();
        let occ = |i, j, k| self.occurrences.get(&(i, j, k)).copied().unwrap_or(0);
        let area_ok = cls.iter().all(|&i| {
            cls.iter().all(|&j| cls.iter().map(|&k| occ(i, j, k)).sum::<usize>() == self.sizes[&i] * self.sizes[&j])
        });
        let rows_ok = cls.iter().all(|&i| {
            cls.iter().all(|&k| cls.iter().map(|&j| occ(i, j, k)).sum::<usize>() == self.sizes[&i] * self.sizes[&k])
        });
        let cols_ok = cls.iter().all(|&j| {
            cls.iter().all(|&k| cls.iter().map(|&i| occ(i, j, k)).sum::<usize>() == self.sizes[&j] * self.sizes[&k])
        });
        area_ok && rows_ok && cols_ok
    }
}

impl fmt::Display for BlockDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &i in self.sizes.keys() {
            for &j in self.sizes.keys() {
                write!(f, "M[{i},{j}]:")?;
                for &k in self.sizes.keys() {
                    match self.f(i, j, k) {
                        Some(0) => {}
                        Some(v) => write!(f, " {k}:{v}")?,
                        None => write!(f, " {k}:~{}", self.occurrences[&(i, j, k)])?,
                    }
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn class_of(alpha: &Permutation, x: usize, order: &[usize]) -> Class {
    let c = alpha.cycle_of(x);
    if c.len() == 1 {
        Class::Fixed
    } else {
        Class::Cycle(order.iter().position(|&s| s == c[0]).expect("cycle start") + 1)
    }
}

/// Block diagram of `l` for the cycles of `alpha` (any labelling; cycles
/// are numbered longest first, ties by least element).
pub fn block_diagram_of(l: &LatinSquare, alpha: &Permutation) -> Result<BlockDiagram, ContourError> {
    if !is_autotopism(&Isotopism::automorphism(alpha.clone()), l) {
        return Err(ContourError::NotVerified);
    }
    let mut cycles: Vec<&Vec<usize>> = alpha.cycles().iter().filter(|c| c.len() > 1).collect();
    cycles.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let order: Vec<usize> = cycles.iter().map(|c| c[0]).collect();
    let mut sizes = BTreeMap::new();
    for (k, c) in cycles.iter().enumerate() {
        sizes.insert(Class::Cycle(k + 1), c.len());
    }
    let fixed = alpha.cycles().iter().filter(|c| c.len() == 1).count();
    if fixed > 0 {
        sizes.insert(Class::Fixed, fixed);
    }
    let n = l.order();
    let mut occurrences = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            let key = (class_of(alpha, i, &order), class_of(alpha, j, &order), class_of(alpha, l.get(i, j), &order));
            *occurrences.entry(key).or_insert(0) += 1;
        }
    }
    Ok(BlockDiagram { sizes, occurrences })
}

/// A `g × g` window inside a block: the block is given by the 1-based first
/// row and column of its cycles and their lengths; `row`, `col` are 0-based
/// offsets of the window inside the block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternWindow {
    pub block_row: usize,
    pub block_col: usize,
    pub height: usize,
    pub width: usize,
    pub row: usize,
    pub col: usize,
    pub g: usize,
}

impl PatternWindow {
    fn check(&self) -> Result<(), ContourError> {
        if self.row + self.g > self.height || self.col + self.g > self.width {
            return Err(ContourError::Overflow {
                row: self.row,
                col: self.col,
                g: self.g,
                height: self.height,
                width: self.width,
            });
        }
        Ok(())
    }

    /// Global coordinates of local window cell `(x, y)`, both 1-based.
    fn at(&self, x: usize, y: usize) -> (usize, usize) {
        (self.block_row + self.row + x - 1, self.block_col + self.col + y - 1)
    }
}

/// The antidiagonal of an odd `g × g` window, all holding `k`.
pub fn place_odd_pattern(w: PatternWindow, k: usize) -> Result<Vec<(usize, usize, usize)>, ContourError> {
    w.check()?;
    if w.g.is_multiple_of(2) {
        return Err(ContourError::Parity { needed: "odd", g: w.g });
    }
    Ok((1..=w.g)
        .map(|x| {
            let (i, j) = w.at(x, w.g + 1 - x);
            (i, j, k)
        })
        .collect())
}

/// The antidiagonal of an even window with its lower half shifted one
/// column left (cyclically); the last two cells hold `l`, the rest `k`.
pub fn place_even_pattern(w: PatternWindow, k: usize, l: usize) -> Result<Vec<(usize, usize, usize)>, ContourError> {
    w.check()?;
    let g = w.g;
    if g % 2 == 1 || g == 0 {
        return Err(ContourError::Parity { needed: "even", g });
    }
    Ok((1..=g)
        .map(|x| {
            let y = ((g + 1 - x) as isize - offset_first(g, x)) as usize;
            let (i, j) = w.at(x, y);
            (i, j, if x + 2 > g { l } else { k })
        })
        .collect())
}

/// `k` at local `(x, g − x)` and `l` at `(x, g + 1 − x)` for `x ≤ g/2`.
pub fn place_staircase(w: PatternWindow, k: usize, l: usize) -> Result<Vec<(usize, usize, usize)>, ContourError> {
    w.check()?;
    let g = w.g;
    if g % 2 == 1 || g == 0 {
        return Err(ContourError::Parity { needed: "even", g });
    }
    let mut out = Vec::new();
    for x in 1..=g / 2 {
        let (i, j) = w.at(x, g - x);
        out.push((i, j, k));
        let (i, j) = w.at(x, g + 1 - x);
        out.push((i, j, l));
    }
    Ok(out)
}

/// `O_{1,i}` for a first cycle of length `d1`.
pub fn offset_first(d1: usize, i: usize) -> isize {
    assert!(i >= 1 && i <= d1, "offset index out of range");
    if d1.is_multiple_of(2) && 2 * i > d1 && i < d1 {
        1
    } else if d1.is_multiple_of(2) && i == d1 {
        1 - d1 as isize
    } else {
        0
    }
}

/// `O_{j,i}` for a later cycle of length `dj`, shifted by `g`.
pub fn offset_later(dj: usize, g: usize, i: usize) -> isize {
    if dj.is_multiple_of(2) && g < i && i <= g + dj / 2 {
        1
    } else {
        0
    }
}

/// Checked variant of the offsets: `kind = 1` selects `O_{1,i}`, otherwise
/// `O_{j,i}` with shift `g`.
pub fn offset(kind: usize, d: usize, g: usize, i: usize) -> Result<isize, ContourError> {
    let limit = if kind == 1 { d } else { g + d };
    if i == 0 || i > limit {
        return Err(ContourError::OutOfRange(i, kind, limit));
    }
    Ok(if kind == 1 { offset_first(d, i) } else { offset_later(d, g, i) })
}

/// Rows `{r−e+1..r} ∪ {r+h1+1..r+h1+g−e}` and the analogous columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitWindow {
    pub g: usize,
    pub r: isize,
    pub c: isize,
    pub e: usize,
    pub h1: isize,
    pub h2: isize,
}

impl OrbitWindow {
    pub fn rows(&self) -> Vec<isize> {
        let e = self.e as isize;
        let g = self.g as isize;
        (self.r - e + 1..=self.r).chain(self.r + self.h1 + 1..=self.r + self.h1 + g - e).collect()
    }

    pub fn cols(&self) -> Vec<isize> {
        let e = self.e as isize;
        let g = self.g as isize;
        (self.c - e + 1..=self.c).chain(self.c + self.h2 + 1..=self.c + self.h2 + g - e).collect()
    }
}

/// `δ_g`: `0` for odd `g`, `g/2` for even `g`.
pub fn delta(g: usize) -> usize {
    if g.is_multiple_of(2) {
        g / 2
    } else {
        0
    }
}

/// `(δ_g, whether Σ columns − Σ rows ≡ δ_g mod g)` for the window.
pub fn transversal_parity(w: &OrbitWindow) -> (usize, bool) {
    let g = w.g as isize;
    let diff: isize = w.cols().iter().sum::<isize>() - w.rows().iter().sum::<isize>();
    (delta(w.g), diff.rem_euclid(g) as usize == delta(w.g) % w.g.max(1))
}

/// An explicit transversal of the window (distinct rows, columns and
/// labels `column − row mod g`), or `None` when `(h1 − h2)e ≢ δ_g`.
pub fn gapped_transversal(w: &OrbitWindow) -> Result<Option<Vec<(isize, isize)>>, ContourError> {
    let (g, e) = (w.g, w.e);
    if !(e + 1 == g || g == 2 * e) || g == 0 {
        return Err(ContourError::WindowShape { g, e });
    }
    let gi = g as isize;
    let ei = e as isize;
    if ((w.h1 - w.h2) * ei).rem_euclid(gi) != delta(g) as isize % gi {
        return Ok(None);
    }
    let (r, c, h1, h2) = (w.r, w.c, w.h1, w.h2);
    let cells: Vec<(isize, isize)> = if g == 2 * e {
        (1..=ei).map(|i| (r - ei + i, c + 1 - i)).chain((1..=ei).map(|i| (r + h1 + i, c + h2 + ei + 1 - i))).collect()
    } else if g % 2 == 0 {
        let half = gi / 2;
        std::iter::once((r + h1 + 1, c + h2 + 1))
            .chain((1..=half).map(|i| (r - half - i + 2, c - gi + i + 1)))
            .chain((1..half).map(|i| (r - i + 1, c - half + i + 1)))
            .collect()
    } else {
        std::iter::once((r + h1 + 1, c + h2 + 1)).chain((1..=ei).map(|i| (r - i + 1, c - gi + i + 1))).collect()
    };
    Ok(Some(cells))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn sample_contour() -> Contour {
        let alpha = parse_permutation("(1 2 3)", 5).unwrap();
        let mut c = Contour::new(alpha).unwrap();
        for (i, j, s) in [
            (1, 1, 1),
            (1, 2, 4),
            (1, 3, 5),
            (2, 5, 1),
            (3, 4, 1),
            (4, 3, 1),
            (4, 4, 4),
            (4, 5, 5),
            (5, 2, 1),
            (5, 4, 5),
            (5, 5, 4),
        ] {
            c.set(i, j, s);
        }
        c
    }

    #[test]
    fn orbits() {
        assert_eq!(cell_orbits_of_automorphism(&Permutation::identity(3)).len(), 9);
        let o = cell_orbits_of_automorphism(&parse_permutation("(1 2 3)", 3).unwrap());
        assert_eq!(o.len(), 3);
        assert!(o.iter().all(|x| x.len() == 3));
        let a = parse_permutation("(1 2)(3 4 5 6 7 8)", 8).unwrap();
        let in_block: Vec<_> =
            cell_orbits_of_automorphism(&a).into_iter().filter(|o| o[0].0 <= 2 && o[0].1 >= 3).collect();
        assert_eq!(in_block.len(), 2);
        assert!(in_block.iter().all(|o| o.len() == 6));
    }

    #[test]
    fn sample_contour_expands() {
        let c = sample_contour();
        assert_eq!(c.validate(), Ok(()));
        let l = c.expand().unwrap();
        assert_eq!(l.rows()[0], vec![1, 4, 5, 2, 3]);
        assert_eq!(l.rows()[4], vec![3, 1, 2, 5, 4]);
        assert_eq!(Contour::from_square(&l, c.alpha()).unwrap(), c);
    }

    #[test]
    fn mutated_contour_fails() {
        let mut c = sample_contour();
        c.remove(2, 5);
        c.set(3, 5, 1);
        let err = c.validate().unwrap_err();
        assert!(matches!(err, ContourError::Violation { condition: 'a', row: 3, col: 5, .. }), "{err}");
        let empty = Contour::new(parse_permutation("(1 2 3)", 5).unwrap()).unwrap();
        assert!(matches!(empty.validate(), Err(ContourError::Violation { condition: 'b', .. })));
    }

    #[test]
    fn identity_contour_is_the_square() {
        let l = crate::latin::cyclic_square(4);
        let c = Contour::from_square(&l, &Permutation::identity(4)).unwrap();
        assert_eq!(c.len(), 16);
        assert_eq!(c.expand().unwrap(), l);
    }

    #[test]
    fn text_round_trip() {
        let c = sample_contour();
        let text = c.to_text();
        assert_eq!(Contour::parse(&text, None).unwrap(), c);
        assert!(Contour::parse("5\n1 1\n", Some(c.alpha())).is_err());
        let r = c.render();
        assert_eq!(r.lines().next().unwrap(), "★ ∞ ∞|. .");
        assert_eq!(r.lines().count(), 6);
    }

    #[test]
    fn offsets() {
        assert_eq!(offset_first(6, 4), 1);
        assert_eq!(offset_first(6, 6), -5);
        assert_eq!(offset_first(6, 2), 0);
        assert!((1..=7).all(|i| offset_first(7, i) == 0));
        assert!((1..=8).all(|i| offset_later(5, 3, i) == 0));
        assert_eq!(offset_later(4, 2, 3), 1);
        assert!(offset(1, 6, 0, 7).is_err());
    }

    #[test]
    fn transversal_arithmetic() {
        assert_eq!(delta(3), 0);
        assert_eq!(delta(6), 3);
        assert_eq!(delta(1), 0);
        let w = OrbitWindow { g: 2, r: 1, c: 1, e: 1, h1: 0, h2: 1 };
        assert!(gapped_transversal(&w).unwrap().is_some());
        let w = OrbitWindow { g: 2, r: 1, c: 1, e: 1, h1: 0, h2: 0 };
        assert!(gapped_transversal(&w).unwrap().is_none());
        let w = OrbitWindow { g: 5, r: 3, c: 3, e: 2, h1: 0, h2: 0 };
        assert!(gapped_transversal(&w).is_err());
    }

    fn is_transversal(cells: &[(isize, isize)], w: &OrbitWindow) -> bool {
        let g = w.g as isize;
        let mut rows: Vec<isize> = cells.iter().map(|c| c.0).collect();
        let mut cols: Vec<isize> = cells.iter().map(|c| c.1).collect();
        let mut labels: Vec<isize> = cells.iter().map(|c| (c.1 - c.0).rem_euclid(g)).collect();
        rows.sort();
        cols.sort();
        labels.sort();
        let mut wr = w.rows();
        let mut wc = w.cols();
        wr.sort();
        wc.sort();
        rows == wr && cols == wc && labels == (0..g).collect::<Vec<_>>()
    }

    /// Brute force over all bijections rows → cols of the window.
    fn brute_force_exists(w: &OrbitWindow) -> bool {
        fn rec(
            k: usize,
            rows: &[isize],
            cols: &[isize],
            used: &mut Vec<bool>,
            labels: &mut Vec<bool>,
            g: isize,
        ) -> bool {
            if k == rows.len() {
                return true;
            }
            for (idx, &c) in cols.iter().enumerate() {
                let lab = (c - rows[k]).rem_euclid(g) as usize;
                if !used[idx] && !labels[lab] {
                    used[idx] = true;
                    labels[lab] = true;
                    if rec(k + 1, rows, cols, used, labels, g) {
                        return true;
                    }
                    used[idx] = false;
                    labels[lab] = false;
                }
            }
            false
        }
        let (rows, cols) = (w.rows(), w.cols());
        rec(0, &rows, &cols, &mut vec![false; w.g], &mut vec![false; w.g], w.g as isize)
    }

    #[test]
    fn gapped_transversals_match_brute_force() {
        for g in 1..=6usize {
            for e in 1..=g {
                if !(e + 1 == g || g == 2 * e) {
                    continue;
                }
                for h1 in 0..=4 {
                    for h2 in 0..=4 {
                        let w = OrbitWindow { g, r: 6, c: 7, e, h1, h2 };
                        let got = gapped_transversal(&w).unwrap();
                        assert_eq!(got.is_some(), brute_force_exists(&w), "g={g} e={e} h1={h1} h2={h2}");
                        if let Some(cells) = got {
                            assert!(is_transversal(&cells, &w), "g={g} e={e} h1={h1} h2={h2}: {cells:?}");
                        }
                        assert_eq!(transversal_parity(&w).1, brute_force_exists(&w));
                    }
                }
            }
        }
    }

    #[test]
    fn block_diagrams_of_two_order_six_squares() {
        let alpha = parse_permutation("(1 2 3)(4 5 6)", 6).unwrap();
        let first: LatinSquare =
            "6\n1 3 2 4 6 5\n3 2 1 6 5 4\n2 1 3 5 4 6\n4 6 5 1 3 2\n6 5 4 3 2 1\n5 4 6 2 1 3\n".parse().unwrap();
        let second: LatinSquare =
            "6\n4 3 2 1 6 5\n3 5 1 6 2 4\n2 1 6 5 4 3\n1 6 5 4 3 2\n6 2 4 3 5 1\n5 4 3 2 1 6\n".parse().unwrap();
        let (a1, a2) = (Class::Cycle(1), Class::Cycle(2));
        let d = block_diagram_of(&first, &alpha).unwrap();
        assert!(d.check_sums());
        assert_eq!((d.f(a1, a1, a1), d.f(a1, a1, a2), d.f(a1, a2, a2)), (Some(3), Some(0), Some(3)));
        let d = block_diagram_of(&second, &alpha).unwrap();
        assert!(d.check_sums());
        assert_eq!((d.f(a1, a1, a1), d.f(a1, a1, a2), d.f(a2, a1, a2)), (Some(2), Some(1), Some(2)));
        assert_eq!(d.f(a2, a2, a1), Some(2));
    }

    #[test]
    fn patterns() {
        let w = PatternWindow { block_row: 1, block_col: 1, height: 5, width: 5, row: 0, col: 0, g: 5 };
        let odd = place_odd_pattern(w, 1).unwrap();
        assert_eq!(odd.len(), 5);
        assert_eq!(odd[0], (1, 5, 1));
        let w6 = PatternWindow { g: 6, height: 6, width: 6, ..w };
        let even = place_even_pattern(w6, 1, 7).unwrap();
        assert_eq!(even, vec![(1, 6, 1), (2, 5, 1), (3, 4, 1), (4, 2, 1), (5, 1, 7), (6, 6, 7)]);
        let stairs = place_staircase(w6, 1, 7).unwrap();
        assert_eq!(stairs.iter().filter(|c| c.2 == 1).count(), 3);
        assert_eq!(stairs[0], (1, 5, 1));
        assert!(place_odd_pattern(w6, 1).is_err());
        let big = PatternWindow { row: 2, ..w };
        assert!(place_odd_pattern(big, 1).is_err());
    }
}
