//! Latin squares, the isotopism action, parastrophes, subsquares and direct
//! products.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::{Isotopism, Parastrophy, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatinError {
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is outside 1..={n}")]
    OutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("symbol {symbol} repeated in row {row}")]
    DuplicateInRow { row: usize, symbol: usize },
    #[error("symbol {symbol} repeated in column {col}")]
    DuplicateInColumn { col: usize, symbol: usize },
    #[error("degree {degree} does not match order {order}")]
    DegreeMismatch { degree: usize, order: usize },
    #[error("row and column sets differ in size: {rows} vs {cols}")]
    SizeMismatch { rows: usize, cols: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An `n × n` array over `1..=n` with no repeated symbol in any row or column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<usize>,
}

impl LatinSquare {
    pub fn validate(rows: &[Vec<usize>]) -> Result<Self, LatinError> {
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(LatinError::NotSquare { row: r + 1, len: row.len(), n });
            }
        }
        Self::from_flat(n, rows.concat())
    }

    /// Validates a row-major cell vector.
    pub fn from_flat(n: usize, cells: Vec<usize>) -> Result<Self, LatinError> {
        assert_eq!(cells.len(), n * n, "cell vector has wrong length");
        for (idx, &v) in cells.iter().enumerate() {
            if v == 0 || v > n {
                return Err(LatinError::OutOfRange { row: idx / n + 1, col: idx % n + 1, value: v, n });
            }
        }
        for r in 0..n {
            let mut seen = vec![false; n + 1];
            for c in 0..n {
                let v = cells[r * n + c];
                if std::mem::replace(&mut seen[v], true) {
                    return Err(LatinError::DuplicateInRow { row: r + 1, symbol: v });
                }
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n + 1];
            for r in 0..n {
                let v = cells[r * n + c];
                if std::mem::replace(&mut seen[v], true) {
                    return Err(LatinError::DuplicateInColumn { col: c + 1, symbol: v });
                }
            }
        }
        Ok(LatinSquare { n, cells })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.cells[(i - 1) * self.n..i * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major cells.
    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    fn check_degree(&self, theta: &Isotopism) -> Result<(), LatinError> {
        if theta.degree() != self.n {
            return Err(LatinError::DegreeMismatch { degree: theta.degree(), order: self.n });
        }
        Ok(())
    }

    /// First cell `(i, j)`, row-major, where `γ(L(i,j)) != L(α(i), β(j))`.
    pub fn first_violation(&self, theta: &Isotopism) -> Result<Option<(usize, usize)>, LatinError> {
        self.check_degree(theta)?;
        for i in 1..=self.n {
            let ai = theta.alpha.apply(i);
            for j in 1..=self.n {
                if theta.gamma.apply(self.get(i, j)) != self.get(ai, theta.beta.apply(j)) {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    pub fn orthogonal_array(&self) -> OrthogonalArray {
        let entries =
            (1..=self.n).flat_map(|i| (1..=self.n).map(move |j| (i, j))).map(|(i, j)| [i, j, self.get(i, j)]).collect();
        OrthogonalArray { n: self.n, entries }
    }

    /// The submatrix on `rows × cols`, if it is a subsquare.
    pub fn subsquare_on(
        &self,
        rows: &BTreeSet<usize>,
        cols: &BTreeSet<usize>,
    ) -> Result<Option<Subsquare>, LatinError> {
        if rows.len() != cols.len() {
            return Err(LatinError::SizeMismatch { rows: rows.len(), cols: cols.len() });
        }
        let symbols: BTreeSet<usize> =
            rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j))).map(|(i, j)| self.get(i, j)).collect();
        if symbols.len() != rows.len() {
            return Ok(None);
        }
        let relabel = |s: usize| symbols.iter().position(|&x| x == s).unwrap() + 1;
        let sub: Vec<Vec<usize>> =
            rows.iter().map(|&i| cols.iter().map(|&j| relabel(self.get(i, j))).collect()).collect();
        // Rows of a Latin square are repetition free, so k symbols on a k × k
        // array already force the Latin property.
        let square = LatinSquare::validate(&sub).expect("closed submatrix is Latin");
        Ok(Some(Subsquare { rows: rows.clone(), cols: cols.clone(), symbols, square }))
    }
}

/// A subsquare together with where it sits; `square` is relabelled onto
/// `1..=k` by increasing symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subsquare {
    pub rows: BTreeSet<usize>,
    pub cols: BTreeSet<usize>,
    pub symbols: BTreeSet<usize>,
    pub square: LatinSquare,
}

/// The `n²` triples `(row, column, symbol)` of a Latin square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalArray {
    pub n: usize,
    pub entries: Vec<[usize; 3]>,
}

impl OrthogonalArray {
    pub fn to_square(&self) -> Result<LatinSquare, LatinError> {
        let n = self.n;
        let mut cells = vec![0; n * n];
        for &[r, c, s] in &self.entries {
            for (v, col) in [(r, 1), (c, 2), (s, 3)] {
                if v == 0 || v > n {
                    return Err(LatinError::OutOfRange { row: r, col, value: v, n });
                }
            }
            if cells[(r - 1) * n + c - 1] != 0 {
                return Err(LatinError::DuplicateInRow { row: r, symbol: s });
            }
            cells[(r - 1) * n + c - 1] = s;
        }
        if let Some(idx) = cells.iter().position(|&v| v == 0) {
            return Err(LatinError::OutOfRange { row: idx / n + 1, col: idx % n + 1, value: 0, n });
        }
        LatinSquare::from_flat(n, cells)
    }
}

/// `L'(i,j) = γ(L(α⁻¹(i), β⁻¹(j)))`.
pub fn apply_isotopism(theta: &Isotopism, l: &LatinSquare) -> Result<LatinSquare, LatinError> {
    l.check_degree(theta)?;
    let n = l.n;
    let mut cells = vec![0; n * n];
    for i in 1..=n {
        let ai = theta.alpha.apply(i);
        for j in 1..=n {
            cells[(ai - 1) * n + theta.beta.apply(j) - 1] = theta.gamma.apply(l.get(i, j));
        }
    }
    Ok(LatinSquare { n, cells })
}

/// Whether `γ(L(i,j)) = L(α(i), β(j))` for every cell. A degree mismatch
/// counts as `false`; use [`LatinSquare::first_violation`] to tell them apart.
pub fn is_autotopism(theta: &Isotopism, l: &LatinSquare) -> bool {
    matches!(l.first_violation(theta), Ok(None))
}

/// Permutes the coordinates of every triple of `O(L)` by `lambda`.
pub fn parastrophe(l: &LatinSquare, lambda: Parastrophy) -> LatinSquare {
    let oa = l.orthogonal_array();
    let entries = oa.entries.iter().map(|t| lambda.apply(t)).collect();
    OrthogonalArray { n: l.n, entries }.to_square().expect("parastrophe of a Latin square is Latin")
}

/// Pairs `(x, x')` are relabelled as `(x − 1)·n' + x'`.
pub fn direct_product(l: &LatinSquare, m: &LatinSquare) -> LatinSquare {
    let (n, k) = (l.n, m.n);
    let pair = |x: usize, y: usize| (x - 1) * k + y;
    let size = n * k;
    let mut cells = vec![0; size * size];
    for i in 1..=n {
        for i2 in 1..=k {
            for j in 1..=n {
                for j2 in 1..=k {
                    cells[(pair(i, i2) - 1) * size + pair(j, j2) - 1] = pair(l.get(i, j), m.get(i2, j2));
                }
            }
        }
    }
    LatinSquare { n: size, cells }
}

/// `p × q` under the pairing used by [`direct_product`].
pub fn product_permutation(p: &Permutation, q: &Permutation) -> Permutation {
    let k = q.degree();
    let images = (1..=p.degree())
        .flat_map(|x| (1..=k).map(move |y| (x, y)))
        .map(|(x, y)| (p.apply(x) - 1) * k + q.apply(y))
        .collect();
    Permutation::from_images(images).expect("product of bijections is a bijection")
}

pub fn product_isotopism(theta: &Isotopism, phi: &Isotopism) -> Isotopism {
    Isotopism {
        alpha: product_permutation(&theta.alpha, &phi.alpha),
        beta: product_permutation(&theta.beta, &phi.beta),
        gamma: product_permutation(&theta.gamma, &phi.gamma),
    }
}

/// `L(i,j) = ((i + j − 1) mod n) + 1`.
pub fn cyclic_square(n: usize) -> LatinSquare {
    assert!(n >= 1, "order must be positive");
    let cells = (1..=n).flat_map(|i| (1..=n).map(move |j| (i + j - 1) % n + 1)).collect();
    LatinSquare { n, cells }
}

impl fmt::Display for LatinSquare {
    /// The square file format: `n`, then `n` rows of single-space separated
    /// symbols, each line newline terminated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 1..=self.n {
            let row: Vec<String> = self.row(i).iter().map(usize::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for LatinSquare {
    type Err = LatinError;

    fn from_str(s: &str) -> Result<Self, LatinError> {
        let mut lines = s.lines().enumerate();
        let parse_err = |line: usize, msg: String| LatinError::Parse { line: line + 1, msg };
        let (ln, first) = lines.next().ok_or_else(|| parse_err(0, "empty input".into()))?;
        let n: usize = first.trim().parse().map_err(|_| parse_err(ln, format!("bad order {first:?}")))?;
        if n == 0 {
            return Err(parse_err(ln, "order must be positive".into()));
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, line) = lines.next().ok_or_else(|| parse_err(rows.len() + 1, "missing row".into()))?;
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| parse_err(ln, format!("bad entry {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != n {
                return Err(parse_err(ln, format!("expected {n} entries, found {}", row.len())));
            }
            rows.push(row);
        }
        if let Some((ln, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(parse_err(ln, "trailing content".into()));
        }
        LatinSquare::validate(&rows)
    }
}

/// A partial Latin square used by constructions; `0` marks an empty cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSquare {
    n: usize,
    cells: Vec<usize>,
}

impl PartialSquare {
    pub fn new(n: usize) -> Self {
        PartialSquare { n, cells: vec![0; n * n] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        match self.cells[(i - 1) * self.n + j - 1] {
            0 => None,
            v => Some(v),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, s: usize) {
        self.cells[(i - 1) * self.n + j - 1] = s;
    }

    pub fn clear(&mut self, i: usize, j: usize) {
        self.cells[(i - 1) * self.n + j - 1] = 0;
    }

    pub fn filled(&self) -> usize {
        self.cells.iter().filter(|&&v| v != 0).count()
    }

    pub fn into_square(self) -> Result<LatinSquare, LatinError> {
        LatinSquare::from_flat(self.n, self.cells)
    }
}

impl From<&LatinSquare> for PartialSquare {
    fn from(l: &LatinSquare) -> Self {
        PartialSquare { n: l.n, cells: l.cells.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn sq(rows: &[&str]) -> LatinSquare {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.bytes().map(|b| (b - b'0') as usize).collect()).collect();
        LatinSquare::validate(&rows).unwrap()
    }

    #[test]
    fn validation() {
        assert!(LatinSquare::validate(&[vec![1, 2], vec![2, 1]]).is_ok());
        assert_eq!(
            LatinSquare::validate(&[vec![1, 2], vec![1, 2]]),
            Err(LatinError::DuplicateInColumn { col: 1, symbol: 1 })
        );
        assert!(matches!(
            LatinSquare::validate(&[vec![1, 3], vec![2, 1]]),
            Err(LatinError::OutOfRange { row: 1, col: 2, .. })
        ));
        sq(&["14523", "52431", "45312", "23145", "31254"]);
    }

    #[test]
    fn autotopism_checks() {
        let l = sq(&["14523", "52431", "45312", "23145", "31254"]);
        let a = parse_permutation("(1 2 3)", 5).unwrap();
        assert!(is_autotopism(&Isotopism::automorphism(a), &l));
        assert!(is_autotopism(&Isotopism::trivial(5), &l));
        let two = sq(&["12", "21"]);
        let swap = Isotopism::automorphism(parse_permutation("(1 2)", 2).unwrap());
        assert!(!is_autotopism(&swap, &two));
        assert_eq!(two.first_violation(&swap), Ok(Some((1, 1))));
        assert!(two.first_violation(&Isotopism::trivial(3)).is_err());
    }

    #[test]
    fn isotopism_action() {
        let l = sq(&["132465", "321654", "213546", "465132", "654321", "546213"]);
        let a = parse_permutation("(1 2 3)(4 5 6)", 6).unwrap();
        let theta = Isotopism::automorphism(a);
        assert_eq!(apply_isotopism(&theta, &l).unwrap(), l);
        let phi = Isotopism::new(
            parse_permutation("(1 4 2)", 6).unwrap(),
            parse_permutation("(2 6)", 6).unwrap(),
            parse_permutation("(1 2 3 4 5 6)", 6).unwrap(),
        )
        .unwrap();
        let moved = apply_isotopism(&phi.inverse(), &l).unwrap();
        assert_eq!(apply_isotopism(&phi, &moved).unwrap(), l);
    }

    #[test]
    fn parastrophes() {
        let l = sq(&["14523", "52431", "45312", "23145", "31254"]);
        assert_eq!(parastrophe(&l, Parastrophy::identity()), l);
        let t = parastrophe(&l, Parastrophy::new([1, 0, 2]).unwrap());
        assert!((1..=5).all(|i| (1..=5).all(|j| t.get(i, j) == l.get(j, i))));
        for lambda in Parastrophy::ALL {
            assert_eq!(parastrophe(&parastrophe(&l, lambda), lambda.inverse()), l);
        }
        assert_eq!(l.orthogonal_array().to_square().unwrap(), l);
    }

    #[test]
    fn cyclic_and_products() {
        assert_eq!(cyclic_square(3).rows(), vec![vec![2, 3, 1], vec![3, 1, 2], vec![1, 2, 3]]);
        assert_eq!(cyclic_square(1).rows(), vec![vec![1]]);
        let c4 = cyclic_square(4);
        let z = parse_permutation("(1 2 3 4)", 4).unwrap();
        let theta = Isotopism::new(z.clone(), z.inverse(), Permutation::identity(4)).unwrap().power(2);
        assert!(is_autotopism(&theta, &c4));
        let p = direct_product(&cyclic_square(3), &cyclic_square(2));
        assert_eq!(p.order(), 6);
        let two = sq(&["12", "21"]);
        assert_eq!(direct_product(&two, &cyclic_square(1)), two);
    }

    #[test]
    fn subsquares() {
        let l = sq(&["132465", "321654", "213546", "465132", "654321", "546213"]);
        let all: BTreeSet<usize> = (1..=6).collect();
        assert_eq!(l.subsquare_on(&all, &all).unwrap().unwrap().square, l);
        let top: BTreeSet<usize> = [1, 2, 3].into();
        let sub = l.subsquare_on(&top, &top).unwrap().unwrap();
        assert_eq!(sub.symbols, top);
        let one: BTreeSet<usize> = [4].into();
        assert!(l.subsquare_on(&one, &[2].into()).unwrap().is_some());
        assert!(l.subsquare_on(&top, &[4, 5, 1].into()).unwrap().is_none());
        assert!(l.subsquare_on(&top, &one).is_err());
    }

    #[test]
    fn file_format() {
        let l = sq(&["12", "21"]);
        let text = l.to_string();
        assert_eq!(text, "2\n1 2\n2 1\n");
        assert_eq!(text.parse::<LatinSquare>().unwrap(), l);
        assert!("2\n1 2\n2 1\n3\n".parse::<LatinSquare>().is_err());
        assert!("2\n1 2\n2\n".parse::<LatinSquare>().is_err());
        assert!("2\n1 2\n2 x\n".parse::<LatinSquare>().is_err());
        assert!("2\n1 2\n2 1\n\n".parse::<LatinSquare>().is_ok());
    }
}
