//! Exact existence search and counting of Latin squares admitting a given
//! isotopism.
//!
//! The problem is an exact cover: every cell, every (row, symbol) pair and
//! every (column, symbol) pair is covered once, and an option is a cell orbit
//! of `(i, j) ↦ (α(i), β(j))` together with the symbol at its representative
//! (the other symbols along the orbit are its γ-images). Options are solved
//! with dancing links and minimum-remaining-values item selection.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::conditions::{classify, lcm_compatible, Status};
use crate::contour::Contour;
use crate::latin::{is_autotopism, LatinSquare, PartialSquare};
use crate::perm::{canonical_permutation, lcm, CycleStructure, Isotopism, Permutation, StructureTriple};

/// Largest order accepted by default for counting and existence search.
pub const DEFAULT_BOUND: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("order {n} exceeds the search bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("search abandoned after {0} nodes")]
    Budget(u64),
    #[error("partial square has order {got}, isotopism has degree {want}")]
    DegreeMismatch { got: usize, want: usize },
}

/// One cell orbit: `cells[r] = (α^r(i), β^r(j))` from the representative
/// `(i, j) = cells[0]`; the symbol at `cells[r]` is `γ^r(s)` when `s` sits
/// at the representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub cells: Vec<(usize, usize)>,
    /// Indices of the α-cycle and β-cycle (in least-element order).
    pub block: (usize, usize),
    /// Representative symbols allowed by lcm compatibility.
    pub feasible: Vec<usize>,
}

impl Orbit {
    pub fn representative(&self) -> (usize, usize) {
        self.cells[0]
    }
}

#[derive(Clone, Debug)]
pub struct OrbitPlan {
    pub theta: Isotopism,
    pub orbits: Vec<Orbit>,
}

impl OrbitPlan {
    pub fn order(&self) -> usize {
        self.theta.degree()
    }

    pub fn representatives(&self) -> Vec<(usize, usize)> {
        self.orbits.iter().map(Orbit::representative).collect()
    }
}

/// Orbits grouped by block (α-cycle, β-cycle), each block's orbits by
/// representative in row-major order.
pub fn build_orbit_plan(theta: &Isotopism) -> OrbitPlan {
    let n = theta.degree();
    let (alpha, beta, gamma) = (&theta.alpha, &theta.beta, &theta.gamma);
    let mut seen = vec![false; n * n];
    let mut orbits = Vec::new();
    for (ai, acyc) in alpha.cycles().iter().enumerate() {
        for (bi, bcyc) in beta.cycles().iter().enumerate() {
            let mut rows = acyc.clone();
            let mut cols = bcyc.clone();
            rows.sort_unstable();
            cols.sort_unstable();
            let feasible: Vec<usize> =
                (1..=n).filter(|&s| lcm_compatible(acyc.len(), bcyc.len(), gamma.cycle_len(s))).collect();
            for &i in &rows {
                for &j in &cols {
                    if seen[(i - 1) * n + j - 1] {
                        continue;
                    }
                    let mut cells = Vec::with_capacity(lcm(acyc.len(), bcyc.len()));
                    let (mut x, mut y) = (i, j);
                    while !seen[(x - 1) * n + y - 1] {
                        seen[(x - 1) * n + y - 1] = true;
                        cells.push((x, y));
                        x = alpha.apply(x);
                        y = beta.apply(y);
                    }
                    orbits.push(Orbit { cells, block: (ai, bi), feasible: feasible.clone() });
                }
            }
        }
    }
    OrbitPlan { theta: theta.clone(), orbits }
}

/// Result of a (possibly truncated) count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Exact(u64),
    AtLeast(u64),
}

impl Count {
    pub fn value(self) -> u64 {
        match self {
            Count::Exact(v) | Count::AtLeast(v) => v,
        }
    }
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Count::Exact(v) => write!(f, "{v}"),
            Count::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Largest order accepted; `None` disables the check.
    pub bound: Option<usize>,
    /// Node budget per independent subtask.
    pub node_limit: Option<u64>,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { bound: Some(DEFAULT_BOUND), node_limit: None, parallel: true }
    }
}

impl SearchConfig {
    pub fn unbounded() -> Self {
        SearchConfig { bound: None, ..Self::default() }
    }

    fn check(&self, n: usize) -> Result<(), SearchError> {
        match self.bound {
            Some(b) if n > b => Err(SearchError::TooLarge { n, bound: b }),
            _ => Ok(()),
        }
    }
}

// Dancing links over a fixed item/option matrix.
struct Dlx {
    llink: Vec<usize>,
    rlink: Vec<usize>,
    ulink: Vec<usize>,
    dlink: Vec<usize>,
    top: Vec<i64>,
    len: Vec<usize>,
    /// For each node, the option it belongs to.
    owner: Vec<usize>,
    /// First node of each option.
    first: Vec<usize>,
}

impl Dlx {
    fn new(n_items: usize, options: &[Vec<usize>]) -> Self {
        let mut d = Dlx {
            llink: (0..=n_items).map(|i| if i == 0 { n_items } else { i - 1 }).collect(),
            rlink: (0..=n_items).map(|i| if i == n_items { 0 } else { i + 1 }).collect(),
            ulink: (0..=n_items).collect(),
            dlink: (0..=n_items).collect(),
            top: vec![0; n_items + 1],
            len: vec![0; n_items + 1],
            owner: vec![usize::MAX; n_items + 1],
            first: Vec::with_capacity(options.len()),
        };
        // Leading spacer.
        let mut spacer = d.push_node(0, usize::MAX);
        for (k, items) in options.iter().enumerate() {
            let start = d.top.len();
            d.first.push(start);
            for &it in items {
                let x = d.push_node(it as i64, k);
                let last = d.ulink[it];
                d.ulink[x] = last;
                d.dlink[x] = it;
                d.dlink[last] = x;
                d.ulink[it] = x;
                d.len[it] += 1;
            }
            let end = d.top.len() - 1;
            d.dlink[spacer] = end;
            let next = d.push_node(-(k as i64) - 1, usize::MAX);
            d.ulink[next] = start;
            spacer = next;
        }
        d
    }

    fn push_node(&mut self, top: i64, owner: usize) -> usize {
        let x = self.top.len();
        self.top.push(top);
        self.ulink.push(x);
        self.dlink.push(x);
        self.owner.push(owner);
        x
    }

    fn hide(&mut self, p: usize) {
        let mut q = p + 1;
        while q != p {
            let x = self.top[q];
            let (u, d) = (self.ulink[q], self.dlink[q]);
            if x <= 0 {
                q = u;
            } else {
                self.dlink[u] = d;
                self.ulink[d] = u;
                self.len[x as usize] -= 1;
                q += 1;
            }
        }
    }

    fn unhide(&mut self, p: usize) {
        let mut q = p - 1;
        while q != p {
            let x = self.top[q];
            let (u, d) = (self.ulink[q], self.dlink[q]);
            if x <= 0 {
                q = d;
            } else {
                self.dlink[u] = q;
                self.ulink[d] = q;
                self.len[x as usize] += 1;
                q -= 1;
            }
        }
    }

    fn cover(&mut self, i: usize) {
        let mut p = self.dlink[i];
        while p != i {
            self.hide(p);
            p = self.dlink[p];
        }
        let (l, r) = (self.llink[i], self.rlink[i]);
        self.rlink[l] = r;
        self.llink[r] = l;
    }

    fn uncover(&mut self, i: usize) {
        let (l, r) = (self.llink[i], self.rlink[i]);
        self.rlink[l] = i;
        self.llink[r] = i;
        let mut p = self.ulink[i];
        while p != i {
            self.unhide(p);
            p = self.ulink[p];
        }
    }

    /// Covers the other items of the option containing node `x`.
    fn select(&mut self, x: usize) {
        let mut p = x + 1;
        while p != x {
            let j = self.top[p];
            if j <= 0 {
                p = self.ulink[p];
            } else {
                self.cover(j as usize);
                p += 1;
            }
        }
    }

    fn deselect(&mut self, x: usize) {
        let mut p = x - 1;
        while p != x {
            let j = self.top[p];
            if j <= 0 {
                p = self.dlink[p];
            } else {
                self.uncover(j as usize);
                p -= 1;
            }
        }
    }

    /// Forces option `k` into the solution; false if one of its items is
    /// already covered.
    fn force(&mut self, k: usize) -> bool {
        let x = self.first[k];
        let item = self.top[x] as usize;
        if !self.is_active(item) || !self.column_contains(item, x) {
            return false;
        }
        self.cover(item);
        self.select(x);
        true
    }

    fn is_active(&self, item: usize) -> bool {
        self.rlink[self.llink[item]] == item
    }

    fn column_contains(&self, item: usize, x: usize) -> bool {
        let mut p = self.dlink[item];
        while p != item {
            if p == x {
                return true;
            }
            p = self.dlink[p];
        }
        false
    }

    fn choose_item(&self) -> Option<usize> {
        let mut best = None;
        let mut best_len = usize::MAX;
        let mut i = self.rlink[0];
        while i != 0 {
            if self.len[i] < best_len {
                best_len = self.len[i];
                best = Some(i);
                if best_len == 0 {
                    break;
                }
            }
            i = self.rlink[i];
        }
        best
    }
}

/// What the solver should do with each solution it finds.
enum Goal<'a> {
    Count { limit: Option<u64>, shared: &'a AtomicU64 },
    First,
}

struct Solver<'a> {
    dlx: Dlx,
    chosen: Vec<usize>,
    nodes: u64,
    node_limit: Option<u64>,
    goal: Goal<'a>,
    weight: u64,
    count: u64,
    found: Option<Vec<usize>>,
    stop: &'a AtomicBool,
}

impl Solver<'_> {
    /// Returns false when the search was cut short by the node budget.
    fn run(&mut self) -> Result<(), SearchError> {
        if self.stop.load(Ordering::Relaxed) {
            return Ok(());
        }
        self.nodes += 1;
        if let Some(lim) = self.node_limit {
            if self.nodes > lim {
                return Err(SearchError::Budget(lim));
            }
        }
        let Some(item) = self.dlx.choose_item() else {
            match &self.goal {
                Goal::First => {
                    self.found = Some(self.chosen.clone());
                    self.stop.store(true, Ordering::Relaxed);
                }
                Goal::Count { limit, shared } => {
                    self.count += self.weight;
                    let total = shared.fetch_add(self.weight, Ordering::Relaxed) + self.weight;
                    if limit.is_some_and(|l| total >= l) {
                        self.stop.store(true, Ordering::Relaxed);
                    }
                }
            }
            return Ok(());
        };
        if self.dlx.len[item] == 0 {
            return Ok(());
        }
        self.dlx.cover(item);
        let mut x = self.dlx.dlink[item];
        while x != item {
            self.chosen.push(self.dlx.owner[x]);
            self.dlx.select(x);
            let r = self.run();
            self.dlx.deselect(x);
            self.chosen.pop();
            if let Err(e) = r {
                self.dlx.uncover(item);
                return Err(e);
            }
            if self.stop.load(Ordering::Relaxed) {
                break;
            }
            x = self.dlx.dlink[x];
        }
        self.dlx.uncover(item);
        Ok(())
    }
}

/// Options of the exact-cover matrix: `(orbit index, representative symbol)`
/// with their item lists.
struct Matrix {
    n: usize,
    options: Vec<(usize, usize)>,
    items: Vec<Vec<usize>>,
    n_items: usize,
    /// Orbit indices in search order (longest orbits first).
    order: Vec<usize>,
}

fn build_matrix(plan: &OrbitPlan) -> Matrix {
    let n = plan.order();
    let gamma = &plan.theta.gamma;
    let mut order: Vec<usize> = (0..plan.orbits.len()).collect();
    order.sort_by_key(|&o| std::cmp::Reverse(plan.orbits[o].cells.len()));
    // Cell items follow the search order so that ties in the item choice
    // favour long orbits.
    let mut cell_item = vec![0; n * n];
    let mut next = 1;
    for &o in &order {
        for &(i, j) in &plan.orbits[o].cells {
            cell_item[(i - 1) * n + j - 1] = next;
            next += 1;
        }
    }
    let row_item = |i: usize, s: usize| 1 + n * n + (i - 1) * n + (s - 1);
    let col_item = |j: usize, s: usize| 1 + 2 * n * n + (j - 1) * n + (s - 1);
    let mut options = Vec::new();
    let mut items = Vec::new();
    for &o in &order {
        let orbit = &plan.orbits[o];
        for &s in &orbit.feasible {
            let mut list = Vec::with_capacity(3 * orbit.cells.len());
            let mut sym = s;
            for &(i, j) in &orbit.cells {
                list.push(cell_item[(i - 1) * n + j - 1]);
                list.push(row_item(i, sym));
                list.push(col_item(j, sym));
                sym = gamma.apply(sym);
            }
            options.push((o, s));
            items.push(list);
        }
    }
    Matrix { n, options, items, n_items: 3 * n * n, order }
}

/// Symbol to put at the representative of `orbit` so that cell `(i, j)`
/// receives `v`.
fn representative_symbol(plan: &OrbitPlan, orbit: &Orbit, (i, j): (usize, usize), v: usize) -> usize {
    let r = orbit.cells.iter().position(|&c| c == (i, j)).expect("cell in orbit");
    plan.theta.gamma.power(-(r as i64)).apply(v)
}

fn orbit_index(plan: &OrbitPlan) -> Vec<usize> {
    let n = plan.order();
    let mut idx = vec![0; n * n];
    for (o, orbit) in plan.orbits.iter().enumerate() {
        for &(i, j) in &orbit.cells {
            idx[(i - 1) * n + j - 1] = o;
        }
    }
    idx
}

fn square_from(plan: &OrbitPlan, m: &Matrix, chosen: &[usize]) -> LatinSquare {
    let n = m.n;
    let mut p = PartialSquare::new(n);
    for &k in chosen {
        let (o, s) = m.options[k];
        let mut sym = s;
        for &(i, j) in &plan.orbits[o].cells {
            p.set(i, j, sym);
            sym = plan.theta.gamma.apply(sym);
        }
    }
    p.into_square().expect("exact cover yields a Latin square")
}

/// Forced options from a partial square, or `None` if the filled cells are
/// inconsistent with the isotopism.
fn forced_options(plan: &OrbitPlan, m: &Matrix, partial: &PartialSquare) -> Option<Vec<usize>> {
    let n = m.n;
    let idx = orbit_index(plan);
    let mut want: Vec<Option<usize>> = vec![None; plan.orbits.len()];
    for i in 1..=n {
        for j in 1..=n {
            if let Some(v) = partial.get(i, j) {
                let o = idx[(i - 1) * n + j - 1];
                let s = representative_symbol(plan, &plan.orbits[o], (i, j), v);
                match want[o] {
                    Some(t) if t != s => return None,
                    _ => want[o] = Some(s),
                }
            }
        }
    }
    let mut forced = Vec::new();
    for (o, w) in want.iter().enumerate() {
        if let Some(s) = w {
            let k = m.options.iter().position(|&opt| opt == (o, *s))?;
            forced.push(k);
        }
    }
    Some(forced)
}

/// Independent subtasks: each is a list of options forced before search
/// and the multiplicity its solutions stand for.
fn subtasks(plan: &OrbitPlan, m: &Matrix, forced: Option<Vec<usize>>) -> Vec<(Vec<usize>, u64)> {
    match forced {
        Some(f) if !f.is_empty() => {
            // A prefilled search breaks the symbol symmetry; split on the
            // first free orbit without reduction.
            let used: std::collections::HashSet<usize> = f.iter().map(|&k| m.options[k].0).collect();
            match m.order.iter().find(|o| !used.contains(o)) {
                Some(&o) => (0..m.options.len())
                    .filter(|&k| m.options[k].0 == o)
                    .map(|k| {
                        let mut v = f.clone();
                        v.push(k);
                        (v, 1)
                    })
                    .collect(),
                None => vec![(f, 1)],
            }
        }
        _ => {
            // Relabelling symbols by γ maps solutions to solutions, so the
            // first orbit may be restricted to the least symbol of each
            // γ-cycle, each solution then standing for |cycle| of them.
            let Some(&o) = m.order.first() else { return vec![(vec![], 1)] };
            let gamma = &plan.theta.gamma;
            (0..m.options.len())
                .filter(|&k| m.options[k].0 == o)
                .filter(|&k| {
                    let s = m.options[k].1;
                    gamma.cycle_of(s)[0] == s
                })
                .map(|k| (vec![k], gamma.cycle_len(m.options[k].1) as u64))
                .collect()
        }
    }
}

fn solve_task<'a>(
    m: &Matrix,
    forced: &[usize],
    weight: u64,
    cfg: &SearchConfig,
    goal: Goal<'a>,
    stop: &'a AtomicBool,
) -> Result<(u64, Option<Vec<usize>>), SearchError> {
    let mut dlx = Dlx::new(m.n_items, &m.items);
    for &k in forced {
        if !dlx.force(k) {
            return Ok((0, None));
        }
    }
    let mut s = Solver {
        dlx,
        chosen: forced.to_vec(),
        nodes: 0,
        node_limit: cfg.node_limit,
        goal,
        weight,
        count: 0,
        found: None,
        stop,
    };
    s.run()?;
    Ok((s.count, s.found))
}

/// Δ(θ), or a lower bound once `limit` solutions have been seen.
pub fn count_delta(theta: &Isotopism, limit: Option<u64>) -> Result<Count, SearchError> {
    count_delta_with(theta, limit, &SearchConfig::default())
}

pub fn count_delta_with(theta: &Isotopism, limit: Option<u64>, cfg: &SearchConfig) -> Result<Count, SearchError> {
    cfg.check(theta.degree())?;
    let plan = build_orbit_plan(theta);
    let m = build_matrix(&plan);
    let tasks = subtasks(&plan, &m, None);
    let shared = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let run = |(forced, w): &(Vec<usize>, u64)| {
        solve_task(&m, forced, *w, cfg, Goal::Count { limit, shared: &shared }, &stop).map(|r| r.0)
    };
    let total: u64 = if cfg.parallel {
        tasks.par_iter().map(run).collect::<Result<Vec<_>, _>>()?.into_iter().sum()
    } else {
        tasks.iter().map(run).collect::<Result<Vec<_>, _>>()?.into_iter().sum()
    };
    Ok(match limit {
        Some(l) if total >= l => Count::AtLeast(l),
        _ => Count::Exact(total),
    })
}

/// The first square admitting θ in the deterministic search order.
pub fn exists_witness(theta: &Isotopism) -> Result<Option<LatinSquare>, SearchError> {
    exists_witness_with(theta, &SearchConfig::default())
}

pub fn exists_witness_with(theta: &Isotopism, cfg: &SearchConfig) -> Result<Option<LatinSquare>, SearchError> {
    complete_with(theta, &PartialSquare::new(theta.degree()), cfg)
}

/// Completes `partial` to a square admitting θ, if possible. Filled cells
/// fix the symbols of their whole orbits.
pub fn complete_with(
    theta: &Isotopism,
    partial: &PartialSquare,
    cfg: &SearchConfig,
) -> Result<Option<LatinSquare>, SearchError> {
    let n = theta.degree();
    if partial.order() != n {
        return Err(SearchError::DegreeMismatch { got: partial.order(), want: n });
    }
    cfg.check(n)?;
    let plan = build_orbit_plan(theta);
    let m = build_matrix(&plan);
    let Some(forced) = forced_options(&plan, &m, partial) else { return Ok(None) };
    let tasks = subtasks(&plan, &m, Some(forced));
    let run = |(forced, _): &(Vec<usize>, u64)| -> Result<Option<Vec<usize>>, SearchError> {
        // Each subtask has its own stop flag so the first solution in task
        // order is returned regardless of scheduling.
        let stop = AtomicBool::new(false);
        Ok(solve_task(&m, forced, 1, cfg, Goal::First, &stop)?.1)
    };
    let found = if cfg.parallel {
        tasks.par_iter().map(run).find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
    } else {
        tasks.iter().map(run).find_map(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
    };
    match found {
        None => Ok(None),
        Some(Err(e)) => Err(e),
        Some(Ok(chosen)) => {
            let chosen = chosen.expect("solution");
            let l = square_from(&plan, &m, &chosen);
            assert!(is_autotopism(theta, &l), "search produced an invalid witness");
            Ok(Some(l))
        }
    }
}

/// A contour for the canonical permutation with `alpha`'s cycle structure,
/// found by searching one leading-symbol placement per cell orbit.
pub fn contour_search(alpha: &Permutation) -> Option<Contour> {
    let canon = canonical_permutation(&alpha.cycle_structure());
    let seed = Contour::new(canon).expect("canonical");
    contour_search_seeded(&seed, &SearchConfig::unbounded()).ok().flatten()
}

/// Extends a partial contour to a full one. Placing leading symbol `t` at a
/// cell fixes the symbols of that cell's whole orbit.
pub fn contour_search_seeded(seed: &Contour, cfg: &SearchConfig) -> Result<Option<Contour>, SearchError> {
    let alpha = seed.alpha().clone();
    let mut p = PartialSquare::new(alpha.degree());
    for (i, j, s) in seed.cells() {
        p.set(i, j, s);
    }
    let theta = Isotopism::automorphism(alpha.clone());
    let Some(l) = complete_with(&theta, &p, cfg)? else { return Ok(None) };
    let mut c = Contour::from_square(&l, &alpha).expect("search output admits α");
    // Keep the seed's own cells where they were placed.
    for (i, j, s) in seed.cells() {
        let orbit_rep: Vec<(usize, usize)> =
            c.cells().filter(|&(x, y, _)| same_orbit(&alpha, (x, y), (i, j))).map(|(x, y, _)| (x, y)).collect();
        for (x, y) in orbit_rep {
            c.remove(x, y);
        }
        c.set(i, j, s);
    }
    Ok(Some(c))
}

fn same_orbit(alpha: &Permutation, a: (usize, usize), b: (usize, usize)) -> bool {
    let len = lcm(alpha.cycle_len(a.0), alpha.cycle_len(a.1));
    let (mut x, mut y) = a;
    for _ in 0..len {
        if (x, y) == b {
            return true;
        }
        x = alpha.apply(x);
        y = alpha.apply(y);
    }
    false
}

/// One normalized triple of the table with its outcome.
#[derive(Clone, Debug)]
pub struct TableEntry {
    pub triple: StructureTriple,
    pub status: Status,
    pub provenance: String,
    /// Whether search or a verified witness confirmed the status.
    pub confirmed: bool,
}

/// All normalized structure triples of order `n` with their status. In
/// exhaustive mode every verdict is confirmed: members by a verified
/// witness, non-members and undecided triples by complete search.
pub fn enumerate_table(n: usize, exhaustive: bool) -> Result<Vec<TableEntry>, SearchError> {
    enumerate_table_with(n, exhaustive, &SearchConfig::default(), |_, _| {})
}

/// As [`enumerate_table`], reporting `(done, total)` after each triple.
pub fn enumerate_table_with(
    n: usize,
    exhaustive: bool,
    cfg: &SearchConfig,
    progress: impl Fn(usize, usize) + Sync,
) -> Result<Vec<TableEntry>, SearchError> {
    if exhaustive {
        cfg.check(n)?;
    }
    let triples = normalized_triples(n);
    let total = triples.len();
    let done = AtomicU64::new(0);
    let inner = SearchConfig { parallel: false, ..*cfg };
    let decide = |t: &StructureTriple| -> Result<TableEntry, SearchError> {
        let verdict = classify(t);
        let mut entry = TableEntry {
            triple: t.clone(),
            status: verdict.status(),
            provenance: verdict.provenance(),
            confirmed: false,
        };
        if exhaustive {
            let theta = Isotopism::canonical(t);
            match verdict.status() {
                Status::Member => {
                    let witness =
                        crate::construct::realize(t).ok().map(|(l, th)| is_autotopism(&th, &l)).unwrap_or(false);
                    entry.confirmed = witness || exists_witness_with(&theta, &inner)?.is_some();
                }
                Status::NonMember => {
                    entry.confirmed = exists_witness_with(&theta, &inner)?.is_none();
                }
                Status::Undecided => {
                    let found = exists_witness_with(&theta, &inner)?.is_some();
                    entry.status = if found { Status::Member } else { Status::NonMember };
                    entry.provenance = "search".into();
                    entry.confirmed = true;
                }
            }
        }
        let k = done.fetch_add(1, Ordering::Relaxed) + 1;
        progress(k as usize, total);
        Ok(entry)
    };
    if cfg.parallel {
        triples.par_iter().map(decide).collect()
    } else {
        triples.iter().map(decide).collect()
    }
}

/// Every triple of partitions of `n`, normalized, each listed once, in
/// increasing order.
pub fn normalized_triples(n: usize) -> Vec<StructureTriple> {
    let all = CycleStructure::all_of_degree(n);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            for c in &all {
                let t = StructureTriple::new(a.clone(), b.clone(), c.clone()).expect("same degree");
                if t.normalize() == t {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// Table rows: one line per α-structure, listing β when β and γ
/// agree and `(β,γ)` otherwise.
pub fn format_table(entries: &[TableEntry]) -> String {
    let mut members: Vec<&StructureTriple> =
        entries.iter().filter(|e| e.status == Status::Member).map(|e| &e.triple).collect();
    members.sort();
    let mut out = String::new();
    let mut i = 0;
    while i < members.len() {
        let a = &members[i].a;
        let mut items = Vec::new();
        while i < members.len() && &members[i].a == a {
            let t = members[i];
            items.push(if t.b == t.c { t.b.to_string() } else { format!("({},{})", t.b, t.c) });
            i += 1;
        }
        out.push_str(&format!("{a} | {}\n", items.join(", ")));
    }
    let undecided: Vec<String> =
        entries.iter().filter(|e| e.status == Status::Undecided).map(|e| e.triple.to_string()).collect();
    for u in undecided {
        out.push_str(&format!("UNDECIDED {u}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn iso(a: &str, b: &str, c: &str, n: usize) -> Isotopism {
        Isotopism::new(
            parse_permutation(a, n).unwrap(),
            parse_permutation(b, n).unwrap(),
            parse_permutation(c, n).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn plans() {
        let p = build_orbit_plan(&Isotopism::trivial(3));
        assert_eq!(p.orbits.len(), 9);
        assert!(p.orbits.iter().all(|o| o.feasible == vec![1, 2, 3]));
        let p = build_orbit_plan(&iso("(1 2)", "(1 2)", "(1 2)", 2));
        assert_eq!(p.orbits.len(), 2);
        assert!(p.orbits.iter().all(|o| o.cells.len() == 2));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_delta(&Isotopism::trivial(1), None).unwrap(), Count::Exact(1));
        assert_eq!(count_delta(&Isotopism::trivial(4), None).unwrap(), Count::Exact(576));
        assert_eq!(count_delta(&iso("(1 2)", "(1 2)", "id", 2), None).unwrap(), Count::Exact(2));
        assert_eq!(count_delta(&Isotopism::trivial(4), Some(10)).unwrap(), Count::AtLeast(10));
        assert!(matches!(count_delta(&Isotopism::trivial(9), None), Err(SearchError::TooLarge { .. })));
    }

    #[test]
    fn witnesses() {
        let l = exists_witness(&Isotopism::trivial(1)).unwrap().unwrap();
        assert_eq!(l.get(1, 1), 1);
        let theta = Isotopism::automorphism(parse_permutation("(1 2 3)", 5).unwrap());
        assert!(is_autotopism(&theta, &exists_witness(&theta).unwrap().unwrap()));
        let theta = Isotopism::automorphism(parse_permutation("(1 2 3 4)", 4).unwrap());
        assert!(exists_witness(&theta).unwrap().is_none());
    }

    #[test]
    fn contours() {
        let c = contour_search(&parse_permutation("(1 2 3)", 5).unwrap()).unwrap();
        assert_eq!(c.validate(), Ok(()));
        assert!(c.expand().is_ok());
        assert!(contour_search(&parse_permutation("(1 2 3 4)", 4).unwrap()).is_none());
        assert_eq!(contour_search(&Permutation::identity(3)).unwrap().len(), 9);
    }

    #[test]
    fn seeded_contour_keeps_seed() {
        let alpha = parse_permutation("(1 2 3)", 5).unwrap();
        let mut seed = Contour::new(alpha).unwrap();
        seed.set(1, 1, 1);
        let c = contour_search_seeded(&seed, &SearchConfig::unbounded()).unwrap().unwrap();
        assert_eq!(c.get(1, 1), Some(1));
        assert_eq!(c.validate(), Ok(()));
    }

    #[test]
    fn budget_is_reported() {
        let cfg = SearchConfig { node_limit: Some(3), ..SearchConfig::default() };
        assert_eq!(count_delta_with(&Isotopism::trivial(5), None, &cfg), Err(SearchError::Budget(3)));
    }
}
