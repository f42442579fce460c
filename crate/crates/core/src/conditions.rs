//! Necessary conditions on cycle-structure triples and the decided
//! characterizations for automorphisms, combined into [`classify`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::latin::LatinSquare;
use crate::perm::{lcm, CycleStructure, Parastrophy, StructureTriple};

/// True iff `lcm(a,b) = lcm(b,c) = lcm(a,c) = lcm(a,b,c)`.
#[inline]
pub fn lcm_compatible(a: usize, b: usize, c: usize) -> bool {
    let all = lcm(lcm(a, b), c);
    lcm(a, b) == all && lcm(b, c) == all && lcm(a, c) == all
}

/// The reason a triple cannot be an autotopism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// One component is trivial but the other two are not both `d^{n/d}`.
    TrivialComponent,
    /// Fixed points violate the three allowed fixed-point patterns.
    FixedPoints,
    /// No placement of a symbol from a `symbol_cycle`-cycle fits the lcm
    /// condition; `orientation` indexes the rotated triple that failed.
    LcmMatching { orientation: usize, symbol_cycle: usize },
    /// Cycles with length dividing `d` would span an `r × c` region with `s`
    /// symbols that is not a subsquare.
    StrongLcm { d: usize, counts: [usize; 3] },
    /// A closed subsquare of order `k` with `n/2 < k < n`.
    SubsquareOrder { d: usize, k: usize },
    /// The sub-triple on cycles dividing `d` (or a complementary one) fails.
    Induced { d: usize, inner: Box<Condition> },
    /// `θ^k` fails.
    Power { k: usize, inner: Box<Condition> },
    /// Every cycle length is divisible by the full power `2^a` dividing `n`.
    TwoPower { a: u32 },
    /// All components are `d^m` with `d` even and `m` odd.
    EqualLengthParity { d: usize, m: usize },
    /// One of the two isolated exclusions `(4.2, 4.2, 4.1^2)` and
    /// `(8.4.2, 8.4.2, 8.4.1^2)`.
    SpecialCase,
    /// Automorphism with a single nontrivial cycle outside the allowed range.
    SingleCycle,
    /// Automorphism with equal nontrivial lengths violating its criterion.
    EqualLengths,
    /// Automorphism with two nontrivial cycles violating clause `clause`.
    TwoCycles { clause: char },
    /// Automorphism with three nontrivial cycles matching no admissible case.
    ThreeCycles,
    /// Exhaustive search found no square.
    NoSquare,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::TrivialComponent => write!(f, "trivial-component"),
            Condition::FixedPoints => write!(f, "fixed-points"),
            Condition::LcmMatching { orientation, symbol_cycle } => {
                write!(f, "lcm-matching orientation={orientation} symbol-cycle={symbol_cycle}")
            }
            Condition::StrongLcm { d, counts } => {
                write!(f, "strong-lcm D={d} sizes={}x{}x{}", counts[0], counts[1], counts[2])
            }
            Condition::SubsquareOrder { d, k } => write!(f, "subsquare-order D={d} k={k}"),
            Condition::Induced { d, inner } => write!(f, "induced D={d}: {inner}"),
            Condition::Power { k, inner } => write!(f, "power k={k}: {inner}"),
            Condition::TwoPower { a } => write!(f, "two-power a={a}"),
            Condition::EqualLengthParity { d, m } => write!(f, "equal-length-parity d={d} m={m}"),
            Condition::SpecialCase => write!(f, "special-case"),
            Condition::SingleCycle => write!(f, "single-cycle"),
            Condition::EqualLengths => write!(f, "equal-lengths"),
            Condition::TwoCycles { clause } => write!(f, "two-cycles ({clause})"),
            Condition::ThreeCycles => write!(f, "three-cycles"),
            Condition::NoSquare => write!(f, "search"),
        }
    }
}

/// Which construction realizes a member triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// The trivial triple; every square admits it.
    Trivial,
    /// Powers of the cyclic-group isotopism, with `d`-cycles.
    TrivialComponent {
        d: usize,
    },
    SingleCycle,
    EqualLengths,
    TwoCycles,
    /// Three nontrivial cycles, admissible case `case` (1 to 5).
    ThreeCycles {
        case: u8,
    },
    /// The `(d, (d/2)^2, d)` pattern.
    Horse,
    /// Found by exhaustive search.
    Search,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Trivial => write!(f, "trivial"),
            Construction::TrivialComponent { d } => write!(f, "trivial-component d={d}"),
            Construction::SingleCycle => write!(f, "single-cycle"),
            Construction::EqualLengths => write!(f, "equal-lengths"),
            Construction::TwoCycles => write!(f, "two-cycles"),
            Construction::ThreeCycles { case } => write!(f, "three-cycles case={case}"),
            Construction::Horse => write!(f, "horse"),
            Construction::Search => write!(f, "search"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Member,
    NonMember,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Member { via: Construction, witness: Option<LatinSquare> },
    NonMember(Condition),
    Undecided,
}

impl Verdict {
    fn member(via: Construction) -> Self {
        Verdict::Member { via, witness: None }
    }

    pub fn status(&self) -> Status {
        match self {
            Verdict::Member { .. } => Status::Member,
            Verdict::NonMember(_) => Status::NonMember,
            Verdict::Undecided => Status::Undecided,
        }
    }

    pub fn provenance(&self) -> String {
        match self {
            Verdict::Member { via, .. } => via.to_string(),
            Verdict::NonMember(c) => c.to_string(),
            Verdict::Undecided => String::new(),
        }
    }

    /// Line-oriented report: the verdict line, then the witness square in
    /// file format if present.
    pub fn report(&self) -> String {
        match self {
            Verdict::Member { via, witness } => {
                let mut out = format!("MEMBER {via}\n");
                if let Some(w) = witness {
                    out.push_str(&w.to_string());
                }
                out
            }
            Verdict::NonMember(c) => format!("NONMEMBER {c}\n"),
            Verdict::Undecided => "UNDECIDED\n".to_string(),
        }
    }
}

fn fixed(cs: &CycleStructure) -> usize {
    cs.fixed_points()
}

/// The three fixed-point patterns a nontrivial autotopism may have.
pub fn check_mmm(t: &StructureTriple) -> Result<(), Condition> {
    let n = t.degree();
    let [a, b, c] = t.as_array();
    let (fa, fb, fc) = (fixed(a), fixed(b), fixed(c));
    let same = a == b && b == c;
    let case_a = same && fa >= 1 && fa <= n / 2;
    let case_b = (fa >= 1 && fb == 0 && fc == 0 && b == c)
        || (fb >= 1 && fa == 0 && fc == 0 && a == c)
        || (fc >= 1 && fa == 0 && fb == 0 && a == b);
    let case_c = fa == 0 && fb == 0 && fc == 0;
    if case_a || case_b || case_c {
        Ok(())
    } else {
        Err(Condition::FixedPoints)
    }
}

/// Decides triples with an identity component. `None` if no component is
/// trivial.
pub fn check_trivial_component(t: &StructureTriple) -> Option<Verdict> {
    let comps = t.as_array();
    let idx = comps.iter().position(|c| c.is_identity())?;
    let others: Vec<&CycleStructure> = comps.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, c)| *c).collect();
    match (others[0].uniform_length(), others[1].uniform_length()) {
        (Some(d), Some(e)) if d == e => Some(if d == 1 {
            Verdict::member(Construction::Trivial)
        } else {
            Verdict::member(Construction::TrivialComponent { d })
        }),
        _ => Some(Verdict::NonMember(Condition::TrivialComponent)),
    }
}

/// The 0/1 matrix marking cells where a symbol from a `symbol_cycle`-cycle
/// may sit without violating the lcm condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacementMatrix {
    pub symbol_cycle: usize,
    pub n: usize,
    pub ones: Vec<bool>,
}

impl PlacementMatrix {
    /// Rows and columns follow the canonical permutations of `rows` and
    /// `cols` (longest cycles first).
    pub fn new(rows: &CycleStructure, cols: &CycleStructure, symbol_cycle: usize) -> Self {
        let rl = rows.lengths();
        let cl = cols.lengths();
        let n = rows.degree();
        let mut ones = Vec::with_capacity(n * n);
        let row_len: Vec<usize> = rl.iter().flat_map(|&a| std::iter::repeat_n(a, a)).collect();
        let col_len: Vec<usize> = cl.iter().flat_map(|&b| std::iter::repeat_n(b, b)).collect();
        for &a in &row_len {
            for &b in &col_len {
                ones.push(lcm_compatible(a, b, symbol_cycle));
            }
        }
        PlacementMatrix { symbol_cycle, n, ones }
    }

    /// Whether `per(X) > 0`, via augmenting paths.
    pub fn has_perfect_matching(&self) -> bool {
        let n = self.n;
        let mut match_col: Vec<Option<usize>> = vec![None; n];
        fn augment(r: usize, m: &PlacementMatrix, seen: &mut [bool], match_col: &mut [Option<usize>]) -> bool {
            for c in 0..m.n {
                if m.ones[r * m.n + c] && !seen[c] {
                    seen[c] = true;
                    if match_col[c].is_none_or(|r2| augment(r2, m, seen, match_col)) {
                        match_col[c] = Some(r);
                        return true;
                    }
                }
            }
            false
        }
        (0..n).all(|r| augment(r, self, &mut vec![false; n], &mut match_col))
    }
}

/// Perfect matching test on the class-compressed bipartite graph: row class
/// `a` has `count` rows, column class `b` has `count` columns, and an edge
/// exists when the lcm condition holds. Max-flow by augmenting paths.
fn class_matching(rows: &CycleStructure, cols: &CycleStructure, c: usize) -> bool {
    let rt: Vec<(usize, usize)> = rows.terms().iter().map(|&(l, m)| (l, l * m)).collect();
    let ct: Vec<(usize, usize)> = cols.terms().iter().map(|&(l, m)| (l, l * m)).collect();
    let (p, q) = (rt.len(), ct.len());
    let allowed: Vec<Vec<bool>> =
        rt.iter().map(|&(a, _)| ct.iter().map(|&(b, _)| lcm_compatible(a, b, c)).collect()).collect();
    let mut flow = vec![vec![0usize; q]; p];
    let mut row_used = vec![0usize; p];
    let mut col_used = vec![0usize; q];
    let total: usize = rt.iter().map(|t| t.1).sum();
    let mut sent = 0;
    loop {
        // BFS over row classes (0..p) and column classes (p..p+q).
        let mut prev: Vec<Option<usize>> = vec![None; p + q];
        let mut visited = vec![false; p + q];
        let mut queue = std::collections::VecDeque::new();
        for r in 0..p {
            if row_used[r] < rt[r].1 {
                visited[r] = true;
                queue.push_back(r);
            }
        }
        let mut end = None;
        while let Some(v) = queue.pop_front() {
            if v < p {
                for k in 0..q {
                    if allowed[v][k] && !visited[p + k] {
                        visited[p + k] = true;
                        prev[p + k] = Some(v);
                        if col_used[k] < ct[k].1 {
                            end = Some(k);
                            break;
                        }
                        queue.push_back(p + k);
                    }
                }
                if end.is_some() {
                    break;
                }
            } else {
                let k = v - p;
                for r in 0..p {
                    if flow[r][k] > 0 && !visited[r] {
                        visited[r] = true;
                        prev[r] = Some(v);
                        queue.push_back(r);
                    }
                }
            }
        }
        let Some(k_end) = end else { break };
        // Bottleneck along the path.
        let mut amount = ct[k_end].1 - col_used[k_end];
        let mut v = p + k_end;
        let start;
        loop {
            let u = prev[v].expect("path");
            if v >= p {
                // forward edge u -> v, unbounded
            } else {
                amount = amount.min(flow[v][u - p]);
            }
            v = u;
            if v < p && prev[v].is_none() {
                start = v;
                break;
            }
        }
        amount = amount.min(rt[start].1 - row_used[start]);
        let mut v = p + k_end;
        while let Some(u) = prev[v] {
            if v >= p {
                flow[u][v - p] += amount;
            } else {
                flow[v][u - p] -= amount;
            }
            v = u;
        }
        row_used[start] += amount;
        col_used[k_end] += amount;
        sent += amount;
    }
    sent == total
}

/// Rotations of the triple used by [`check_lcm_matching`]: the symbol role
/// visits each coordinate once.
const ROTATIONS: [Parastrophy; 3] = [Parastrophy::ALL[0], Parastrophy::ALL[4], Parastrophy::ALL[5]];

/// For every symbol cycle length, a perfect matching must exist in the
/// placement matrix; checked for each of the three coordinates as the
/// symbol role.
pub fn check_lcm_matching(t: &StructureTriple) -> Result<(), Condition> {
    for (orientation, &lambda) in ROTATIONS.iter().enumerate() {
        let u = t.parastrophe(lambda);
        for &(c, _) in u.c.terms() {
            if !class_matching(&u.a, &u.b, c) {
                return Err(Condition::LcmMatching { orientation, symbol_cycle: c });
            }
        }
    }
    Ok(())
}

/// Cycle lengths dividing `d` together with the points they cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongLcmTrace {
    pub generator: usize,
    pub member_lengths: BTreeSet<usize>,
}

impl StrongLcmTrace {
    pub fn count(&self, cs: &CycleStructure) -> usize {
        cs.terms().iter().filter(|t| self.member_lengths.contains(&t.0)).map(|&(c, m)| c * m).sum()
    }
}

/// One trace per distinct lcm of a nonempty set of occurring lengths.
pub fn strong_lcm_traces(t: &StructureTriple) -> Vec<StrongLcmTrace> {
    let lengths: BTreeSet<usize> = t.as_array().iter().flat_map(|c| c.terms().iter().map(|t| t.0)).collect();
    let mut gens: BTreeSet<usize> = lengths.clone();
    loop {
        let mut added = Vec::new();
        for &x in &gens {
            for &l in &lengths {
                let y = lcm(x, l);
                if !gens.contains(&y) {
                    added.push(y);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        gens.extend(added);
    }
    gens.into_iter()
        .map(|d| StrongLcmTrace {
            generator: d,
            member_lengths: lengths.iter().copied().filter(|&c| d % c == 0).collect(),
        })
        .collect()
}

const MAX_DEPTH: usize = 8;

fn memo() -> &'static RwLock<HashMap<StructureTriple, Result<(), Condition>>> {
    static MEMO: OnceLock<RwLock<HashMap<StructureTriple, Result<(), Condition>>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn sub_triple(t: &StructureTriple, d: usize, keep: [bool; 3]) -> Option<StructureTriple> {
    let pick = |cs: &CycleStructure, inside: bool| {
        if inside {
            cs.restrict_to_divisors(d)
        } else {
            cs.restrict_to_non_divisors(d)
        }
    };
    Some(StructureTriple { a: pick(&t.a, keep[0])?, b: pick(&t.b, keep[1])?, c: pick(&t.c, keep[2])? })
}

/// Closed-subsquare counting for every strongly lcm-closed trace, recursing
/// into the induced sub-triples.
pub fn check_strong_lcm(t: &StructureTriple) -> Result<(), Condition> {
    strong_lcm_at(t, 0)
}

fn strong_lcm_at(t: &StructureTriple, depth: usize) -> Result<(), Condition> {
    let n = t.degree();
    for trace in strong_lcm_traces(t) {
        let d = trace.generator;
        let counts = [trace.count(&t.a), trace.count(&t.b), trace.count(&t.c)];
        if counts.iter().filter(|&&x| x > 0).count() < 2 {
            continue;
        }
        if counts[0] != counts[1] || counts[1] != counts[2] {
            return Err(Condition::StrongLcm { d, counts });
        }
        let k = counts[0];
        if k == n {
            continue;
        }
        if 2 * k > n {
            return Err(Condition::SubsquareOrder { d, k });
        }
        if depth >= MAX_DEPTH {
            continue;
        }
        let mut subs = vec![[true, true, true]];
        if 2 * k == n {
            subs.extend([[true, false, false], [false, true, false], [false, false, true]]);
        }
        for keep in subs {
            let sub = sub_triple(t, d, keep).expect("counts are positive");
            battery_at(&sub, depth + 1).map_err(|inner| Condition::Induced { d, inner: Box::new(inner) })?;
        }
    }
    Ok(())
}

fn two_adic(n: usize) -> u32 {
    n.trailing_zeros()
}

fn check_two_power(t: &StructureTriple) -> Result<(), Condition> {
    let a = two_adic(t.degree());
    if a == 0 {
        return Ok(());
    }
    let p = 1usize << a;
    if t.as_array().iter().all(|cs| cs.terms().iter().all(|&(c, _)| c % p == 0)) {
        return Err(Condition::TwoPower { a });
    }
    Ok(())
}

fn check_equal_length_parity(t: &StructureTriple) -> Result<(), Condition> {
    if t.is_automorphism() {
        if let [(d, m)] = t.a.terms() {
            if d % 2 == 0 && m % 2 == 1 {
                return Err(Condition::EqualLengthParity { d: *d, m: *m });
            }
        }
    }
    Ok(())
}

/// For each `k` dividing the order, `θ^k` must pass the parity tests, the
/// fixed-point patterns and lcm matching.
pub fn check_power_battery(t: &StructureTriple) -> Result<(), Condition> {
    let ord = t.order();
    for k in (1..=ord).filter(|k| ord.is_multiple_of(*k)) {
        let p = t.power(k);
        if p.is_trivial() {
            continue;
        }
        let wrap = |inner| Condition::Power { k, inner: Box::new(inner) };
        check_equal_length_parity(&p).map_err(wrap)?;
        check_two_power(&p).map_err(wrap)?;
        check_mmm(&p).map_err(wrap)?;
        check_lcm_matching(&p).map_err(wrap)?;
    }
    Ok(())
}

/// Decides automorphisms whose nontrivial cycles are few or equal in length.
pub fn decide_automorphism(cs: &CycleStructure) -> Verdict {
    let n = cs.degree();
    let f = cs.fixed_points();
    let d = cs.nontrivial();
    let reject = Verdict::NonMember;
    match d.as_slice() {
        [] => Verdict::member(Construction::Trivial),
        [d1] => {
            let d1 = *d1;
            if (d1 == n && n % 2 == 1) || (n.div_ceil(2) <= d1 && d1 < n) {
                Verdict::member(Construction::SingleCycle)
            } else {
                reject(Condition::SingleCycle)
            }
        }
        _ if d.iter().all(|&x| x == d[0]) => {
            let (len, m) = (d[0], d.len());
            let ok = if f > 0 { n <= 2 * m * len } else { len % 2 == 1 || m % 2 == 0 };
            if ok {
                Verdict::member(Construction::EqualLengths)
            } else {
                reject(Condition::EqualLengths)
            }
        }
        [d1, d2] => {
            let (d1, d2) = (*d1, *d2);
            if d1 % d2 != 0 {
                reject(Condition::TwoCycles { clause: 'a' })
            } else if d2 < f {
                reject(Condition::TwoCycles { clause: 'b' })
            } else if d2 % 2 == 0 && f == 0 {
                reject(Condition::TwoCycles { clause: 'c' })
            } else {
                Verdict::member(Construction::TwoCycles)
            }
        }
        [d1, d2, d3] => match three_cycle_case(*d1, *d2, *d3, f) {
            Some(case) => Verdict::member(Construction::ThreeCycles { case }),
            None => reject(Condition::ThreeCycles),
        },
        _ => Verdict::Undecided,
    }
}

/// The admissible case (1 to 5) for three nontrivial cycles
/// `d1 >= d2 >= d3` with `f` fixed points.
pub fn three_cycle_case(d1: usize, d2: usize, d3: usize, f: usize) -> Option<u8> {
    let even = |x: usize| x.is_multiple_of(2);
    if d1 == d2 && d2 == d3 {
        (f <= 3 * d1 && (!even(d1) || f >= 1)).then_some(1)
    } else if d1 > d2 && d2 == d3 {
        let ok =
            d1 >= 2 * d2 + f && d1.is_multiple_of(d2) && f <= 2 * d2 && !(even(d2) && (d1 / d2) % 2 == 1 && f == 0);
        ok.then_some(2)
    } else if d1 == d2 && d2 > d3 {
        (d1.is_multiple_of(d3) && f <= d3 && !(even(d3) && f == 0)).then_some(3)
    } else if !d2.is_multiple_of(d3) {
        (d1 == lcm(d2, d3) && d3 >= f && !(even(d1) && f == 0)).then_some(4)
    } else {
        (d1.is_multiple_of(d2) && d3 >= f && !(even(d3) && f == 0)).then_some(5)
    }
}

fn special_exclusions() -> &'static [StructureTriple] {
    static SPECIAL: OnceLock<Vec<StructureTriple>> = OnceLock::new();
    SPECIAL.get_or_init(|| {
        [("4.2", "4.2", "4.1^2"), ("8.4.2", "8.4.2", "8.4.1^2")]
            .iter()
            .map(|(a, b, c)| {
                StructureTriple::new(a.parse().unwrap(), b.parse().unwrap(), c.parse().unwrap()).unwrap().normalize()
            })
            .collect()
    })
}

pub fn is_special_exclusion(t: &StructureTriple) -> bool {
    special_exclusions().contains(&t.normalize())
}

/// Whether `t` is a parastrophe of `(d, (d/2)^2, d)` for even `d = n`.
pub fn horse_shape(t: &StructureTriple) -> Option<Parastrophy> {
    let n = t.degree();
    if n % 2 == 1 {
        return None;
    }
    let full = CycleStructure::from_lengths([n]);
    let halves = CycleStructure::from_lengths([n / 2, n / 2]);
    let target = StructureTriple { a: full.clone(), b: halves, c: full };
    Parastrophy::ALL.into_iter().find(|&l| t.parastrophe(l) == target)
}

/// Every necessary condition, without the Member shortcuts of [`classify`].
fn battery_at(t: &StructureTriple, depth: usize) -> Result<(), Condition> {
    let key = t.normalize();
    if let Some(r) = memo().read().expect("memo lock").get(&key) {
        return r.clone();
    }
    let result = battery_uncached(&key, depth);
    memo().write().expect("memo lock").insert(key, result.clone());
    result
}

fn battery_uncached(t: &StructureTriple, depth: usize) -> Result<(), Condition> {
    if t.is_trivial() {
        return Ok(());
    }
    if let Some(v) = check_trivial_component(t) {
        return match v {
            Verdict::NonMember(c) => Err(c),
            _ => Ok(()),
        };
    }
    if t.is_automorphism() {
        if let Verdict::NonMember(c) = decide_automorphism(&t.a) {
            return Err(c);
        }
    }
    if is_special_exclusion(t) {
        return Err(Condition::SpecialCase);
    }
    check_mmm(t)?;
    check_lcm_matching(t)?;
    strong_lcm_at(t, depth)?;
    check_power_battery(t)
}

/// Runs every necessary condition; `Err` names the first one violated.
pub fn necessary_conditions(t: &StructureTriple) -> Result<(), Condition> {
    battery_at(t, 0)
}

/// Full pipeline: decided cases first, then the condition battery. Member
/// verdicts name a construction but carry no witness; see
/// `construct::realize`.
pub fn classify(t: &StructureTriple) -> Verdict {
    if let Some(v) = check_trivial_component(t) {
        return v;
    }
    if t.is_automorphism() {
        let v = decide_automorphism(&t.a);
        if v.status() != Status::Undecided {
            return v;
        }
    }
    if let Err(c) = necessary_conditions(t) {
        return Verdict::NonMember(c);
    }
    if horse_shape(t).is_some() {
        return Verdict::member(Construction::Horse);
    }
    Verdict::Undecided
}

/// Number of points shared by the cycles of `a` whose lengths divide `d`.
pub fn divisor_count(cs: &CycleStructure, d: usize) -> usize {
    cs.terms().iter().filter(|t| d.is_multiple_of(t.0)).map(|&(c, m)| c * m).sum()
}
