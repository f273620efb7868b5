//! Metacyclic groups `Γ(a,b,c) = ⟨α, β | α^a = β^b = 1, βαβ⁻¹ = α^c⟩`.
//!
//! A triple is admissible when `gcd(a,b) = 1`, `gcd(a,c−1) = 1` and
//! `c^b ≡ 1 (mod a)`. The family `C_d` collects the groups in which `c` has
//! multiplicative order `d` modulo `a` (with `d = 1` when `a = 1`); a group is
//! cyclic exactly when `d = 1`.
//!
//! Elements are kept in the normal form `α^i β^j` with `0 ≤ i < a`,
//! `0 ≤ j < b`. Moving `β^j` past `α^i` gives `β^j α^i = α^{i c^j} β^j`, hence
//!
//! ```text
//! (i₁, j₁)·(i₂, j₂) = (i₁ + c^{j₁} i₂ mod a, j₁ + j₂ mod b)
//! ```

use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, gcd, mod_pow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("({a}, {b}, {c}) is not admissible")]
    NotAdmissible { a: u64, b: u64, c: u64 },
    #[error("parameters must be positive integers")]
    NonPositive,
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("cohomology periods must be even and at least 2, got {0}")]
    InvalidPeriod(u64),
    #[error("bounds must be at least 1")]
    EmptyBounds,
}

/// `true` iff `(a, b, c)` is admissible. Total on positive integers; the
/// power `c^b` is reduced with arbitrary-precision modular exponentiation.
pub fn is_admissible(a: u64, b: u64, c: u64) -> bool {
    if a == 0 || b == 0 || c == 0 {
        return false;
    }
    if gcd(a, b) != 1 || gcd(a, c - 1) != 1 {
        return false;
    }
    let m = BigUint::from(a);
    arith::big_mod_pow(&BigUint::from(c), &BigUint::from(b), &m) == BigUint::from(1u32) % &m
}

/// A validated admissible triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdmissibleTriple {
    a: u64,
    b: u64,
    c: u64,
}

impl AdmissibleTriple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, GroupError> {
        if a == 0 || b == 0 || c == 0 {
            return Err(GroupError::NonPositive);
        }
        if !is_admissible(a, b, c) {
            return Err(GroupError::NotAdmissible { a, b, c });
        }
        Ok(AdmissibleTriple { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }
}

impl fmt::Display for AdmissibleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Element `α^i β^j` in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub i: u64,
    pub j: u64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { i: 0, j: 0 };

    pub fn new(i: u64, j: u64) -> Self {
        GroupElement { i, j }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α^{} β^{}", self.i, self.j)
    }
}

/// `Γ(a,b,c)` together with its `C_d` class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GroupRecord", try_from = "GroupRecord")]
pub struct SpaceFormGroup {
    triple: AdmissibleTriple,
    d: u64,
    /// `c^k mod a` for `0 ≤ k < d`.
    c_powers: Vec<u64>,
}

/// Flat serialised form `{a, b, c, d}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl From<SpaceFormGroup> for GroupRecord {
    fn from(g: SpaceFormGroup) -> Self {
        GroupRecord { a: g.a(), b: g.b(), c: g.c(), d: g.d }
    }
}

impl TryFrom<GroupRecord> for SpaceFormGroup {
    type Error = String;

    fn try_from(r: GroupRecord) -> Result<Self, Self::Error> {
        let g = SpaceFormGroup::new(r.a, r.b, r.c).map_err(|e| e.to_string())?;
        if g.d != r.d {
            return Err(format!("recorded d = {} but c has order {} mod a", r.d, g.d));
        }
        Ok(g)
    }
}

/// Computes the `C_d` class of an admissible triple.
pub fn classify(triple: AdmissibleTriple) -> SpaceFormGroup {
    let d = if triple.a == 1 {
        1
    } else {
        arith::multiplicative_order(triple.c, triple.a)
            .expect("admissible triples have c invertible mod a")
    };
    SpaceFormGroup::with_order(triple, d)
}

impl SpaceFormGroup {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, GroupError> {
        Ok(classify(AdmissibleTriple::new(a, b, c)?))
    }

    fn with_order(triple: AdmissibleTriple, d: u64) -> Self {
        let a = triple.a;
        let mut c_powers = Vec::with_capacity(d as usize);
        let mut x = 1 % a;
        for _ in 0..d {
            c_powers.push(x);
            x = ((x as u128 * triple.c as u128) % a as u128) as u64;
        }
        SpaceFormGroup { triple, d, c_powers }
    }

    pub fn triple(&self) -> AdmissibleTriple {
        self.triple
    }

    pub fn a(&self) -> u64 {
        self.triple.a
    }

    pub fn b(&self) -> u64 {
        self.triple.b
    }

    pub fn c(&self) -> u64 {
        self.triple.c
    }

    /// Multiplicative order of `c` modulo `a`.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn order(&self) -> u64 {
        self.a() * self.b()
    }

    pub fn is_cyclic(&self) -> bool {
        self.d == 1
    }

    /// `c^j mod a`.
    pub fn c_pow(&self, j: u64) -> u64 {
        self.c_powers[(j % self.d) as usize]
    }

    pub fn alpha(&self) -> GroupElement {
        self.element(1, 0)
    }

    pub fn beta(&self) -> GroupElement {
        self.element(0, 1)
    }

    /// Reduces arbitrary exponents into normal form.
    pub fn element(&self, i: u64, j: u64) -> GroupElement {
        GroupElement { i: i % self.a(), j: j % self.b() }
    }

    pub fn multiply(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        let a = self.a();
        let twist = if a <= u32::MAX as u64 {
            self.c_pow(g.j) * h.i % a
        } else {
            ((self.c_pow(g.j) as u128 * h.i as u128) % a as u128) as u64
        };
        let i = g.i + twist;
        let j = g.j + h.j;
        GroupElement {
            i: if i >= a { i - a } else { i },
            j: if j >= self.b() { j - self.b() } else { j },
        }
    }

    /// `(α^i β^j)⁻¹ = α^{−i c^{−j}} β^{−j}`.
    pub fn inverse(&self, g: GroupElement) -> GroupElement {
        let a = self.a();
        let neg_j = (self.b() - g.j) % self.b();
        let inv_twist = self.c_pow(self.d - g.j % self.d);
        let i = (inv_twist as u128 * g.i as u128 % a as u128) as u64;
        GroupElement { i: (a - i) % a, j: neg_j }
    }

    pub fn pow(&self, g: GroupElement, mut e: u64) -> GroupElement {
        let mut acc = GroupElement::IDENTITY;
        let mut base = g;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            e >>= 1;
        }
        acc
    }

    /// Order of an element, found among the divisors of the group exponent.
    pub fn element_order(&self, g: GroupElement) -> u64 {
        let n = self.order();
        let mut ord = n;
        for (q, _) in arith::factorize(n) {
            while ord % q == 0 && self.pow(g, ord / q) == GroupElement::IDENTITY {
                ord /= q;
            }
        }
        ord
    }

    /// All elements in normal form, ordered by `(j, i)`.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.b()).flat_map(move |j| (0..self.a()).map(move |i| GroupElement { i, j }))
    }

    /// The normal cyclic subgroup `⟨α, β^d⟩` and its index `d`.
    pub fn cyclic_subgroup_index(&self) -> CyclicSubgroup {
        CyclicSubgroup {
            index: self.d,
            generators: (self.alpha(), self.element(0, self.d)),
            order: self.order() / self.d,
        }
    }

    /// Integral cohomology period `2d`.
    pub fn cohomology_period(&self) -> PeriodicityRecord {
        PeriodicityRecord {
            period: 2 * self.d,
            source: PeriodSource::CdMembership { d: self.d },
        }
    }
}

impl fmt::Display for SpaceFormGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ({}, {}, {}) ∈ C_{}", self.a(), self.b(), self.c(), self.d)
    }
}

/// Result of [`SpaceFormGroup::cyclic_subgroup_index`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicSubgroup {
    pub index: u64,
    pub generators: (GroupElement, GroupElement),
    pub order: u64,
}

/// Minimal interface for brute-force subgroup searches.
pub trait FiniteGroup {
    type Elem: Copy + Eq + Hash;

    fn group_order(&self) -> u64;
    fn all_elements(&self) -> Vec<Self::Elem>;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    /// A bijection onto `0..group_order()`.
    fn index(&self, x: Self::Elem) -> usize;

    fn inverse(&self, x: Self::Elem) -> Self::Elem {
        self.power(x, self.group_order() - 1)
    }

    fn power(&self, x: Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.identity();
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl FiniteGroup for SpaceFormGroup {
    type Elem = GroupElement;

    fn group_order(&self) -> u64 {
        self.order()
    }

    fn all_elements(&self) -> Vec<GroupElement> {
        self.elements().collect()
    }

    fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    fn mul(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        self.multiply(x, y)
    }

    fn index(&self, x: GroupElement) -> usize {
        (x.j * self.a() + x.i) as usize
    }

    fn inverse(&self, x: GroupElement) -> GroupElement {
        SpaceFormGroup::inverse(self, x)
    }
}

/// A finite group given by its Cayley table over `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl TableGroup {
    /// Builds a group from a Cayley table, checking closure, identity and
    /// inverses. Associativity is the caller's responsibility.
    pub fn from_table(table: Vec<Vec<usize>>) -> Option<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return None;
        }
        let identity = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))?;
        if !(0..n).all(|x| (0..n).any(|y| table[x][y] == identity)) {
            return None;
        }
        Some(TableGroup { table, identity })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        TableGroup { table, identity: 0 }
    }

    pub fn direct_product(g: &TableGroup, h: &TableGroup) -> Self {
        let (n, m) = (g.table.len(), h.table.len());
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| g.table[x / m][y / m] * m + h.table[x % m][y % m])
                    .collect()
            })
            .collect();
        TableGroup { table, identity: g.identity * m + h.identity }
    }
}

impl FiniteGroup for TableGroup {
    type Elem = usize;

    fn group_order(&self) -> u64 {
        self.table.len() as u64
    }

    fn all_elements(&self) -> Vec<usize> {
        (0..self.table.len()).collect()
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    fn index(&self, x: usize) -> usize {
        x
    }
}

/// Searches for a subgroup isomorphic to `Z_p × Z_p` for some prime `p`.
///
/// For each prime `p` with `p² | |G|`, the order-`p` elements are grouped
/// into their cyclic subgroups. A commuting pair of distinct such subgroups
/// can be conjugated so that the first lies in a fixed set of conjugacy
/// class representatives, so only those are paired against every subgroup.
/// Exhaustive, hence capped at `cap` elements.
pub fn has_noncyclic_abelian_subgroup<G: FiniteGroup>(group: &G, cap: u64) -> Result<bool, GroupError> {
    let order = group.group_order();
    if order > cap {
        return Err(GroupError::CapExceeded { order, cap });
    }
    let elems = group.all_elements();
    let inverses: Vec<G::Elem> = elems.iter().map(|&g| group.inverse(g)).collect();
    let e = group.identity();
    for (p, exp) in arith::factorize(order) {
        if exp < 2 {
            // Lagrange: Z_p × Z_p needs p² | |G|.
            continue;
        }
        const NONE: usize = usize::MAX;
        let mut subgroup_of = vec![NONE; order as usize];
        let mut reps = Vec::new();
        for &g in &elems {
            if g == e || subgroup_of[group.index(g)] != NONE || group.power(g, p) != e {
                continue;
            }
            let mut x = g;
            while x != e {
                subgroup_of[group.index(x)] = reps.len();
                x = group.mul(x, g);
            }
            reps.push(g);
        }
        let mut covered = vec![false; reps.len()];
        for k in 0..reps.len() {
            if covered[k] {
                continue;
            }
            let x = reps[k];
            for (&g, &g_inv) in elems.iter().zip(&inverses) {
                covered[subgroup_of[group.index(group.mul(group.mul(g, x), g_inv))]] = true;
            }
            for (t, &y) in reps.iter().enumerate() {
                if t != k && group.mul(x, y) == group.mul(y, x) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Where a cohomology period comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PeriodSource {
    /// A free action on `S^n` exhibited by an explicit representation.
    FreeSphereAction { n: u64 },
    /// Membership in `C_d`.
    CdMembership { d: u64 },
    /// Combination of two known periods.
    GcdCombination { first: u64, second: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityRecord {
    pub period: u64,
    pub source: PeriodSource,
}

impl PeriodicityRecord {
    /// Period `n + 1` of a group acting freely on `S^n` (odd `n`).
    pub fn from_free_action(n: u64) -> Result<Self, GroupError> {
        let period = n + 1;
        check_period(period)?;
        Ok(PeriodicityRecord { period, source: PeriodSource::FreeSphereAction { n } })
    }

    pub fn combine(&self, other: &PeriodicityRecord) -> Result<(PeriodicityRecord, bool), GroupError> {
        let c = combine_periods(self.period, other.period)?;
        Ok((
            PeriodicityRecord {
                period: c.period,
                source: PeriodSource::GcdCombination { first: self.period, second: other.period },
            },
            c.forces_cyclic,
        ))
    }
}

pub fn cohomology_period(group: &SpaceFormGroup) -> PeriodicityRecord {
    group.cohomology_period()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinedPeriod {
    pub period: u64,
    /// A 2-periodic group is cyclic.
    pub forces_cyclic: bool,
}

fn check_period(d: u64) -> Result<(), GroupError> {
    if d < 2 || d % 2 != 0 {
        Err(GroupError::InvalidPeriod(d))
    } else {
        Ok(())
    }
}

/// Two periods combine to their gcd.
pub fn combine_periods(d1: u64, d2: u64) -> Result<CombinedPeriod, GroupError> {
    check_period(d1)?;
    check_period(d2)?;
    let period = gcd(d1, d2);
    Ok(CombinedPeriod { period, forces_cyclic: period == 2 })
}

/// Admissible triples with `a ≤ a_max`, `b ≤ b_max`, `1 ≤ c ≤ a`, optionally
/// restricted to `C_d`, in lexicographic `(a, b, c)` order.
pub fn enumerate_admissible(a_max: u64, b_max: u64, d_filter: Option<u64>) -> Result<Vec<SpaceFormGroup>, GroupError> {
    if a_max == 0 || b_max == 0 {
        return Err(GroupError::EmptyBounds);
    }
    Ok(enumerate_with(1..=a_max, |_| b_max, d_filter))
}

/// Admissible triples with `a·b ≤ max_order`, in lexicographic order.
pub fn enumerate_by_order(max_order: u64, d_filter: Option<u64>) -> Result<Vec<SpaceFormGroup>, GroupError> {
    if max_order == 0 {
        return Err(GroupError::EmptyBounds);
    }
    Ok(enumerate_with(1..=max_order, |a| max_order / a, d_filter))
}

fn enumerate_with(
    a_range: std::ops::RangeInclusive<u64>,
    b_max_for: impl Fn(u64) -> u64 + Sync,
    d_filter: Option<u64>,
) -> Vec<SpaceFormGroup> {
    let a_values: Vec<u64> = a_range.collect();
    a_values
        .par_iter()
        .map(|&a| {
            let b_max = b_max_for(a);
            let mut out = Vec::new();
            for (c, d) in units_with_small_order(a, b_max, d_filter) {
                for b in (d..=b_max).step_by(d as usize).filter(|&b| gcd(a, b) == 1) {
                    out.push(SpaceFormGroup::with_order(AdmissibleTriple { a, b, c }, d));
                }
            }
            out.sort_by_key(|g| (g.b(), g.c()));
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// `(c, ord_a(c))` for `1 ≤ c ≤ a` with `gcd(a, c−1) = 1` and order at most
/// `max_order`, sorted by `c`.
fn units_with_small_order(a: u64, max_order: u64, d_filter: Option<u64>) -> Vec<(u64, u64)> {
    if a == 1 {
        return match d_filter {
            Some(d) if d != 1 => Vec::new(),
            _ => vec![(1, 1)],
        };
    }
    let lambda = arith::carmichael(a);
    let lambda_primes: Vec<u64> = arith::factorize(lambda).into_iter().map(|(q, _)| q).collect();
    let mut out = Vec::new();
    for c in 2..=a {
        if gcd(a, c - 1) != 1 || gcd(a, c % a) != 1 {
            continue;
        }
        let mut ord = lambda;
        for &q in &lambda_primes {
            while ord % q == 0 && mod_pow(c, ord / q, a) == 1 {
                ord /= q;
            }
        }
        if ord > max_order || d_filter.is_some_and(|d| d != ord) {
            continue;
        }
        out.push((c, ord));
    }
    out
}
