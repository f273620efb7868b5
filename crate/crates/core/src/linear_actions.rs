//! Exact free orthogonal representations of `Γ(a,b,c) ∈ C_p` and the torus
//! actions commuting with them.
//!
//! Every matrix handled here is a *monomial rotation matrix*: a `2m × 2m`
//! block-permutation matrix whose nonzero `2×2` blocks are rotations `R(θ)` by
//! `2πθ` with `θ` rational. Such matrices are closed under products and
//! inverses, and since planar rotations commute a product is described by
//! composing the permutations and adding angles along the permutation path.
//!
//! # Eigenvalue 1
//!
//! Restrict a monomial rotation matrix `X` to one cycle of its block
//! permutation, of length `ℓ`, and let `Θ` be the sum of the angles met around
//! the cycle. Then `X^ℓ` acts on each block of the cycle as `R(Θ)`, and the
//! `2ℓ` eigenvalues of `X` on the cycle are `exp(2πi(±Θ + t)/ℓ)` for
//! `t = 0, …, ℓ−1`. One of them equals 1 exactly when `Θ` is an integer. So `X`
//! fixes a nonzero vector iff some cycle has integral total angle, which is
//! decided exactly with rational arithmetic.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, gcd};
use crate::groups::{self, AdmissibleTriple, GroupElement, PeriodicityRecord, SpaceFormGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("no prime a ≡ 1 (mod {p}) below the search ceiling {ceiling}")]
    SearchBound { p: u64, ceiling: u64 },
    #[error("triple lies in C_{d}, expected C_{p}")]
    WrongClass { d: u64, p: u64 },
    #[error("block counts differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("2p = {two_p} does not divide n + 1 = {n_plus_one}")]
    Divisibility { two_p: u64, n_plus_one: u64 },
    #[error("torus element has {got} angles, bundle has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("block permutation is not a bijection of 0..{0}")]
    InvalidPermutation(usize),
    #[error("angle denominator must be positive")]
    ZeroDenominator,
    #[error("generator images violate the relation {0}")]
    RelationFailed(&'static str),
    #[error(transparent)]
    Group(#[from] groups::GroupError),
}

/// Rotation angle `num/den` of a full turn, reduced and taken mod 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(i64, u64)", into = "(i64, u64)")]
pub struct RationalAngle {
    num: u64,
    den: u64,
}

impl RationalAngle {
    pub const ZERO: RationalAngle = RationalAngle { num: 0, den: 1 };

    pub fn new(num: i64, den: u64) -> Result<Self, RepError> {
        if den == 0 {
            return Err(RepError::ZeroDenominator);
        }
        let r = num.rem_euclid(den as i64) as u64;
        let g = gcd(r, den);
        Ok(RationalAngle { num: r / g, den: den / g })
    }

    /// Convenience for literals known to be valid.
    pub fn of(num: i64, den: u64) -> Self {
        Self::new(num, den).expect("positive denominator")
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `k·θ mod 1`.
    pub fn scale(&self, k: i64) -> Self {
        let den = self.den as i128;
        let num = (self.num as i128 * k as i128).rem_euclid(den) as u64;
        let g = gcd(num, self.den);
        RationalAngle { num: num / g, den: self.den / g }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl std::ops::Add for RationalAngle {
    type Output = RationalAngle;

    fn add(self, o: RationalAngle) -> RationalAngle {
        let l = self.den.lcm(&o.den);
        let num = (self.num as u128 * (l / self.den) as u128 + o.num as u128 * (l / o.den) as u128)
            % l as u128;
        let num = num as u64;
        let g = gcd(num, l);
        RationalAngle { num: num / g, den: l / g }
    }
}

impl TryFrom<(i64, u64)> for RationalAngle {
    type Error = RepError;
    fn try_from((n, d): (i64, u64)) -> Result<Self, RepError> {
        RationalAngle::new(n, d)
    }
}

impl From<RationalAngle> for (i64, u64) {
    fn from(a: RationalAngle) -> Self {
        (a.num as i64, a.den)
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Block-permutation matrix with rotation blocks.
///
/// Source block `j` is rotated by `angles[perm[j]]` and lands in slot
/// `perm[j]`; equivalently the dense matrix has the block `R(angles[perm[j]])`
/// at block row `perm[j]`, block column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialRotationMatrix {
    perm: Vec<usize>,
    angles: Vec<RationalAngle>,
}

impl MonomialRotationMatrix {
    pub fn new(perm: Vec<usize>, angles: Vec<RationalAngle>) -> Result<Self, RepError> {
        let m = perm.len();
        if angles.len() != m {
            return Err(RepError::DimensionMismatch { left: m, right: angles.len() });
        }
        let mut hit = vec![false; m];
        for &s in &perm {
            if s >= m || hit[s] {
                return Err(RepError::InvalidPermutation(m));
            }
            hit[s] = true;
        }
        Ok(MonomialRotationMatrix { perm, angles })
    }

    pub fn identity(m: usize) -> Self {
        MonomialRotationMatrix { perm: (0..m).collect(), angles: vec![RationalAngle::ZERO; m] }
    }

    pub fn diagonal(angles: Vec<RationalAngle>) -> Self {
        MonomialRotationMatrix { perm: (0..angles.len()).collect(), angles }
    }

    pub fn block_count(&self) -> usize {
        self.perm.len()
    }

    /// Size of the real matrix, `2m`.
    pub fn dimension(&self) -> usize {
        2 * self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn angles(&self) -> &[RationalAngle] {
        &self.angles
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &s)| j == s) && self.angles.iter().all(|a| a.is_zero())
    }

    pub fn has_identity_permutation(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &s)| j == s)
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn multiply(&self, other: &MonomialRotationMatrix) -> Result<Self, RepError> {
        let m = self.block_count();
        if other.block_count() != m {
            return Err(RepError::DimensionMismatch { left: m, right: other.block_count() });
        }
        let mut perm = vec![0; m];
        let mut angles = vec![RationalAngle::ZERO; m];
        for j in 0..m {
            let mid = other.perm[j];
            let slot = self.perm[mid];
            perm[j] = slot;
            angles[slot] = other.angles[mid] + self.angles[slot];
        }
        Ok(MonomialRotationMatrix { perm, angles })
    }

    pub fn inverse(&self) -> Self {
        let m = self.block_count();
        let mut perm = vec![0; m];
        let mut angles = vec![RationalAngle::ZERO; m];
        for j in 0..m {
            let s = self.perm[j];
            perm[s] = j;
            angles[j] = self.angles[s].neg();
        }
        MonomialRotationMatrix { perm, angles }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.block_count());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base).expect("same size");
            }
            base = base.multiply(&base).expect("same size");
            e >>= 1;
        }
        acc
    }

    /// Smallest `e ≥ 1` with `self^e = 1`.
    pub fn order(&self) -> u64 {
        let mut ord = 1u64;
        for cycle in self.cycles() {
            let total = cycle.iter().fold(RationalAngle::ZERO, |acc, &s| acc + self.angles[s]);
            ord = arith::lcm(ord, cycle.len() as u64 * total.denominator());
        }
        ord
    }

    /// Block direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &MonomialRotationMatrix) -> Self {
        let m = self.block_count();
        let mut perm = self.perm.clone();
        perm.extend(other.perm.iter().map(|&s| s + m));
        let mut angles = self.angles.clone();
        angles.extend_from_slice(&other.angles);
        MonomialRotationMatrix { perm, angles }
    }

    /// `P · self · P⁻¹` for the block permutation matrix `P` sending block `j`
    /// to slot `relabel[j]`.
    pub fn conjugate_by(&self, relabel: &[usize]) -> Result<Self, RepError> {
        let p = MonomialRotationMatrix::new(relabel.to_vec(), vec![RationalAngle::ZERO; relabel.len()])?;
        p.multiply(self)?.multiply(&p.inverse())
    }

    /// Cycles of the block permutation, each listed by slot, in order of
    /// their smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.block_count();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                cycle.push(s);
                s = self.perm[s];
            }
            out.push(cycle);
        }
        out
    }

    /// `true` iff 1 is an eigenvalue, i.e. some cycle of the block
    /// permutation has integral total angle.
    pub fn eigen_angle_zero(&self) -> bool {
        self.cycles()
            .iter()
            .any(|cycle| cycle.iter().fold(RationalAngle::ZERO, |acc, &s| acc + self.angles[s]).is_zero())
    }

    /// Dense real matrix, row-major. Only meant for numerical cross-checks.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.dimension();
        let mut out = vec![vec![0.0; n]; n];
        for (j, &s) in self.perm.iter().enumerate() {
            let t = std::f64::consts::TAU * self.angles[s].to_f64();
            let (sin, cos) = t.sin_cos();
            out[2 * s][2 * j] = cos;
            out[2 * s][2 * j + 1] = -sin;
            out[2 * s + 1][2 * j] = sin;
            out[2 * s + 1][2 * j + 1] = cos;
        }
        out
    }
}

impl fmt::Display for MonomialRotationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .perm
            .iter()
            .enumerate()
            .map(|(j, &s)| format!("{j}->{s}:R({})", self.angles[s]))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Rational point of a torus `T^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusElement {
    pub angles: Vec<RationalAngle>,
}

impl TorusElement {
    pub fn new(angles: Vec<RationalAngle>) -> Self {
        TorusElement { angles }
    }

    pub fn identity(rank: usize) -> Self {
        TorusElement { angles: vec![RationalAngle::ZERO; rank] }
    }

    pub fn rank(&self) -> usize {
        self.angles.len()
    }
}

/// How the torus acts on one block: slot `s` rotates by `weight · θ_coord`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusWeight {
    pub coord: usize,
    pub weight: i64,
}

/// `a` = least prime `≡ 1 (mod p)`, `b = p²`, `c` = least integer in `(1, a)`
/// of multiplicative order `p` mod `a`.
pub fn construct_scc_params(p: u64) -> Result<AdmissibleTriple, RepError> {
    construct_scc_params_with_ceiling(p, 1 << 32)
}

pub fn construct_scc_params_with_ceiling(p: u64, ceiling: u64) -> Result<AdmissibleTriple, RepError> {
    if p < 3 || !arith::is_prime(p) {
        return Err(RepError::NotOddPrime(p));
    }
    let a = (1..)
        .map(|k| k * p + 1)
        .take_while(|&a| a <= ceiling)
        .find(|&a| arith::is_prime(a))
        .ok_or(RepError::SearchBound { p, ceiling })?;
    let c = (2..a)
        .find(|&c| arith::multiplicative_order(c, a) == Some(p))
        .expect("(Z/a)^× is cyclic of order divisible by p");
    Ok(AdmissibleTriple::new(a, p * p, c)?)
}

/// Which corner of the displayed `β` block matrix carries `R(1/p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaConvention {
    /// `β = [[0, id], [R(1/p), 0]]`: block `j ↦ j−1`, block 0 wraps to slot
    /// `p−1` through `R(1/p)`; `α = diag(R(c^k/a))`.
    #[default]
    CornerBottomLeft,
    /// The block-reversed form: block `j ↦ j+1`, block `p−1` wraps to slot 0
    /// through `R(1/p)`, paired with `α = diag(R(c^{p−1−k}/a))`. Conjugate to
    /// the first convention by reversing the block order.
    CornerTopRight,
}

/// Images of `α` and `β` in `O(2p)`.
pub fn rep_generators(
    triple: AdmissibleTriple,
    p: u64,
) -> Result<(MonomialRotationMatrix, MonomialRotationMatrix), RepError> {
    rep_generators_with(triple, p, BetaConvention::CornerBottomLeft)
}

pub fn rep_generators_with(
    triple: AdmissibleTriple,
    p: u64,
    convention: BetaConvention,
) -> Result<(MonomialRotationMatrix, MonomialRotationMatrix), RepError> {
    let group = groups::classify(triple);
    if group.d() != p {
        return Err(RepError::WrongClass { d: group.d(), p });
    }
    let m = p as usize;
    let a = triple.a();
    let alpha_angles: Vec<RationalAngle> =
        (0..p).map(|k| RationalAngle::of(group.c_pow(k) as i64, a)).collect();
    let corner = RationalAngle::of(1, p);
    let (alpha, beta) = match convention {
        BetaConvention::CornerBottomLeft => {
            let perm = (0..m).map(|j| (j + m - 1) % m).collect();
            let mut angles = vec![RationalAngle::ZERO; m];
            angles[m - 1] = corner;
            (MonomialRotationMatrix::diagonal(alpha_angles), MonomialRotationMatrix { perm, angles })
        }
        BetaConvention::CornerTopRight => {
            let perm = (0..m).map(|j| (j + 1) % m).collect();
            let mut angles = vec![RationalAngle::ZERO; m];
            angles[0] = corner;
            let reversed = alpha_angles.into_iter().rev().collect();
            (MonomialRotationMatrix::diagonal(reversed), MonomialRotationMatrix { perm, angles })
        }
    };
    Ok((alpha, beta))
}

/// A representation of `Γ(a,b,c)` by monomial rotation matrices on
/// `R^{n+1}`, together with a torus acting blockwise by weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereActionBundle {
    group: SpaceFormGroup,
    p: u64,
    n: u64,
    alpha_img: MonomialRotationMatrix,
    beta_img: MonomialRotationMatrix,
    torus: Vec<TorusWeight>,
    torus_rank: usize,
}

/// JSON summary `{p, n, a, b, c, torus_rank, free, hopf_free}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleSummary {
    pub p: u64,
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub torus_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf_free: Option<bool>,
}

/// `r = (n+1)/(2p)` copies of the `2p`-dimensional representation of the
/// group from [`construct_scc_params`], with `T^r` rotating the `k`-th copy
/// by `θ_k` on every block.
pub fn build_sphere_action(p: u64, n: u64) -> Result<SphereActionBundle, RepError> {
    if p < 3 || !arith::is_prime(p) {
        return Err(RepError::NotOddPrime(p));
    }
    if (n + 1) % (2 * p) != 0 {
        return Err(RepError::Divisibility { two_p: 2 * p, n_plus_one: n + 1 });
    }
    let triple = construct_scc_params(p)?;
    SphereActionBundle::from_triple(triple, p, ((n + 1) / (2 * p)) as usize, BetaConvention::default())
}

impl SphereActionBundle {
    /// Block sum of `copies` copies of the representation of `triple`.
    pub fn from_triple(
        triple: AdmissibleTriple,
        p: u64,
        copies: usize,
        convention: BetaConvention,
    ) -> Result<Self, RepError> {
        if copies == 0 {
            return Err(RepError::RankMismatch { expected: 1, got: 0 });
        }
        let (alpha, beta) = rep_generators_with(triple, p, convention)?;
        let mut alpha_img = alpha.clone();
        let mut beta_img = beta.clone();
        for _ in 1..copies {
            alpha_img = alpha_img.direct_sum(&alpha);
            beta_img = beta_img.direct_sum(&beta);
        }
        let torus = (0..copies * p as usize)
            .map(|s| TorusWeight { coord: s / p as usize, weight: 1 })
            .collect();
        let n = 2 * p * copies as u64 - 1;
        Self::from_parts(groups::classify(triple), p, n, alpha_img, beta_img, torus, copies)
    }

    /// Assembles a bundle from explicit generator images, checking the
    /// defining relations of `Γ(a,b,c)` on them.
    pub fn from_parts(
        group: SpaceFormGroup,
        p: u64,
        n: u64,
        alpha_img: MonomialRotationMatrix,
        beta_img: MonomialRotationMatrix,
        torus: Vec<TorusWeight>,
        torus_rank: usize,
    ) -> Result<Self, RepError> {
        let m = alpha_img.block_count();
        if beta_img.block_count() != m {
            return Err(RepError::DimensionMismatch { left: m, right: beta_img.block_count() });
        }
        if torus.len() != m {
            return Err(RepError::DimensionMismatch { left: m, right: torus.len() });
        }
        if n + 1 != 2 * m as u64 {
            return Err(RepError::DimensionMismatch { left: m, right: (n as usize + 1) / 2 });
        }
        if torus.iter().any(|w| w.coord >= torus_rank) {
            return Err(RepError::RankMismatch { expected: torus_rank, got: torus.len() });
        }
        if !alpha_img.pow(group.a()).is_identity() {
            return Err(RepError::RelationFailed("α^a = 1"));
        }
        if !beta_img.pow(group.b()).is_identity() {
            return Err(RepError::RelationFailed("β^b = 1"));
        }
        let conj = beta_img.multiply(&alpha_img)?.multiply(&beta_img.inverse())?;
        if conj != alpha_img.pow(group.c()) {
            return Err(RepError::RelationFailed("βαβ⁻¹ = α^c"));
        }
        Ok(SphereActionBundle { group, p, n, alpha_img, beta_img, torus, torus_rank })
    }

    pub fn group(&self) -> &SpaceFormGroup {
        &self.group
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Dimension of the sphere `S^n` acted on.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn alpha_image(&self) -> &MonomialRotationMatrix {
        &self.alpha_img
    }

    pub fn beta_image(&self) -> &MonomialRotationMatrix {
        &self.beta_img
    }

    pub fn torus_weights(&self) -> &[TorusWeight] {
        &self.torus
    }

    /// Replaces the torus weights; used to build deliberately broken
    /// fixtures.
    pub fn with_torus_weights(mut self, torus: Vec<TorusWeight>) -> Result<Self, RepError> {
        if torus.len() != self.alpha_img.block_count() {
            return Err(RepError::DimensionMismatch { left: self.alpha_img.block_count(), right: torus.len() });
        }
        if torus.iter().any(|w| w.coord >= self.torus_rank) {
            return Err(RepError::RankMismatch { expected: self.torus_rank, got: torus.len() });
        }
        self.torus = torus;
        Ok(self)
    }

    /// Image of `α^i β^j`.
    pub fn rep(&self, g: GroupElement) -> MonomialRotationMatrix {
        self.alpha_img
            .pow(g.i)
            .multiply(&self.beta_img.pow(g.j))
            .expect("generator images share a size")
    }

    /// Exhaustive freeness check: no non-identity element has eigenvalue 1.
    pub fn is_free_representation(&self, cap: u64) -> Result<bool, RepError> {
        let order = self.group.order();
        if order > cap {
            return Err(RepError::CapExceeded { order, cap });
        }
        // Walk each coset row α^i β^j by multiplying by α on the left, which
        // avoids recomputing powers for every element.
        let mut beta_pow = MonomialRotationMatrix::identity(self.alpha_img.block_count());
        for j in 0..self.group.b() {
            let mut x = beta_pow.clone();
            for i in 0..self.group.a() {
                if (i, j) != (0, 0) && x.eigen_angle_zero() {
                    return Ok(false);
                }
                x = self.alpha_img.multiply(&x)?;
            }
            beta_pow = beta_pow.multiply(&self.beta_img)?;
        }
        Ok(true)
    }

    /// Image of a torus element: slot `s` rotates by `weight_s · θ_{coord_s}`.
    pub fn torus_matrix(&self, t: &TorusElement) -> Result<MonomialRotationMatrix, RepError> {
        if t.rank() != self.torus_rank {
            return Err(RepError::RankMismatch { expected: self.torus_rank, got: t.rank() });
        }
        Ok(MonomialRotationMatrix::diagonal(
            self.torus.iter().map(|w| t.angles[w.coord].scale(w.weight)).collect(),
        ))
    }

    pub fn commutes_with_torus(&self, t: &TorusElement) -> Result<bool, RepError> {
        let rho = self.torus_matrix(t)?;
        self.commutes_with(&rho)
    }

    /// `true` iff `m` commutes with both generator images.
    pub fn commutes_with(&self, m: &MonomialRotationMatrix) -> Result<bool, RepError> {
        for g in [&self.alpha_img, &self.beta_img] {
            if g.multiply(m)? != m.multiply(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image of `θ` on the diagonal circle `(θ, …, θ) ⊆ T^r`.
    pub fn diagonal_circle_element(&self, theta: RationalAngle) -> MonomialRotationMatrix {
        MonomialRotationMatrix::diagonal(self.torus.iter().map(|w| theta.scale(w.weight)).collect())
    }

    /// The diagonal circle rotates slot `s` with integer weight `w_s`; the
    /// point `θ ≠ 0` fixes a vector iff `w_s θ ∈ Z` for some `s`, which
    /// happens for some such `θ` iff some `|w_s| ≠ 1`.
    pub fn diagonal_circle_is_free(&self) -> bool {
        self.torus.iter().all(|w| w.weight.abs() == 1)
    }

    /// Relabels blocks by `relabel` (conjugation by a block permutation).
    pub fn conjugated(&self, relabel: &[usize]) -> Result<Self, RepError> {
        let m = self.alpha_img.block_count();
        if relabel.len() != m {
            return Err(RepError::DimensionMismatch { left: m, right: relabel.len() });
        }
        let alpha_img = self.alpha_img.conjugate_by(relabel)?;
        let beta_img = self.beta_img.conjugate_by(relabel)?;
        let mut torus = self.torus.clone();
        for (j, &s) in relabel.iter().enumerate() {
            torus[s] = self.torus[j];
        }
        Ok(SphereActionBundle { alpha_img, beta_img, torus, ..self.clone() })
    }

    /// Cohomology period `n + 1` of the group, available once the action is
    /// certified free.
    pub fn periodicity(&self, cap: u64) -> Result<Option<PeriodicityRecord>, RepError> {
        if self.is_free_representation(cap)? {
            Ok(Some(PeriodicityRecord::from_free_action(self.n)?))
        } else {
            Ok(None)
        }
    }

    pub fn summary(&self, verify_free: Option<u64>, verify_hopf: bool) -> Result<BundleSummary, RepError> {
        let free = match verify_free {
            Some(cap) => Some(self.is_free_representation(cap)?),
            None => None,
        };
        Ok(BundleSummary {
            p: self.p,
            n: self.n,
            a: self.group.a(),
            b: self.group.b(),
            c: self.group.c(),
            torus_rank: self.torus_rank,
            free,
            hopf_free: verify_hopf.then(|| self.diagonal_circle_is_free()),
        })
    }
}
