//! The mod-p Steenrod algebra for odd primes `p`.
//!
//! Words in `β` and the reduced powers `P^s` are normalised to the admissible
//! basis with the Adem relations
//!
//! ```text
//! P^a P^b   = Σ_i (-1)^{a+i} C((p-1)(b-i)-1, a-pi) P^{a+b-i} P^i           (a < pb)
//! P^a β P^b = Σ_i (-1)^{a+i} C((p-1)(b-i), a-pi) β P^{a+b-i} P^i
//!           + Σ_i (-1)^{a+i+1} C((p-1)(b-i)-1, a-pi-1) P^{a+b-i} β P^i     (a ≤ pb)
//! ```
//!
//! with binomials reduced mod `p` by Lucas' theorem. Three rewrite strategies
//! are provided so that confluence can be tested; they must agree.
//!
//! The algebra acts on the model `F_p[x]`, `deg x = 2`, through
//! `P^1 x = x^p`, `β x = 0` and the Cartan formula.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial_mod_p, is_prime};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteenrodError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("primes differ: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("degree must be positive")]
    NonPositiveDegree,
}

fn check_prime(p: u64) -> Result<(), SteenrodError> {
    if p >= 3 && is_prime(p) {
        Ok(())
    } else {
        Err(SteenrodError::NotOddPrime(p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    Bockstein,
    Power(u64),
}

impl Letter {
    pub fn degree(&self, p: u64) -> u64 {
        match *self {
            Letter::Bockstein => 1,
            Letter::Power(s) => 2 * s * (p - 1),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Bockstein => write!(f, "b"),
            Letter::Power(s) => write!(f, "P{s}"),
        }
    }
}

/// Unreduced composite of Steenrod operations, applied right to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SteenrodWord {
    p: u64,
    letters: Vec<Letter>,
}

impl SteenrodWord {
    /// `P^0` letters are dropped since they act as the identity.
    pub fn new(p: u64, letters: Vec<Letter>) -> Result<Self, SteenrodError> {
        check_prime(p)?;
        let letters = letters.into_iter().filter(|l| *l != Letter::Power(0)).collect();
        Ok(SteenrodWord { p, letters })
    }

    pub fn identity(p: u64) -> Result<Self, SteenrodError> {
        Self::new(p, Vec::new())
    }

    /// Parses `b` / `β` for the Bockstein and `P<k>` (or `P^k`) for powers;
    /// letters may be separated by whitespace, `*` or `·`, or juxtaposed.
    pub fn parse(p: u64, input: &str) -> Result<Self, SteenrodError> {
        check_prime(p)?;
        let err = |reason: String| SteenrodError::Parse { input: input.to_string(), reason };
        let mut letters = Vec::new();
        let mut chars = input.chars().peekable();
        while let Some(ch) = chars.next() {
            match ch {
                c if c.is_whitespace() || c == '*' || c == '·' => {}
                'b' | 'β' => letters.push(Letter::Bockstein),
                'P' => {
                    if chars.peek() == Some(&'^') {
                        chars.next();
                    }
                    let mut digits = String::new();
                    while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                        digits.push(*d);
                        chars.next();
                    }
                    if digits.is_empty() {
                        return Err(err("P must be followed by an exponent".into()));
                    }
                    let s = digits.parse().map_err(|_| err(format!("exponent {digits} out of range")))?;
                    letters.push(Letter::Power(s));
                }
                other => return Err(err(format!("unexpected character {other:?}"))),
            }
        }
        Self::new(p, letters)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn degree(&self) -> u64 {
        self.letters.iter().map(|l| l.degree(self.p)).sum()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SteenrodWord) -> Result<SteenrodWord, SteenrodError> {
        if self.p != other.p {
            return Err(SteenrodError::PrimeMismatch(self.p, other.p));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(SteenrodWord { p: self.p, letters })
    }

    /// `self` composed with itself `e` times.
    pub fn power(&self, e: usize) -> SteenrodWord {
        SteenrodWord { p: self.p, letters: self.letters.repeat(e) }
    }
}

impl fmt::Display for SteenrodWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    for (k, l) in letters.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// `β^{ε₀} P^{s₁} β^{ε₁} ⋯ P^{s_k} β^{ε_k}` with `s_i ≥ p s_{i+1} + ε_i`.
///
/// Ordered by letter count, then the exponent sequence, then the Bockstein
/// pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdmissibleMonomial {
    length: usize,
    powers: Vec<u64>,
    bocksteins: Vec<bool>,
}

impl AdmissibleMonomial {
    pub fn one() -> Self {
        AdmissibleMonomial { length: 0, powers: Vec::new(), bocksteins: vec![false] }
    }

    pub fn powers(&self) -> &[u64] {
        &self.powers
    }

    pub fn bocksteins(&self) -> &[bool] {
        &self.bocksteins
    }

    pub fn degree(&self, p: u64) -> u64 {
        self.powers.iter().map(|s| 2 * s * (p - 1)).sum::<u64>() + self.bocksteins.iter().filter(|&&e| e).count() as u64
    }

    /// Excess `2s₁ − deg(rest) − ε₀`, the lowest degree on which the
    /// monomial can act nontrivially.
    pub fn excess(&self, p: u64) -> i64 {
        let mut e = 0i64;
        for (k, &s) in self.powers.iter().enumerate() {
            e += if k == 0 { 2 * s as i64 } else { -(2 * s as i64 * (p as i64 - 1)) };
        }
        e - self.bocksteins.iter().filter(|&&b| b).count() as i64
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.length);
        for (k, &eps) in self.bocksteins.iter().enumerate() {
            if eps {
                out.push(Letter::Bockstein);
            }
            if let Some(&s) = self.powers.get(k) {
                out.push(Letter::Power(s));
            }
        }
        out
    }

    /// Reads an admissible letter sequence; `None` if it is inadmissible or
    /// contains `ββ` or `P^0`.
    pub fn from_letters(letters: &[Letter], p: u64) -> Option<Self> {
        let mut powers = Vec::new();
        let mut bocksteins = vec![false];
        for l in letters {
            match *l {
                Letter::Bockstein => {
                    let last = bocksteins.last_mut().unwrap();
                    if *last {
                        return None;
                    }
                    *last = true;
                }
                Letter::Power(0) => return None,
                Letter::Power(s) => {
                    powers.push(s);
                    bocksteins.push(false);
                }
            }
        }
        for k in 1..powers.len() {
            if powers[k - 1] < p * powers[k] + bocksteins[k] as u64 {
                return None;
            }
        }
        Some(AdmissibleMonomial { length: letters.len(), powers, bocksteins })
    }
}

impl fmt::Display for AdmissibleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters())
    }
}

/// `F_p`-linear combination of admissible monomials; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SteenrodElement {
    p: u64,
    terms: BTreeMap<AdmissibleMonomial, u64>,
}

impl SteenrodElement {
    pub fn zero(p: u64) -> Self {
        SteenrodElement { p, terms: BTreeMap::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::monomial(p, AdmissibleMonomial::one(), 1)
    }

    pub fn monomial(p: u64, m: AdmissibleMonomial, coeff: u64) -> Self {
        let mut e = Self::zero(p);
        e.add_term(m, coeff);
        e
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AdmissibleMonomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &AdmissibleMonomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: AdmissibleMonomial, coeff: u64) {
        let c = coeff % self.p;
        if c == 0 {
            return;
        }
        let p = self.p;
        let slot = self.terms.entry(m.clone()).or_insert(0);
        *slot = (*slot + c) % p;
        if *slot == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &SteenrodElement) -> SteenrodElement {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: u64) -> SteenrodElement {
        let mut out = Self::zero(self.p);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c * (k % self.p));
        }
        out
    }

    pub fn sub(&self, other: &SteenrodElement) -> SteenrodElement {
        self.add(&other.scale(self.p - 1))
    }

    /// Composite `self ∘ other` in the admissible basis.
    pub fn compose(&self, other: &SteenrodElement) -> SteenrodElement {
        let mut out = Self::zero(self.p);
        let mut cache = HashMap::new();
        for (m, c) in self.terms() {
            let mut acc = other.clone();
            for l in m.letters().into_iter().rev() {
                acc = left_multiply(l, &acc, &mut cache);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }
}

impl fmt::Display for SteenrodElement {
    /// `c1*mono1 + c2*mono2`, unit coefficients omitted, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

fn sign(e: u64, p: u64) -> u64 {
    if e % 2 == 0 {
        1
    } else {
        p - 1
    }
}

/// Admissible expansion of `P^a P^b` for `a < pb`, as `(coefficient, word)`.
pub fn adem_pp(a: u64, b: u64, p: u64) -> Vec<(u64, Vec<Letter>)> {
    let mut out = Vec::new();
    for i in 0..=a / p {
        let top = ((p - 1) * (b - i)) as i64 - 1;
        let c = binomial_mod_p(top, (a - p * i) as i64, p) * sign(a + i, p) % p;
        if c != 0 {
            out.push((c, power_pair(a + b - i, None, i)));
        }
    }
    out
}

/// Admissible-side expansion of `P^a β P^b` for `a ≤ pb`.
pub fn adem_pbp(a: u64, b: u64, p: u64) -> Vec<(u64, Vec<Letter>)> {
    let mut out = Vec::new();
    for i in 0..=a / p {
        let top = ((p - 1) * (b - i)) as i64;
        let c = binomial_mod_p(top, (a - p * i) as i64, p) * sign(a + i, p) % p;
        if c != 0 {
            let mut w = vec![Letter::Bockstein];
            w.extend(power_pair(a + b - i, None, i));
            out.push((c, w));
        }
        let c = binomial_mod_p(top - 1, (a - p * i) as i64 - 1, p) * sign(a + i + 1, p) % p;
        if c != 0 {
            out.push((c, power_pair(a + b - i, Some(Letter::Bockstein), i)));
        }
    }
    out
}

fn power_pair(s: u64, mid: Option<Letter>, t: u64) -> Vec<Letter> {
    let mut w = vec![Letter::Power(s)];
    w.extend(mid);
    if t > 0 {
        w.push(Letter::Power(t));
    }
    w
}

/// Where the first applicable relation sits in a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Redex {
    DoubleBockstein(usize),
    /// `P^a P^b` starting at the index, spanning two letters.
    Pp(usize, u64, u64),
    /// `P^a β P^b` starting at the index, spanning three letters.
    Pbp(usize, u64, u64),
}

impl Redex {
    fn start(&self) -> usize {
        match *self {
            Redex::DoubleBockstein(k) | Redex::Pp(k, ..) | Redex::Pbp(k, ..) => k,
        }
    }
}

fn redexes(w: &[Letter], p: u64) -> Vec<Redex> {
    let mut out = Vec::new();
    for k in 0..w.len() {
        match (w[k], w.get(k + 1), w.get(k + 2)) {
            (Letter::Bockstein, Some(Letter::Bockstein), _) => out.push(Redex::DoubleBockstein(k)),
            (Letter::Power(a), Some(&Letter::Power(b)), _) if a < p * b => out.push(Redex::Pp(k, a, b)),
            (Letter::Power(a), Some(Letter::Bockstein), Some(&Letter::Power(b))) if a <= p * b => {
                out.push(Redex::Pbp(k, a, b))
            }
            _ => {}
        }
    }
    out
}

/// Rewrite order used by [`normalize_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Fold letters right to left, left-multiplying onto an admissible
    /// element. The primary normaliser, with a per-call memo.
    LeftMultiply,
    /// Rewrite the left-most applicable relation first.
    Leftmost,
    /// Rewrite the right-most applicable relation first.
    Rightmost,
}

/// Admissible-basis expansion of `w`.
pub fn adem_normalize(w: &SteenrodWord) -> SteenrodElement {
    normalize_with(w, Strategy::LeftMultiply)
}

pub fn normalize_with(w: &SteenrodWord, strategy: Strategy) -> SteenrodElement {
    match strategy {
        Strategy::LeftMultiply => {
            let mut cache = HashMap::new();
            let mut acc = SteenrodElement::one(w.p);
            for &l in w.letters.iter().rev() {
                acc = left_multiply(l, &acc, &mut cache);
            }
            acc
        }
        Strategy::Leftmost | Strategy::Rightmost => rewrite(w, strategy == Strategy::Leftmost),
    }
}

fn rewrite(w: &SteenrodWord, leftmost: bool) -> SteenrodElement {
    let p = w.p;
    let mut out = SteenrodElement::zero(p);
    let mut stack: Vec<(u64, Vec<Letter>)> = vec![(1, w.letters.clone())];
    while let Some((coeff, word)) = stack.pop() {
        let found = redexes(&word, p);
        let pick = if leftmost { found.first() } else { found.last() };
        let Some(&redex) = pick else {
            let m = AdmissibleMonomial::from_letters(&word, p).expect("redex-free words are admissible");
            out.add_term(m, coeff);
            continue;
        };
        let (span, expansion) = match redex {
            Redex::DoubleBockstein(_) => continue,
            Redex::Pp(_, a, b) => (2, adem_pp(a, b, p)),
            Redex::Pbp(_, a, b) => (3, adem_pbp(a, b, p)),
        };
        let k = redex.start();
        for (c, mid) in expansion {
            let mut next = word[..k].to_vec();
            next.extend(mid);
            next.extend_from_slice(&word[k + span..]);
            stack.push((coeff * c % p, next));
        }
    }
    out
}

type Cache = HashMap<(Letter, AdmissibleMonomial), SteenrodElement>;

fn left_multiply(l: Letter, e: &SteenrodElement, cache: &mut Cache) -> SteenrodElement {
    let mut out = SteenrodElement::zero(e.p);
    for (m, c) in e.terms() {
        let prod = left_multiply_mono(l, m, e.p, cache);
        out = out.add(&prod.scale(c));
    }
    out
}

fn left_multiply_mono(l: Letter, m: &AdmissibleMonomial, p: u64, cache: &mut Cache) -> SteenrodElement {
    if l == Letter::Power(0) {
        return SteenrodElement::monomial(p, m.clone(), 1);
    }
    if let Some(hit) = cache.get(&(l, m.clone())) {
        return hit.clone();
    }
    let letters = m.letters();
    let mut word = vec![l];
    word.extend_from_slice(&letters);
    let result = match redexes(&word, p).first() {
        None => SteenrodElement::monomial(p, AdmissibleMonomial::from_letters(&word, p).unwrap(), 1),
        Some(Redex::DoubleBockstein(_)) => SteenrodElement::zero(p),
        Some(&redex) => {
            // Only the leading pair can be a redex since `m` is admissible.
            let (span, expansion) = match redex {
                Redex::Pp(_, a, b) => (2, adem_pp(a, b, p)),
                Redex::Pbp(_, a, b) => (3, adem_pbp(a, b, p)),
                Redex::DoubleBockstein(_) => unreachable!(),
            };
            let rest = AdmissibleMonomial::from_letters(&word[span..], p).unwrap();
            let mut out = SteenrodElement::zero(p);
            for (c, front) in expansion {
                let mut acc = SteenrodElement::monomial(p, rest.clone(), 1);
                for &fl in front.iter().rev() {
                    acc = left_multiply(fl, &acc, cache);
                }
                out = out.add(&acc.scale(c));
            }
            out
        }
    };
    cache.insert((l, m.clone()), result.clone());
    result
}

/// Normalises a linear combination of words.
pub fn normalize_sum(p: u64, terms: &[(u64, SteenrodWord)]) -> Result<SteenrodElement, SteenrodError> {
    check_prime(p)?;
    let mut out = SteenrodElement::zero(p);
    for (c, w) in terms {
        if w.p != p {
            return Err(SteenrodError::PrimeMismatch(p, w.p));
        }
        out = out.add(&adem_normalize(w).scale(*c));
    }
    Ok(out)
}

/// `true` iff both sides normalise to the same element.
pub fn verify_identity(
    lhs: &[(u64, SteenrodWord)],
    rhs: &[(u64, SteenrodWord)],
    p: u64,
) -> Result<bool, SteenrodError> {
    Ok(normalize_sum(p, lhs)? == normalize_sum(p, rhs)?)
}

/// `c · x^k` in the model algebra `F_p[x]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelClass {
    pub exponent: u64,
    pub coefficient: u64,
}

impl ModelClass {
    pub fn x_pow(k: u64) -> Self {
        ModelClass { exponent: k, coefficient: 1 }
    }

    pub fn degree(&self) -> u64 {
        2 * self.exponent
    }
}

/// Element of `F_p[x]` as exponent ↦ nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelPolynomial {
    p: u64,
    terms: BTreeMap<u64, u64>,
}

impl ModelPolynomial {
    pub fn zero(p: u64) -> Self {
        ModelPolynomial { p, terms: BTreeMap::new() }
    }

    pub fn from_class(p: u64, cls: ModelClass) -> Self {
        let mut out = Self::zero(p);
        out.add_term(cls.exponent, cls.coefficient);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, k: u64) -> u64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ModelClass> + '_ {
        self.terms.iter().map(|(&k, &c)| ModelClass { exponent: k, coefficient: c })
    }

    pub fn add_term(&mut self, k: u64, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let p = self.p;
        let slot = self.terms.entry(k).or_insert(0);
        *slot = (*slot + c) % p;
        if *slot == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &ModelPolynomial) -> ModelPolynomial {
        let mut out = self.clone();
        for t in other.terms() {
            out.add_term(t.exponent, t.coefficient);
        }
        out
    }

    pub fn mul(&self, other: &ModelPolynomial) -> ModelPolynomial {
        let mut out = Self::zero(self.p);
        for s in self.terms() {
            for t in other.terms() {
                out.add_term(s.exponent + t.exponent, s.coefficient * t.coefficient);
            }
        }
        out
    }
}

impl fmt::Display for ModelPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|t| match (t.coefficient, t.exponent) {
                (c, 0) => format!("{c}"),
                (1, k) => format!("x^{k}"),
                (c, k) => format!("{c}*x^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coefficient of `x^{k+j(p-1)}` in `P^j(x^k)`, from the Cartan recursion
/// `P^j(x·x^{k-1}) = x·P^j(x^{k-1}) + x^p·P^{j-1}(x^{k-1})`.
fn power_on_x_pow(j: u64, k: u64, p: u64, memo: &mut HashMap<(u64, u64), u64>) -> u64 {
    if j == 0 {
        return 1;
    }
    if k == 0 || j > k {
        return 0;
    }
    if let Some(&v) = memo.get(&(j, k)) {
        return v;
    }
    let v = (power_on_x_pow(j, k - 1, p, memo) + power_on_x_pow(j - 1, k - 1, p, memo)) % p;
    memo.insert((j, k), v);
    v
}

fn act_letter(l: Letter, poly: &ModelPolynomial, memo: &mut HashMap<(u64, u64), u64>) -> ModelPolynomial {
    let p = poly.p;
    let mut out = ModelPolynomial::zero(p);
    match l {
        Letter::Bockstein => {}
        Letter::Power(j) => {
            for t in poly.terms() {
                let c = power_on_x_pow(j, t.exponent, p, memo);
                out.add_term(t.exponent + j * (p - 1), c * t.coefficient);
            }
        }
    }
    out
}

fn act_letters(letters: &[Letter], poly: ModelPolynomial, memo: &mut HashMap<(u64, u64), u64>) -> ModelPolynomial {
    letters.iter().rev().fold(poly, |acc, &l| act_letter(l, &acc, memo))
}

/// Action of `op` on `cls`.
pub fn act_on_model(op: &SteenrodElement, cls: ModelClass) -> ModelPolynomial {
    let p = op.p;
    let mut memo = HashMap::new();
    let start = ModelPolynomial::from_class(p, cls);
    let mut out = ModelPolynomial::zero(p);
    for (m, c) in op.terms() {
        let image = act_letters(&m.letters(), start.clone(), &mut memo);
        for t in image.terms() {
            out.add_term(t.exponent, t.coefficient * c);
        }
    }
    out
}

/// Action of an unreduced word, one letter at a time.
pub fn act_word_on_model(w: &SteenrodWord, cls: ModelClass) -> ModelPolynomial {
    act_letters(&w.letters, ModelPolynomial::from_class(w.p, cls), &mut HashMap::new())
}

/// Degree bookkeeping for a decomposition `P^p(x) = β(w₀) + P^1(w₁)` of a
/// class `x` of degree `k` with `β x = 0` and `P^1 x = 0`. No secondary
/// operation is evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondaryObligation {
    pub p: u64,
    pub degree: u64,
    pub hypotheses: Vec<String>,
    pub target_degree: u64,
    pub w0_degree: u64,
    pub w1_degree: u64,
}

impl SecondaryObligation {
    /// Both summands land in the degree of `P^p(x)`.
    pub fn is_consistent(&self) -> bool {
        self.w0_degree + 1 == self.target_degree && self.w1_degree + 2 * (self.p - 1) == self.target_degree
    }
}

pub fn secondary_decomposition_schema(k: u64, p: u64) -> Result<SecondaryObligation, SteenrodError> {
    check_prime(p)?;
    if k == 0 {
        return Err(SteenrodError::NonPositiveDegree);
    }
    Ok(SecondaryObligation {
        p,
        degree: k,
        hypotheses: vec!["b(x) = 0".into(), "P1(x) = 0".into()],
        target_degree: k + 2 * p * (p - 1),
        w0_degree: k + 2 * p * (p - 1) - 1,
        w1_degree: k + 2 * (p - 1) * (p - 1),
    })
}

/// One row of the identity table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub p: u64,
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

fn word(p: u64, s: &str) -> SteenrodWord {
    SteenrodWord::parse(p, s).expect("fixed identity words parse")
}

/// The Adem instance `P^p β = P^1 β P^{p-1} + β P^p`, `(P^1)^i = i!·P^i` for
/// `1 ≤ i < p`, `(P^1)^p = 0` and `ββ = 0`, each normalised on both sides.
pub fn identities(p: u64) -> Result<Vec<IdentityCheck>, SteenrodError> {
    check_prime(p)?;
    let mut out = Vec::new();
    let mut push = |identity: String, lhs: &[(u64, SteenrodWord)], rhs: &[(u64, SteenrodWord)]| {
        let l = normalize_sum(p, lhs).unwrap();
        let r = normalize_sum(p, rhs).unwrap();
        out.push(IdentityCheck { p, identity, lhs: l.to_string(), rhs: r.to_string(), holds: l == r });
    };

    push(
        format!("P{p} b = P1 b P{} + b P{p}", p - 1),
        &[(1, word(p, &format!("P{p} b")))],
        &[(1, word(p, &format!("P1 b P{}", p - 1))), (1, word(p, &format!("b P{p}")))],
    );
    let p1 = word(p, "P1");
    let mut factorial = 1u64;
    for i in 1..p {
        factorial = factorial * i % p;
        push(
            format!("(P1)^{i} = {i}!*P{i}"),
            &[(1, p1.power(i as usize))],
            &[(factorial, word(p, &format!("P{i}")))],
        );
    }
    push(format!("(P1)^{p} = 0"), &[(1, p1.power(p as usize))], &[]);
    push("b b = 0".into(), &[(1, word(p, "b b"))], &[]);
    Ok(out)
}
