//! Normalized relative ideals of a numerical semigroup.
//!
//! An ideal `I` with `min(I) = 0` is determined by its Apéry set with respect
//! to the multiplicity `m`: `w_i = m * x_i + i`, where `(x_1, ..., x_{m-1})`
//! are its Kunz coordinates. `n >= 0` lies in `I` exactly when
//! `n / m >= x_{n mod m}`.
//!
//! Union and intersection are coordinatewise min and max. Sums use the
//! min-plus formula in [`sum_kunz`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, KunzViolation, Result};
use crate::semigroup::{check_kunz_inequalities, NumericalSemigroup};

#[derive(Clone)]
pub struct NormalizedIdeal {
    ambient: Arc<NumericalSemigroup>,
    kunz: Vec<u32>,
    members: FixedBitSet,
}

#[inline]
fn coord(x: &[u32], i: usize) -> u32 {
    if i == 0 {
        0
    } else {
        x[i - 1]
    }
}

/// Kunz coordinates of `I + J` from those of `I` and `J`:
/// `z_i = min { x_a + y_b + floor((a + b) / m) : a + b ≡ i (mod m) }`.
pub fn sum_kunz(m: usize, x: &[u32], y: &[u32]) -> Vec<u32> {
    (1..m)
        .map(|i| {
            (0..m)
                .map(|a| {
                    let b = (i + m - a) % m;
                    coord(x, a) + coord(y, b) + ((a + b) / m) as u32
                })
                .min()
                .unwrap()
        })
        .collect()
}

/// Sum of Kunz coordinates over an ordinary semigroup, where the carry terms
/// never win: `z_i = min { x_a + y_b : a + b = i }`.
pub fn sum_kunz_ordinary(x: &[u32], y: &[u32]) -> Vec<u32> {
    (1..=x.len())
        .map(|i| {
            (0..=i)
                .map(|a| coord(x, a) + coord(y, i - a))
                .min()
                .unwrap()
        })
        .collect()
}

/// Quotients `q_t` of `(J - I) = { z : z + I ⊆ J }`, one per residue class
/// `t` in `0..m` (class 0 included): the smallest member congruent to `t` is
/// `m * q_t + t`.
pub fn residual_quotients(m: usize, j: &[u32], i: &[u32]) -> Vec<u32> {
    (0..m)
        .map(|t| {
            (0..m)
                .map(|r| coord(j, (t + r) % m) as i64 - coord(i, r) as i64 - ((t + r) / m) as i64)
                .max()
                .unwrap()
                .max(0) as u32
        })
        .collect()
}

/// `I ⪯ J` on raw coordinates, through the residual: `I ⊆ J` and
/// `I + (J - I) = J`.
pub fn preceq_kunz(m: usize, i: &[u32], j: &[u32]) -> bool {
    if i.iter().zip(j).any(|(x, y)| y > x) {
        return false;
    }
    let q = residual_quotients(m, j, i);
    debug_assert_eq!(q[0], 0);
    sum_kunz(m, i, &q[1..]) == j
}

fn members_from_kunz(s: &NumericalSemigroup, kunz: &[u32]) -> FixedBitSet {
    let m = s.multiplicity() as usize;
    let c = s.conductor() as usize;
    let mut bits = FixedBitSet::with_capacity(c);
    for n in 0..c {
        if (n / m) as u32 >= coord(kunz, n % m) {
            bits.insert(n);
        }
    }
    bits
}

impl NormalizedIdeal {
    pub(crate) fn from_valid_kunz(ambient: Arc<NumericalSemigroup>, kunz: Vec<u32>) -> Self {
        let members = members_from_kunz(&ambient, &kunz);
        Self {
            ambient,
            kunz,
            members,
        }
    }

    /// The normalized representative of `X + S`.
    pub fn from_generators(ambient: &Arc<NumericalSemigroup>, xs: &[i64]) -> Result<Self> {
        let min = *xs.iter().min().ok_or(Error::NoGenerators)?;
        let m = ambient.multiplicity() as usize;
        let apery = ambient.apery();
        let kunz = (1..m)
            .map(|r| {
                xs.iter()
                    .map(|&x| {
                        let x = (x - min) as u64;
                        let w = x + apery[(r + m - (x as usize % m)) % m];
                        ((w - r as u64) / m as u64) as u32
                    })
                    .min()
                    .unwrap()
            })
            .collect();
        Ok(Self::from_valid_kunz(ambient.clone(), kunz))
    }

    /// The ideal with the given Kunz coordinates, if they satisfy the Kunz
    /// inequalities against the ambient semigroup.
    pub fn from_kunz(ambient: &Arc<NumericalSemigroup>, kunz: Vec<u32>) -> Result<Self> {
        let k = ambient.kunz();
        if kunz.len() != k.len() {
            return Err(Error::KunzViolation(KunzViolation::Length {
                expected: k.len(),
                found: kunz.len(),
            }));
        }
        if let Some(i) = (0..k.len()).find(|&i| kunz[i] > k[i]) {
            return Err(Error::KunzViolation(KunzViolation::AboveAmbient {
                index: i + 1,
                value: kunz[i],
                bound: k[i],
            }));
        }
        check_kunz_inequalities(ambient.multiplicity() as usize, &kunz, k)
            .map_err(Error::KunzViolation)?;
        Ok(Self::from_valid_kunz(ambient.clone(), kunz))
    }

    /// N as an ideal of `ambient`.
    pub fn naturals(ambient: &Arc<NumericalSemigroup>) -> Self {
        let len = ambient.kunz().len();
        Self::from_valid_kunz(ambient.clone(), vec![0; len])
    }

    /// The ambient semigroup as an ideal of itself, the identity for `+`.
    pub fn ambient_ideal(ambient: &Arc<NumericalSemigroup>) -> Self {
        Self::from_valid_kunz(ambient.clone(), ambient.kunz().to_vec())
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn kunz(&self) -> &[u32] {
        &self.kunz
    }

    /// Membership bitmask over `[0, C(S))`.
    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn multiplicity(&self) -> usize {
        self.ambient.multiplicity() as usize
    }

    /// Apéry set `(w_0, ..., w_{m-1})`, indexed by residue.
    pub fn apery(&self) -> Vec<u64> {
        let m = self.multiplicity() as u64;
        (0..m as usize)
            .map(|i| coord(&self.kunz, i) as u64 * m + i as u64)
            .collect()
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let m = self.multiplicity() as i64;
        (n / m) as u32 >= coord(&self.kunz, (n % m) as usize)
    }

    /// Number of non-negative integers outside the ideal.
    pub fn genus(&self) -> u32 {
        self.kunz.iter().sum()
    }

    pub fn is_naturals(&self) -> bool {
        self.kunz.iter().all(|&x| x == 0)
    }

    pub fn is_ambient(&self) -> bool {
        self.kunz == self.ambient.kunz()
    }

    pub fn same_ambient(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    fn with_kunz(&self, kunz: Vec<u32>) -> Self {
        Self::from_valid_kunz(self.ambient.clone(), kunz)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.kunz.iter().zip(&other.kunz).all(|(x, y)| y <= x))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let kunz = self
            .kunz
            .iter()
            .zip(&other.kunz)
            .map(|(x, y)| *x.min(y))
            .collect();
        Ok(self.with_kunz(kunz))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let kunz = self
            .kunz
            .iter()
            .zip(&other.kunz)
            .map(|(x, y)| *x.max(y))
            .collect();
        Ok(self.with_kunz(kunz))
    }

    /// `I + J = { i + j : i ∈ I, j ∈ J }`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.with_kunz(sum_kunz(self.multiplicity(), &self.kunz, &other.kunz)))
    }

    /// The `<=_S`-minimal elements of the ideal, ascending. Always contains 0.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let apery = self.apery();
        let s = &self.ambient;
        let mut gens: Vec<u64> = apery
            .iter()
            .enumerate()
            .filter(|&(r, &w)| {
                !apery
                    .iter()
                    .enumerate()
                    .any(|(t, &v)| t != r && v <= w && s.contains((w - v) as i64))
            })
            .map(|(_, &w)| w)
            .collect();
        gens.sort_unstable();
        gens
    }

    /// `I \ {x}` for a non-zero minimal generator `x`.
    pub fn remove_minimal_generator(&self, x: u64) -> Result<Self> {
        if x == 0 || !self.minimal_generators().contains(&x) {
            return Err(Error::NotMinimalGenerator { value: x as i64 });
        }
        let m = self.multiplicity();
        let mut kunz = self.kunz.clone();
        kunz[x as usize % m - 1] += 1;
        Ok(self.with_kunz(kunz))
    }

    /// `F(I) = max(Z \ I)`, or `-1` when `I = N`.
    pub fn frobenius(&self) -> i64 {
        let m = self.multiplicity() as i64;
        self.apery()
            .iter()
            .map(|&w| w as i64 - m)
            .max()
            .unwrap()
            .max(-1)
    }

    /// `I ∪ {F(I)}`.
    pub fn adjoin_frobenius(&self) -> Result<Self> {
        if self.is_naturals() {
            return Err(Error::IsFullIdeal);
        }
        let m = self.multiplicity();
        let f = self.frobenius() as usize;
        let mut kunz = self.kunz.clone();
        kunz[f % m - 1] -= 1;
        Ok(self.with_kunz(kunz))
    }

    /// `self - other = { z ∈ Z : z + other ⊆ self }`.
    pub fn residual(&self, other: &Self) -> Result<Residual> {
        self.check_ambient(other)?;
        Ok(Residual {
            ambient: self.ambient.clone(),
            quotients: residual_quotients(self.multiplicity(), &self.kunz, &other.kunz),
        })
    }

    /// `self ⪯ other`: some normalized ideal `K` has `self + K = other`.
    pub fn preceq(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(preceq_kunz(self.multiplicity(), &self.kunz, &other.kunz))
    }

    /// The same set of integers viewed as a normalized ideal of `target`.
    ///
    /// Fails with [`Error::NotAnIdeal`] when the set is not closed under
    /// addition of elements of `target`.
    pub fn reinterpret(&self, target: &Arc<NumericalSemigroup>) -> Result<Self> {
        let mt = target.multiplicity() as u64;
        let bound = self.ambient.conductor() as u64 + mt;
        let kunz: Vec<u32> = (1..mt)
            .map(|r| (0..).find(|q| self.contains((q * mt + r) as i64)).unwrap() as u32)
            .collect();
        let candidate = Self::from_kunz(target, kunz).map_err(|_| Error::NotAnIdeal)?;
        if (0..bound as i64).any(|n| candidate.contains(n) != self.contains(n)) {
            return Err(Error::NotAnIdeal);
        }
        Ok(candidate)
    }
}

/// `J - I = { z ∈ Z : z + I ⊆ J }` for ideals of a common semigroup.
///
/// Its minimum is non-negative and every integer `>= C(S)` belongs to it.
/// It is a normalized ideal exactly when `I ⊆ J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    ambient: Arc<NumericalSemigroup>,
    quotients: Vec<u32>,
}

impl Residual {
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let m = self.quotients.len() as i64;
        (n / m) as u32 >= self.quotients[(n % m) as usize]
    }

    pub fn min(&self) -> u64 {
        let m = self.quotients.len() as u64;
        self.quotients
            .iter()
            .enumerate()
            .map(|(t, &q)| q as u64 * m + t as u64)
            .min()
            .unwrap()
    }

    /// Membership bitmask over `[0, C(S))`.
    pub fn members(&self) -> FixedBitSet {
        let c = self.ambient.conductor() as usize;
        let mut bits = FixedBitSet::with_capacity(c);
        for n in 0..c {
            bits.set(n, self.contains(n as i64));
        }
        bits
    }

    pub fn is_normalized(&self) -> bool {
        self.quotients[0] == 0
    }

    pub fn into_normalized(self) -> Option<NormalizedIdeal> {
        if self.is_normalized() {
            let kunz = self.quotients[1..].to_vec();
            Some(NormalizedIdeal::from_valid_kunz(self.ambient, kunz))
        } else {
            None
        }
    }
}

impl PartialEq for NormalizedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.kunz == other.kunz && self.same_ambient(other)
    }
}

impl Eq for NormalizedIdeal {}

impl Hash for NormalizedIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kunz.hash(state);
    }
}

impl PartialOrd for NormalizedIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: lexicographic on Kunz coordinates.
impl Ord for NormalizedIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.kunz.cmp(&other.kunz)
    }
}

/// Formats Kunz coordinates as `(x_1,...,x_{m-1})`.
pub fn format_kunz(kunz: &[u32]) -> String {
    format!("({})", crate::semigroup::join_numbers(kunz))
}

/// Parses `(0,1,2)`, `0,1,2` or `0 1 2`; `()` is the empty vector.
pub fn parse_kunz(text: &str) -> Option<Vec<u32>> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().ok())
        .collect()
}

impl fmt::Display for NormalizedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_kunz(&self.kunz))
    }
}

impl fmt::Debug for NormalizedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_K over {}", format_kunz(&self.kunz), self.ambient)
    }
}
