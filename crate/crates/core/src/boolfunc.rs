//! Functions GF(2^n) -> GF(2^n) as full value tables, and their
//! first-order derivative statistics.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2n::FieldSpec;

/// A function on GF(2^n) stored as its value table: `values[x] = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTable")]
pub struct FunctionTable {
    field: FieldSpec,
    values: Vec<u32>,
}

#[derive(Deserialize)]
struct RawTable {
    field: FieldSpec,
    values: Vec<u32>,
}

impl TryFrom<RawTable> for FunctionTable {
    type Error = Error;

    fn try_from(raw: RawTable) -> Result<Self> {
        FunctionTable::new(raw.field, raw.values)
    }
}

impl FunctionTable {
    pub fn new(field: FieldSpec, values: Vec<u32>) -> Result<Self> {
        if values.len() != field.size() {
            return Err(Error::TableLength {
                expected: field.size(),
                got: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|&&v| !field.contains(v)) {
            return Err(Error::ElementOutOfRange {
                value: bad as u64,
                n: field.n(),
            });
        }
        Ok(FunctionTable { field, values })
    }

    /// Tabulates `f` at every field element. Outputs are masked to `n` bits.
    pub fn from_fn(field: FieldSpec, f: impl Fn(u32) -> u32) -> Self {
        let mask = field.group_order();
        FunctionTable {
            field,
            values: (0..field.size() as u32).map(|x| f(x) & mask).collect(),
        }
    }

    pub fn identity(field: FieldSpec) -> Self {
        Self::from_fn(field, |x| x)
    }

    /// `x -> x^d` for `d >= 1`.
    pub fn from_monomial(field: FieldSpec, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::Parameter("monomial exponent must be positive".into()));
        }
        Ok(Self::from_fn(field, |x| field.pow(x, d)))
    }

    /// Pointwise evaluation of `sum_k c_k x^(e_k)`.
    pub fn from_univariate(field: FieldSpec, terms: &[(u32, u64)]) -> Result<Self> {
        for &(c, _) in terms {
            field.check(c)?;
        }
        Ok(Self::from_fn(field, |x| {
            terms
                .iter()
                .fold(0, |acc, &(c, e)| acc ^ field.mul(c, field.pow(x, e)))
        }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    #[inline]
    pub fn eval(&self, x: u32) -> u32 {
        self.values[x as usize]
    }

    fn nonzero_direction(&self, a: u32) -> Result<()> {
        self.field.check(a)?;
        if a == 0 {
            Err(Error::Domain("direction a must be nonzero".into()))
        } else {
            Ok(())
        }
    }

    /// `f(x + a) + f(x)`.
    #[inline]
    pub fn derivative(&self, a: u32, x: u32) -> u32 {
        self.values[(x ^ a) as usize] ^ self.values[x as usize]
    }

    /// `delta_f(a, b) = #{x : f(x + a) + f(x) = b}`.
    pub fn delta(&self, a: u32, b: u32) -> Result<u32> {
        self.nonzero_direction(a)?;
        self.field.check(b)?;
        Ok((0..self.field.size() as u32)
            .filter(|&x| self.derivative(a, x) == b)
            .count() as u32)
    }

    /// Fills `hist[b] = delta_f(a, b)` for all `b`.
    pub(crate) fn direction_histogram(&self, a: u32, hist: &mut [u32]) {
        hist.iter_mut().for_each(|h| *h = 0);
        for x in 0..self.field.size() as u32 {
            hist[self.derivative(a, x) as usize] += 1;
        }
    }

    /// `delta_f(a) = max_b delta_f(a, b)`.
    pub fn direction_uniformity(&self, a: u32) -> Result<u32> {
        self.nonzero_direction(a)?;
        let mut hist = vec![0u32; self.field.size()];
        self.direction_histogram(a, &mut hist);
        Ok(hist.into_iter().max().unwrap_or(0))
    }

    /// The full differential spectrum; directions are processed in parallel.
    pub fn spectrum(&self) -> DifferentialSpectrum {
        let size = self.field.size();
        let per_direction: Vec<(u32, Vec<(u32, u64)>)> = (1..size as u32)
            .into_par_iter()
            .map_init(
                || vec![0u32; size],
                |hist, a| {
                    self.direction_histogram(a, hist);
                    let mut local: BTreeMap<u32, u64> = BTreeMap::new();
                    for &h in hist.iter() {
                        *local.entry(h).or_default() += 1;
                    }
                    let max = *local.keys().next_back().unwrap_or(&0);
                    (max, local.into_iter().collect())
                },
            )
            .collect();
        let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
        let mut uniformity = 0;
        let mut directions = Vec::with_capacity(per_direction.len());
        for (max, local) in per_direction {
            uniformity = uniformity.max(max);
            directions.push(max);
            for (v, c) in local {
                *counts.entry(v).or_default() += c;
            }
        }
        DifferentialSpectrum {
            n: self.field.n(),
            counts,
            uniformity,
            per_direction: directions,
        }
    }

    /// `E_f(a) = {f(x + a) + f(x)}`.
    pub fn image_set(&self, a: u32) -> Result<BTreeSet<u32>> {
        self.nonzero_direction(a)?;
        Ok((0..self.field.size() as u32)
            .map(|x| self.derivative(a, x))
            .collect())
    }

    /// True iff the derivative in direction `a` is 2-to-1.
    pub fn is_partially_apn(&self, a: u32) -> Result<bool> {
        Ok(self.direction_uniformity(a)? == 2)
    }

    /// Directions whose derivative is not 2-to-1.
    pub fn critical_directions(&self) -> BTreeSet<u32> {
        self.spectrum().critical_directions()
    }

    pub fn is_apn(&self) -> bool {
        self.spectrum().uniformity == 2
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.field.size()];
        self.values
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    pub fn inverse_permutation(&self) -> Result<FunctionTable> {
        if !self.is_permutation() {
            return Err(Error::NotPermutation);
        }
        let mut inv = vec![0u32; self.field.size()];
        for (x, &y) in self.values.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Ok(FunctionTable {
            field: self.field,
            values: inv,
        })
    }

    /// `x -> self(inner(x))`.
    pub fn compose(&self, inner: &FunctionTable) -> Result<FunctionTable> {
        if self.field != inner.field {
            return Err(Error::FieldMismatch);
        }
        Ok(FunctionTable {
            field: self.field,
            values: inner.values.iter().map(|&y| self.eval(y)).collect(),
        })
    }

    /// Pointwise sum `self + other`.
    pub fn add(&self, other: &FunctionTable) -> Result<FunctionTable> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(FunctionTable {
            field: self.field,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    /// Applies `g` to every output value: `x -> g(f(x))`.
    pub fn map_outputs(&self, g: impl Fn(u32) -> u32) -> FunctionTable {
        let mask = self.field.group_order();
        FunctionTable {
            field: self.field,
            values: self.values.iter().map(|&v| g(v) & mask).collect(),
        }
    }
}

/// Frequencies of the values `delta_f(a, b)` over all `a != 0`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialSpectrum {
    pub n: u32,
    /// `2i -> l_{2i}`; zero-frequency values are absent.
    pub counts: BTreeMap<u32, u64>,
    pub uniformity: u32,
    /// `delta_f(a)` at index `a - 1`.
    pub per_direction: Vec<u32>,
}

impl DifferentialSpectrum {
    pub fn frequency(&self, value: u32) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    /// `delta_f(a)` for `a != 0`.
    pub fn direction_uniformity(&self, a: u32) -> Option<u32> {
        a.checked_sub(1)
            .and_then(|i| self.per_direction.get(i as usize).copied())
    }

    /// The normalised frequencies `w_{2i} = l_{2i} / (2^n - 1)`, available
    /// when every frequency is divisible (always the case for monomials).
    pub fn normalized(&self) -> Option<BTreeMap<u32, u64>> {
        let order = (1u64 << self.n) - 1;
        self.counts
            .iter()
            .map(|(&v, &c)| (c % order == 0).then_some((v, c / order)))
            .collect()
    }

    pub fn critical_directions(&self) -> BTreeSet<u32> {
        self.per_direction
            .iter()
            .enumerate()
            .filter(|(_, &d)| d >= 4)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// For a spectrum whose values are exactly `{0, 2^s}`, returns `s`.
    pub fn two_valued_exponent(&self) -> Option<u32> {
        let values: Vec<u32> = self.counts.keys().copied().collect();
        match values.as_slice() {
            [0, v] if v.is_power_of_two() => Some(v.trailing_zeros()),
            _ => None,
        }
    }

    /// `(1/3) sum_{a != 0, b} C(delta_f(a,b)/2, 2)`: the number of vanishing
    /// flats, without enumerating them.
    pub fn vanishing_flat_count(&self) -> Result<u64> {
        let total: u64 = self
            .counts
            .iter()
            .map(|(&v, &c)| {
                let pairs = (v / 2) as u64;
                c * (pairs * pairs.saturating_sub(1) / 2)
            })
            .sum();
        if !total.is_multiple_of(3) {
            return Err(Error::InexactDivision("vanishing flat count from spectrum"));
        }
        Ok(total / 3)
    }

    /// CSV rows `value,frequency`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,frequency\n");
        for (v, c) in &self.counts {
            out.push_str(&format!("{v},{c}\n"));
        }
        out
    }
}
