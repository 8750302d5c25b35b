//! Low-weight codewords of the binary code with parity-check rows
//! `(x_1 ... x_L)` and `(f(x_1) ... f(x_L))`, and their correspondence with
//! vanishing flats.
//!
//! For the cyclic code with zeros `alpha, alpha^d` (labels
//! `alpha^0 .. alpha^(2^n - 2)`), weight-3 words are the vanishing flats
//! through 0 and weight-4 words are the vanishing flats avoiding 0. With
//! the extra label 0 the weight-4 words are all vanishing flats of `f`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::boolfunc::FunctionTable;
use crate::error::{Error, Result};
use crate::gf2n::FieldSpec;
use crate::vflats;

/// Largest `n` for direct weight-4 enumeration.
pub const DIRECT_WEIGHT4_MAX_N: u32 = 6;
/// Largest `n` for direct weight-3 enumeration.
pub const DIRECT_WEIGHT3_MAX_N: u32 = 8;

/// A two-row parity-check matrix over GF(2^n): coordinate labels and
/// their images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCheckSpec {
    field: FieldSpec,
    labels: Vec<u32>,
    images: Vec<u32>,
}

impl ParityCheckSpec {
    /// Labels `alpha^0, ..., alpha^(2^n - 2)` and images `label^d`.
    pub fn cyclic(field: FieldSpec, d: u64) -> Result<Self> {
        let alpha = field.primitive_element()?;
        let mut labels = Vec::with_capacity(field.group_order() as usize);
        let mut x = 1;
        for _ in 0..field.group_order() {
            labels.push(x);
            x = field.mul(x, alpha);
        }
        let images = labels.iter().map(|&l| field.pow(l, d)).collect();
        Ok(ParityCheckSpec { field, labels, images })
    }

    /// Labels `0, alpha^0, ..., alpha^(2^n - 2)` and images `f(label)`.
    pub fn generalized(f: &FunctionTable) -> Result<Self> {
        let field = f.field();
        let mut spec = Self::cyclic(field, 1)?;
        spec.labels.insert(0, 0);
        spec.images = spec.labels.iter().map(|&l| f.eval(l)).collect();
        Ok(spec)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// How a count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Flats,
    Direct,
}

/// The exponent of a monomial code, or a general function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CodeSource {
    Exponent(u64),
    General(&'static str),
}

impl CodeSource {
    pub const GENERAL: CodeSource = CodeSource::General("general");
}

/// Weight-3 and weight-4 codeword counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeWeightReport {
    pub n: u32,
    pub d: CodeSource,
    #[serde(rename = "N3")]
    pub n3: Option<u64>,
    #[serde(rename = "N4")]
    pub n4: u64,
    pub method: CountMethod,
}

/// `(N3, N4)` for the cyclic code of `x^d`, split from the vanishing flats
/// by whether they contain 0.
pub fn weight_counts_from_flats(field: FieldSpec, d: u64) -> Result<CodeWeightReport> {
    let f = FunctionTable::from_monomial(field, d)?;
    let pqs = vflats::enumerate(&f);
    // Blocks are sorted ascending, so 0 can only be the first point.
    let n3 = pqs.blocks().iter().filter(|b| b.points()[0] == 0).count() as u64;
    Ok(CodeWeightReport {
        n: field.n(),
        d: CodeSource::Exponent(d),
        n3: Some(n3),
        n4: pqs.len() as u64 - n3,
        method: CountMethod::Flats,
    })
}

/// Number of coordinate sets of size 3 (`weight == 3`) or 4 whose columns
/// sum to zero in both rows. The last coordinate of each set is forced by
/// the label row.
pub fn direct_weight_count(spec: &ParityCheckSpec, weight: u32) -> Result<u64> {
    let n = spec.field.n();
    let limit = match weight {
        3 => DIRECT_WEIGHT3_MAX_N,
        4 => DIRECT_WEIGHT4_MAX_N,
        _ => return Err(Error::Parameter(format!("weight must be 3 or 4, got {weight}"))),
    };
    if n > limit {
        return Err(Error::Capacity(format!(
            "weight-{weight} enumeration supports n <= {limit}, got n = {n}; use the flat-based count"
        )));
    }
    let pos: HashMap<u32, usize> = spec.labels.iter().enumerate().map(|(k, &l)| (l, k)).collect();
    let (lab, img) = (&spec.labels, &spec.images);
    let len = spec.len();
    let count = (0..len)
        .into_par_iter()
        .map(|i| {
            let mut c = 0u64;
            for j in i + 1..len {
                if weight == 3 {
                    if let Some(&k) = pos.get(&(lab[i] ^ lab[j])) {
                        if k > j && img[i] ^ img[j] ^ img[k] == 0 {
                            c += 1;
                        }
                    }
                    continue;
                }
                for k in j + 1..len {
                    if let Some(&l) = pos.get(&(lab[i] ^ lab[j] ^ lab[k])) {
                        if l > k && img[i] ^ img[j] ^ img[k] ^ img[l] == 0 {
                            c += 1;
                        }
                    }
                }
            }
            c
        })
        .sum();
    Ok(count)
}

/// Direct `(N3, N4)` for the cyclic code of `x^d`.
pub fn direct_low_weight_counts(field: FieldSpec, d: u64) -> Result<CodeWeightReport> {
    let spec = ParityCheckSpec::cyclic(field, d)?;
    Ok(CodeWeightReport {
        n: field.n(),
        d: CodeSource::Exponent(d),
        n3: Some(direct_weight_count(&spec, 3)?),
        n4: direct_weight_count(&spec, 4)?,
        method: CountMethod::Direct,
    })
}

/// Weight-4 count of the length-`2^n` code of `f`, equal to the number of
/// vanishing flats.
pub fn generalized_weight4_count(f: &FunctionTable) -> Result<CodeWeightReport> {
    Ok(CodeWeightReport {
        n: f.field().n(),
        d: CodeSource::GENERAL,
        n3: None,
        n4: vflats::count_via_spectrum(f)?,
        method: CountMethod::Flats,
    })
}

/// The same count by direct enumeration over the length-`2^n` code.
pub fn generalized_weight4_direct(f: &FunctionTable) -> Result<CodeWeightReport> {
    let spec = ParityCheckSpec::generalized(f)?;
    Ok(CodeWeightReport {
        n: f.field().n(),
        d: CodeSource::GENERAL,
        n3: None,
        n4: direct_weight_count(&spec, 4)?,
        method: CountMethod::Direct,
    })
}
