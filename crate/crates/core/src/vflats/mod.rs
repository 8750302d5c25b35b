//! Vanishing flats and the partial quadruple system of a function.
//!
//! A block is a 2-dimensional flat `{x1, x2, x3, x4}` of GF(2^n)
//! (`x1 + x2 + x3 + x4 = 0`, all distinct); it vanishes for `f` when
//! `f(x1) + f(x2) + f(x3) + f(x4) = 0`.

pub mod closed_form;
pub mod table2;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfunc::FunctionTable;
use crate::error::{Error, Result};
use crate::gf2n::FieldSpec;

pub use closed_form::{closed_form_count, PowerFamily};

/// A 2-flat stored as its ascending 4-tuple of encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Flat([u32; 4]);

impl Flat {
    /// Validates and canonicalises four points.
    pub fn new(points: [u32; 4]) -> Result<Flat> {
        let mut p = points;
        p.sort_unstable();
        if p[0] == p[1] || p[1] == p[2] || p[2] == p[3] {
            return Err(Error::Domain(format!("flat points {points:?} are not distinct")));
        }
        if p[0] ^ p[1] ^ p[2] ^ p[3] != 0 {
            return Err(Error::Domain(format!("points {points:?} do not sum to zero")));
        }
        Ok(Flat(p))
    }

    #[inline]
    fn from_pairs(x: u32, y: u32, a: u32) -> Flat {
        let mut p = [x, x ^ a, y, y ^ a];
        p.sort_unstable();
        Flat(p)
    }

    pub fn points(&self) -> [u32; 4] {
        self.0
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.contains(&x)
    }

    /// The three nonzero differences `x1 + x2, x1 + x3, x1 + x4`, i.e. the
    /// nonzero part of the linear part, sorted.
    pub fn directions(&self) -> [u32; 3] {
        let [x1, x2, x3, x4] = self.0;
        let mut d = [x1 ^ x2, x1 ^ x3, x1 ^ x4];
        d.sort_unstable();
        d
    }

    pub fn translate(&self, c: u32) -> Flat {
        let [x1, x2, x3, _] = self.0;
        Flat::from_pairs(x1 ^ c, x3 ^ c, x1 ^ x2)
    }

    pub fn is_vanishing(&self, f: &FunctionTable) -> bool {
        self.0.iter().fold(0, |acc, &x| acc ^ f.eval(x)) == 0
    }
}

impl TryFrom<[u32; 4]> for Flat {
    type Error = Error;

    fn try_from(points: [u32; 4]) -> Result<Flat> {
        Flat::new(points)
    }
}

impl<'de> Deserialize<'de> for Flat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let points = <[u32; 4]>::deserialize(d)?;
        Flat::new(points).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a} {b} {c} {d}")
    }
}

/// The point set GF(2^n) together with a sorted, duplicate-free block list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialQuadrupleSystem {
    field: FieldSpec,
    blocks: Vec<Flat>,
}

#[derive(Serialize, Deserialize)]
struct PqsRecord {
    field: FieldSpec,
    block_count: usize,
    blocks: Vec<Flat>,
}

impl Serialize for PartialQuadrupleSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PqsRecord {
            field: self.field,
            block_count: self.blocks.len(),
            blocks: self.blocks.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartialQuadrupleSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = PqsRecord::deserialize(d)?;
        if rec.block_count != rec.blocks.len() {
            return Err(D::Error::custom("block_count does not match blocks"));
        }
        PartialQuadrupleSystem::new(rec.field, rec.blocks).map_err(D::Error::custom)
    }
}

impl PartialQuadrupleSystem {
    /// Sorts and deduplicates `blocks`; every point must lie in the field.
    pub fn new(field: FieldSpec, mut blocks: Vec<Flat>) -> Result<Self> {
        for b in &blocks {
            for &p in &b.0 {
                field.check(p)?;
            }
        }
        blocks.par_sort_unstable();
        blocks.dedup();
        Ok(PartialQuadrupleSystem { field, blocks })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn blocks(&self) -> &[Flat] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, block: &Flat) -> bool {
        self.blocks.binary_search(block).is_ok()
    }

    pub fn blocks_containing(&self, x: u32) -> impl Iterator<Item = &Flat> + '_ {
        self.blocks.iter().filter(move |b| b.contains(x))
    }

    /// Nonzero directions `a` occurring as a difference inside some block.
    pub fn induced_directions(&self) -> std::collections::BTreeSet<u32> {
        self.blocks.iter().flat_map(|b| b.directions()).collect()
    }

    /// One block per line, points separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.blocks.len() * 16);
        for b in &self.blocks {
            out.push_str(&b.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(field: FieldSpec, text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Vec<u32> = line
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            let pts: [u32; 4] = nums
                .try_into()
                .map_err(|_| Error::Parse(format!("line {}: expected 4 points", lineno + 1)))?;
            blocks.push(Flat::new(pts)?);
        }
        Self::new(field, blocks)
    }
}

/// Buckets the pair representatives `x < x + a` by derivative value using a
/// counting sort; `emit` receives each bucket as a slice.
struct DirectionBuckets {
    count: Vec<u32>,
    start: Vec<u32>,
    order: Vec<u32>,
}

impl DirectionBuckets {
    fn new(size: usize) -> Self {
        DirectionBuckets {
            count: vec![0; size],
            start: vec![0; size + 1],
            order: vec![0; size / 2],
        }
    }

    fn fill(&mut self, f: &FunctionTable, a: u32) {
        let size = self.count.len() as u32;
        self.count.iter_mut().for_each(|c| *c = 0);
        for x in 0..size {
            if x < x ^ a {
                self.count[f.derivative(a, x) as usize] += 1;
            }
        }
        let mut acc = 0;
        for b in 0..size as usize {
            self.start[b] = acc;
            acc += self.count[b];
        }
        self.start[size as usize] = acc;
        let mut cursor = self.start.clone();
        for x in 0..size {
            if x < x ^ a {
                let b = f.derivative(a, x) as usize;
                self.order[cursor[b] as usize] = x;
                cursor[b] += 1;
            }
        }
    }

    fn for_each_bucket(&self, mut visit: impl FnMut(&[u32])) {
        for b in 0..self.count.len() {
            if self.count[b] >= 2 {
                let lo = self.start[b] as usize;
                let hi = self.start[b + 1] as usize;
                visit(&self.order[lo..hi]);
            }
        }
    }
}

/// All vanishing flats of `f`.
///
/// Each flat `{x, x+a, y, y+a}` is found once per direction among its three
/// nonzero differences; it is emitted only from the smallest one, so the
/// per-direction outputs are disjoint. Directions are processed in
/// parallel and the result is sorted.
pub fn enumerate(f: &FunctionTable) -> PartialQuadrupleSystem {
    let field = f.field();
    let size = field.size();
    let mut blocks: Vec<Flat> = (1..size as u32)
        .into_par_iter()
        .map_init(
            || DirectionBuckets::new(size),
            |buckets, a| {
                buckets.fill(f, a);
                let mut out = Vec::new();
                buckets.for_each_bucket(|reps| {
                    for (i, &x) in reps.iter().enumerate() {
                        for &y in &reps[i + 1..] {
                            let u = x ^ y;
                            if a < u && a < (u ^ a) {
                                out.push(Flat::from_pairs(x, y, a));
                            }
                        }
                    }
                });
                out
            },
        )
        .flatten()
        .collect();
    blocks.par_sort_unstable();
    PartialQuadrupleSystem { field, blocks }
}

/// Enumeration without the smallest-direction filter: every flat is
/// produced once per direction it contains. Returns the block system and a
/// histogram `multiplicity -> number of blocks`, which is `{3: |VB|}`.
pub fn enumerate_with_multiplicities(
    f: &FunctionTable,
) -> (PartialQuadrupleSystem, BTreeMap<usize, usize>) {
    let field = f.field();
    let size = field.size();
    let mut raw: Vec<Flat> = Vec::new();
    let mut buckets = DirectionBuckets::new(size);
    for a in 1..size as u32 {
        buckets.fill(f, a);
        buckets.for_each_bucket(|reps| {
            for (i, &x) in reps.iter().enumerate() {
                for &y in &reps[i + 1..] {
                    raw.push(Flat::from_pairs(x, y, a));
                }
            }
        });
    }
    raw.sort_unstable();
    let mut hist = BTreeMap::new();
    let mut blocks = Vec::new();
    for chunk in raw.chunk_by(|p, q| p == q) {
        *hist.entry(chunk.len()).or_default() += 1;
        blocks.push(chunk[0]);
    }
    (PartialQuadrupleSystem { field, blocks }, hist)
}

/// `|VB_{n,f}|` from the differential spectrum alone.
pub fn count_via_spectrum(f: &FunctionTable) -> Result<u64> {
    f.spectrum().vanishing_flat_count()
}

/// Number of vanishing flats containing both `x` and `x + a`:
/// `delta_f(a, f(x+a) + f(x)) / 2 - 1`.
pub fn flats_through_pair(f: &FunctionTable, x: u32, a: u32) -> Result<u32> {
    f.field().check(x)?;
    let d = f.delta(a, f.derivative(a, x))?;
    Ok(d / 2 - 1)
}

/// Lower and upper bounds on the number of vanishing flats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: u64,
    pub upper: u64,
}

impl Bounds {
    pub fn contains(&self, count: u64) -> bool {
        self.lower <= count && count <= self.upper
    }
}

/// `|B_n| = 2^(n-2) (2^(n-1) - 1) (2^n - 1) / 3`, the number of 2-flats.
pub fn total_flats(n: u32) -> u64 {
    let q = 1u64 << n;
    (q / 4) * (q / 2 - 1) * (q - 1) / 3
}

/// Bounds on `|VB_{n,f}|`. A non-APN monomial needs every nonzero
/// direction covered, each flat covering three, giving
/// `ceil((2^n - 1) / 3)`; otherwise the lower bound is 0. The upper bound
/// is the number of all 2-flats.
pub fn bounds(f: &FunctionTable, is_monomial: bool) -> Bounds {
    let n = f.field().n();
    let lower = if is_monomial && !f.is_apn() {
        ((1u64 << n) - 1).div_ceil(3)
    } else {
        0
    };
    Bounds {
        lower,
        upper: total_flats(n),
    }
}

/// Applies a point permutation to every block. The permutation must be a
/// bijection of the field and must send each block to a 2-flat.
pub fn map_blocks(
    pqs: &PartialQuadrupleSystem,
    perm: &[u32],
) -> Result<PartialQuadrupleSystem> {
    let field = pqs.field;
    if perm.len() != field.size() {
        return Err(Error::TableLength {
            expected: field.size(),
            got: perm.len(),
        });
    }
    let table = FunctionTable::new(field, perm.to_vec())?;
    if !table.is_permutation() {
        return Err(Error::NotPermutation);
    }
    let blocks = pqs
        .blocks
        .iter()
        .map(|b| {
            let [a, c, d, e] = b.0;
            Flat::new([perm[a as usize], perm[c as usize], perm[d as usize], perm[e as usize]])
                .map_err(|_| Error::Precondition(format!("image of block {b} is not a 2-flat")))
        })
        .collect::<Result<Vec<_>>>()?;
    PartialQuadrupleSystem::new(field, blocks)
}

/// True iff `perm` maps the blocks of `p` exactly onto the blocks of `q`.
pub fn isomorphism_witness_check(
    p: &PartialQuadrupleSystem,
    q: &PartialQuadrupleSystem,
    perm: &[u32],
) -> bool {
    if p.field != q.field || p.len() != q.len() {
        return false;
    }
    matches!(map_blocks(p, perm), Ok(image) if image.blocks == q.blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;

    fn gf(n: u32) -> FieldSpec {
        FieldSpec::with_default_modulus(n).unwrap()
    }

    /// Brute-force oracle: test every 2-flat directly.
    fn brute_force_blocks(f: &FunctionTable) -> Vec<Flat> {
        let q = f.field().size() as u32;
        let mut out = Vec::new();
        for x1 in 0..q {
            for x2 in x1 + 1..q {
                for x3 in x2 + 1..q {
                    let x4 = x1 ^ x2 ^ x3;
                    if x4 > x3 && f.eval(x1) ^ f.eval(x2) ^ f.eval(x3) ^ f.eval(x4) == 0 {
                        out.push(Flat([x1, x2, x3, x4]));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn flat_validation() {
        assert!(Flat::new([0, 1, 2, 3]).is_ok());
        assert!(Flat::new([0, 1, 2, 4]).is_err());
        assert!(Flat::new([1, 1, 0, 0]).is_err());
        let f = Flat::new([3, 2, 1, 0]).unwrap();
        assert_eq!(f.points(), [0, 1, 2, 3]);
        assert_eq!(f.directions(), [1, 2, 3]);
        assert_eq!(f.translate(4).points(), [4, 5, 6, 7]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 2..=5 {
            let field = gf(n);
            for seed in 0..20 {
                let f = sample::random_table(field, seed);
                assert_eq!(enumerate(&f).blocks, brute_force_blocks(&f), "n={n} seed={seed}");
            }
            for d in 1..field.group_order() as u64 {
                let f = FunctionTable::from_monomial(field, d).unwrap();
                assert_eq!(enumerate(&f).blocks, brute_force_blocks(&f));
            }
        }
    }

    #[test]
    fn small_examples() {
        let x3 = FunctionTable::from_monomial(gf(3), 3).unwrap();
        assert!(enumerate(&x3).is_empty());

        let f4 = gf(2);
        let id = enumerate(&FunctionTable::identity(f4));
        assert_eq!(id.blocks(), &[Flat([0, 1, 2, 3])]);

        let f16 = gf(4);
        let inv = enumerate(&FunctionTable::from_monomial(f16, 14).unwrap());
        assert_eq!(inv.len(), 5);
        let zeta = f16.cube_root_of_unity().unwrap();
        for b in inv.blocks() {
            assert_eq!(b.points()[0], 0);
            let beta = b.points()[1];
            let expected =
                Flat::new([0, beta, f16.mul(beta, zeta), f16.mul(beta, f16.square(zeta))]).unwrap();
            assert_eq!(*b, expected);
        }
    }

    #[test]
    fn each_block_is_found_from_three_directions() {
        for n in 3..=6 {
            for seed in 0..5 {
                let f = sample::random_table(gf(n), 100 + seed);
                let (pqs, hist) = enumerate_with_multiplicities(&f);
                assert_eq!(pqs, enumerate(&f));
                if !pqs.is_empty() {
                    assert_eq!(hist, BTreeMap::from([(3, pqs.len())]));
                }
            }
        }
    }

    #[test]
    fn spectrum_count_matches_enumeration() {
        for n in 2..=7 {
            for seed in 0..10 {
                let f = sample::random_table(gf(n), seed);
                assert_eq!(count_via_spectrum(&f).unwrap(), enumerate(&f).len() as u64);
            }
        }
        let x5 = FunctionTable::from_monomial(gf(6), 5).unwrap();
        assert_eq!(count_via_spectrum(&x5).unwrap(), 336);
        let x127 = FunctionTable::from_monomial(gf(8), 127).unwrap();
        assert_eq!(count_via_spectrum(&x127).unwrap(), 85);
        let apn = FunctionTable::from_monomial(gf(7), 3).unwrap();
        assert_eq!(count_via_spectrum(&apn).unwrap(), 0);
    }

    #[test]
    fn pair_counts_match_enumeration() {
        for (n, seed) in [(4, 1u64), (5, 2), (6, 3)] {
            let f = sample::random_table(gf(n), seed);
            let pqs = enumerate(&f);
            let q = f.field().size() as u32;
            for x in 0..q {
                for a in 1..q {
                    let direct = pqs
                        .blocks()
                        .iter()
                        .filter(|b| b.contains(x) && b.contains(x ^ a))
                        .count() as u32;
                    assert_eq!(flats_through_pair(&f, x, a).unwrap(), direct);
                }
            }
        }
        let field = gf(6);
        let x9 = FunctionTable::from_monomial(field, 9).unwrap();
        for a in 1..64 {
            assert_eq!(flats_through_pair(&x9, 0, a).unwrap(), 3);
        }
        let id = FunctionTable::identity(field);
        assert_eq!(flats_through_pair(&id, 7, 9).unwrap(), 31);
        assert!(flats_through_pair(&id, 7, 0).is_err());
    }

    #[test]
    fn induced_directions_are_critical() {
        for seed in 0..10 {
            let f = sample::random_table(gf(5), seed);
            let pqs = enumerate(&f);
            let spec = f.spectrum();
            for b in pqs.blocks() {
                for a in b.directions() {
                    assert!(spec.direction_uniformity(a).unwrap() >= 4);
                }
            }
            assert_eq!(pqs.induced_directions(), spec.critical_directions());
        }
    }

    #[test]
    fn bounds_examples() {
        let inv = FunctionTable::from_monomial(gf(4), 14).unwrap();
        let b = bounds(&inv, true);
        assert_eq!(b.lower, 5);
        assert_eq!(enumerate(&inv).len() as u64, b.lower);
        let id5 = FunctionTable::identity(gf(5));
        assert_eq!(bounds(&id5, true).lower, 11);
        let apn = FunctionTable::from_monomial(gf(5), 7).unwrap();
        assert_eq!(bounds(&apn, true).lower, 0);
        for n in [2u32, 4, 6] {
            let id = FunctionTable::identity(gf(n));
            assert_eq!(enumerate(&id).len() as u64, bounds(&id, true).upper);
        }
        assert_eq!(total_flats(3), 14);
        assert_eq!(bounds(&sample::random_table(gf(5), 0), false).lower, 0);
    }

    #[test]
    fn affine_addition_keeps_blocks() {
        let mut rng = sample::rng(5);
        for seed in 0..10 {
            let f = sample::random_table(gf(5), seed);
            let a = sample::random_affine_table(gf(5), &mut rng);
            assert_eq!(enumerate(&f), enumerate(&f.add(&a).unwrap()));
        }
    }

    #[test]
    fn map_blocks_identity_and_translation() {
        let field = gf(6);
        let f = FunctionTable::from_monomial(field, 9).unwrap();
        let pqs = enumerate(&f);
        let id: Vec<u32> = (0..64).collect();
        assert_eq!(map_blocks(&pqs, &id).unwrap(), pqs);
        assert!(isomorphism_witness_check(&pqs, &pqs, &id));
        for c in [1u32, 17, 63] {
            let shift: Vec<u32> = (0..64).map(|x| x ^ c).collect();
            assert_eq!(map_blocks(&pqs, &shift).unwrap(), pqs);
        }
        let not_bij = vec![0u32; 64];
        assert_eq!(map_blocks(&pqs, &not_bij), Err(Error::NotPermutation));
        assert!(!isomorphism_witness_check(&pqs, &pqs, &not_bij));
    }

    #[test]
    fn text_and_json_round_trip() {
        let f = sample::random_table(gf(4), 11);
        let pqs = enumerate(&f);
        let text = pqs.to_text();
        assert_eq!(PartialQuadrupleSystem::from_text(f.field(), &text).unwrap(), pqs);
        let json = serde_json::to_string(&pqs).unwrap();
        let back: PartialQuadrupleSystem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pqs);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["block_count"], pqs.len());
    }
}
