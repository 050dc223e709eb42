//! Oriented Fano planes: sign-flip orbits, flowmorphism, and Moreno's
//! octonion copies inside the sedenions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::cdalgebra::{CdAlgebra, Sign, Triple};
use crate::error::{Error, Result};
use crate::zerodiv::{Sedenions, TrioKind};

/// The seven octonion triples in cyclic order.
pub const CANONICAL_LINES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

/// Seven oriented lines over seven point labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FanoLabeling {
    lines: [[usize; 3]; 7],
}

fn rotate_min(l: [usize; 3]) -> [usize; 3] {
    let k = (0..3).min_by_key(|&i| l[i]).unwrap_or(0);
    [l[k], l[(k + 1) % 3], l[(k + 2) % 3]]
}

impl FanoLabeling {
    /// Validates the incidence axioms. Each line is stored rotated to start
    /// at its lowest label; lines are kept in the given order.
    pub fn new(lines: [[usize; 3]; 7]) -> Result<Self> {
        let mut points = BTreeSet::new();
        for l in &lines {
            if l[0] == l[1] || l[1] == l[2] || l[0] == l[2] {
                return Err(Error::InvalidLabeling("repeated point on a line"));
            }
            points.extend(l.iter().copied());
        }
        if points.len() != 7 {
            return Err(Error::InvalidLabeling("need exactly seven points"));
        }
        for p in &points {
            if lines.iter().filter(|l| l.contains(p)).count() != 3 {
                return Err(Error::InvalidLabeling(
                    "every point must lie on three lines",
                ));
            }
        }
        for i in 0..7 {
            for j in i + 1..7 {
                let common = lines[i].iter().filter(|p| lines[j].contains(p)).count();
                if common != 1 {
                    return Err(Error::InvalidLabeling("two lines must meet in one point"));
                }
            }
        }
        Ok(FanoLabeling {
            lines: lines.map(rotate_min),
        })
    }

    pub fn lines(&self) -> &[[usize; 3]; 7] {
        &self.lines
    }

    pub fn points(&self) -> [usize; 7] {
        let set: BTreeSet<usize> = self.lines.iter().flatten().copied().collect();
        let v: Vec<usize> = set.into_iter().collect();
        [v[0], v[1], v[2], v[3], v[4], v[5], v[6]]
    }

    pub fn line_through(&self, p: usize, q: usize) -> Option<[usize; 3]> {
        self.lines
            .iter()
            .copied()
            .find(|l| p != q && l.contains(&p) && l.contains(&q))
    }

    /// `+` when `p` is followed by `q` in their line's cyclic order.
    pub fn orientation(&self, p: usize, q: usize) -> Option<Sign> {
        let l = self.line_through(p, q)?;
        let i = l.iter().position(|x| *x == p)?;
        Some(if l[(i + 1) % 3] == q {
            Sign::Plus
        } else {
            Sign::Minus
        })
    }

    /// Lines whose cyclic order, from the lowest label, is not ascending.
    pub fn out_of_counting_order(&self) -> Vec<[usize; 3]> {
        self.lines.iter().copied().filter(|l| l[1] > l[2]).collect()
    }

    fn encode(&self) -> [[usize; 3]; 7] {
        let mut v = self.lines;
        v.sort_unstable();
        v
    }

    fn relabel(&self, map: &BTreeMap<usize, usize>) -> FanoLabeling {
        FanoLabeling {
            lines: self.lines.map(|l| rotate_min(l.map(|p| map[&p]))),
        }
    }
}

impl fmt::Display for FanoLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.lines.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "({}, {}, {})", l[0], l[1], l[2])?;
        }
        Ok(())
    }
}

pub fn canonical_fano() -> FanoLabeling {
    FanoLabeling::new(CANONICAL_LINES).expect("octonion triples form a Fano plane")
}

/// A set of unit labels whose signs are reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SignPattern {
    mask: u8,
}

impl SignPattern {
    pub fn new(flipped: &[usize]) -> Result<Self> {
        let mut mask = 0u8;
        for &u in flipped {
            if !(1..=7).contains(&u) {
                return Err(Error::IndexOutOfRange { index: u, dim: 8 });
            }
            mask |= 1 << (u - 1);
        }
        Ok(SignPattern { mask })
    }

    pub fn contains(&self, u: usize) -> bool {
        (1..=7).contains(&u) && self.mask & (1 << (u - 1)) != 0
    }

    pub fn flipped(&self) -> Vec<usize> {
        (1..=7).filter(|u| self.contains(*u)).collect()
    }

    /// All 128 patterns, by bitmask.
    pub fn all() -> impl Iterator<Item = SignPattern> {
        (0u8..128).map(|mask| SignPattern { mask })
    }
}

/// Reverses every line holding an odd number of flipped units.
pub fn apply_sign_pattern(l: &FanoLabeling, p: SignPattern) -> (FanoLabeling, usize) {
    let mut reversed = 0;
    let lines = l.lines.map(|line| {
        let odd = line.iter().filter(|u| p.contains(**u)).count() % 2 == 1;
        if odd {
            reversed += 1;
            rotate_min([line[0], line[2], line[1]])
        } else {
            line
        }
    });
    (FanoLabeling { lines }, reversed)
}

/// How many of the 128 patterns reverse each possible number of lines.
pub fn reversal_multiplicities() -> BTreeMap<usize, usize> {
    let base = canonical_fano();
    let mut out = BTreeMap::new();
    for p in SignPattern::all() {
        *out.entry(apply_sign_pattern(&base, p).1).or_default() += 1;
    }
    out
}

fn permutations7() -> Vec<[usize; 7]> {
    fn go(k: usize, cur: &mut [usize; 7], used: &mut [bool; 7], out: &mut Vec<[usize; 7]>) {
        if k == 7 {
            out.push(*cur);
            return;
        }
        for v in 0..7 {
            if !used[v] {
                used[v] = true;
                cur[k] = v;
                go(k + 1, cur, used, out);
                used[v] = false;
            }
        }
    }
    let mut out = Vec::with_capacity(5040);
    go(0, &mut [0; 7], &mut [false; 7], &mut out);
    out
}

fn unoriented(lines: &[[usize; 3]; 7]) -> BTreeSet<[usize; 3]> {
    lines
        .iter()
        .map(|l| {
            let mut s = *l;
            s.sort_unstable();
            s
        })
        .collect()
}

/// The 168 permutations of the points 1..=7 that preserve the canonical
/// line set, each as a map `p -> g[p - 1]`.
pub fn collineations() -> Vec<[usize; 7]> {
    let target = unoriented(&CANONICAL_LINES);
    permutations7()
        .into_iter()
        .map(|p| p.map(|v| v + 1))
        .filter(|g| {
            let mapped = CANONICAL_LINES.map(|l| l.map(|x| g[x - 1]));
            unoriented(&mapped) == target
        })
        .collect()
}

/// Some incidence-preserving bijection from `l`'s points onto 1..=7.
fn to_canonical_points(l: &FanoLabeling) -> Option<BTreeMap<usize, usize>> {
    let pts = l.points();
    let target = unoriented(&CANONICAL_LINES);
    permutations7().into_iter().find_map(|p| {
        let map: BTreeMap<usize, usize> = pts
            .iter()
            .zip(p.iter())
            .map(|(&k, &v)| (k, v + 1))
            .collect();
        let mapped = l.lines.map(|line| line.map(|x| map[&x]));
        (unoriented(&mapped) == target).then_some(map)
    })
}

/// Lexicographically least encoding of `l`'s oriented lines over all
/// relabelings onto the canonical points.
pub fn canonical_form(l: &FanoLabeling) -> Result<[[usize; 3]; 7]> {
    let phi = to_canonical_points(l).ok_or(Error::InvalidLabeling("not a Fano plane"))?;
    let base = l.relabel(&phi);
    let mut best: Option<[[usize; 3]; 7]> = None;
    for g in collineations() {
        let map: BTreeMap<usize, usize> = (1..=7).map(|p| (p, g[p - 1])).collect();
        let enc = base.relabel(&map).encode();
        if best.is_none_or(|b| enc < b) {
            best = Some(enc);
        }
    }
    best.ok_or(Error::InvalidLabeling("empty symmetry group"))
}

/// Whether some relabeling carries `l`'s arrows onto the octonion scheme.
pub fn is_flowmorphic(l: &FanoLabeling) -> Result<bool> {
    Ok(canonical_form(l)? == canonical_form(&canonical_fano())?)
}

// ---------------------------------------------------------------- Moreno copies

/// A signed basis unit `sign * e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SignedUnit {
    pub sign: Sign,
    pub index: usize,
}

impl SignedUnit {
    pub fn new(sign: Sign, index: usize) -> Self {
        SignedUnit { sign, index }
    }

    fn mul(self, other: SignedUnit, alg: &CdAlgebra) -> Result<SignedUnit> {
        let (s, i) = alg.mul_basis(self.index, other.index)?;
        Ok(SignedUnit {
            sign: self.sign * other.sign * s,
            index: i,
        })
    }
}

impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "{}", self.index),
            Sign::Minus => write!(f, "-{}", self.index),
        }
    }
}

/// The image of octonion slots 1..=7 under `(a, b, ab, (ay)b, yb, ay, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MorenoCopy {
    pub generators: [usize; 3],
    pub units: [SignedUnit; 7],
}

impl MorenoCopy {
    pub fn indices(&self) -> [usize; 7] {
        self.units.map(|u| u.index)
    }

    /// True when two co-assessors (same kite, not strut-opposite) lie
    /// inside the copy.
    pub fn harbors_zero_divisors(&self) -> bool {
        let idx = self.indices();
        let planes: Vec<(usize, usize)> = idx
            .iter()
            .flat_map(|&o| idx.iter().map(move |&s| (o, s)))
            .filter(|&(o, s)| (1..8).contains(&o) && s > 8 && s != o + 8)
            .collect();
        planes.iter().enumerate().any(|(i, &(o1, s1))| {
            planes[i + 1..]
                .iter()
                .any(|&(o2, s2)| o1 != o2 && o1 ^ s1 == o2 ^ s2 && o1 ^ o2 != o1 ^ s1 ^ 8)
        })
    }
}

impl fmt::Display for MorenoCopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, u) in self.units.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}")?;
        }
        f.write_str(")")
    }
}

pub fn moreno_copy(alg: &CdAlgebra, a: usize, b: usize, y: usize) -> Result<MorenoCopy> {
    let dim = alg.dim();
    for i in [a, b, y] {
        if i == 0 || i >= dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
    }
    if a == b || a == y || b == y {
        return Err(Error::InvalidArgument("generators must be distinct"));
    }
    let (ua, ub, uy) = (
        SignedUnit::new(Sign::Plus, a),
        SignedUnit::new(Sign::Plus, b),
        SignedUnit::new(Sign::Plus, y),
    );
    let ay = ua.mul(uy, alg)?;
    let yb = uy.mul(ub, alg)?;
    let left = ay.mul(ub, alg)?;
    let right = ua.mul(yb, alg)?;
    if left.index != right.index || left.sign == right.sign {
        return Err(Error::NotAntiAssociative {
            left: left.sign.to_i64() as i8,
            right: right.sign.to_i64() as i8,
        });
    }
    let ab = ua.mul(ub, alg)?;
    Ok(MorenoCopy {
        generators: [a, b, y],
        units: [ua, ub, ab, left, yb, ay, uy],
    })
}

/// Octonion slots whose image product carries the wrong sign.
pub fn missigned_triples(alg: &CdAlgebra, copy: &MorenoCopy) -> Result<Vec<Triple>> {
    let mut out = Vec::new();
    for [i, j, k] in CANONICAL_LINES {
        let p = copy.units[i - 1].mul(copy.units[j - 1], alg)?;
        let want = copy.units[k - 1];
        if p.index != want.index {
            return Err(Error::InvalidArgument(
                "image is not closed under multiplication",
            ));
        }
        if p.sign != want.sign {
            out.push(Triple { a: i, b: j, c: k });
        }
    }
    Ok(out)
}

/// The orientation the table itself gives the copy's seven units.
pub fn labeling_of_copy(alg: &CdAlgebra, copy: &MorenoCopy) -> Result<FanoLabeling> {
    let idx = copy.indices();
    let mut lines = [[0usize; 3]; 7];
    for (n, [i, j, _]) in CANONICAL_LINES.iter().enumerate() {
        let (p, q) = (idx[i - 1], idx[j - 1]);
        let t = alg.triple_through(p, q)?;
        lines[n] = t.as_array();
    }
    FanoLabeling::new(lines)
}

/// The table's own labeling of an arbitrary 7-unit subalgebra, given by
/// three generators that do not lie on one triple.
pub fn labeling_of_units(alg: &CdAlgebra, units: [usize; 7]) -> Result<FanoLabeling> {
    let mut lines = BTreeSet::new();
    for &p in &units {
        for &q in &units {
            if p < q {
                let t = alg.triple_through(p, q)?;
                if !units.contains(&t.c) || !units.contains(&t.a) || !units.contains(&t.b) {
                    return Err(Error::InvalidLabeling(
                        "units are not closed under products",
                    ));
                }
                lines.insert(t.as_array());
            }
        }
    }
    let v: Vec<[usize; 3]> = lines.into_iter().collect();
    let arr =
        <[[usize; 3]; 7]>::try_from(v).map_err(|_| Error::InvalidLabeling("need seven lines"))?;
    FanoLabeling::new(arr)
}

/// The seven copies `(a, b, 8)` built on each O-trip's first two units.
pub fn eight_ball_copies(alg: &CdAlgebra) -> Result<Vec<MorenoCopy>> {
    CANONICAL_LINES
        .iter()
        .map(|[a, b, _]| moreno_copy(alg, *a, *b, 8))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MorenoScan {
    pub inputs: usize,
    pub harboring: usize,
    /// Harboring copies whose conflicts are exactly slots (3,4,7), (3,6,5).
    pub harboring_expected: usize,
    pub clean: usize,
    /// Copies free of zero-divisors that have no conflicts.
    pub clean_expected: usize,
    /// `(a, b, y)` inputs that broke a precondition or the expected pattern.
    pub anomalies: Vec<[usize; 3]>,
}

/// Every `a != b` in 1..=7 with `y` in 8..=15.
pub fn moreno_scan(alg: &CdAlgebra) -> MorenoScan {
    let expected = [Triple { a: 3, b: 4, c: 7 }, Triple { a: 3, b: 6, c: 5 }];
    let mut scan = MorenoScan {
        inputs: 0,
        harboring: 0,
        harboring_expected: 0,
        clean: 0,
        clean_expected: 0,
        anomalies: Vec::new(),
    };
    for a in 1..8 {
        for b in 1..8 {
            if a == b {
                continue;
            }
            for y in 8..16 {
                scan.inputs += 1;
                let outcome = moreno_copy(alg, a, b, y).and_then(|c| {
                    missigned_triples(alg, &c).map(|m| (c.harbors_zero_divisors(), m))
                });
                match outcome {
                    Ok((true, m)) => {
                        scan.harboring += 1;
                        if m == expected {
                            scan.harboring_expected += 1;
                        } else {
                            scan.anomalies.push([a, b, y]);
                        }
                    }
                    Ok((false, m)) => {
                        scan.clean += 1;
                        if m.is_empty() {
                            scan.clean_expected += 1;
                        } else {
                            scan.anomalies.push([a, b, y]);
                        }
                    }
                    Err(_) => scan.anomalies.push([a, b, y]),
                }
            }
        }
    }
    scan
}

// ---------------------------------------------------------------- counting order

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CountingOrderReport {
    /// Out-of-order lines of the unflipped table.
    pub canonical: Vec<[usize; 3]>,
    /// Out-of-order lines after flipping unit 6.
    pub flip_six: Vec<[usize; 3]>,
    pub minimum: usize,
    /// Patterns attaining the minimum.
    pub minimizers: Vec<SignPattern>,
    pub zero_attainable: bool,
    pub reversal_counts: BTreeMap<usize, usize>,
}

pub fn counting_order_search() -> CountingOrderReport {
    let base = canonical_fano();
    let mut minimum = usize::MAX;
    let mut minimizers = Vec::new();
    for p in SignPattern::all() {
        let n = apply_sign_pattern(&base, p).0.out_of_counting_order().len();
        if n < minimum {
            minimum = n;
            minimizers.clear();
        }
        if n == minimum {
            minimizers.push(p);
        }
    }
    let six = SignPattern::new(&[6]).expect("6 is a valid unit");
    CountingOrderReport {
        canonical: base.out_of_counting_order(),
        flip_six: apply_sign_pattern(&base, six).0.out_of_counting_order(),
        minimum,
        minimizers,
        zero_attainable: minimum == 0,
        reversal_counts: reversal_multiplicities(),
    }
}

/// Trio kinds per kite after reversing the sign of some units; relabeling
/// units changes which crossover pattern each trio shows.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResignProbe {
    pub flipped: Vec<usize>,
    /// Zigzag count among each kite's four sails, kites I..VII.
    pub zigzags_per_kite: [usize; 7],
    pub assessors: usize,
    pub couplings: usize,
}

pub fn resign_probe(flipped: &[usize]) -> Result<ResignProbe> {
    let alg = CdAlgebra::new(4)?.resigned(flipped)?;
    let sed = Sedenions::from_algebra(alg)?;
    let mut zigzags_per_kite = [0; 7];
    for t in sed.enumerate_trios() {
        if t.kind == TrioKind::Zigzag {
            let k = t.members[0].kite() as usize;
            if (1..=7).contains(&k) {
                zigzags_per_kite[k - 1] += 1;
            }
        }
    }
    Ok(ResignProbe {
        flipped: flipped.to_vec(),
        zigzags_per_kite,
        assessors: sed.enumerate_assessors().len(),
        couplings: sed.enumerate_couplings().len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sed_alg() -> CdAlgebra {
        CdAlgebra::new(4).unwrap()
    }

    #[test]
    fn fano_axioms() {
        let f = canonical_fano();
        assert!(f.lines().contains(&[1, 7, 6]));
        assert_eq!(f.line_through(2, 5), Some([2, 5, 7]));
        assert_eq!(f.orientation(7, 6), Some(Sign::Plus));
        assert_eq!(f.orientation(6, 7), Some(Sign::Minus));
        let bad = [
            [1, 2, 3],
            [1, 2, 4],
            [1, 7, 6],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 6, 5],
        ];
        assert!(FanoLabeling::new(bad).is_err());
    }

    #[test]
    fn sign_flips() {
        let f = canonical_fano();
        let (g, n) = apply_sign_pattern(&f, SignPattern::new(&[6]).unwrap());
        assert_eq!(n, 3);
        for l in [[1, 6, 7], [3, 5, 6], [2, 6, 4]] {
            assert!(g.lines().contains(&l));
        }
        assert_eq!(apply_sign_pattern(&f, SignPattern::default()).1, 0);
        assert_eq!(
            apply_sign_pattern(&f, SignPattern::new(&[1, 2, 3]).unwrap()).1,
            7
        );
        let m = reversal_multiplicities();
        assert_eq!(m.keys().copied().collect::<Vec<_>>(), [0, 3, 4, 7]);
        assert_eq!(m.values().sum::<usize>(), 128);
        assert!(SignPattern::new(&[8]).is_err());
    }

    #[test]
    fn collineation_group() {
        assert_eq!(collineations().len(), 168);
    }

    #[test]
    fn moreno_example() {
        let alg = sed_alg();
        let c = moreno_copy(&alg, 1, 2, 12).unwrap();
        assert_eq!(alloc::format!("{c}"), "(1, 2, 3, -15, 14, -13, 12)");
        let m = missigned_triples(&alg, &c).unwrap();
        assert_eq!(
            m,
            [Triple { a: 3, b: 4, c: 7 }, Triple { a: 3, b: 6, c: 5 }]
        );
        let o = moreno_copy(&alg, 1, 2, 7).unwrap();
        assert_eq!(o.indices(), [1, 2, 3, 4, 5, 6, 7]);
        assert!(missigned_triples(&alg, &o).unwrap().is_empty());
        assert!(matches!(
            moreno_copy(&alg, 1, 2, 3),
            Err(Error::NotAntiAssociative { .. })
        ));
    }

    #[test]
    fn flowmorphism() {
        let alg = sed_alg();
        assert!(is_flowmorphic(&canonical_fano()).unwrap());
        for c in eight_ball_copies(&alg).unwrap() {
            assert!(missigned_triples(&alg, &c).unwrap().is_empty());
            assert!(is_flowmorphic(&labeling_of_copy(&alg, &c).unwrap()).unwrap());
        }
        let goto1 = labeling_of_units(&alg, [1, 2, 3, 12, 13, 14, 15]).unwrap();
        assert!(!is_flowmorphic(&goto1).unwrap());
    }

    #[test]
    fn counting_order() {
        let r = counting_order_search();
        assert_eq!(r.canonical, [[1, 7, 6], [3, 6, 5]]);
        assert_eq!(r.flip_six, [[2, 6, 4]]);
        assert_eq!(r.minimum, 1);
        assert!(!r.zero_attainable);
    }
}
