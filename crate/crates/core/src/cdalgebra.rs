//! Cayley-Dickson 2^N-ions with XOR-compatible basis indexing.
//!
//! Basis units are indexed `0..2^N`, index 0 being the real unit. The
//! product of two units is always `e_i * e_j = sign(i, j) * e_{i ^ j}`; only
//! the sign table depends on the doubling convention. [`CdAlgebra`] stores
//! that table, [`Element`] is an exact sparse integer combination of units
//! used for every zero test, and [`DenseElement`] is the floating-point
//! carrier used for the power-law and circular-orbit checks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest doubling depth accepted by [`CdAlgebra::new`].
pub const MAX_DIM_EXP: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Which form of the doubling product builds the next algebra.
///
/// Writing an element of the doubled algebra as a pair `(a, b)`:
///
/// * `Canonical`: `(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))`
/// * `Mirrored`:  `(a, b)(c, d) = (ac - d conj(b), conj(a) d + c b)`
///
/// Both give valid 2^N-ions with XOR indexing. Only `Canonical` reproduces
/// the classic 16x16 sedenion table used throughout this crate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DoublingRule {
    #[default]
    Canonical,
    Mirrored,
}

fn conj_sign(i: usize) -> i8 {
    if i == 0 {
        1
    } else {
        -1
    }
}

fn doubling_sign(rule: DoublingRule, i: usize, j: usize, n: u32) -> i8 {
    if n == 0 {
        return 1;
    }
    let h = 1usize << (n - 1);
    match (i < h, j < h) {
        (true, true) => doubling_sign(rule, i, j, n - 1),
        // left is (a, 0), right is (0, d)
        (true, false) => {
            let (a, d) = (i, j - h);
            match rule {
                DoublingRule::Canonical => doubling_sign(rule, d, a, n - 1),
                DoublingRule::Mirrored => conj_sign(a) * doubling_sign(rule, a, d, n - 1),
            }
        }
        // left is (0, b), right is (c, 0)
        (false, true) => {
            let (b, c) = (i - h, j);
            match rule {
                DoublingRule::Canonical => doubling_sign(rule, b, c, n - 1) * conj_sign(c),
                DoublingRule::Mirrored => doubling_sign(rule, c, b, n - 1),
            }
        }
        // left is (0, b), right is (0, d)
        (false, false) => {
            let (b, d) = (i - h, j - h);
            match rule {
                DoublingRule::Canonical => -conj_sign(d) * doubling_sign(rule, d, b, n - 1),
                DoublingRule::Mirrored => -doubling_sign(rule, d, b, n - 1) * conj_sign(b),
            }
        }
    }
}

/// Multiplication rule of the 2^N-ions: a full sign table over the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdAlgebra {
    dim_exp: u32,
    dim: usize,
    // row-major, true where e_i e_j carries a minus sign
    minus: Vec<bool>,
}

impl CdAlgebra {
    /// Builds the 2^`dim_exp`-ions with the canonical doubling rule.
    pub fn new(dim_exp: u32) -> Result<Self> {
        Self::with_rule(dim_exp, DoublingRule::Canonical, MAX_DIM_EXP)
    }

    /// Builds with an explicit doubling rule and depth cap.
    pub fn with_rule(dim_exp: u32, rule: DoublingRule, max_dim_exp: u32) -> Result<Self> {
        if dim_exp == 0 || dim_exp > max_dim_exp {
            return Err(Error::DimensionOutOfRange {
                dim_exp,
                max: max_dim_exp,
            });
        }
        let dim = 1usize << dim_exp;
        let mut minus = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                minus.push(doubling_sign(rule, i, j, dim_exp) < 0);
            }
        }
        Ok(CdAlgebra {
            dim_exp,
            dim,
            minus,
        })
    }

    /// The same algebra after replacing each unit `e_k`, `k` in `flipped`,
    /// by `-e_k`. Index law and unit squares are untouched; only the
    /// orientation of triples through the flipped units changes.
    pub fn resigned(&self, flipped: &[usize]) -> Result<Self> {
        let mut flip = alloc::vec![false; self.dim];
        for &k in flipped {
            if k == 0 {
                return Err(Error::InvalidArgument("the real unit cannot be re-signed"));
            }
            self.check_index(k)?;
            flip[k] = true;
        }
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let odd = flip[i] ^ flip[j] ^ flip[i ^ j];
                if odd {
                    let cell = &mut out.minus[i * self.dim + j];
                    *cell = !*cell;
                }
            }
        }
        Ok(out)
    }

    pub fn dim_exp(&self) -> u32 {
        self.dim_exp
    }

    /// Number of basis units, `2^N`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim,
            })
        }
    }

    /// Sign of `e_i e_j`. Indices must be in range.
    #[inline]
    pub fn sign(&self, i: usize, j: usize) -> Sign {
        if self.minus[i * self.dim + j] {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// `e_i e_j = sign * e_index`.
    pub fn mul_basis(&self, i: usize, j: usize) -> Result<(Sign, usize)> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok((self.sign(i, j), i ^ j))
    }

    pub fn unit(&self, i: usize) -> Result<Element> {
        self.check_index(i)?;
        Ok(Element::unit(self.dim, i))
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim)
    }

    /// Exact bilinear product.
    pub fn mul_element(&self, x: &Element, y: &Element) -> Result<Element> {
        for e in [x, y] {
            if e.dim != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: e.dim,
                });
            }
        }
        let mut out = Element::zero(self.dim);
        for (&i, &a) in &x.coeffs {
            for (&j, &b) in &y.coeffs {
                let c = a * b * self.sign(i, j).to_i64();
                out.add_term(i ^ j, c);
            }
        }
        Ok(out)
    }

    /// Dense floating-point product.
    pub fn mul_dense(&self, x: &DenseElement, y: &DenseElement) -> Result<DenseElement> {
        for e in [x, y] {
            if e.coeffs.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: e.coeffs.len(),
                });
            }
        }
        let mut out = alloc::vec![0.0; self.dim];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                if b == 0.0 {
                    continue;
                }
                let p = a * b;
                if self.minus[i * self.dim + j] {
                    out[i ^ j] -= p;
                } else {
                    out[i ^ j] += p;
                }
            }
        }
        Ok(DenseElement { coeffs: out })
    }

    /// Left-nested power `x (x (... x))` with `p` factors.
    pub fn pow_element(&self, x: &DenseElement, p: u32) -> Result<DenseElement> {
        if p == 0 {
            return Err(Error::InvalidArgument("power must be at least 1"));
        }
        if x.coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument("coefficients must be finite"));
        }
        let mut acc = x.clone();
        for _ in 1..p {
            acc = self.mul_dense(x, &acc)?;
        }
        Ok(acc)
    }

    /// All associative triples in canonical cyclic form, sorted.
    pub fn triples(&self) -> Vec<Triple> {
        let mut out = Vec::new();
        for a in 1..self.dim {
            for x in (a + 1)..self.dim {
                let y = a ^ x;
                if y <= x {
                    continue;
                }
                // a is the lowest member; put first the partner giving +e_third
                if self.sign(a, x).is_plus() {
                    out.push(Triple { a, b: x, c: y });
                } else {
                    out.push(Triple { a, b: y, c: x });
                }
            }
        }
        out.sort();
        out
    }

    /// The canonical triple through two distinct imaginary units.
    pub fn triple_through(&self, i: usize, j: usize) -> Result<Triple> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == 0 || j == 0 || i == j {
            return Err(Error::InvalidArgument("need two distinct imaginary units"));
        }
        let k = i ^ j;
        let a = i.min(j).min(k);
        let (x, y) = if a == i {
            (j, k)
        } else if a == j {
            (i, k)
        } else {
            (i, j)
        };
        Ok(if self.sign(a, x).is_plus() {
            Triple { a, b: x, c: y }
        } else {
            Triple { a, b: y, c: x }
        })
    }

    /// The full product table, row-major.
    pub fn emit_table(&self) -> Vec<Vec<(Sign, usize)>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| (self.sign(i, j), i ^ j)).collect())
            .collect()
    }
}

/// `(2^N - 1)(2^N - 2) / 6`.
pub fn triple_count(dim_exp: u32) -> usize {
    let n = 1usize << dim_exp;
    (n - 1) * (n - 2) / 6
}

/// An associative triple `(a, b, c)` with `e_a e_b = +e_c` and `a` lowest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Triple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triple {
    pub fn as_array(&self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }

    pub fn contains(&self, i: usize) -> bool {
        self.a == i || self.b == i || self.c == i
    }

    /// The member following `i` in cyclic order.
    pub fn next_after(&self, i: usize) -> Option<usize> {
        match i {
            _ if i == self.a => Some(self.b),
            _ if i == self.b => Some(self.c),
            _ if i == self.c => Some(self.a),
            _ => None,
        }
    }

    /// True when the cyclic order also reads in ascending order.
    pub fn in_counting_order(&self) -> bool {
        self.b < self.c
    }

    /// Same cycle, read starting from `i`.
    pub fn rotated_to(&self, i: usize) -> Option<[usize; 3]> {
        let j = self.next_after(i)?;
        let k = self.next_after(j)?;
        Some([i, j, k])
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Exact sparse integer combination of basis units. No zero coefficients are
/// stored, so `is_zero` is an exact test.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Element {
    dim: usize,
    coeffs: BTreeMap<usize, i64>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut e = Element::zero(dim);
        e.add_term(i, 1);
        e
    }

    /// Sum of `coeff * e_index` terms; repeated indices accumulate.
    pub fn from_terms(dim: usize, terms: &[(usize, i64)]) -> Result<Self> {
        let mut e = Element::zero(dim);
        for &(i, c) in terms {
            if i >= dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
            e.add_term(i, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, i: usize, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(i).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    /// Indices with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: i64) -> Element {
        let mut out = Element::zero(self.dim);
        for (&i, &c) in &self.coeffs {
            out.add_term(i, c * k);
        }
        out
    }

    /// The single `(index, coeff)` term, if there is exactly one.
    pub fn single_term(&self) -> Option<(usize, i64)> {
        if self.coeffs.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    pub fn to_dense(&self) -> DenseElement {
        let mut coeffs = alloc::vec![0.0; self.dim];
        for (&i, &c) in &self.coeffs {
            coeffs[i] = c as f64;
        }
        DenseElement { coeffs }
    }
}

impl Add for &Element {
    type Output = Element;
    /// Panics if the operands come from different algebras.
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim, rhs.dim, "adding elements of different algebras");
        let mut out = self.clone();
        for (&i, &c) in &rhs.coeffs {
            out.add_term(i, c);
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(-1)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (&i, &c)) in self.coeffs.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (n, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

/// Dense floating-point element, for numeric identities only.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseElement {
    pub coeffs: Vec<f64>,
}

impl DenseElement {
    pub fn zero(dim: usize) -> Self {
        DenseElement {
            coeffs: alloc::vec![0.0; dim],
        }
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.coeffs.iter().map(|c| c * c).sum())
    }

    /// Largest absolute coefficient of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseElement) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| libm::fabs(a - b))
            .fold(0.0, f64::max)
    }

    pub fn sub(&self, other: &DenseElement) -> DenseElement {
        DenseElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sed() -> CdAlgebra {
        CdAlgebra::new(4).unwrap()
    }

    #[test]
    fn reference_products() {
        let s = sed();
        assert_eq!(s.mul_basis(7, 12).unwrap(), (Sign::Plus, 11));
        assert_eq!(s.mul_basis(1, 1).unwrap(), (Sign::Minus, 0));
        assert_eq!(s.mul_basis(1, 14).unwrap(), (Sign::Plus, 15));
        assert_eq!(s.mul_basis(13, 2).unwrap(), (Sign::Plus, 15));
        assert_eq!(s.mul_basis(9, 9).unwrap(), (Sign::Minus, 0));
        let o = CdAlgebra::new(3).unwrap();
        assert_eq!(o.mul_basis(3, 5).unwrap(), (Sign::Minus, 6));
        let q = CdAlgebra::new(2).unwrap();
        assert_eq!(q.mul_basis(0, 3).unwrap(), (Sign::Plus, 3));
    }

    #[test]
    fn dimension_bounds() {
        assert_eq!(
            CdAlgebra::new(0),
            Err(Error::DimensionOutOfRange { dim_exp: 0, max: 8 })
        );
        assert!(CdAlgebra::new(9).is_err());
        assert!(CdAlgebra::with_rule(9, DoublingRule::Canonical, 9).is_ok());
        assert!(matches!(
            sed().mul_basis(16, 0),
            Err(Error::IndexOutOfRange { index: 16, dim: 16 })
        ));
    }

    #[test]
    fn quaternion_table() {
        let q = CdAlgebra::new(2).unwrap();
        let t = q.emit_table();
        use Sign::*;
        assert_eq!(t[1], vec![(Plus, 1), (Minus, 0), (Plus, 3), (Minus, 2)]);
        assert_eq!(t[2], vec![(Plus, 2), (Minus, 3), (Minus, 0), (Plus, 1)]);
        assert_eq!(t[3], vec![(Plus, 3), (Plus, 2), (Minus, 1), (Minus, 0)]);
    }

    #[test]
    fn sedenion_row_fifteen() {
        let row: Vec<i64> = sed().emit_table()[15]
            .iter()
            .map(|&(s, k)| s.to_i64() * k as i64)
            .collect();
        // row 15 of the classic table; the final "-U" reads as -0 here
        assert_eq!(
            row,
            vec![15, 14, -13, -12, 11, 10, -9, 8, -7, 6, -5, -4, 3, 2, -1, 0]
        );
        assert_eq!(sed().sign(15, 15), Sign::Minus);
    }

    #[test]
    fn zero_divisor_product() {
        let s = sed();
        let x = Element::from_terms(16, &[(1, 1), (13, 1)]).unwrap();
        let y = Element::from_terms(16, &[(2, 1), (14, -1)]).unwrap();
        assert!(s.mul_element(&x, &y).unwrap().is_zero());
        let y2 = Element::from_terms(16, &[(2, 1), (14, 1)]).unwrap();
        let p = s.mul_element(&x, &y2).unwrap();
        assert_eq!(p, Element::from_terms(16, &[(3, 2), (15, 2)]).unwrap());
    }

    #[test]
    fn mismatched_dimensions_rejected() {
        let s = sed();
        let x = Element::unit(8, 1);
        assert_eq!(
            s.mul_element(&x, &Element::unit(16, 2)),
            Err(Error::DimensionMismatch {
                expected: 16,
                found: 8
            })
        );
    }

    #[test]
    fn triple_lists() {
        let q = CdAlgebra::new(2).unwrap().triples();
        assert_eq!(q, vec![Triple { a: 1, b: 2, c: 3 }]);
        let o: Vec<[usize; 3]> = CdAlgebra::new(3)
            .unwrap()
            .triples()
            .iter()
            .map(Triple::as_array)
            .collect();
        assert_eq!(
            o,
            vec![
                [1, 2, 3],
                [1, 4, 5],
                [1, 7, 6],
                [2, 4, 6],
                [2, 5, 7],
                [3, 4, 7],
                [3, 6, 5]
            ]
        );
        for n in 2..=5 {
            assert_eq!(CdAlgebra::new(n).unwrap().triples().len(), triple_count(n));
        }
        assert_eq!(triple_count(5), 155);
    }

    #[test]
    fn triple_through_matches_list() {
        let s = sed();
        assert_eq!(s.triple_through(9, 4).unwrap().as_array(), [4, 9, 13]);
        assert_eq!(s.triple_through(15, 3).unwrap().as_array(), [3, 15, 12]);
        assert!(s.triple_through(3, 3).is_err());
    }

    #[test]
    fn mirrored_rule_is_a_different_table() {
        let m = CdAlgebra::with_rule(4, DoublingRule::Mirrored, 8).unwrap();
        assert_ne!(m, sed());
        // still a 2^N-ion: units square to -1 and distinct units anticommute
        for i in 1..16 {
            assert_eq!(m.sign(i, i), Sign::Minus);
            for j in 1..16 {
                if i != j {
                    assert_eq!(m.sign(i, j), -m.sign(j, i));
                }
            }
        }
    }

    #[test]
    fn resigning_flips_orientations() {
        let o = CdAlgebra::new(3).unwrap();
        let flipped = o.resigned(&[6]).unwrap();
        let trips: Vec<[usize; 3]> = flipped.triples().iter().map(Triple::as_array).collect();
        assert!(trips.contains(&[1, 6, 7]));
        assert!(trips.contains(&[3, 5, 6]));
        assert!(trips.contains(&[2, 6, 4]));
        assert!(o.resigned(&[0]).is_err());
    }

    #[test]
    fn unit_square_power() {
        let s = sed();
        let x = s.unit(9).unwrap().to_dense();
        let p = s.pow_element(&x, 2).unwrap();
        let mut expect = DenseElement::zero(16);
        expect.coeffs[0] = -1.0;
        assert_eq!(p, expect);
        assert!(s.pow_element(&x, 0).is_err());
    }

    #[test]
    fn element_display() {
        let e = Element::from_terms(16, &[(3, 2), (8, -1), (1, 1)]).unwrap();
        assert_eq!(alloc::format!("{e}"), "e1 + 2e3 - e8");
        assert_eq!(alloc::format!("{}", Element::zero(4)), "0");
    }
}
