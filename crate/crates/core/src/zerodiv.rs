//! Primitive zero-divisors of the sedenions.
//!
//! An [`Assessor`] is a plane spanned by one pure-octonion unit `e_o`
//! (`o` in 1..=7) and one pure-sedenion unit `e_S` (`S` in 9..=15, `S != o + 8`).
//! Its two [`Diagonal`]s `e_o + e_S` and `e_o - e_S` are the primitive
//! zero-divisors. A [`Coupling`] is an unordered pair of diagonals whose
//! product is exactly zero; a [`Pairing`] is the same thing written in a
//! fixed left/right order for listings.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::cdalgebra::{CdAlgebra, DenseElement, Element, Sign, Triple};
use crate::error::{Error, Result};

/// Index of the "8-Ball", the generator of the sedenions over the octonions.
pub const EIGHT_BALL: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Assessor {
    o: u8,
    s: u8,
}

impl Assessor {
    pub fn new(o: usize, s: usize) -> Result<Self> {
        let valid = (1..=7).contains(&o) && (9..=15).contains(&s) && s != o + 8;
        if valid {
            Ok(Assessor {
                o: o as u8,
                s: s as u8,
            })
        } else {
            Err(Error::InvalidAssessor { o, s })
        }
    }

    pub fn o(self) -> usize {
        self.o as usize
    }

    pub fn s(self) -> usize {
        self.s as usize
    }

    /// `o ^ S`, the index of the product of the two units.
    pub fn g(self) -> usize {
        self.o() ^ self.s()
    }

    /// Strut signature of the box-kite this assessor flies on.
    pub fn kite(self) -> u8 {
        self.o ^ self.s ^ EIGHT_BALL as u8
    }

    pub fn diagonal(self, orientation: Orientation) -> Diagonal {
        Diagonal {
            assessor: self,
            orientation,
        }
    }

    pub fn up(self) -> Diagonal {
        self.diagonal(Orientation::U)
    }

    pub fn down(self) -> Diagonal {
        self.diagonal(Orientation::D)
    }

    /// All 42, ordered by `(o, S)`.
    pub fn all() -> Vec<Assessor> {
        let mut out = Vec::with_capacity(42);
        for o in 1..=7 {
            for s in 9..=15 {
                if let Ok(a) = Assessor::new(o, s) {
                    out.push(a);
                }
            }
        }
        out
    }
}

impl fmt::Display for Assessor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.o, self.s)
    }
}

/// `U` is the slash `e_o + e_S`, `D` the backslash `e_o - e_S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Orientation {
    U,
    D,
}

impl Orientation {
    pub fn sign(self) -> Sign {
        match self {
            Orientation::U => Sign::Plus,
            Orientation::D => Sign::Minus,
        }
    }

    pub fn from_sign(s: Sign) -> Self {
        match s {
            Sign::Plus => Orientation::U,
            Sign::Minus => Orientation::D,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Orientation::U => Orientation::D,
            Orientation::D => Orientation::U,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Diagonal {
    pub assessor: Assessor,
    pub orientation: Orientation,
}

impl Diagonal {
    pub fn element(self) -> Element {
        let a = self.assessor;
        let s = self.orientation.sign().to_i64();
        Element::from_terms(16, &[(a.o(), 1), (a.s(), s)]).expect("assessor indices are < 16")
    }

    pub fn flipped(self) -> Self {
        Diagonal {
            assessor: self.assessor,
            orientation: self.orientation.flipped(),
        }
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} {} {})",
            self.assessor.o,
            self.orientation.sign().symbol(),
            self.assessor.s
        )
    }
}

/// Two diagonals with zero product, in a written left/right order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Pairing {
    pub left: Diagonal,
    pub right: Diagonal,
}

impl Pairing {
    pub fn to_coupling(self) -> Coupling {
        Coupling::from_ordered(self.left, self.right)
    }

    /// The same pairing with both internal signs reversed.
    pub fn flipped(self) -> Self {
        Pairing {
            left: self.left.flipped(),
            right: self.right.flipped(),
        }
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.left, self.right)
    }
}

/// Unordered pair of diagonals with exactly zero product. The lower
/// assessor is stored on the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Coupling {
    left: Diagonal,
    right: Diagonal,
}

impl Coupling {
    fn from_ordered(a: Diagonal, b: Diagonal) -> Self {
        if a.assessor <= b.assessor {
            Coupling { left: a, right: b }
        } else {
            Coupling { left: b, right: a }
        }
    }

    pub fn left(&self) -> Diagonal {
        self.left
    }

    pub fn right(&self) -> Diagonal {
        self.right
    }

    pub fn as_pairing(&self) -> Pairing {
        Pairing {
            left: self.left,
            right: self.right,
        }
    }

    pub fn assessors(&self) -> (Assessor, Assessor) {
        (self.left.assessor, self.right.assessor)
    }
}

impl fmt::Display for Coupling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.left, self.right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TrioKind {
    /// All three edges negative: the dududu crossover.
    Zigzag,
    /// Exactly one negative edge: the dduddu crossover.
    Trefoil,
}

/// Three mutually zero-dividing assessors closed under Production Rule #1.
///
/// Members are stored in the cyclic order of their O-trip, starting from its
/// lowest index. `edge_signs[k]` is the sign of the edge from `members[k]` to
/// `members[(k + 1) % 3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Trio {
    pub members: [Assessor; 3],
    pub otrip: Triple,
    pub edge_signs: [Sign; 3],
    pub kind: TrioKind,
}

impl Trio {
    /// The shared `o ^ S` of all three members.
    pub fn g(&self) -> usize {
        self.members[0].g()
    }

    pub fn contains(&self, a: Assessor) -> bool {
        self.members.contains(&a)
    }

    pub fn member_set(&self) -> BTreeSet<Assessor> {
        self.members.iter().copied().collect()
    }
}

/// The seven units from which one O-trip's co-assessor trios are made:
/// the O-trip plus the four sedenions it does not exclude.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Automorpheme {
    pub otrip: Triple,
    pub sedenions: [usize; 4],
}

impl Automorpheme {
    pub fn for_otrip(otrip: Triple) -> Self {
        let excluded = [
            EIGHT_BALL,
            EIGHT_BALL ^ otrip.a,
            EIGHT_BALL ^ otrip.b,
            EIGHT_BALL ^ otrip.c,
        ];
        let mut sedenions = [0; 4];
        let mut k = 0;
        for s in 9..=15 {
            if !excluded.contains(&s) {
                sedenions[k] = s;
                k += 1;
            }
        }
        Automorpheme { otrip, sedenions }
    }

    /// O-trip in cyclic order, then the sedenions ascending.
    pub fn units(&self) -> [usize; 7] {
        let t = self.otrip;
        let s = self.sedenions;
        [t.a, t.b, t.c, s[0], s[1], s[2], s[3]]
    }

    /// `{8, 8^a, 8^b, 8^c}`, ascending.
    pub fn excluded(&self) -> [usize; 4] {
        let t = self.otrip;
        let mut e = [
            EIGHT_BALL,
            EIGHT_BALL ^ t.a,
            EIGHT_BALL ^ t.b,
            EIGHT_BALL ^ t.c,
        ];
        e.sort_unstable();
        e
    }

    pub fn contains(&self, a: Assessor) -> bool {
        self.otrip.contains(a.o()) && self.sedenions.contains(&a.s())
    }
}

/// Outcome of Production Rule #2 on one coupling.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Twist {
    /// The S-swapped, sign-flipped coupling.
    pub result: Coupling,
    /// Product of the o-swapped alternative; always `±2 e_G`.
    pub failed: Element,
    /// Shared `o ^ S` of the input coupling.
    pub g: usize,
}

/// One column of a GoTo listing: a trio and its 6-cycle of pairings.
/// Rows 4..6 repeat rows 1..3 with both internal signs flipped.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GoToColumn {
    pub trio: Trio,
    pub cycle: [Pairing; 6],
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GoToListing {
    /// 1-based position of the O-trip in ascending order.
    pub number: usize,
    pub automorpheme: Automorpheme,
    /// Column 1 is the zigzag; columns 2..4 hold the trefoils reached by
    /// twisting the zigzag's rows 1, 2 and 3.
    pub columns: [GoToColumn; 4],
}

impl GoToListing {
    pub fn otrip(&self) -> Triple {
        self.automorpheme.otrip
    }

    /// The 12 assessors of the listing, ascending.
    pub fn assessors(&self) -> Vec<Assessor> {
        let set: BTreeSet<Assessor> = self.columns.iter().flat_map(|c| c.trio.members).collect();
        set.into_iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EightBallReport {
    pub assessors_avoid_eight: bool,
    pub automorphemes_avoid_eight: bool,
    pub exclusion_sets_match: bool,
    /// Diagonals of the planes inside each `{1, o, 8, 8+o}` copy zero-divide
    /// no two-unit diagonal anywhere in the algebra.
    pub quaternion_copies_clean: bool,
    pub eight_rejected_as_assessor: bool,
}

impl EightBallReport {
    pub fn passed(&self) -> bool {
        self.assessors_avoid_eight
            && self.automorphemes_avoid_eight
            && self.exclusion_sets_match
            && self.quaternion_copies_clean
            && self.eight_rejected_as_assessor
    }
}

/// Diagonal of an arbitrary two-unit plane, for brute-force scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PlaneDiagonal {
    pub low: usize,
    pub high: usize,
    pub sign: Sign,
}

impl PlaneDiagonal {
    fn element(self, dim: usize) -> Element {
        Element::from_terms(dim, &[(self.low, 1), (self.high, self.sign.to_i64())])
            .expect("plane indices within the algebra")
    }
}

/// Result of multiplying every two-unit diagonal with every other.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanReport {
    /// Planes with at least one zero-dividing diagonal.
    pub planes: BTreeSet<(usize, usize)>,
    /// Unordered plane pairs with at least one zero product.
    pub edges: BTreeSet<((usize, usize), (usize, usize))>,
    /// Unordered diagonal pairs with zero product.
    pub couplings: BTreeSet<(PlaneDiagonal, PlaneDiagonal)>,
    /// Every zero product pairs a low (< 8) with a high (> 8) unit in each plane.
    pub exogamous: bool,
    /// Every zero product joins planes with equal `low ^ high`.
    pub shared_g: bool,
}

/// The sedenion algebra with its zero-divisor machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sedenions {
    alg: CdAlgebra,
}

impl Default for Sedenions {
    fn default() -> Self {
        Self::new()
    }
}

impl Sedenions {
    pub fn new() -> Self {
        Sedenions {
            alg: CdAlgebra::new(4).expect("16 dimensions are always in range"),
        }
    }

    /// Wraps an existing 16-dimensional table, for instance a re-signed one.
    pub fn from_algebra(alg: CdAlgebra) -> Result<Self> {
        if alg.dim_exp() != 4 {
            return Err(Error::WrongAlgebra {
                expected_dim_exp: 4,
                found_dim_exp: alg.dim_exp(),
            });
        }
        Ok(Sedenions { alg })
    }

    pub fn algebra(&self) -> &CdAlgebra {
        &self.alg
    }

    /// The seven associative triples of pure octonions, ascending.
    pub fn otrips(&self) -> Vec<Triple> {
        self.alg
            .triples()
            .into_iter()
            .filter(|t| t.a < 8 && t.b < 8 && t.c < 8)
            .collect()
    }

    /// Looks up an O-trip by its members in any order.
    pub fn otrip_of(&self, members: [usize; 3]) -> Result<Triple> {
        let mut want = members;
        want.sort_unstable();
        self.otrips()
            .into_iter()
            .find(|t| {
                let mut have = t.as_array();
                have.sort_unstable();
                have == want
            })
            .ok_or(Error::NotAnOTrip(members))
    }

    pub fn product(&self, x: Diagonal, y: Diagonal) -> Element {
        self.alg
            .mul_element(&x.element(), &y.element())
            .expect("diagonals live in the sedenions")
    }

    pub fn is_zero_coupling(&self, x: Diagonal, y: Diagonal) -> bool {
        x.assessor != y.assessor && self.product(x, y).is_zero()
    }

    /// Zero test by index arithmetic alone: `(A + s B)(C + t D) = 0` iff the
    /// `A^C` and `B^D` terms cancel and the `A^D` and `B^C` terms cancel.
    pub fn xor_criterion(&self, x: Diagonal, y: Diagonal) -> bool {
        let (a, b) = (x.assessor.o(), x.assessor.s());
        let (c, d) = (y.assessor.o(), y.assessor.s());
        if x.assessor == y.assessor {
            return false;
        }
        let s1 = x.orientation.sign();
        let s2 = y.orientation.sign();
        let sg = |i, j| self.alg.sign(i, j);
        (a ^ c) == (b ^ d)
            && (a ^ d) == (b ^ c)
            && sg(a, c) == -(s1 * s2 * sg(b, d))
            && s2 * sg(a, d) == -(s1 * sg(b, c))
    }

    pub fn coupling(&self, x: Diagonal, y: Diagonal) -> Result<Coupling> {
        if self.is_zero_coupling(x, y) {
            Ok(Coupling::from_ordered(x, y))
        } else {
            Err(Error::NotZeroCoupling)
        }
    }

    pub fn pairing(&self, x: Diagonal, y: Diagonal) -> Result<Pairing> {
        self.coupling(x, y)?;
        Ok(Pairing { left: x, right: y })
    }

    /// Exactly the 42 assessors, each verified to take part in a coupling.
    pub fn enumerate_assessors(&self) -> Vec<Assessor> {
        Assessor::all()
            .into_iter()
            .filter(|a| !self.coassessor_partners(*a).is_empty())
            .collect()
    }

    /// The diagonal of `b` whose product with `d` vanishes, if any.
    pub fn partner_diagonal(&self, d: Diagonal, b: Assessor) -> Option<Diagonal> {
        [b.up(), b.down()]
            .into_iter()
            .find(|&e| self.is_zero_coupling(d, e))
    }

    pub fn coassessor_partners(&self, a: Assessor) -> Vec<Assessor> {
        Assessor::all()
            .into_iter()
            .filter(|&b| b != a && self.partner_diagonal(a.up(), b).is_some())
            .collect()
    }

    pub fn are_coassessors(&self, a: Assessor, b: Assessor) -> bool {
        a != b && (self.is_zero_coupling(a.up(), b.up()) || self.is_zero_coupling(a.up(), b.down()))
    }

    /// `+` when same-orientation diagonals couple, `-` when opposite ones do.
    pub fn edge_sign(&self, a: Assessor, b: Assessor) -> Result<Sign> {
        let same = self.is_zero_coupling(a.up(), b.up());
        let opposite = self.is_zero_coupling(a.up(), b.down());
        match (same, opposite) {
            (true, false) => Ok(Sign::Plus),
            (false, true) => Ok(Sign::Minus),
            _ => Err(Error::NotCoAssessors(a, b)),
        }
    }

    /// Builds a trio from three pairwise co-assessors.
    pub fn trio_of(&self, members: [Assessor; 3]) -> Result<Trio> {
        let otrip = self.otrip_of([members[0].o(), members[1].o(), members[2].o()])?;
        let by_o = |o: usize| members.iter().copied().find(|m| m.o() == o);
        let ordered = [
            by_o(otrip.a).ok_or(Error::NotAnOTrip(otrip.as_array()))?,
            by_o(otrip.b).ok_or(Error::NotAnOTrip(otrip.as_array()))?,
            by_o(otrip.c).ok_or(Error::NotAnOTrip(otrip.as_array()))?,
        ];
        let mut edge_signs = [Sign::Plus; 3];
        for k in 0..3 {
            edge_signs[k] = self.edge_sign(ordered[k], ordered[(k + 1) % 3])?;
        }
        let minus = edge_signs.iter().filter(|s| **s == Sign::Minus).count();
        let kind = match minus {
            3 => TrioKind::Zigzag,
            1 => TrioKind::Trefoil,
            _ => {
                return Err(Error::InvalidArgument(
                    "triangle sign pattern admits no 6-cycle",
                ))
            }
        };
        Ok(Trio {
            members: ordered,
            otrip,
            edge_signs,
            kind,
        })
    }

    /// Production Rule #1: the third assessor `(o1 ^ o2, o1 ^ S2)` zero-divides
    /// both progenitors.
    pub fn rule1_complete(&self, a: Assessor, b: Assessor) -> Result<Trio> {
        if !self.are_coassessors(a, b) {
            return Err(Error::NotCoAssessors(a, b));
        }
        let third = Assessor::new(a.o() ^ b.o(), a.o() ^ b.s())?;
        debug_assert_eq!(a.o() ^ b.s(), b.o() ^ a.s());
        if !self.are_coassessors(a, third) || !self.are_coassessors(b, third) {
            return Err(Error::NotCoAssessors(a, third));
        }
        self.trio_of([a, b, third])
    }

    /// Production Rule #2 on a written pairing `(A + s B)(C + t D)`: swap the
    /// sedenions and flip, giving `(A - t D)(C + s B)`.
    pub fn twist_pairing(&self, p: Pairing) -> Result<(Pairing, Element)> {
        let (x, y) = (p.left, p.right);
        if !self.is_zero_coupling(x, y) {
            return Err(Error::NotZeroCoupling);
        }
        let (a, b) = (x.assessor.o(), x.assessor.s());
        let (c, d) = (y.assessor.o(), y.assessor.s());
        let s1 = x.orientation.sign();
        let s2 = y.orientation.sign();
        let left = Assessor::new(a, d)?.diagonal(Orientation::from_sign(-s2));
        let right = Assessor::new(c, b)?.diagonal(Orientation::from_sign(s1));
        let result = self.pairing(left, right)?;

        // Failed branch: swap the octonions instead, giving (t D + s B)(C + z A)
        // with z chosen so the two off-G terms cancel.
        let sg = |i, j| self.alg.sign(i, j);
        let z = -(s1 * s2 * sg(b, c) * sg(d, a));
        let lhs = Element::from_terms(16, &[(d, s2.to_i64()), (b, s1.to_i64())])?;
        let rhs = Element::from_terms(16, &[(c, 1), (a, z.to_i64())])?;
        let failed = self.alg.mul_element(&lhs, &rhs)?;
        Ok((result, failed))
    }

    pub fn rule2_twist(&self, c: Coupling) -> Result<Twist> {
        let g = c.left.assessor.g();
        let (result, failed) = self.twist_pairing(c.as_pairing())?;
        Ok(Twist {
            result: result.to_coupling(),
            failed,
            g,
        })
    }

    /// Production Rule #3: the two automorphemes holding `a`, each with the
    /// trio `a` belongs to there.
    pub fn rule3_relocate(&self, a: Assessor) -> Result<[(Automorpheme, Trio); 2]> {
        let mut found = Vec::with_capacity(2);
        for t in self.otrips() {
            let auto = Automorpheme::for_otrip(t);
            if auto.contains(a) {
                let trio = self
                    .trios_for_otrip(t)
                    .into_iter()
                    .find(|tr| tr.contains(a))
                    .ok_or(Error::InvalidAssessor { o: a.o(), s: a.s() })?;
                found.push((auto, trio));
            }
        }
        match <[(Automorpheme, Trio); 2]>::try_from(found) {
            Ok(pair) => Ok(pair),
            Err(_) => Err(Error::InvalidAssessor { o: a.o(), s: a.s() }),
        }
    }

    /// All co-assessor edges as unordered assessor pairs.
    pub fn edges(&self) -> Vec<(Assessor, Assessor)> {
        let all = Assessor::all();
        let mut out = Vec::new();
        for (i, &a) in all.iter().enumerate() {
            for &b in &all[i + 1..] {
                if self.are_coassessors(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn enumerate_trios(&self) -> Vec<Trio> {
        let mut set = BTreeSet::new();
        for (a, b) in self.edges() {
            if let Ok(t) = self.rule1_complete(a, b) {
                set.insert(t);
            }
        }
        set.into_iter().collect()
    }

    fn trios_for_otrip(&self, t: Triple) -> Vec<Trio> {
        self.enumerate_trios()
            .into_iter()
            .filter(|tr| tr.otrip == t)
            .collect()
    }

    /// All 168 couplings: two signings per edge.
    pub fn enumerate_couplings(&self) -> Vec<Coupling> {
        let mut out = Vec::with_capacity(168);
        for (a, b) in self.edges() {
            for da in [a.up(), a.down()] {
                if let Some(db) = self.partner_diagonal(da, b) {
                    out.push(Coupling::from_ordered(da, db));
                }
            }
        }
        out.sort();
        out
    }

    /// The 6-cycle of a trio starting from `start`, walking members in
    /// O-trip order.
    pub fn trio_cycle(&self, trio: &Trio, start: Diagonal) -> Result<[Pairing; 6]> {
        let pos = trio
            .members
            .iter()
            .position(|m| *m == start.assessor)
            .ok_or(Error::InvalidArgument("start diagonal is not on the trio"))?;
        let mut cur = start;
        let mut out = [Pairing {
            left: start,
            right: start,
        }; 6];
        for (k, slot) in out.iter_mut().enumerate() {
            let next_member = trio.members[(pos + k + 1) % 3];
            let next = self
                .partner_diagonal(cur, next_member)
                .ok_or(Error::NotCoAssessors(cur.assessor, next_member))?;
            *slot = Pairing {
                left: cur,
                right: next,
            };
            cur = next;
        }
        if cur != start {
            return Err(Error::InvalidArgument(
                "trio walk did not close after six steps",
            ));
        }
        Ok(out)
    }

    /// The diagonal of `member` that precedes `d` in its trio's walk.
    fn predecessor(&self, d: Diagonal, member: Assessor) -> Result<Diagonal> {
        self.partner_diagonal(d, member)
            .ok_or(Error::NotCoAssessors(d.assessor, member))
    }

    pub fn goto_listing(&self, otrip: Triple) -> Result<GoToListing> {
        let otrips = self.otrips();
        let number = otrips
            .iter()
            .position(|t| *t == otrip)
            .ok_or(Error::NotAnOTrip(otrip.as_array()))?
            + 1;
        let automorpheme = Automorpheme::for_otrip(otrip);
        let trios = self.trios_for_otrip(otrip);
        let zigzag = *trios
            .iter()
            .find(|t| t.kind == TrioKind::Zigzag)
            .ok_or(Error::NotAnOTrip(otrip.as_array()))?;
        let zig_cycle = self.trio_cycle(&zigzag, zigzag.members[0].up())?;
        let mut columns = Vec::with_capacity(4);
        columns.push(GoToColumn {
            trio: zigzag,
            cycle: zig_cycle,
        });
        for row in 0..3 {
            let (twisted, _) = self.twist_pairing(zig_cycle[row])?;
            let members = [twisted.left.assessor, twisted.right.assessor];
            let trio = *trios
                .iter()
                .find(|t| t.contains(members[0]) && t.contains(members[1]))
                .ok_or(Error::NotZeroCoupling)?;
            // walk back from the twisted row to the row-1 start diagonal
            let mut start = twisted.left;
            for back in 0..row {
                let member = trio.members[(row - back + 2) % 3];
                start = self.predecessor(start, member)?;
            }
            let cycle = self.trio_cycle(&trio, start)?;
            debug_assert_eq!(cycle[row], twisted);
            columns.push(GoToColumn { trio, cycle });
        }
        let columns = <[GoToColumn; 4]>::try_from(columns)
            .map_err(|_| Error::NotAnOTrip(otrip.as_array()))?;
        Ok(GoToListing {
            number,
            automorpheme,
            columns,
        })
    }

    pub fn goto_listings(&self) -> Vec<GoToListing> {
        self.otrips()
            .into_iter()
            .map(|t| self.goto_listing(t).expect("every O-trip has a listing"))
            .collect()
    }

    /// Every diagonal of every two-unit plane against every other.
    pub fn brute_force_scan(&self) -> ScanReport {
        let dim = self.alg.dim();
        let mut diags = Vec::new();
        for low in 0..dim {
            for high in (low + 1)..dim {
                for sign in [Sign::Plus, Sign::Minus] {
                    diags.push(PlaneDiagonal { low, high, sign });
                }
            }
        }
        let elems: Vec<Element> = diags.iter().map(|d| d.element(dim)).collect();
        let mut report = ScanReport {
            planes: BTreeSet::new(),
            edges: BTreeSet::new(),
            couplings: BTreeSet::new(),
            exogamous: true,
            shared_g: true,
        };
        let half = dim / 2;
        for (i, x) in diags.iter().enumerate() {
            for (j, y) in diags.iter().enumerate().skip(i + 1) {
                if (x.low, x.high) == (y.low, y.high) {
                    continue;
                }
                let p = self
                    .alg
                    .mul_element(&elems[i], &elems[j])
                    .expect("same algebra");
                if !p.is_zero() {
                    continue;
                }
                for d in [x, y] {
                    if !(d.low < half && d.high > half) {
                        report.exogamous = false;
                    }
                }
                if x.low ^ x.high != y.low ^ y.high {
                    report.shared_g = false;
                }
                report.planes.insert((x.low, x.high));
                report.planes.insert((y.low, y.high));
                let (pa, pb) = ((x.low, x.high), (y.low, y.high));
                report
                    .edges
                    .insert(if pa < pb { (pa, pb) } else { (pb, pa) });
                report.couplings.insert((*x, *y));
            }
        }
        report
    }

    pub fn eight_ball_check(&self) -> EightBallReport {
        let assessors = self.enumerate_assessors();
        let assessors_avoid_eight = assessors.iter().all(|a| a.o() != 8 && a.s() != 8);
        let autos: Vec<Automorpheme> = self
            .otrips()
            .into_iter()
            .map(Automorpheme::for_otrip)
            .collect();
        let automorphemes_avoid_eight = autos.iter().all(|a| !a.units().contains(&EIGHT_BALL));
        let exclusion_sets_match = autos.iter().all(|a| {
            let t = a.otrip;
            let mut want = [8, 8 + t.a, 8 + t.b, 8 + t.c];
            want.sort_unstable();
            a.excluded() == want
        });

        let dim = self.alg.dim();
        let mut all = Vec::new();
        for low in 0..dim {
            for high in (low + 1)..dim {
                for sign in [Sign::Plus, Sign::Minus] {
                    all.push(PlaneDiagonal { low, high, sign }.element(dim));
                }
            }
        }
        let mut quaternion_copies_clean = true;
        for o in 1..8 {
            for (low, high) in [(o, 8 + o), (o, 8), (8, 8 + o)] {
                for sign in [Sign::Plus, Sign::Minus] {
                    let d = PlaneDiagonal { low, high, sign }.element(dim);
                    for e in &all {
                        let p = self.alg.mul_element(&d, e).expect("same algebra");
                        let q = self.alg.mul_element(e, &d).expect("same algebra");
                        if p.is_zero() || q.is_zero() {
                            quaternion_copies_clean = false;
                        }
                    }
                }
            }
        }
        let eight_rejected_as_assessor = (1..8).all(|o| Assessor::new(o, 8).is_err());
        EightBallReport {
            assessors_avoid_eight,
            automorphemes_avoid_eight,
            exclusion_sets_match,
            quaternion_copies_clean,
            eight_rejected_as_assessor,
        }
    }

    /// Largest deviation of `zip(A, B; x) * zip(C, D; y)` from
    /// `±cos(x + y) e_{A^C} ± sin(x - y) e_{A^D}`, with the two output signs
    /// read off the table.
    pub fn zip_check(&self, c: Coupling, x: f64, y: f64) -> Result<f64> {
        if !self.is_zero_coupling(c.left, c.right) {
            return Err(Error::NotZeroCoupling);
        }
        let (a, b) = (c.left.assessor.o(), c.left.assessor.s());
        let (cc, d) = (c.right.assessor.o(), c.right.assessor.s());
        let s1 = c.left.orientation.sign().to_i64() as f64;
        let s2 = c.right.orientation.sign().to_i64() as f64;
        let mut lhs = DenseElement::zero(16);
        lhs.coeffs[a] = libm::cos(x);
        lhs.coeffs[b] = s1 * libm::sin(x);
        let mut rhs = DenseElement::zero(16);
        rhs.coeffs[cc] = libm::cos(y);
        rhs.coeffs[d] = s2 * libm::sin(y);
        let got = self.alg.mul_dense(&lhs, &rhs)?;

        let mut expect = DenseElement::zero(16);
        let sg = |i, j| self.alg.sign(i, j).to_i64() as f64;
        expect.coeffs[a ^ cc] = sg(a, cc) * libm::cos(x + y);
        expect.coeffs[a ^ d] = -s2 * sg(a, d) * libm::sin(x - y);
        Ok(got.max_abs_diff(&expect))
    }

    /// For each assessor, the GoTo numbers of the two listings holding it.
    pub fn goto_memberships(&self) -> BTreeMap<Assessor, Vec<usize>> {
        let mut map: BTreeMap<Assessor, Vec<usize>> = BTreeMap::new();
        for l in self.goto_listings() {
            for a in l.assessors() {
                map.entry(a).or_default().push(l.number);
            }
        }
        map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(o: usize, s: usize) -> Assessor {
        Assessor::new(o, s).unwrap()
    }

    #[test]
    fn assessor_invariants() {
        assert!(Assessor::new(1, 9).is_err());
        assert!(Assessor::new(3, 8).is_err());
        assert!(Assessor::new(9, 1).is_err());
        assert!(Assessor::new(0, 12).is_err());
        assert_eq!(Assessor::all().len(), 42);
        assert_eq!(Sedenions::new().enumerate_assessors().len(), 42);
    }

    #[test]
    fn coupling_examples() {
        let s = Sedenions::new();
        assert!(s.is_zero_coupling(a(1, 13).up(), a(2, 14).down()));
        assert!(!s.is_zero_coupling(a(1, 13).up(), a(2, 14).up()));
        for x in [a(7, 12).up(), a(7, 12).down()] {
            for y in [a(4, 15).up(), a(4, 15).down()] {
                assert!(!s.is_zero_coupling(x, y));
            }
        }
        // a diagonal never couples with its own plane
        assert!(!s.is_zero_coupling(a(1, 13).up(), a(1, 13).down()));
    }

    #[test]
    fn xor_criterion_agrees_with_products() {
        let s = Sedenions::new();
        for x in Assessor::all() {
            for y in Assessor::all() {
                for dx in [x.up(), x.down()] {
                    for dy in [y.up(), y.down()] {
                        assert_eq!(s.xor_criterion(dx, dy), s.is_zero_coupling(dx, dy));
                    }
                }
            }
        }
    }

    #[test]
    fn partners() {
        let s = Sedenions::new();
        assert_eq!(
            s.coassessor_partners(a(1, 13)),
            vec![a(2, 14), a(3, 15), a(6, 10), a(7, 11)]
        );
        let mut p = s.coassessor_partners(a(3, 10));
        p.sort();
        assert_eq!(p, vec![a(4, 13), a(5, 12), a(6, 15), a(7, 14)]);
        for x in Assessor::all() {
            assert_eq!(s.coassessor_partners(x).len(), 4, "{x}");
        }
    }

    #[test]
    fn edge_signs() {
        let s = Sedenions::new();
        assert_eq!(s.edge_sign(a(1, 13), a(2, 14)), Ok(Sign::Minus));
        assert_eq!(s.edge_sign(a(1, 14), a(2, 13)), Ok(Sign::Plus));
        assert_eq!(
            s.edge_sign(a(7, 12), a(4, 15)),
            Err(Error::NotCoAssessors(a(7, 12), a(4, 15)))
        );
        for (x, y) in s.edges() {
            assert_eq!(s.edge_sign(x, y), s.edge_sign(y, x));
        }
    }

    #[test]
    fn rule_one() {
        let s = Sedenions::new();
        let t = s.rule1_complete(a(1, 13), a(2, 14)).unwrap();
        assert_eq!(t.members, [a(1, 13), a(2, 14), a(3, 15)]);
        assert_eq!(t.kind, TrioKind::Zigzag);
        let t2 = s.rule1_complete(a(1, 14), a(4, 11)).unwrap();
        assert!(t2.contains(a(5, 10)));
        assert!(s.rule1_complete(a(7, 12), a(4, 15)).is_err());
    }

    #[test]
    fn twist_example() {
        let s = Sedenions::new();
        let p = s.pairing(a(1, 13).up(), a(2, 14).down()).unwrap();
        let (t, failed) = s.twist_pairing(p).unwrap();
        assert_eq!(t, s.pairing(a(1, 14).up(), a(2, 13).up()).unwrap());
        assert_eq!(failed.len(), 1);
        let (idx, coeff) = failed.single_term().unwrap();
        assert_eq!(idx, a(1, 13).g());
        assert_eq!(coeff.abs(), 2);
        assert_eq!(
            s.twist_pairing(Pairing {
                left: a(1, 13).up(),
                right: a(2, 14).up()
            }),
            Err(Error::NotZeroCoupling)
        );
    }

    #[test]
    fn rule_three() {
        let s = Sedenions::new();
        let [(x, _), (y, _)] = s.rule3_relocate(a(3, 15)).unwrap();
        assert_eq!(x.otrip.as_array(), [1, 2, 3]);
        assert_eq!(y.otrip.as_array(), [3, 6, 5]);
        let [(x, tx), (y, ty)] = s.rule3_relocate(a(1, 13)).unwrap();
        assert_eq!(x.otrip.as_array(), [1, 2, 3]);
        assert_eq!(y.otrip.as_array(), [1, 7, 6]);
        assert!(tx.contains(a(2, 14)));
        assert!(ty.contains(a(7, 11)));
    }

    #[test]
    fn goto_one() {
        let s = Sedenions::new();
        let l = s.goto_listing(s.otrips()[0]).unwrap();
        assert_eq!(l.automorpheme.units(), [1, 2, 3, 12, 13, 14, 15]);
        assert_eq!(l.automorpheme.excluded(), [8, 9, 10, 11]);
        let rows: Vec<alloc::string::String> = l
            .columns
            .iter()
            .flat_map(|c| c.cycle[..3].iter().map(|p| alloc::format!("{p}")))
            .collect();
        assert_eq!(
            rows,
            vec![
                "(1 + 13)(2 - 14)",
                "(2 - 14)(3 + 15)",
                "(3 + 15)(1 - 13)",
                "(1 + 14)(2 + 13)",
                "(2 + 13)(3 - 12)",
                "(3 - 12)(1 - 14)",
                "(1 - 12)(2 - 15)",
                "(2 - 15)(3 - 14)",
                "(3 - 14)(1 + 12)",
                "(1 - 15)(2 + 12)",
                "(2 + 12)(3 + 13)",
                "(3 + 13)(1 + 15)",
            ]
        );
        assert!(matches!(
            s.goto_listing(Triple { a: 1, b: 3, c: 2 }),
            Err(Error::NotAnOTrip(_))
        ));
    }

    #[test]
    fn rows_four_to_six_are_sign_flips() {
        let s = Sedenions::new();
        for l in s.goto_listings() {
            for col in &l.columns {
                for k in 0..3 {
                    assert_eq!(col.cycle[k + 3], col.cycle[k].flipped());
                }
            }
        }
    }

    #[test]
    fn eight_ball() {
        let r = Sedenions::new().eight_ball_check();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn zip_corners() {
        let s = Sedenions::new();
        let c = s.coupling(a(1, 13).up(), a(2, 14).down()).unwrap();
        let q = core::f64::consts::FRAC_PI_4;
        assert!(s.zip_check(c, q, q).unwrap() < 1e-15);
        assert!(s.zip_check(c, 0.0, 0.0).unwrap() < 1e-15);
        let bad = Coupling::from_ordered(a(1, 13).up(), a(2, 14).up());
        assert_eq!(s.zip_check(bad, 0.0, 0.0), Err(Error::NotZeroCoupling));
    }

    #[test]
    fn wrong_algebra_rejected() {
        let alg = CdAlgebra::new(5).unwrap();
        assert_eq!(
            Sedenions::from_algebra(alg),
            Err(Error::WrongAlgebra {
                expected_dim_exp: 4,
                found_dim_exp: 5
            })
        );
    }
}
